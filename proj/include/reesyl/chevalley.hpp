// The 8x8 matrix realization of type G2: Chevalley-basis root matrices,
// one-parameter root elements y_i(t) = exp(t e_i), the canonical product
// coordinates of G2^syl(q), the twisted map F on those coordinates, and the
// fixed-point elements that make up the Ree Sylow subgroup.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "reesyl/field.hpp"

namespace reesyl {

struct Mat8 {
    std::array<Fe, 64> e{};

    Fe& at(int i, int j) { return e[static_cast<std::size_t>(i * 8 + j)]; }
    Fe at(int i, int j) const { return e[static_cast<std::size_t>(i * 8 + j)]; }

    bool operator==(const Mat8& o) const { return e == o.e; }
    bool operator!=(const Mat8& o) const { return e != o.e; }
};

Mat8 mat_identity();
Mat8 mat_mul(const Fq& F, const Mat8& a, const Mat8& b);
Mat8 mat_transpose(const Mat8& a);
// Inverse of an upper unitriangular matrix (Neumann series of the nilpotent part).
Mat8 mat_inverse_ut(const Fq& F, const Mat8& a);
bool is_upper_unitriangular(const Mat8& a);
std::string mat_to_string(const Fq& F, const Mat8& a);

// Canonical coordinates (t1,...,t6) of y(t1,...,t6) = y2(t2)y1(t1)y3(t3)y4(t4)y5(t5)y6(t6).
struct G2Tuple {
    std::array<Fe, 6> t{}; // t[0] = t1, ..., t[5] = t6

    bool operator==(const G2Tuple& o) const { return t == o.t; }
    bool operator!=(const G2Tuple& o) const { return t != o.t; }
};

struct EntryMismatch {
    int row, col; // 1-based
    Fe closed_form, computed;
};

class Chevalley {
public:
    explicit Chevalley(const Fq& F);

    const Fq& field() const { return *F_; }

    // e_r for r = alpha, beta, alpha+beta, 2a+b, 3a+b, 3a+2b (i = 1..6).
    const Mat8& root_matrix(int i) const { return e_[check_index(i)]; }
    const Mat8& root_matrix_sq(int i) const { return e_sq_[check_index(i)]; }

    // y_i(t) = I + t e_i + 2 t^2 e_i^2  (1/2 = 2 in characteristic 3).
    Mat8 root_element(int i, Fe t) const;

    Mat8 g2_tuple_to_matrix(const G2Tuple& y) const;

    // Inverts the canonical form by peeling the six factors off the left.
    // Throws std::invalid_argument when peeling leaves a non-identity residue.
    G2Tuple matrix_to_g2_tuple(const Mat8& M) const;

    // The exceptional graph-field twist on canonical coordinates. A bijection;
    // its fixed points are exactly the ree_tuple(t1,t3,t4).
    G2Tuple twisted_F(const G2Tuple& y) const;

    G2Tuple ree_tuple(Fe t1, Fe t3, Fe t4) const;
    bool is_twisted_fixed(const G2Tuple& y) const;

    // The F-fixed element built by multiplying root elements.
    Mat8 ree_matrix(Fe t1, Fe t3, Fe t4) const;

    // Entry-by-entry closed-form expression of ree_matrix, transcribed
    // independently. The generator product is ground truth; this matrix is a
    // fixture under test.
    Mat8 closed_form_matrix(Fe t1, Fe t3, Fe t4) const;

    // Diff of the two; expected empty, returned as a diagnostic either way.
    std::vector<EntryMismatch> check_closed_form(Fe t1, Fe t3, Fe t4) const;

private:
    static int check_index(int i);

    const Fq* F_;
    std::array<Mat8, 6> e_;
    std::array<Mat8, 6> e_sq_;
};

} // namespace reesyl
