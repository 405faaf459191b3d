// The monomial linearisation data for the Ree Sylow subgroup: the pattern
// space V spanned by positions (1,2),(1,3),(1,4), the trace form kappa, the
// 1-cocycle f (projection onto those positions), the right actions "circ"
// (A o g = pi(A g)) and "dot" (A.g = pi(A g^-T)), orbits with stabilizers and
// verge representatives, and the orbit-module characters.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reesyl/chevalley.hpp"
#include "reesyl/cyclo.hpp"
#include "reesyl/field.hpp"
#include "reesyl/group.hpp"

namespace reesyl {

struct Pattern {
    Fe a12 = 0, a13 = 0, a14 = 0;

    bool operator==(const Pattern& o) const {
        return a12 == o.a12 && a13 == o.a13 && a14 == o.a14;
    }
    bool operator!=(const Pattern& o) const { return !(*this == o); }
};

inline bool lex_less(const Pattern& x, const Pattern& y) {
    if (x.a12 != y.a12) return x.a12 < y.a12;
    if (x.a13 != y.a13) return x.a13 < y.a13;
    return x.a14 < y.a14;
}

enum class Family { Zero, F1, F3, F4 };

const char* family_name(Family f);

struct OrbitRecord {
    Pattern verge;
    std::vector<Pattern> members; // sorted by canonical order
    std::uint64_t stabilizer_order = 0;
    Family family = Family::Zero;

    std::uint64_t size() const { return members.size(); }
};

// Matrix-level definitions, used as oracles against the closed forms.
Pattern pattern_of_matrix(const Mat8& g);                       // reads (1,2),(1,3),(1,4)
Mat8 pattern_to_matrix(const Pattern& A);
Pattern act_circ_matrix(const Fq& F, const Pattern& A, const Mat8& g); // pi(A g)
Pattern act_dot_matrix(const Fq& F, const Pattern& A, const Mat8& g);  // pi(A g^-T)

class Orbits {
public:
    Orbits(const Fq& F, const ReeSylow& U) : F_(&F), U_(&U) {}

    const Fq& field() const { return *F_; }
    const ReeSylow& group() const { return *U_; }

    // f(Y(t1,t3,t4)) = (t1, -t3, t1 t3 - t4); a bijection U -> V.
    Pattern cocycle_f(const GroupElem& u) const;

    // kappa(A,B) = A12 B12 + A13 B13 + A14 B14.
    Fe kappa(const Pattern& A, const Pattern& B) const;

    // A.Y(t1,t3,t4) = (A12 - A13 t1^(3h) - A14 t3, A13 - A14 t1, A14).
    Pattern act_dot(const Pattern& A, const GroupElem& u) const;

    // chi_A(u) = theta(kappa(A, f(u))); exponent variant for counting loops.
    int chi_exponent(const Pattern& A, const GroupElem& u) const;
    Eisenstein chi(const Pattern& A, const GroupElem& u) const;

    Family family_of(const Pattern& A) const;
    Pattern verge_of(const Pattern& A) const; // keeps the rightmost nonzero entry
    bool is_verge(const Pattern& A) const;

    // Orbit of A under the dot action, with the stabilizer found by direct scan.
    OrbitRecord orbit_of(const Pattern& A) const;

    // All orbits, generated from verge patterns in canonical order
    // (zero, then (A12*,0,0), (0,A13*,0), (0,0,A14*)); asserts they
    // partition V. Refuses q > 243.
    std::vector<OrbitRecord> classify_all() const;

    // Trace of u on the orbit module: sum of chi_C(u) over members fixed by u.
    Eisenstein orbit_character(const OrbitRecord& R, const GroupElem& u) const;

    std::uint64_t pattern_index(const Pattern& A) const;
    Pattern pattern_at(std::uint64_t idx) const;
    std::string to_string(const Pattern& A) const;
    Pattern parse(const std::string& text) const; // "a12;a13;a14"

private:
    const Fq* F_;
    const ReeSylow* U_;
};

} // namespace reesyl
