#include "reesyl/chevalley.hpp"

#include <sstream>
#include <stdexcept>

namespace reesyl {
namespace {

struct SignedEntry {
    int row, col; // 1-based
    int sign;     // +1 or -1
};

// The six positive-root basis matrices.
const SignedEntry kAlpha[] = {{1, 2, 1}, {7, 8, -1}, {3, 4, 1}, {5, 6, -1}, {3, 5, 1}, {4, 6, -1}};
const SignedEntry kBeta[] = {{2, 3, 1}, {6, 7, -1}};
const SignedEntry kAlphaBeta[] = {{1, 3, -1}, {6, 8, 1}, {2, 4, 1}, {5, 7, -1}, {2, 5, 1}, {4, 7, -1}};
const SignedEntry kTwoAlphaBeta[] = {{1, 4, -1}, {5, 8, 1}, {2, 6, -1}, {3, 7, 1}, {1, 5, -1}, {4, 8, 1}};
const SignedEntry kThreeAlphaBeta[] = {{1, 6, -1}, {3, 8, 1}};
const SignedEntry kThreeAlphaTwoBeta[] = {{1, 7, -1}, {2, 8, 1}};

Mat8 build_root(const Fq& F, const SignedEntry* entries, std::size_t n) {
    Mat8 m;
    for (std::size_t k = 0; k < n; ++k) {
        const auto& s = entries[k];
        m.at(s.row - 1, s.col - 1) = s.sign > 0 ? 1 : F.neg(1);
    }
    return m;
}

} // namespace

Mat8 mat_identity() {
    Mat8 m;
    for (int i = 0; i < 8; ++i) m.at(i, i) = 1;
    return m;
}

Mat8 mat_mul(const Fq& F, const Mat8& a, const Mat8& b) {
    Mat8 r;
    for (int i = 0; i < 8; ++i)
        for (int k = 0; k < 8; ++k) {
            const Fe aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < 8; ++j) {
                const Fe bkj = b.at(k, j);
                if (bkj == 0) continue;
                r.at(i, j) = F.add(r.at(i, j), F.mul(aik, bkj));
            }
        }
    return r;
}

Mat8 mat_transpose(const Mat8& a) {
    Mat8 r;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) r.at(j, i) = a.at(i, j);
    return r;
}

Mat8 mat_inverse_ut(const Fq& F, const Mat8& a) {
    Mat8 n = a;
    for (int i = 0; i < 8; ++i) n.at(i, i) = 0;
    Mat8 result = mat_identity();
    Mat8 power = n;
    int sign = -1;
    for (int k = 1; k < 8; ++k) {
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                Fe term = power.at(i, j);
                if (term == 0) continue;
                if (sign < 0) term = F.neg(term);
                result.at(i, j) = F.add(result.at(i, j), term);
            }
        power = mat_mul(F, power, n);
        sign = -sign;
    }
    return result;
}

bool is_upper_unitriangular(const Mat8& a) {
    for (int i = 0; i < 8; ++i) {
        if (a.at(i, i) != 1) return false;
        for (int j = 0; j < i; ++j)
            if (a.at(i, j) != 0) return false;
    }
    return true;
}

std::string mat_to_string(const Fq& F, const Mat8& a) {
    std::ostringstream os;
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            if (j) os << ' ';
            os << F.to_string(a.at(i, j));
        }
        os << '\n';
    }
    return os.str();
}

Chevalley::Chevalley(const Fq& F) : F_(&F) {
    e_[0] = build_root(F, kAlpha, std::size(kAlpha));
    e_[1] = build_root(F, kBeta, std::size(kBeta));
    e_[2] = build_root(F, kAlphaBeta, std::size(kAlphaBeta));
    e_[3] = build_root(F, kTwoAlphaBeta, std::size(kTwoAlphaBeta));
    e_[4] = build_root(F, kThreeAlphaBeta, std::size(kThreeAlphaBeta));
    e_[5] = build_root(F, kThreeAlphaTwoBeta, std::size(kThreeAlphaTwoBeta));
    for (int i = 0; i < 6; ++i) e_sq_[i] = mat_mul(F, e_[i], e_[i]);
}

int Chevalley::check_index(int i) {
    if (i < 1 || i > 6) throw std::invalid_argument("root index must be 1..6");
    return i - 1;
}

Mat8 Chevalley::root_element(int i, Fe t) const {
    const int k = check_index(i);
    const Fq& F = *F_;
    Mat8 m = mat_identity();
    const Fe t2_half = F.mul(2, F.mul(t, t)); // (1/2) t^2
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c) {
            Fe v = F.mul(t, e_[k].at(r, c));
            v = F.add(v, F.mul(t2_half, e_sq_[k].at(r, c)));
            m.at(r, c) = F.add(m.at(r, c), v);
        }
    return m;
}

Mat8 Chevalley::g2_tuple_to_matrix(const G2Tuple& y) const {
    const Fq& F = *F_;
    Mat8 m = root_element(2, y.t[1]);
    m = mat_mul(F, m, root_element(1, y.t[0]));
    m = mat_mul(F, m, root_element(3, y.t[2]));
    m = mat_mul(F, m, root_element(4, y.t[3]));
    m = mat_mul(F, m, root_element(5, y.t[4]));
    m = mat_mul(F, m, root_element(6, y.t[5]));
    return m;
}

G2Tuple Chevalley::matrix_to_g2_tuple(const Mat8& M) const {
    const Fq& F = *F_;
    if (!is_upper_unitriangular(M))
        throw std::invalid_argument("matrix is not upper unitriangular");
    G2Tuple y;
    Mat8 rest = M;
    // Factor order y2 y1 y3 y4 y5 y6; each designated entry is untouched by
    // the factors to its right.
    y.t[1] = rest.at(1, 2);
    rest = mat_mul(F, root_element(2, F.neg(y.t[1])), rest);
    y.t[0] = rest.at(0, 1);
    rest = mat_mul(F, root_element(1, F.neg(y.t[0])), rest);
    y.t[2] = F.neg(rest.at(0, 2));
    rest = mat_mul(F, root_element(3, F.neg(y.t[2])), rest);
    y.t[3] = F.neg(rest.at(0, 3));
    rest = mat_mul(F, root_element(4, F.neg(y.t[3])), rest);
    y.t[4] = F.neg(rest.at(0, 5));
    rest = mat_mul(F, root_element(5, F.neg(y.t[4])), rest);
    y.t[5] = F.neg(rest.at(0, 6));
    rest = mat_mul(F, root_element(6, F.neg(y.t[5])), rest);
    if (rest != mat_identity())
        throw std::invalid_argument("matrix is not in G2^syl(q)");
    return y;
}

G2Tuple Chevalley::twisted_F(const G2Tuple& y) const {
    const Fq& F = *F_;
    const Fe t1 = y.t[0], t2 = y.t[1], t3 = y.t[2], t4 = y.t[3], t5 = y.t[4], t6 = y.t[5];
    const Fe t2_th = F.pow_theta(t2);
    const Fe t1_3th = F.pow_3theta(t1);
    const Fe t2_3th = F.pow_3theta(t2);
    G2Tuple r;
    r.t[0] = t2_th;
    r.t[1] = t1_3th;
    r.t[2] = F.sub(F.pow_theta(t5), F.mul(t1_3th, t2_th));
    r.t[3] = F.sub(F.pow_theta(t6), F.mul(t1_3th, F.mul(t2_th, t2_th)));
    r.t[4] = F.add(F.pow_3theta(t3), F.mul(t1_3th, t2_3th));
    r.t[5] = F.add(F.pow_3theta(t4), F.mul(F.mul(t1_3th, t1_3th), t2_3th));
    return r;
}

G2Tuple Chevalley::ree_tuple(Fe t1, Fe t3, Fe t4) const {
    const Fq& F = *F_;
    G2Tuple y;
    y.t[0] = t1;
    y.t[1] = F.pow_3theta(t1);
    y.t[2] = t3;
    y.t[3] = t4;
    y.t[4] = F.add(F.pow_3theta(t3), F.power_expr(t1, 3, 3));
    y.t[5] = F.add(F.pow_3theta(t4), F.power_expr(t1, 6, 3));
    return y;
}

bool Chevalley::is_twisted_fixed(const G2Tuple& y) const { return twisted_F(y) == y; }

Mat8 Chevalley::ree_matrix(Fe t1, Fe t3, Fe t4) const {
    return g2_tuple_to_matrix(ree_tuple(t1, t3, t4));
}

Mat8 Chevalley::closed_form_matrix(Fe t1, Fe t3, Fe t4) const {
    const Fq& F = *F_;
    const auto neg = [&](Fe x) { return F.neg(x); };
    const auto add = [&](Fe x, Fe y) { return F.add(x, y); };
    const auto mul = [&](Fe x, Fe y) { return F.mul(x, y); };

    const Fe t1_3th = F.pow_3theta(t1);
    const Fe t3_3th = F.pow_3theta(t3);
    const Fe t4_3th = F.pow_3theta(t4);
    const Fe t1_3th1 = mul(t1_3th, t1);            // t1^(3h+1)
    const Fe t1_3th2 = mul(t1_3th1, t1);           // t1^(3h+2)
    const Fe t1_3th3 = mul(t1_3th2, t1);           // t1^(3h+3)
    const Fe t1_6th3 = F.power_expr(t1, 6, 3);     // t1^(6h+3)
    const Fe t1_6th4 = F.power_expr(t1, 6, 4);     // t1^(6h+4)
    const Fe t1t3 = mul(t1, t3);
    const Fe t1t3_m_t4 = F.sub(t1t3, t4);
    const Fe two = 2;

    Mat8 M = mat_identity();
    M.at(0, 1) = t1;
    M.at(0, 2) = neg(t3);
    M.at(0, 3) = t1t3_m_t4;
    M.at(0, 4) = t1t3_m_t4;
    M.at(0, 5) = neg(add(mul(t1, t4), add(t1_3th3, t3_3th)));
    M.at(0, 6) = neg(add(add(mul(t1t3, t3), mul(t3, t4)), add(t1_6th3, t4_3th)));
    M.at(0, 7) = add(add(mul(two, mul(t1t3, t4)), add(t1_6th4, mul(t1, t4_3th))),
                     neg(add(add(mul(t3, t1_3th3), mul(t3_3th, t3)), mul(t4, t4))));
    M.at(1, 2) = t1_3th;
    M.at(1, 3) = add(t1_3th1, t3);
    M.at(1, 4) = add(t1_3th1, t3);
    M.at(1, 5) = neg(add(t1_3th2, t4));
    M.at(1, 6) = add(neg(mul(two, mul(t1_3th1, t3))), F.sub(mul(t1_3th, t4), mul(t3, t3)));
    M.at(1, 7) = add(add(neg(mul(t1_3th2, t3)), mul(two, mul(t1_3th1, t4))),
                     add(add(mul(t1_3th, t3_3th), mul(two, mul(t3, t4))),
                         add(t4_3th, mul(two, t1_6th3))));
    M.at(2, 3) = t1;
    M.at(2, 4) = t1;
    M.at(2, 5) = neg(mul(t1, t1));
    M.at(2, 6) = add(neg(mul(two, t1t3)), t4);
    M.at(2, 7) = add(add(neg(mul(mul(t1, t1), t3)), mul(two, mul(t1, t4))),
                     add(t3_3th, t1_3th3));
    M.at(3, 5) = neg(t1);
    M.at(3, 6) = neg(t3);
    M.at(3, 7) = add(neg(t1t3), t4);
    M.at(4, 5) = neg(t1);
    M.at(4, 6) = neg(t3);
    M.at(4, 7) = add(neg(t1t3), t4);
    M.at(5, 6) = neg(t1_3th);
    M.at(5, 7) = add(t1_3th1, t3);
    M.at(6, 7) = neg(t1);
    return M;
}

std::vector<EntryMismatch> Chevalley::check_closed_form(Fe t1, Fe t3, Fe t4) const {
    const Mat8 truth = ree_matrix(t1, t3, t4);
    const Mat8 fixture = closed_form_matrix(t1, t3, t4);
    std::vector<EntryMismatch> out;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            if (truth.at(i, j) != fixture.at(i, j))
                out.push_back({i + 1, j + 1, fixture.at(i, j), truth.at(i, j)});
    return out;
}

} // namespace reesyl
