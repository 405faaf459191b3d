#include "reesyl/orbits.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace reesyl {

const char* family_name(Family f) {
    switch (f) {
        case Family::Zero: return "zero";
        case Family::F1: return "F1";
        case Family::F3: return "F3";
        case Family::F4: return "F4";
    }
    return "?";
}

Pattern pattern_of_matrix(const Mat8& g) { return {g.at(0, 1), g.at(0, 2), g.at(0, 3)}; }

Mat8 pattern_to_matrix(const Pattern& A) {
    Mat8 m;
    m.at(0, 1) = A.a12;
    m.at(0, 2) = A.a13;
    m.at(0, 3) = A.a14;
    return m;
}

Pattern act_circ_matrix(const Fq& F, const Pattern& A, const Mat8& g) {
    return pattern_of_matrix(mat_mul(F, pattern_to_matrix(A), g));
}

Pattern act_dot_matrix(const Fq& F, const Pattern& A, const Mat8& g) {
    const Mat8 ginv_t = mat_transpose(mat_inverse_ut(F, g));
    return pattern_of_matrix(mat_mul(F, pattern_to_matrix(A), ginv_t));
}

Pattern Orbits::cocycle_f(const GroupElem& u) const {
    const Fq& F = *F_;
    return {u.t1, F.neg(u.t3), F.sub(F.mul(u.t1, u.t3), u.t4)};
}

Fe Orbits::kappa(const Pattern& A, const Pattern& B) const {
    const Fq& F = *F_;
    return F.add(F.mul(A.a12, B.a12), F.add(F.mul(A.a13, B.a13), F.mul(A.a14, B.a14)));
}

Pattern Orbits::act_dot(const Pattern& A, const GroupElem& u) const {
    const Fq& F = *F_;
    Pattern r;
    r.a12 = F.sub(F.sub(A.a12, F.mul(A.a13, F.pow_3theta(u.t1))), F.mul(A.a14, u.t3));
    r.a13 = F.sub(A.a13, F.mul(A.a14, u.t1));
    r.a14 = A.a14;
    return r;
}

int Orbits::chi_exponent(const Pattern& A, const GroupElem& u) const {
    return F_->trace(kappa(A, cocycle_f(u)));
}

Eisenstein Orbits::chi(const Pattern& A, const GroupElem& u) const {
    return omega_pow(chi_exponent(A, u));
}

Family Orbits::family_of(const Pattern& A) const {
    if (A.a14 != 0) return Family::F4;
    if (A.a13 != 0) return Family::F3;
    if (A.a12 != 0) return Family::F1;
    return Family::Zero;
}

Pattern Orbits::verge_of(const Pattern& A) const {
    if (A.a14 != 0) return {0, 0, A.a14};
    if (A.a13 != 0) return {0, A.a13, 0};
    return A;
}

bool Orbits::is_verge(const Pattern& A) const { return verge_of(A) == A; }

OrbitRecord Orbits::orbit_of(const Pattern& A) const {
    const Fq& F = *F_;
    const std::uint64_t q = F.q();

    OrbitRecord rec;
    rec.family = family_of(A);

    // a14 is constant along the orbit, so members are indexed by (a12,a13);
    // the dot action of Y(t1,t3,t4) does not involve t4, so each stabilizer
    // element found on (t1,t3) carries a full fiber of q choices of t4.
    std::vector<Pattern> members;
    members.reserve(rec.family == Family::F4 ? q * q : q);
    std::vector<char> seen(q * q, 0);
    std::uint64_t stab_pairs = 0;
    for (Fe t1 = 0; t1 < q; ++t1)
        for (Fe t3 = 0; t3 < q; ++t3) {
            const Pattern C = act_dot(A, {t1, t3, 0});
            if (C == A) ++stab_pairs;
            const std::uint64_t idx = static_cast<std::uint64_t>(C.a12) * q + C.a13;
            if (!seen[idx]) {
                seen[idx] = 1;
                members.push_back(C);
            }
        }
    std::sort(members.begin(), members.end(),
              [](const Pattern& x, const Pattern& y) { return lex_less(x, y); });
    rec.members = std::move(members);
    rec.stabilizer_order = stab_pairs * q;

    // The verge is the unique member equal to its own verge.
    rec.verge = verge_of(A);
    return rec;
}

std::vector<OrbitRecord> Orbits::classify_all() const {
    const Fq& F = *F_;
    const std::uint64_t q = F.q();
    if (q > 243) throw std::length_error("orbit classification capped at q <= 243");

    std::vector<OrbitRecord> records;
    records.push_back(orbit_of({0, 0, 0}));
    for (Fe v = 1; v < q; ++v) records.push_back(orbit_of({v, 0, 0}));
    for (Fe v = 1; v < q; ++v) records.push_back(orbit_of({0, v, 0}));
    for (Fe v = 1; v < q; ++v) records.push_back(orbit_of({0, 0, v}));

    std::vector<char> covered(q * q * q, 0);
    std::uint64_t total = 0;
    for (const auto& rec : records)
        for (const auto& C : rec.members) {
            const std::uint64_t idx = pattern_index(C);
            if (covered[idx])
                throw std::logic_error("orbit classification produced overlapping orbits");
            covered[idx] = 1;
            ++total;
        }
    if (total != q * q * q)
        throw std::logic_error("orbit classification does not cover the pattern space");
    return records;
}

Eisenstein Orbits::orbit_character(const OrbitRecord& R, const GroupElem& u) const {
    const Fq& F = *F_;
    const Fe g = F.pow_3theta(u.t1); // hoisted factor of the dot action
    const Pattern fu = cocycle_f(u);
    // chi values are cube roots of unity; tally the three exponents.
    std::uint64_t count[3] = {0, 0, 0};
    for (const Pattern& C : R.members) {
        if (F.sub(C.a13, F.mul(C.a14, u.t1)) != C.a13) continue;
        if (F.sub(F.sub(C.a12, F.mul(C.a13, g)), F.mul(C.a14, u.t3)) != C.a12) continue;
        ++count[F.trace(kappa(C, fu))];
    }
    Eisenstein z(static_cast<long>(count[0]), static_cast<long>(count[1]));
    const long n2 = static_cast<long>(count[2]);
    z.a -= n2;
    z.b -= n2;
    return z;
}

std::uint64_t Orbits::pattern_index(const Pattern& A) const {
    const std::uint64_t q = F_->q();
    return (static_cast<std::uint64_t>(A.a12) * q + A.a13) * q + A.a14;
}

Pattern Orbits::pattern_at(std::uint64_t idx) const {
    const std::uint64_t q = F_->q();
    Pattern A;
    A.a14 = static_cast<Fe>(idx % q);
    idx /= q;
    A.a13 = static_cast<Fe>(idx % q);
    A.a12 = static_cast<Fe>(idx / q);
    return A;
}

std::string Orbits::to_string(const Pattern& A) const {
    const Fq& F = *F_;
    return F.to_string(A.a12) + ";" + F.to_string(A.a13) + ";" + F.to_string(A.a14);
}

Pattern Orbits::parse(const std::string& text) const {
    std::istringstream is(text);
    std::string part;
    std::vector<Fe> coords;
    while (std::getline(is, part, ';')) coords.push_back(F_->parse(part));
    if (coords.size() != 3)
        throw std::invalid_argument("pattern needs three coordinates a12;a13;a14");
    return {coords[0], coords[1], coords[2]};
}

} // namespace reesyl
