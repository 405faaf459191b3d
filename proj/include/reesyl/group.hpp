// The Ree Sylow subgroup of order q^3 in parametric coordinates Y(t1,t3,t4).
// Multiplication, inversion, commutators and conjugation are closed-form
// field expressions; the 8x8 matrix realization is kept only as a test
// oracle (see chevalley.hpp).

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reesyl/field.hpp"

namespace reesyl {

struct GroupElem {
    Fe t1 = 0, t3 = 0, t4 = 0;

    bool operator==(const GroupElem& o) const {
        return t1 == o.t1 && t3 == o.t3 && t4 == o.t4;
    }
    bool operator!=(const GroupElem& o) const { return !(*this == o); }
};

class ReeSylow {
public:
    explicit ReeSylow(const Fq& F) : F_(&F) {}

    const Fq& field() const { return *F_; }
    std::uint64_t order() const { return F_->q() * F_->q() * F_->q(); }

    static GroupElem identity() { return {}; }
    static GroupElem a(Fe t) { return {t, 0, 0}; }
    static GroupElem b(Fe t) { return {0, t, 0}; }
    static GroupElem c(Fe t) { return {0, 0, t}; }

    GroupElem mul(const GroupElem& x, const GroupElem& y) const;
    GroupElem inv(const GroupElem& x) const;
    // x^-1 y^-1 x y; the first coordinate is always 0.
    GroupElem commutator(const GroupElem& x, const GroupElem& y) const;
    // by * x * by^-1.
    GroupElem conjugate(const GroupElem& x, const GroupElem& by) const;

    GroupElem pow(GroupElem x, std::uint64_t n) const;
    std::uint64_t order_of(const GroupElem& x) const;

    // Lexicographic in (t1,t3,t4) under the canonical field order.
    std::vector<GroupElem> enumerate() const; // refuses q > 243
    std::uint64_t elem_index(const GroupElem& x) const;
    GroupElem elem_at(std::uint64_t idx) const;

    // "Y(<t1>;<t3>;<t4>)" with the field-element digit syntax inside.
    std::string to_string(const GroupElem& x) const;
    GroupElem parse(const std::string& text) const;

private:
    const Fq* F_;
};

// Canonical (index) comparison, used for deterministic representatives.
inline bool lex_less(const GroupElem& x, const GroupElem& y) {
    if (x.t1 != y.t1) return x.t1 < y.t1;
    if (x.t3 != y.t3) return x.t3 < y.t3;
    return x.t4 < y.t4;
}

} // namespace reesyl
