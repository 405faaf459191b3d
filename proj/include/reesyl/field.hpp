// Exact arithmetic in GF(3^(2m+1)) with a fixed polynomial basis.
//
// Elements are canonical indices in [0, q): the base-3 digits of an index,
// low digit first, are the coefficients of the residue polynomial. The
// canonical element order is plain numeric order on indices, so enumeration
// starts 0, 1, 2, x, 1+x, ...

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace reesyl {

using Fe = std::uint32_t; // field element handle (canonical index)

class Fq {
public:
    // Builds GF(3^(2m+1)) with the canonical modulus: the first monic
    // irreducible polynomial of degree 2m+1 in index order. Irreducibility
    // is re-verified by trial division at construction.
    static Fq make(unsigned m);

    unsigned m() const { return m_; }
    unsigned degree() const { return degree_; }        // 2m+1
    std::uint64_t q() const { return q_; }             // 3^degree
    std::uint64_t theta() const { return theta_; }     // 3^m
    const std::vector<std::uint8_t>& modulus() const { return modulus_; }

    Fe add(Fe a, Fe b) const;
    Fe sub(Fe a, Fe b) const;
    Fe neg(Fe a) const;
    Fe mul(Fe a, Fe b) const;
    Fe inv(Fe a) const; // throws std::domain_error on a == 0

    Fe pow(Fe a, std::uint64_t e) const;

    // a^(3^k); frob_pow(a, 2m+1) == a.
    Fe frob_pow(Fe a, unsigned k) const;

    // a^(c1*theta + c0) with c1 in {0,3,6}, c0 in {0,...,4}. Routed through
    // the Frobenius (3*theta = 3^(m+1)) so no big exponents ever appear.
    Fe power_expr(Fe a, int c1, int c0) const;

    // Shorthands for the exponents the group laws use.
    Fe pow_3theta(Fe a) const { return frob_pow(a, m_ + 1); }
    Fe pow_theta(Fe a) const { return frob_pow(a, m_); }

    // Absolute trace to F_3, as a plain digit 0/1/2.
    int trace(Fe a) const;

    // All q elements in canonical order. Refuses q > 243.
    std::vector<Fe> enumerate() const;

    // Textual form "c0,c1,...,c_{2m}" with digits 0..2.
    std::string to_string(Fe a) const;
    Fe parse(const std::string& text) const;

    bool is_table_backed() const { return !mul_tab_.empty(); }

private:
    Fq() = default;

    Fe add_generic(Fe a, Fe b) const;
    Fe neg_generic(Fe a) const;
    Fe mul_generic(Fe a, Fe b) const;
    void build_tables();

    unsigned m_ = 0;
    unsigned degree_ = 1;
    std::uint64_t q_ = 3;
    std::uint64_t theta_ = 1;
    std::vector<std::uint8_t> modulus_; // low-to-high, monic, length degree+1

    // Dense tables, present for q <= 243 (everything the exhaustive suites touch).
    std::vector<Fe> add_tab_, mul_tab_; // q*q
    std::vector<Fe> neg_tab_, inv_tab_, frob_tab_;
    std::vector<std::uint8_t> trace_tab_;
};

} // namespace reesyl
