// Exact arithmetic in the Eisenstein integers Z[w], w a primitive cube root
// of unity (w^2 = -1-w), and the additive character of F_q valued in cube
// roots of unity. All character arithmetic in this project stays here; there
// is no floating point anywhere.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "reesyl/field.hpp"

namespace reesyl {

struct Eisenstein {
    mpz_class a, b; // value a + b*w

    Eisenstein() : a(0), b(0) {}
    Eisenstein(long x, long y) : a(x), b(y) {}
    Eisenstein(mpz_class x, mpz_class y) : a(std::move(x)), b(std::move(y)) {}

    bool operator==(const Eisenstein& o) const { return a == o.a && b == o.b; }
    bool operator!=(const Eisenstein& o) const { return !(*this == o); }
    bool is_zero() const { return a == 0 && b == 0; }
};

Eisenstein operator+(const Eisenstein& z, const Eisenstein& w);
Eisenstein operator-(const Eisenstein& z, const Eisenstein& w);
Eisenstein operator-(const Eisenstein& z);
// (a+bw)(c+dw) = ac - bd + (ad + bc - bd)w
Eisenstein operator*(const Eisenstein& z, const Eisenstein& w);
Eisenstein& operator+=(Eisenstein& z, const Eisenstein& w);

// Ring involution w -> w^2: conj(a+bw) = (a-b) - bw.
Eisenstein conj(const Eisenstein& z);

// z * conj(z) = a^2 - ab + b^2 >= 0.
mpz_class norm(const Eisenstein& z);

// w^(k mod 3): 1, w or -1-w.
Eisenstein omega_pow(long k);

// Componentwise exact quotient; throws std::domain_error if n does not
// divide both components (that would be a logic bug upstream, never data).
Eisenstein exact_div(const Eisenstein& z, const mpz_class& n);

// The fixed nontrivial additive character of F_q: x -> w^Tr(x).
Eisenstein theta_char(const Fq& F, Fe x);

// Text encoding "a+b*w" (e.g. "1-1*w", "0+0*w").
std::string to_string(const Eisenstein& z);

} // namespace reesyl
