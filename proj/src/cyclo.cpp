#include "reesyl/cyclo.hpp"

#include <stdexcept>

namespace reesyl {

Eisenstein operator+(const Eisenstein& z, const Eisenstein& w) {
    return {z.a + w.a, z.b + w.b};
}

Eisenstein operator-(const Eisenstein& z, const Eisenstein& w) {
    return {z.a - w.a, z.b - w.b};
}

Eisenstein operator-(const Eisenstein& z) { return {-z.a, -z.b}; }

Eisenstein operator*(const Eisenstein& z, const Eisenstein& w) {
    mpz_class bd = z.b * w.b;
    return {z.a * w.a - bd, z.a * w.b + z.b * w.a - bd};
}

Eisenstein& operator+=(Eisenstein& z, const Eisenstein& w) {
    z.a += w.a;
    z.b += w.b;
    return z;
}

Eisenstein conj(const Eisenstein& z) { return {z.a - z.b, -z.b}; }

mpz_class norm(const Eisenstein& z) { return z.a * z.a - z.a * z.b + z.b * z.b; }

Eisenstein omega_pow(long k) {
    k %= 3;
    if (k < 0) k += 3;
    switch (k) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        default: return {-1, -1};
    }
}

Eisenstein exact_div(const Eisenstein& z, const mpz_class& n) {
    if (n == 0) throw std::domain_error("exact_div by zero");
    if (!mpz_divisible_p(z.a.get_mpz_t(), n.get_mpz_t()) ||
        !mpz_divisible_p(z.b.get_mpz_t(), n.get_mpz_t()))
        throw std::domain_error("exact_div: " + to_string(z) + " not divisible by " +
                                n.get_str());
    return {z.a / n, z.b / n};
}

Eisenstein theta_char(const Fq& F, Fe x) { return omega_pow(F.trace(x)); }

std::string to_string(const Eisenstein& z) {
    std::string s = z.a.get_str();
    if (z.b >= 0)
        s += "+" + z.b.get_str();
    else
        s += "-" + mpz_class(-z.b).get_str();
    return s + "*w";
}

} // namespace reesyl
