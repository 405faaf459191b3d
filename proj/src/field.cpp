#include "reesyl/field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace reesyl {
namespace {

// Polynomials over F_3 as digit vectors, low-to-high, no trailing zeros.
using Poly = std::vector<std::uint8_t>;

Poly poly_from_index(std::uint64_t idx) {
    Poly p;
    while (idx) {
        p.push_back(static_cast<std::uint8_t>(idx % 3));
        idx /= 3;
    }
    return p;
}

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint8_t>((r[i + j] + a[i] * b[j]) % 3);
    poly_trim(r);
    return r;
}

// Remainder of a modulo the monic polynomial mod.
Poly poly_rem(Poly a, const Poly& mod) {
    poly_trim(a);
    const std::size_t dm = mod.size() - 1;
    while (a.size() > dm) {
        const std::size_t shift = a.size() - 1 - dm;
        const unsigned lead = a.back();
        for (std::size_t i = 0; i <= dm; ++i) {
            unsigned v = a[shift + i] + 3 - (lead * mod[i]) % 3;
            a[shift + i] = static_cast<std::uint8_t>(v % 3);
        }
        poly_trim(a);
        if (a.empty()) break;
    }
    return a;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool poly_is_irreducible(const Poly& f) {
    const std::size_t deg = f.size() - 1;
    if (deg == 0) return false;
    if (deg == 1) return true;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= 3;
        for (std::uint64_t k = 0; k < count; ++k) {
            Poly g = poly_from_index(k);
            g.resize(d + 1, 0);
            g[d] = 1;
            if (poly_rem(f, g).empty()) return false;
        }
    }
    return true;
}

Poly canonical_modulus(unsigned degree) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < degree; ++i) count *= 3;
    for (std::uint64_t k = 0; k < count; ++k) {
        Poly f = poly_from_index(k);
        f.resize(degree + 1, 0);
        f[degree] = 1;
        if (poly_is_irreducible(f)) return f;
    }
    throw std::logic_error("no irreducible polynomial found"); // unreachable
}

std::uint64_t poly_to_index(const Poly& p) {
    std::uint64_t idx = 0;
    for (std::size_t i = p.size(); i-- > 0;) idx = idx * 3 + p[i];
    return idx;
}

constexpr std::uint64_t kTableCap = 243;
constexpr std::uint64_t kEnumCap = 243;

} // namespace

Fq Fq::make(unsigned m) {
    Fq f;
    f.m_ = m;
    f.degree_ = 2 * m + 1;
    f.q_ = 1;
    for (unsigned i = 0; i < f.degree_; ++i) f.q_ *= 3;
    f.theta_ = 1;
    for (unsigned i = 0; i < m; ++i) f.theta_ *= 3;
    Poly mod = canonical_modulus(f.degree_);
    if (!poly_is_irreducible(mod)) throw std::logic_error("modulus not irreducible");
    f.modulus_ = mod;
    if (f.q_ <= kTableCap) f.build_tables();
    return f;
}

Fe Fq::add_generic(Fe a, Fe b) const {
    Fe r = 0, w = 1;
    for (unsigned i = 0; i < degree_; ++i) {
        r += ((a % 3) + (b % 3)) % 3 * w;
        a /= 3;
        b /= 3;
        w *= 3;
    }
    return r;
}

Fe Fq::neg_generic(Fe a) const {
    Fe r = 0, w = 1;
    for (unsigned i = 0; i < degree_; ++i) {
        r += (3 - a % 3) % 3 * w;
        a /= 3;
        w *= 3;
    }
    return r;
}

Fe Fq::mul_generic(Fe a, Fe b) const {
    Poly pa = poly_from_index(a), pb = poly_from_index(b);
    return static_cast<Fe>(poly_to_index(poly_rem(poly_mul(pa, pb), modulus_)));
}

void Fq::build_tables() {
    const std::size_t n = static_cast<std::size_t>(q_);
    add_tab_.resize(n * n);
    mul_tab_.resize(n * n);
    neg_tab_.resize(n);
    inv_tab_.assign(n, 0);
    frob_tab_.resize(n);
    trace_tab_.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
        neg_tab_[a] = neg_generic(static_cast<Fe>(a));
        for (std::size_t b = 0; b < n; ++b) {
            add_tab_[a * n + b] = add_generic(static_cast<Fe>(a), static_cast<Fe>(b));
            mul_tab_[a * n + b] = mul_generic(static_cast<Fe>(a), static_cast<Fe>(b));
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        Fe a2 = mul_tab_[a * n + a];
        frob_tab_[a] = mul_tab_[a2 * n + a];
        for (std::size_t b = 1; b < n; ++b) {
            if (mul_tab_[a * n + b] == 1) {
                inv_tab_[a] = static_cast<Fe>(b);
                break;
            }
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        Fe acc = 0, x = static_cast<Fe>(a);
        for (unsigned i = 0; i < degree_; ++i) {
            acc = add_tab_[acc * n + x];
            x = frob_tab_[x];
        }
        trace_tab_[a] = static_cast<std::uint8_t>(acc); // acc is a constant, index 0/1/2
    }
}

Fe Fq::add(Fe a, Fe b) const {
    if (!add_tab_.empty()) return add_tab_[static_cast<std::size_t>(a) * q_ + b];
    return add_generic(a, b);
}

Fe Fq::sub(Fe a, Fe b) const { return add(a, neg(b)); }

Fe Fq::neg(Fe a) const {
    if (!neg_tab_.empty()) return neg_tab_[a];
    return neg_generic(a);
}

Fe Fq::mul(Fe a, Fe b) const {
    if (!mul_tab_.empty()) return mul_tab_[static_cast<std::size_t>(a) * q_ + b];
    return mul_generic(a, b);
}

Fe Fq::inv(Fe a) const {
    if (a == 0) throw std::domain_error("inverse of 0 in GF(q)");
    if (!inv_tab_.empty()) return inv_tab_[a];
    return pow(a, q_ - 2);
}

Fe Fq::pow(Fe a, std::uint64_t e) const {
    Fe r = 1, base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

Fe Fq::frob_pow(Fe a, unsigned k) const {
    k %= degree_; // x^(3^degree) = x
    if (!frob_tab_.empty()) {
        for (unsigned i = 0; i < k; ++i) a = frob_tab_[a];
        return a;
    }
    for (unsigned i = 0; i < k; ++i) {
        Fe a2 = mul(a, a);
        a = mul(a2, a);
    }
    return a;
}

Fe Fq::power_expr(Fe a, int c1, int c0) const {
    if (c1 != 0 && c1 != 3 && c1 != 6)
        throw std::invalid_argument("power_expr: c1 must be 0, 3 or 6");
    if (c0 < 0 || c0 > 4) throw std::invalid_argument("power_expr: c0 out of range");
    Fe r = 1;
    if (c1 >= 3) {
        Fe f = frob_pow(a, m_ + 1); // a^(3*theta)
        r = f;
        if (c1 == 6) r = mul(r, f);
    }
    for (int i = 0; i < c0; ++i) r = mul(r, a);
    return r;
}

int Fq::trace(Fe a) const {
    if (!trace_tab_.empty()) return trace_tab_[a];
    Fe acc = 0, x = a;
    for (unsigned i = 0; i < degree_; ++i) {
        acc = add(acc, x);
        x = frob_pow(x, 1);
    }
    return static_cast<int>(acc);
}

std::vector<Fe> Fq::enumerate() const {
    if (q_ > kEnumCap)
        throw std::length_error("field enumeration capped at q <= 243");
    std::vector<Fe> out(q_);
    for (std::uint64_t i = 0; i < q_; ++i) out[i] = static_cast<Fe>(i);
    return out;
}

std::string Fq::to_string(Fe a) const {
    std::ostringstream os;
    for (unsigned i = 0; i < degree_; ++i) {
        if (i) os << ',';
        os << a % 3;
        a /= 3;
    }
    return os.str();
}

Fe Fq::parse(const std::string& text) const {
    std::vector<unsigned> digits;
    std::istringstream is(text);
    std::string part;
    while (std::getline(is, part, ',')) {
        if (part.size() != 1 || part[0] < '0' || part[0] > '2')
            throw std::invalid_argument("bad field element digit: '" + part + "'");
        digits.push_back(static_cast<unsigned>(part[0] - '0'));
    }
    if (digits.size() != degree_)
        throw std::invalid_argument("field element needs exactly " +
                                    std::to_string(degree_) + " digits");
    Fe r = 0, w = 1;
    for (unsigned d : digits) {
        r += d * w;
        w *= 3;
    }
    return r;
}

} // namespace reesyl
