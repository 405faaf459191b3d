#include "doctest.h"

#include <random>
#include <set>
#include <vector>

#include "reesyl/field.hpp"

using namespace reesyl;

namespace {

// Independent polynomial arithmetic over F_3, used as the oracle for the
// field implementation. Digit vectors low-to-high.
using Poly = std::vector<int>;

Poly oracle_from_index(std::uint64_t idx) {
    Poly p;
    while (idx) {
        p.push_back(static_cast<int>(idx % 3));
        idx /= 3;
    }
    return p;
}

std::uint64_t oracle_to_index(const Poly& p) {
    std::uint64_t idx = 0;
    for (std::size_t i = p.size(); i-- > 0;) idx = idx * 3 + static_cast<unsigned>(p[i]);
    return idx;
}

Poly oracle_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % 3;
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// long division remainder by a monic divisor
Poly oracle_rem(Poly a, const Poly& mod) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    const std::size_t dm = mod.size() - 1;
    while (a.size() > dm) {
        const int lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = ((a[shift + i] - lead * mod[i]) % 3 + 3) % 3;
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

int oracle_eval(const Poly& p, int x) {
    int acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = (acc * x + p[i]) % 3;
    return acc;
}

bool oracle_cubic_irreducible(const Poly& f) {
    // degree <= 3: irreducible iff no roots (and degree >= 2)
    for (int x = 0; x < 3; ++x)
        if (oracle_eval(f, x) == 0) return false;
    return true;
}

Fe oracle_pow(const Fq& F, Fe a, std::uint64_t e) {
    Fe r = 1;
    while (e) {
        if (e & 1) r = F.mul(r, a);
        a = F.mul(a, a);
        e >>= 1;
    }
    return r;
}

} // namespace

TEST_SUITE("field") {

TEST_CASE("prime field basics") {
    const Fq F = Fq::make(0);
    CHECK(F.degree() == 1);
    CHECK(F.q() == 3);
    CHECK(F.theta() == 1);
    CHECK(F.modulus() == std::vector<std::uint8_t>{0, 1}); // the polynomial x
    CHECK(F.add(2, 2) == 1);
    CHECK(F.trace(2) == 2); // trace is the identity on the prime field
    CHECK(F.enumerate() == std::vector<Fe>{0, 1, 2});
}

TEST_CASE("canonical modulus at m=1 is the first irreducible cubic") {
    // oracle: scan monic cubics in index order, root check decides
    std::uint64_t first = 0;
    for (std::uint64_t k = 0;; ++k) {
        Poly f = oracle_from_index(k);
        f.resize(4, 0);
        f[3] = 1;
        if (oracle_cubic_irreducible(f)) {
            first = k;
            break;
        }
    }
    CHECK(first == 7); // x^3 + 2x + 1

    const Fq F = Fq::make(1);
    CHECK(F.degree() == 3);
    CHECK(F.q() == 27);
    CHECK(F.theta() == 3);
    CHECK(F.modulus() == std::vector<std::uint8_t>{1, 2, 0, 1});
}

TEST_CASE("multiplication matches polynomial long division at q=27") {
    const Fq F = Fq::make(1);
    const Poly mod{1, 2, 0, 1};
    // x * x^2 reduced by the modulus
    const Fe x = 3, x2 = 9;
    const Poly expect = oracle_rem(oracle_mul(oracle_from_index(3), oracle_from_index(9)), mod);
    CHECK(F.mul(x, x2) == oracle_to_index(expect));
    // every product agrees with the oracle
    for (Fe a = 0; a < 27; ++a)
        for (Fe b = 0; b < 27; ++b) {
            const Poly want = oracle_rem(oracle_mul(oracle_from_index(a), oracle_from_index(b)), mod);
            REQUIRE(F.mul(a, b) == oracle_to_index(want));
        }
}

TEST_CASE("field axioms exhaustive at m=0, sampled at m=1,2") {
    const Fq F0 = Fq::make(0);
    for (Fe a = 0; a < 3; ++a)
        for (Fe b = 0; b < 3; ++b) {
            CHECK(F0.add(a, b) == F0.add(b, a));
            CHECK(F0.mul(a, b) == F0.mul(b, a));
            for (Fe c = 0; c < 3; ++c) {
                CHECK(F0.mul(a, F0.add(b, c)) == F0.add(F0.mul(a, b), F0.mul(a, c)));
                CHECK(F0.mul(F0.mul(a, b), c) == F0.mul(a, F0.mul(b, c)));
                CHECK(F0.add(F0.add(a, b), c) == F0.add(a, F0.add(b, c)));
            }
        }
    for (unsigned m : {1u, 2u}) {
        const Fq F = Fq::make(m);
        std::mt19937_64 rng(7);
        for (int k = 0; k < 100000; ++k) {
            const Fe a = static_cast<Fe>(rng() % F.q());
            const Fe b = static_cast<Fe>(rng() % F.q());
            const Fe c = static_cast<Fe>(rng() % F.q());
            REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            REQUIRE(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
            REQUIRE(F.add(a, F.neg(a)) == 0);
            if (a != 0) REQUIRE(F.mul(a, F.inv(a)) == 1);
        }
    }
}

TEST_CASE("inv(0) is a domain error") {
    const Fq F = Fq::make(1);
    CHECK_THROWS_AS((void)F.inv(0), std::domain_error);
}

TEST_CASE("frobenius is an automorphism and has the right order") {
    for (unsigned m : {0u, 1u}) {
        const Fq F = Fq::make(m);
        for (Fe a = 0; a < F.q(); ++a) {
            CHECK(F.frob_pow(a, 1) == oracle_pow(F, a, 3));
            for (Fe b = 0; b < F.q(); ++b) {
                CHECK(F.frob_pow(F.add(a, b), 1) == F.add(F.frob_pow(a, 1), F.frob_pow(b, 1)));
                CHECK(F.frob_pow(F.mul(a, b), 1) == F.mul(F.frob_pow(a, 1), F.frob_pow(b, 1)));
            }
            CHECK(F.frob_pow(a, F.degree()) == a);
        }
    }
    // m=1: frob_pow(frob_pow(a,1),2) = a for all 27 elements
    const Fq F = Fq::make(1);
    for (Fe a = 0; a < 27; ++a) CHECK(F.frob_pow(F.frob_pow(a, 1), 2) == a);
}

TEST_CASE("x^(3 theta^2) = x") {
    // 3 theta^2 = q, so this is the Frobenius fixed-point identity
    for (unsigned m : {0u, 1u}) {
        const Fq F = Fq::make(m);
        for (Fe a = 0; a < F.q(); ++a) CHECK(oracle_pow(F, a, 3 * F.theta() * F.theta()) == a);
    }
    const Fq F2 = Fq::make(2);
    std::mt19937_64 rng(11);
    for (int k = 0; k < 100; ++k) {
        const Fe a = static_cast<Fe>(rng() % F2.q());
        CHECK(oracle_pow(F2, a, 3 * F2.theta() * F2.theta()) == a);
        CHECK(F2.frob_pow(a, F2.degree()) == a); // x^(3^5) = x
    }
}

TEST_CASE("power_expr routes small theta exponents correctly") {
    const Fq F0 = Fq::make(0);
    CHECK(F0.power_expr(2, 3, 1) == 1); // 2^4 = 16 = 1 mod 3
    CHECK(F0.power_expr(2, 0, 0) == 1);

    for (unsigned m : {1u, 2u}) {
        const Fq F = Fq::make(m);
        std::mt19937_64 rng(5);
        for (int k = 0; k < 2000; ++k) {
            const Fe a = static_cast<Fe>(rng() % F.q());
            // a^(3 theta) = frob_pow(a, m+1), and the oracle is square-and-multiply
            CHECK(F.power_expr(a, 3, 0) == oracle_pow(F, a, 3 * F.theta()));
            CHECK(F.power_expr(a, 3, 0) == F.frob_pow(a, m + 1));
            CHECK(F.power_expr(a, 6, 3) == oracle_pow(F, a, 6 * F.theta() + 3));
            CHECK(F.power_expr(a, 3, 4) == oracle_pow(F, a, 3 * F.theta() + 4));
        }
    }
}

TEST_CASE("trace is F3-linear, surjective, frobenius-invariant") {
    for (unsigned m : {0u, 1u}) {
        const Fq F = Fq::make(m);
        std::uint64_t kernel = 0;
        for (Fe a = 0; a < F.q(); ++a) {
            if (F.trace(a) == 0) ++kernel;
            CHECK(F.trace(F.frob_pow(a, 1)) == F.trace(a));
            for (Fe b = 0; b < F.q(); ++b)
                CHECK(F.trace(F.add(a, b)) == (F.trace(a) + F.trace(b)) % 3);
        }
        CHECK(kernel == F.q() / 3);
    }
}

TEST_CASE("enumeration is canonical and capped") {
    const Fq F = Fq::make(1);
    const auto all = F.enumerate();
    CHECK(all.size() == 27);
    CHECK(all[0] == 0);
    CHECK(all[1] == 1);
    CHECK(std::set<Fe>(all.begin(), all.end()).size() == 27);

    const Fq big = Fq::make(3); // q = 2187, above the enumeration cap
    CHECK_THROWS_AS((void)big.enumerate(), std::length_error);
    // arithmetic still works beyond the cap
    CHECK(big.mul(big.inv(5), 5) == 1);
    CHECK(big.frob_pow(17, big.degree()) == 17);
}

TEST_CASE("text round trip") {
    const Fq F = Fq::make(1);
    CHECK(F.to_string(0) == "0,0,0");
    CHECK(F.to_string(5) == "2,1,0");
    for (Fe a = 0; a < 27; ++a) CHECK(F.parse(F.to_string(a)) == a);
    CHECK_THROWS_AS((void)F.parse("1,2"), std::invalid_argument);
    CHECK_THROWS_AS((void)F.parse("3,0,0"), std::invalid_argument);
}

} // TEST_SUITE
