#include "doctest.h"

#include "reesyl/cyclo.hpp"

using namespace reesyl;

TEST_SUITE("cyclo") {

TEST_CASE("ring basics with w^2 = -1-w") {
    const Eisenstein w = omega_pow(1);
    CHECK(w * w == Eisenstein(-1, -1));
    CHECK(omega_pow(0) == Eisenstein(1, 0));
    CHECK(omega_pow(3) == Eisenstein(1, 0));
    CHECK(omega_pow(2) == Eisenstein(-1, -1));
    CHECK(omega_pow(-1) == Eisenstein(-1, -1));

    // 1 + w + w^2 = 0
    CHECK((omega_pow(0) + omega_pow(1) + omega_pow(2)).is_zero());
    const Eisenstein z(1, 1);
    CHECK(z + conj(z) == Eisenstein(1, 0));
}

TEST_CASE("norm and conjugation") {
    CHECK(norm(Eisenstein(2, 1)) == 3); // 4 - 2 + 1
    const Eisenstein z(3, -2), w(-1, 5);
    CHECK(conj(z * w) == conj(z) * conj(w));
    CHECK(norm(z * w) == norm(z) * norm(w));
    CHECK(conj(conj(z)) == z);
    CHECK(norm(z) >= 0);
}

TEST_CASE("exact division") {
    CHECK(exact_div(Eisenstein(27, 0), 27) == Eisenstein(1, 0));
    CHECK(exact_div(Eisenstein(3, -3), 3) == Eisenstein(1, -1));
    CHECK_THROWS_AS(exact_div(Eisenstein(5, 3), 3), std::domain_error);
    CHECK_THROWS_AS(exact_div(Eisenstein(1, 0), 0), std::domain_error);
}

TEST_CASE("additive character") {
    const Fq F0 = Fq::make(0);
    CHECK(theta_char(F0, 0) == Eisenstein(1, 0));
    Eisenstein sum;
    for (Fe x = 0; x < 3; ++x) sum += theta_char(F0, x);
    CHECK(sum.is_zero());

    const Fq F1 = Fq::make(1);
    // multiplicative over addition, all 27^2 pairs
    for (Fe x = 0; x < 27; ++x) {
        CHECK(theta_char(F1, F1.neg(x)) == conj(theta_char(F1, x)));
        for (Fe y = 0; y < 27; ++y)
            CHECK(theta_char(F1, F1.add(x, y)) == theta_char(F1, x) * theta_char(F1, y));
    }
    // nontrivial, each value hit q/3 times
    int hits[3] = {0, 0, 0};
    for (Fe x = 0; x < 27; ++x) ++hits[F1.trace(x)];
    CHECK(hits[0] == 9);
    CHECK(hits[1] == 9);
    CHECK(hits[2] == 9);
    Eisenstein total;
    for (Fe x = 0; x < 27; ++x) total += theta_char(F1, x);
    CHECK(total.is_zero());
}

TEST_CASE("text encoding") {
    CHECK(to_string(Eisenstein(1, -1)) == "1-1*w");
    CHECK(to_string(Eisenstein(0, 0)) == "0+0*w");
    CHECK(to_string(Eisenstein(-3, 3)) == "-3+3*w");
}

} // TEST_SUITE
