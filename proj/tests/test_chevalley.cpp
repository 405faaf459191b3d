#include "doctest.h"

#include <random>

#include "reesyl/chevalley.hpp"

using namespace reesyl;

namespace {

G2Tuple tuple_at(std::uint64_t idx, std::uint64_t q) {
    G2Tuple y;
    for (int i = 0; i < 6; ++i) {
        y.t[i] = static_cast<Fe>(idx % q);
        idx /= q;
    }
    return y;
}

} // namespace

TEST_SUITE("chevalley") {

TEST_CASE("root elements: exp(0) and the long-root shape") {
    const Fq F = Fq::make(0);
    const Chevalley ch(F);
    for (int i = 1; i <= 6; ++i) CHECK(ch.root_element(i, 0) == mat_identity());

    // y2(t) = I + t(e_{2,3} - e_{6,7}); the square term vanishes on long roots
    for (Fe t = 0; t < 3; ++t) {
        Mat8 want = mat_identity();
        want.at(1, 2) = t;
        want.at(5, 6) = F.neg(t);
        CHECK(ch.root_element(2, t) == want);
    }
    const Mat8 zero{};
    CHECK(ch.root_matrix_sq(2) == zero);
    CHECK(ch.root_matrix_sq(5) == zero);
    CHECK(ch.root_matrix_sq(6) == zero);
}

TEST_CASE("one-parameter subgroups via the matrix product") {
    const Fq F = Fq::make(0);
    const Chevalley ch(F);
    for (int i = 1; i <= 6; ++i)
        for (Fe t = 0; t < 3; ++t)
            for (Fe s = 0; s < 3; ++s)
                CHECK(mat_mul(F, ch.root_element(i, t), ch.root_element(i, s)) ==
                      ch.root_element(i, F.add(t, s)));
}

TEST_CASE("characteristic-3 commutators of root elements") {
    const Fq F = Fq::make(0);
    const Chevalley ch(F);
    const auto comm = [&](const Mat8& x, const Mat8& y) {
        return mat_mul(F, mat_mul(F, mat_inverse_ut(F, x), mat_inverse_ut(F, y)),
                       mat_mul(F, x, y));
    };
    for (Fe t = 0; t < 3; ++t)
        for (Fe s = 0; s < 3; ++s) {
            CHECK(comm(ch.root_element(1, t), ch.root_element(3, s)) ==
                  ch.root_element(4, F.mul(t, s)));
            CHECK(comm(ch.root_element(2, t), ch.root_element(5, s)) ==
                  ch.root_element(6, F.mul(t, s)));
        }
}

TEST_CASE("tuple to matrix: identity, injectivity, round trip") {
    const Fq F = Fq::make(0);
    const Chevalley ch(F);
    CHECK(ch.g2_tuple_to_matrix(G2Tuple{}) == mat_identity());
    for (std::uint64_t idx = 0; idx < 729; ++idx) {
        const G2Tuple y = tuple_at(idx, 3);
        const Mat8 m = ch.g2_tuple_to_matrix(y);
        CHECK(is_upper_unitriangular(m));
        REQUIRE(ch.matrix_to_g2_tuple(m) == y);
    }
    // a perturbed member must be rejected
    Mat8 outside = ch.ree_matrix(1, 0, 2);
    outside.at(2, 5) = F.add(outside.at(2, 5), 1);
    CHECK_THROWS_AS((void)ch.matrix_to_g2_tuple(outside), std::invalid_argument);
}

TEST_CASE("twisted map: identity, fixed points, fixed-point equations") {
    const Fq F = Fq::make(0);
    const Chevalley ch(F);
    CHECK(ch.twisted_F(G2Tuple{}) == G2Tuple{});

    std::uint64_t fixed = 0;
    for (std::uint64_t idx = 0; idx < 729; ++idx) {
        const G2Tuple y = tuple_at(idx, 3);
        if (!ch.is_twisted_fixed(y)) continue;
        ++fixed;
        // fixed tuples satisfy t2 = t1^(3h), t5 = t3^(3h) + t1^(3h+3), t6 = t4^(3h) + t1^(6h+3)
        CHECK(y.t[1] == F.pow_3theta(y.t[0]));
        CHECK(y.t[4] == F.add(F.pow_3theta(y.t[2]), F.power_expr(y.t[0], 3, 3)));
        CHECK(y.t[5] == F.add(F.pow_3theta(y.t[3]), F.power_expr(y.t[0], 6, 3)));
        CHECK(y == ch.ree_tuple(y.t[0], y.t[2], y.t[3]));
    }
    CHECK(fixed == 27);
}

TEST_CASE("ree matrix entries") {
    const Fq F = Fq::make(0);
    const Chevalley ch(F);
    CHECK(ch.ree_matrix(0, 0, 0) == mat_identity());
    for (Fe t1 = 0; t1 < 3; ++t1)
        for (Fe t3 = 0; t3 < 3; ++t3)
            for (Fe t4 = 0; t4 < 3; ++t4) {
                const Mat8 m = ch.ree_matrix(t1, t3, t4);
                CHECK(m.at(0, 1) == t1);
                CHECK(m.at(0, 2) == F.neg(t3));
                CHECK(m.at(1, 2) == F.pow_3theta(t1));
                CHECK(m.at(0, 3) == F.sub(F.mul(t1, t3), t4));
            }
}

TEST_CASE("closed-form matrix agrees with the generator product") {
    for (unsigned m : {0u, 1u}) {
        const Fq F = Fq::make(m);
        const Chevalley ch(F);
        const std::uint64_t q = F.q();
        std::uint64_t mismatches = 0;
        for (Fe t1 = 0; t1 < q; ++t1)
            for (Fe t3 = 0; t3 < q; ++t3)
                for (Fe t4 = 0; t4 < q; ++t4)
                    mismatches += ch.check_closed_form(t1, t3, t4).size();
        CHECK(mismatches == 0);
    }
    // spot values of individual cells
    const Fq F = Fq::make(1);
    const Chevalley ch(F);
    for (Fe t4 = 0; t4 < 27; ++t4) // (1,7) entry at (0,0,t4) is -t4^(3h)
        CHECK(ch.closed_form_matrix(0, 0, t4).at(0, 6) == F.neg(F.pow_3theta(t4)));
    for (Fe t1 = 0; t1 < 27; ++t1) // (2,8) entry at (t1,0,0), compared numerically
        CHECK(ch.closed_form_matrix(t1, 0, 0).at(1, 7) == ch.ree_matrix(t1, 0, 0).at(1, 7));
}

TEST_CASE("twist respects the group law through the matrix oracle, sampled at m=1") {
    const Fq F = Fq::make(1);
    const Chevalley ch(F);
    std::mt19937_64 rng(3);
    for (int k = 0; k < 500; ++k) {
        G2Tuple x, y;
        for (int i = 0; i < 6; ++i) {
            x.t[i] = static_cast<Fe>(rng() % 27);
            y.t[i] = static_cast<Fe>(rng() % 27);
        }
        const G2Tuple xy =
            ch.matrix_to_g2_tuple(mat_mul(F, ch.g2_tuple_to_matrix(x), ch.g2_tuple_to_matrix(y)));
        const Mat8 lhs = ch.g2_tuple_to_matrix(ch.twisted_F(xy));
        const Mat8 rhs = mat_mul(F, ch.g2_tuple_to_matrix(ch.twisted_F(x)),
                                 ch.g2_tuple_to_matrix(ch.twisted_F(y)));
        REQUIRE(lhs == rhs);
    }
}

} // TEST_SUITE
