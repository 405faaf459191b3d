#include "doctest.h"

#include <random>
#include <set>

#include "reesyl/chevalley.hpp"
#include "reesyl/group.hpp"

using namespace reesyl;

TEST_SUITE("group") {

TEST_CASE("identity and the a/b/c embeddings") {
    const Fq F = Fq::make(0);
    const ReeSylow U(F);
    CHECK(ReeSylow::a(0) == ReeSylow::identity());
    CHECK(ReeSylow::b(0) == ReeSylow::identity());
    CHECK(ReeSylow::c(0) == ReeSylow::identity());
    for (Fe t = 0; t < 3; ++t)
        for (Fe s = 0; s < 3; ++s) {
            CHECK(U.mul(ReeSylow::b(t), ReeSylow::b(s)) == ReeSylow::b(F.add(t, s)));
            CHECK(U.mul(ReeSylow::c(t), ReeSylow::c(s)) == ReeSylow::c(F.add(t, s)));
        }
    for (std::uint64_t i = 0; i < U.order(); ++i) {
        const GroupElem x = U.elem_at(i);
        CHECK(U.mul(x, ReeSylow::identity()) == x);
        CHECK(U.mul(ReeSylow::identity(), x) == x);
    }
}

TEST_CASE("frozen small values from the matrix oracle") {
    const Fq F = Fq::make(0);
    const ReeSylow U(F);
    const Chevalley ch(F);
    // a(1) a(1) = Y(2,2,0)
    const GroupElem aa = U.mul(ReeSylow::a(1), ReeSylow::a(1));
    CHECK(aa == GroupElem{2, 2, 0});
    CHECK(mat_mul(F, ch.ree_matrix(1, 0, 0), ch.ree_matrix(1, 0, 0)) == ch.ree_matrix(2, 2, 0));

    // inv(Y(1,0,0)) found by exhaustive search over all 27 candidates
    const GroupElem x{1, 0, 0};
    GroupElem found{};
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < U.order(); ++i)
        if (U.mul(x, U.elem_at(i)) == ReeSylow::identity()) {
            found = U.elem_at(i);
            ++hits;
        }
    CHECK(hits == 1);
    CHECK(found == GroupElem{2, 2, 1});
    CHECK(U.inv(x) == found);
}

TEST_CASE("inverse laws") {
    for (unsigned m : {0u, 1u}) {
        const Fq F = Fq::make(m);
        const ReeSylow U(F);
        for (std::uint64_t i = 0; i < U.order(); ++i) {
            const GroupElem x = U.elem_at(i);
            REQUIRE(U.mul(x, U.inv(x)) == ReeSylow::identity());
            REQUIRE(U.inv(U.inv(x)) == x);
        }
    }
    const Fq F = Fq::make(0);
    const ReeSylow U(F);
    CHECK(U.inv(ReeSylow::identity()) == ReeSylow::identity());
}

TEST_CASE("commutators") {
    const Fq F = Fq::make(0);
    const ReeSylow U(F);
    for (std::uint64_t i = 0; i < U.order(); ++i) {
        const GroupElem x = U.elem_at(i);
        CHECK(U.commutator(x, x) == ReeSylow::identity());
        for (std::uint64_t j = 0; j < U.order(); ++j) {
            const GroupElem y = U.elem_at(j);
            // the closed form is the mul/inv composition
            const GroupElem composed = U.mul(U.mul(U.inv(x), U.inv(y)), U.mul(x, y));
            REQUIRE(U.commutator(x, y) == composed);
            CHECK(U.commutator(x, y).t1 == 0); // [U,U] lies in {Y(0,*,*)}
        }
    }
    // [a(t), b(s)] = c(ts)
    for (Fe t = 0; t < 3; ++t)
        for (Fe s = 0; s < 3; ++s)
            CHECK(U.commutator(ReeSylow::a(t), ReeSylow::b(s)) == ReeSylow::c(F.mul(t, s)));
}

TEST_CASE("conjugation") {
    const Fq F = Fq::make(0);
    const ReeSylow U(F);
    for (std::uint64_t i = 0; i < U.order(); ++i) {
        const GroupElem x = U.elem_at(i);
        CHECK(U.conjugate(x, ReeSylow::identity()) == x);
        for (std::uint64_t j = 0; j < U.order(); ++j) {
            const GroupElem by = U.elem_at(j);
            REQUIRE(U.conjugate(x, by) == U.mul(U.mul(by, x), U.inv(by)));
        }
    }
    // conjugate(b(t3), Y(s)) = Y(0, t3, t3 s1) and c(t4) is central
    for (Fe t = 0; t < 3; ++t)
        for (std::uint64_t j = 0; j < U.order(); ++j) {
            const GroupElem by = U.elem_at(j);
            CHECK(U.conjugate(ReeSylow::b(t), by) == GroupElem{0, t, F.mul(t, by.t1)});
            CHECK(U.conjugate(ReeSylow::c(t), by) == ReeSylow::c(t));
        }
}

TEST_CASE("orders") {
    const Fq F = Fq::make(0);
    const ReeSylow U(F);
    CHECK(U.order_of(ReeSylow::identity()) == 1);
    // a(1)^3 = c(2) != e, so a(1) has order 9
    CHECK(U.pow(ReeSylow::a(1), 3) == ReeSylow::c(2));
    CHECK(U.order_of(ReeSylow::a(1)) == 9);
    for (std::uint64_t i = 0; i < U.order(); ++i)
        CHECK(9 % U.order_of(U.elem_at(i)) == 0); // exponent divides 9, emergent
}

TEST_CASE("enumeration and text form") {
    const Fq F0 = Fq::make(0);
    const ReeSylow U0(F0);
    CHECK(U0.enumerate().size() == 27);
    const Fq F1 = Fq::make(1);
    const ReeSylow U1(F1);
    const auto all = U1.enumerate();
    CHECK(all.size() == 19683);
    std::set<std::uint64_t> indices;
    for (const auto& x : all) indices.insert(U1.elem_index(x));
    CHECK(indices.size() == 19683);
    CHECK(*indices.begin() == 0);

    CHECK(U1.to_string(GroupElem{5, 0, 26}) == "Y(2,1,0;0,0,0;2,2,2)");
    for (std::uint64_t i = 0; i < 100; ++i)
        CHECK(U1.parse(U1.to_string(all[i * 151])) == all[i * 151]);
    CHECK_THROWS_AS((void)U1.parse("Y(1;2)"), std::invalid_argument);
    CHECK_THROWS_AS((void)U1.parse("(1,0,0;0,0,0;0,0,0)"), std::invalid_argument);

    const Fq F3 = Fq::make(3);
    const ReeSylow U3(F3);
    CHECK_THROWS_AS((void)U3.enumerate(), std::length_error);
}

TEST_CASE("closed forms match matrices, sampled at m=1") {
    const Fq F = Fq::make(1);
    const ReeSylow U(F);
    const Chevalley ch(F);
    std::mt19937_64 rng(17);
    const auto mat_of = [&](const GroupElem& g) { return ch.ree_matrix(g.t1, g.t3, g.t4); };
    for (int k = 0; k < 2000; ++k) {
        const GroupElem x{static_cast<Fe>(rng() % 27), static_cast<Fe>(rng() % 27),
                          static_cast<Fe>(rng() % 27)};
        const GroupElem y{static_cast<Fe>(rng() % 27), static_cast<Fe>(rng() % 27),
                          static_cast<Fe>(rng() % 27)};
        REQUIRE(mat_mul(F, mat_of(x), mat_of(y)) == mat_of(U.mul(x, y)));
        REQUIRE(mat_inverse_ut(F, mat_of(x)) == mat_of(U.inv(x)));
        CHECK(U.commutator(x, y).t1 == 0);
    }
}

} // TEST_SUITE
