#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "reesyl/orbits.hpp"
#include "reesyl/verify.hpp"

using namespace reesyl;

namespace {

// closure of {A} under the dot action by every group element, kept
// independent of the closed-form orbit generation
std::vector<Pattern> closure_orbit(const Orbits& O, const ReeSylow& U, const Pattern& A) {
    std::set<std::uint64_t> seen{O.pattern_index(A)};
    std::vector<Pattern> frontier{A}, members{A};
    while (!frontier.empty()) {
        std::vector<Pattern> next;
        for (const Pattern& C : frontier)
            for (std::uint64_t gi = 0; gi < U.order(); ++gi) {
                const Pattern D = O.act_dot(C, U.elem_at(gi));
                if (seen.insert(O.pattern_index(D)).second) {
                    next.push_back(D);
                    members.push_back(D);
                }
            }
        frontier = std::move(next);
    }
    std::sort(members.begin(), members.end(),
              [](const Pattern& x, const Pattern& y) { return lex_less(x, y); });
    return members;
}

} // namespace

TEST_SUITE("orbits") {

TEST_CASE("cocycle reads the matrix and is bijective") {
    Ctx ctx(0);
    CHECK(ctx.O.cocycle_f(ReeSylow::identity()) == Pattern{0, 0, 0});
    std::set<std::uint64_t> images;
    for (std::uint64_t i = 0; i < ctx.U.order(); ++i) {
        const GroupElem u = ctx.U.elem_at(i);
        const Mat8 m = ctx.ch.ree_matrix(u.t1, u.t3, u.t4);
        REQUIRE(ctx.O.cocycle_f(u) == pattern_of_matrix(m));
        images.insert(ctx.O.pattern_index(ctx.O.cocycle_f(u)));
    }
    CHECK(images.size() == ctx.U.order());
}

TEST_CASE("trace form") {
    Ctx ctx(0);
    const Orbits& O = ctx.O;
    const Pattern e12{1, 0, 0}, e13{0, 1, 0};
    CHECK(O.kappa(e12, Pattern{0, 0, 0}) == 0);
    CHECK(O.kappa(e12, e13) == 0);
    CHECK(O.kappa(e13, e13) == 1);
    // symmetric and non-degenerate over the whole space
    for (std::uint64_t ai = 0; ai < 27; ++ai) {
        const Pattern A = O.pattern_at(ai);
        bool hit = false;
        for (std::uint64_t bi = 0; bi < 27; ++bi) {
            const Pattern B = O.pattern_at(bi);
            CHECK(O.kappa(A, B) == O.kappa(B, A));
            hit = hit || (O.kappa(A, B) != 0);
        }
        if (ai != 0) CHECK(hit);
    }
}

TEST_CASE("actions: unit, cocycle law, closed form, duality") {
    Ctx ctx(0);
    const VerifyOptions opt{10000, 1, 1};
    for (std::uint64_t ai = 0; ai < 27; ++ai)
        CHECK(act_circ_matrix(ctx.F, ctx.O.pattern_at(ai), mat_identity()) == ctx.O.pattern_at(ai));
    CHECK(check_cocycle_identity(ctx, opt).pass);
    CHECK(check_act_closed_form(ctx, opt).pass);
    CHECK(check_duality(ctx, opt).pass);
    CHECK(check_chi_properties(ctx, opt).pass);

    // the closed form of the dot action, written out
    const Fq& F = ctx.F;
    for (std::uint64_t ai = 0; ai < 27; ++ai)
        for (std::uint64_t gi = 0; gi < ctx.U.order(); ++gi) {
            const Pattern A = ctx.O.pattern_at(ai);
            const GroupElem g = ctx.U.elem_at(gi);
            const Pattern want{
                F.sub(F.sub(A.a12, F.mul(A.a13, F.pow_3theta(g.t1))), F.mul(A.a14, g.t3)),
                F.sub(A.a13, F.mul(A.a14, g.t1)), A.a14};
            REQUIRE(ctx.O.act_dot(A, g) == want);
        }
}

TEST_CASE("chi basics") {
    Ctx ctx(0);
    for (std::uint64_t i = 0; i < ctx.U.order(); ++i) {
        CHECK(ctx.O.chi(Pattern{0, 0, 0}, ctx.U.elem_at(i)) == Eisenstein(1, 0));
    }
    for (std::uint64_t ai = 0; ai < 27; ++ai)
        CHECK(ctx.O.chi(ctx.O.pattern_at(ai), ReeSylow::identity()) == Eisenstein(1, 0));
}

TEST_CASE("orbits of the three families and the zero pattern") {
    Ctx ctx(0);
    const std::uint64_t q = 3;

    const OrbitRecord zero = ctx.O.orbit_of({0, 0, 0});
    CHECK(zero.size() == 1);
    CHECK(zero.stabilizer_order == q * q * q);
    CHECK(zero.family == Family::Zero);

    const OrbitRecord f4 = ctx.O.orbit_of({0, 0, 2});
    CHECK(f4.size() == q * q);
    CHECK(f4.stabilizer_order == q);
    // stabilizer is exactly {Y(0,0,t4)}
    for (std::uint64_t gi = 0; gi < ctx.U.order(); ++gi) {
        const GroupElem g = ctx.U.elem_at(gi);
        const bool fixes = ctx.O.act_dot({0, 0, 2}, g) == Pattern{0, 0, 2};
        CHECK(fixes == (g.t1 == 0 && g.t3 == 0));
    }

    const OrbitRecord f3 = ctx.O.orbit_of({0, 2, 0});
    CHECK(f3.size() == q);
    CHECK(f3.stabilizer_order == q * q);
    for (const Pattern& C : f3.members) {
        CHECK(C.a13 == 2);
        CHECK(C.a14 == 0);
    }

    // closure under the action reproduces the closed-form generation
    for (std::uint64_t ai = 0; ai < 27; ++ai) {
        const Pattern A = ctx.O.pattern_at(ai);
        REQUIRE(ctx.O.orbit_of(A).members == closure_orbit(ctx.O, ctx.U, A));
    }
}

TEST_CASE("verges and the classification") {
    Ctx ctx(0);
    CHECK(ctx.O.verge_of(Pattern{2, 1, 0}) == Pattern{0, 1, 0});
    CHECK(ctx.O.verge_of(Pattern{1, 2, 2}) == Pattern{0, 0, 2});
    CHECK(ctx.O.verge_of(Pattern{2, 0, 0}) == Pattern{2, 0, 0});

    const auto records = ctx.O.classify_all();
    CHECK(records.size() == 7); // 3(q-1)+1
    std::uint64_t total = 0;
    for (const auto& rec : records) {
        std::uint64_t verges = 0;
        for (const auto& C : rec.members)
            if (ctx.O.is_verge(C)) ++verges;
        CHECK(verges == 1);
        CHECK(rec.size() * rec.stabilizer_order == 27);
        total += rec.size();
    }
    CHECK(total == 27);
    CHECK(check_orbit_classification(ctx).pass);

    Ctx ctx1(1);
    CHECK(check_orbit_classification(ctx1).pass);
}

TEST_CASE("orbit characters at distinguished elements") {
    Ctx ctx(0);
    const Fq& F = ctx.F;
    const OrbitRecord f3 = ctx.O.orbit_of({0, 1, 0});
    const OrbitRecord f4 = ctx.O.orbit_of({0, 0, 1});

    CHECK(ctx.O.orbit_character(f3, ReeSylow::identity()) == Eisenstein(3, 0));
    CHECK(ctx.O.orbit_character(f4, ReeSylow::identity()) == Eisenstein(9, 0));

    // on Y(0,t3,t4) the F3 character is q * theta(-A13 t3)
    for (Fe t3 = 0; t3 < 3; ++t3)
        for (Fe t4 = 0; t4 < 3; ++t4) {
            Eisenstein want = theta_char(F, F.neg(t3));
            want.a *= 3;
            want.b *= 3;
            CHECK(ctx.O.orbit_character(f3, GroupElem{0, t3, t4}) == want);
        }
    // the F4 character vanishes as soon as t1 != 0
    for (Fe t1 = 1; t1 < 3; ++t1)
        for (Fe t3 = 0; t3 < 3; ++t3)
            CHECK(ctx.O.orbit_character(f4, GroupElem{t1, t3, 0}).is_zero());
}

TEST_CASE("pattern text form") {
    Ctx ctx(1);
    const Pattern A{5, 0, 26};
    CHECK(ctx.O.to_string(A) == "2,1,0;0,0,0;2,2,2");
    CHECK(ctx.O.parse(ctx.O.to_string(A)) == A);
    CHECK_THROWS_AS((void)ctx.O.parse("1;2"), std::invalid_argument);
}

} // TEST_SUITE
