#include "doctest.h"

#include <algorithm>
#include <set>

#include "reesyl/classes.hpp"
#include "reesyl/verify.hpp"

using namespace reesyl;

TEST_SUITE("classes") {

TEST_CASE("sigma_t structure") {
    Ctx ctx0(0);
    CHECK(ctx0.C.sigma_t(1, 0) == 0);
    CHECK_THROWS_AS((void)ctx0.C.sigma_t(0, 1), std::domain_error);
    // at m=0 the map is identically zero: im = {0}
    for (Fe t = 1; t < 3; ++t) CHECK(ctx0.C.sigma_image(t) == std::vector<Fe>{0});
    CHECK(check_sigma_structure(ctx0).pass);

    Ctx ctx1(1);
    CHECK(check_sigma_structure(ctx1).pass);
    for (Fe t = 1; t < 27; ++t) {
        CHECK(ctx1.C.sigma_image(t).size() == 9); // 3^(2m)
        // kernel is {0, t, -t}
        std::set<Fe> kernel;
        for (Fe s = 0; s < 27; ++s)
            if (ctx1.C.sigma_t(t, s) == 0) kernel.insert(s);
        CHECK(kernel == std::set<Fe>{0, t, ctx1.F.neg(t)});
    }
    CHECK(check_sigma_additivity(ctx1, VerifyOptions{}).pass);

    Ctx ctx2(2);
    CHECK(check_sigma_structure(ctx2).pass);
}

TEST_CASE("transversals") {
    Ctx ctx0(0);
    for (Fe t = 1; t < 3; ++t) CHECK(ctx0.C.transversal(t) == std::vector<Fe>{0, 1, 2});
    CHECK_THROWS_AS((void)ctx0.C.transversal(0), std::domain_error);

    Ctx ctx1(1);
    for (Fe t = 1; t < 27; ++t) {
        const auto T = ctx1.C.transversal(t);
        REQUIRE(T.size() == 3);
        CHECK(27 / ctx1.C.sigma_image(t).size() == 3);
        const auto image = ctx1.C.sigma_image(t);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j)
                CHECK(!std::binary_search(image.begin(), image.end(),
                                          ctx1.F.sub(T[i], T[j])));
    }
    CHECK(check_transversal(ctx1, VerifyOptions{}).pass);
}

TEST_CASE("closed-form classes") {
    Ctx ctx(0);
    const auto& C = ctx.C;
    CHECK(C.class_of(ReeSylow::identity()).members ==
          std::vector<GroupElem>{ReeSylow::identity()});
    for (Fe t4 = 1; t4 < 3; ++t4) {
        const ClassRecord cls = C.class_of(ReeSylow::c(t4));
        CHECK(cls.size() == 1); // central
        CHECK(cls.representative == ReeSylow::c(t4));
    }
    for (Fe t3 = 1; t3 < 3; ++t3) {
        const ClassRecord cls = C.class_of(ReeSylow::b(t3));
        CHECK(cls.size() == 3); // q
        for (const GroupElem& g : cls.members) {
            CHECK(g.t1 == 0);
            CHECK(g.t3 == t3);
        }
    }
}

TEST_CASE("brute force agrees with the closed form at q = 3") {
    Ctx ctx(0);
    const auto brute = ctx.C.all_classes_bruteforce();
    CHECK(brute.size() == 11); // 5q - 4
    std::multiset<std::uint64_t> sizes;
    for (const auto& cls : brute) sizes.insert(cls.size());
    CHECK(sizes == std::multiset<std::uint64_t>{1, 1, 1, 3, 3, 3, 3, 3, 3, 3, 3});
    CHECK(check_bruteforce_classes(ctx).pass);
}

TEST_CASE("closed-form class partition counts at m = 1") {
    Ctx ctx(1);
    std::vector<char> seen(ctx.U.order(), 0);
    std::uint64_t count = 0, total = 0;
    for (std::uint64_t i = 0; i < ctx.U.order(); ++i) {
        if (seen[i]) continue;
        const ClassRecord cls = ctx.C.class_of(ctx.U.elem_at(i));
        for (const GroupElem& g : cls.members) {
            const std::uint64_t gi = ctx.U.elem_index(g);
            REQUIRE(!seen[gi]);
            seen[gi] = 1;
        }
        ++count;
        total += cls.size();
    }
    CHECK(count == 131); // 5q - 4 at q = 27
    CHECK(count == ctx.C.class_count_formula());
    CHECK(total == ctx.U.order());
}

TEST_CASE("superclass partition") {
    Ctx ctx(0);
    const SuperclassPartition P = ctx.C.superclass_partition();
    CHECK(P.parts.size() == 7); // 3(q-1)+1
    std::uint64_t total = 0;
    for (const auto& part : P.parts) total += part.members.size();
    CHECK(total == 27);
    CHECK(P.parts[0].members.size() == 1);
    CHECK(P.parts[0].members[0] == ReeSylow::identity());
    CHECK(check_superclass_partition(ctx).pass);

    Ctx ctx1(1);
    CHECK(ctx1.C.superclass_partition().parts.size() == 79);
    CHECK(check_superclass_partition(ctx1).pass);

    // labels
    CHECK(ctx.C.label_to_string(SuperclassLabel{SuperKind::C0, 0}) == "C0");
    CHECK(ctx.C.label_to_string(SuperclassLabel{SuperKind::C1, 2}) == "C1(2)");
}

TEST_CASE("superclasses are unions of conjugacy classes") {
    for (unsigned m : {0u, 1u}) {
        Ctx ctx(m);
        const SuperclassPartition P = ctx.C.superclass_partition();
        std::vector<char> seen(ctx.U.order(), 0);
        for (std::uint64_t i = 0; i < ctx.U.order(); ++i) {
            if (seen[i]) continue;
            const ClassRecord cls = ctx.C.class_of(ctx.U.elem_at(i));
            const auto pid = P.part_id[i];
            for (const GroupElem& g : cls.members) {
                const std::uint64_t gi = ctx.U.elem_index(g);
                seen[gi] = 1;
                REQUIRE(P.part_id[gi] == pid);
            }
        }
    }
}

} // TEST_SUITE
