// Conjugacy classes of the Ree Sylow subgroup, both by closed form and by
// brute-force conjugation, the additive map sigma_t whose image controls how
// conjugacy fuses the t3-coordinate, and the coarser superclass partition.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reesyl/field.hpp"
#include "reesyl/group.hpp"

namespace reesyl {

struct ClassRecord {
    GroupElem representative; // lexicographically least member
    std::vector<GroupElem> members;
    std::uint64_t size() const { return members.size(); }
};

enum class SuperKind { C0, C1, C3, C4 };

struct SuperclassLabel {
    SuperKind kind = SuperKind::C0;
    Fe t = 0; // unused for C0

    bool operator==(const SuperclassLabel& o) const { return kind == o.kind && t == o.t; }
};

struct SuperclassPart {
    SuperclassLabel label;
    GroupElem representative;
    std::vector<GroupElem> members;
};

struct SuperclassPartition {
    std::vector<SuperclassPart> parts;
    // part index per element index, for constant-time label lookup
    std::vector<std::int32_t> part_id;
};

class Classes {
public:
    Classes(const Fq& F, const ReeSylow& U) : F_(&F), U_(&U) {}

    // sigma_t(s) = t s^(3 theta) - t^(3 theta) s; additive in s; t != 0.
    Fe sigma_t(Fe t, Fe s) const;

    // Sorted image of sigma_t; size 3^(2m).
    std::vector<Fe> sigma_image(Fe t) const;

    // Three least coset representatives of im(sigma_t) in F_q, ascending.
    std::vector<Fe> transversal(Fe t) const;

    // Closed-form conjugacy class of x.
    ClassRecord class_of(const GroupElem& x) const;

    // Classes found purely by conjugating each unvisited element by all of U.
    // Refuses q > 27 (the full scan is the oracle for the closed form).
    std::vector<ClassRecord> all_classes_bruteforce() const;

    // 5q - 4; the closed-form class count.
    std::uint64_t class_count_formula() const { return 5 * F_->q() - 4; }
    // 3(q-1) + 1.
    std::uint64_t superclass_count_formula() const { return 3 * (F_->q() - 1) + 1; }

    // Builds C0, C4(t4*), C3(t3*) and C1(t1*) as unions of closed-form
    // classes and asserts they partition the group. Refuses q > 243.
    SuperclassPartition superclass_partition() const;

    std::string label_to_string(const SuperclassLabel& l) const;

private:
    const Fq* F_;
    const ReeSylow* U_;
};

} // namespace reesyl
