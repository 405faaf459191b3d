// The supercharacter table and machine verification of the four
// supercharacter-theory axioms: equal counts, constancy on superclasses,
// pairwise orthogonality (exact in Z[w]), and {1} being a part.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reesyl/classes.hpp"
#include "reesyl/cyclo.hpp"
#include "reesyl/field.hpp"
#include "reesyl/group.hpp"
#include "reesyl/orbits.hpp"

namespace reesyl {

// Dense character values over the whole group. Components stay far below
// 2^63 for every q the exhaustive suites allow; sums that could grow are
// accumulated through Eisenstein (GMP) instead.
struct EisVal {
    long long a = 0, b = 0;

    bool operator==(const EisVal& o) const { return a == o.a && b == o.b; }
};

EisVal to_eisval(const Eisenstein& z);
Eisenstein to_eisenstein(const EisVal& v);

struct SuperRow {
    Pattern verge;
    Family family = Family::Zero;
    std::uint64_t degree = 0;       // value at C0
    std::vector<Eisenstein> cells;  // one per column
};

struct CellMismatch {
    std::size_t row, col;
    Eisenstein computed, closed_form;
};

struct SuperTable {
    std::vector<SuperclassLabel> columns;
    std::vector<GroupElem> column_reps;
    std::vector<std::uint64_t> column_sizes;
    std::vector<SuperRow> rows;
    std::vector<CellMismatch> fixture_mismatches; // vs the closed-form cells
    bool constancy_ok = true;
    std::string constancy_detail;
};

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct TheoryReport {
    std::vector<CheckItem> axioms;
    bool pass = false;
};

class SuperTheory {
public:
    SuperTheory(const Fq& F, const ReeSylow& U, const Orbits& O, const Classes& C)
        : F_(&F), U_(&U), O_(&O), C_(&C) {}

    // Orbit-module character of the verge's orbit; rejects non-verge input.
    Eisenstein supercharacter(const Pattern& verge, const GroupElem& u) const;

    // The closed-form cell value for a row verge on a superclass.
    Eisenstein closed_form_cell(const Pattern& verge, const SuperclassLabel& label) const;

    // Rows evaluated from first principles on one representative per
    // superclass, after a constancy pass (full scan for q <= 27, seeded
    // samples per part above that). Cells are then diffed against the
    // closed forms; mismatches are reported in the result.
    SuperTable build_supertable(unsigned jobs = 1, std::uint64_t samples = 64,
                                std::uint64_t seed = 0) const;

    // Values of the orbit character of R at every group element, in
    // enumeration order. Requires q <= 27.
    std::vector<EisVal> dense_values(const OrbitRecord& R, unsigned jobs = 1) const;

    // |U|-scaled exact inner product: sum over u of r1(u) * conj(r2(u)).
    Eisenstein inner_product_scaled(const std::vector<EisVal>& r1,
                                    const std::vector<EisVal>& r2) const;

    // The four axioms, checked exhaustively. Requires q <= 27.
    TheoryReport verify_theory(unsigned jobs = 1) const;

    std::string row_label(const SuperRow& row) const;

private:
    const Fq* F_;
    const ReeSylow* U_;
    const Orbits* O_;
    const Classes* C_;
};

} // namespace reesyl
