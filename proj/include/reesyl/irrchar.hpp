// The full irreducible character table at q = 3: nine linear characters
// built as genuine homomorphisms through the quotient by the center, two
// degree-3 characters induced from the abelian subgroup {Y(0,t3,t4)}, exact
// orthogonality checks, a diff against the closed-form table of cell
// formulas, and the decomposition of each supercharacter into irreducibles.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "reesyl/classes.hpp"
#include "reesyl/cyclo.hpp"
#include "reesyl/superchar.hpp"

namespace reesyl {

struct IrrChar {
    std::string label;
    int degree = 1;
    std::vector<EisVal> dense; // value at every element, enumeration order
};

struct CharTable {
    std::vector<ClassRecord> classes; // the 11 conjugacy classes, by representative
    std::vector<IrrChar> rows;        // 9 linear then 2 induced
    // rows x classes, values at class representatives
    std::vector<std::vector<Eisenstein>> values;
    std::vector<CheckItem> checks; // constancy, orthogonality, completeness
    bool pass = false;
};

struct TableDiffCell {
    std::string row_label, formula_label;
    std::size_t cls;
    Eisenstein computed, formula;
};

struct TableDiff {
    // computed-row label -> closed-form row label, by mismatch-minimizing assignment
    std::vector<std::pair<std::string, std::string>> assignment;
    std::vector<TableDiffCell> mismatches;
};

struct DecompEntry {
    std::string supercharacter;
    std::vector<std::pair<std::string, long>> multiplicities; // nonzero only
    bool integral = false; // all inner products are non-negative rational integers
};

struct DecompReport {
    std::vector<DecompEntry> entries;
    std::vector<CheckItem> checks;
    bool pass = false;
};

class IrrTheory {
public:
    // Throws unless the field is F_3.
    IrrTheory(const Fq& F, const ReeSylow& U, const Orbits& O, const Classes& C);

    // The 9 lifts through U/Z(U); each is verified multiplicative on all
    // 27^2 pairs during construction.
    std::vector<IrrChar> linear_characters() const;

    // Ind_H^U of the two nontrivial central characters of H = {Y(0,*,*)},
    // computed by the plain induction sum normalized by |H|.
    std::vector<IrrChar> induced_characters() const;

    CharTable build_char_table() const;

    TableDiff formula_table_diff(const CharTable& table) const;

    DecompReport decomposition_report(const CharTable& table) const;

private:
    Eisenstein value_at(const IrrChar& chi, const GroupElem& g) const;

    const Fq* F_;
    const ReeSylow* U_;
    const Orbits* O_;
    const Classes* C_;
};

} // namespace reesyl
