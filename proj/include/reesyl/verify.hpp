// Verification suites: each check pits a closed form against an independent
// computation (matrix arithmetic, brute-force closure, exhaustive scans) and
// reports pass/fail with a counterexample on failure. Diagnostics (fixture
// diffs) are carried separately and never fail a suite.

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "reesyl/chevalley.hpp"
#include "reesyl/classes.hpp"
#include "reesyl/field.hpp"
#include "reesyl/group.hpp"
#include "reesyl/irrchar.hpp"
#include "reesyl/orbits.hpp"
#include "reesyl/superchar.hpp"

namespace reesyl {

// Everything the suites need for one field size, constructed together so the
// internal references stay valid. Not copyable or movable.
struct Ctx {
    Fq F;
    ReeSylow U;
    Chevalley ch;
    Orbits O;
    Classes C;
    SuperTheory S;

    explicit Ctx(unsigned m) : F(Fq::make(m)), U(F), ch(F), O(F, U), C(F, U), S(F, U, O, C) {}
    Ctx(const Ctx&) = delete;
    Ctx& operator=(const Ctx&) = delete;
};

struct VerifyOptions {
    std::uint64_t samples = 100000;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckItem> checks;
    std::vector<std::string> diagnostics;
    bool pass = true;

    void add(CheckItem item) {
        pass = pass && item.pass;
        checks.push_back(std::move(item));
    }
};

// --- matrix realization checks ---
CheckItem check_root_matrix_relations(Ctx& ctx);
CheckItem check_one_parameter(Ctx& ctx, const VerifyOptions& opt);
CheckItem check_commutator_relations(Ctx& ctx, const VerifyOptions& opt);
CheckItem check_tuple_injectivity(Ctx& ctx);                  // q = 3
CheckItem check_tuple_round_trip(Ctx& ctx);                   // q = 3
CheckItem check_twisted_bijection(Ctx& ctx);                  // q = 3
CheckItem check_twisted_homomorphism(Ctx& ctx, const VerifyOptions& opt);
CheckItem check_fixed_points(Ctx& ctx, const VerifyOptions& opt);
CheckItem check_group_oracle(Ctx& ctx, const VerifyOptions& opt);
CheckItem check_associativity(Ctx& ctx, const VerifyOptions& opt);
CheckItem check_center(Ctx& ctx, const VerifyOptions& opt);

// --- cocycle / action checks ---
CheckItem check_cocycle_bijectivity(Ctx& ctx);
CheckItem check_cocycle_identity(Ctx& ctx, const VerifyOptions& opt);
CheckItem check_cocycle_ambient(Ctx& ctx, const VerifyOptions& opt);
CheckItem check_act_closed_form(Ctx& ctx, const VerifyOptions& opt);
CheckItem check_duality(Ctx& ctx, const VerifyOptions& opt);
CheckItem check_chi_properties(Ctx& ctx, const VerifyOptions& opt);

// --- conjugacy class checks ---
CheckItem check_sigma_structure(Ctx& ctx);
CheckItem check_sigma_additivity(Ctx& ctx, const VerifyOptions& opt);
CheckItem check_transversal(Ctx& ctx, const VerifyOptions& opt);
CheckItem check_bruteforce_classes(Ctx& ctx);                 // q <= 27
CheckItem check_superclass_partition(Ctx& ctx);

// --- supercharacter theory checks ---
CheckItem check_orbit_classification(Ctx& ctx);
CheckItem check_supertable_fixture(Ctx& ctx, const VerifyOptions& opt);
std::vector<CheckItem> check_supertheory_axioms(Ctx& ctx, const VerifyOptions& opt);
CheckItem check_inner_product_values(Ctx& ctx, const VerifyOptions& opt);
CheckItem check_degree_identity(Ctx& ctx);

// --- character table checks, q = 3 ---
std::vector<CheckItem> check_char_table(Ctx& ctx);
CheckItem check_induced_closed_form(Ctx& ctx);
CheckItem check_frobenius_reciprocity(Ctx& ctx);
CheckItem check_decomposition(Ctx& ctx);

// --- diagnostics (never failing) ---
std::string diag_closed_form_matrix(Ctx& ctx, const VerifyOptions& opt); // JSON
std::string diag_formula_table(Ctx& ctx);                                // JSON, q = 3

SuiteReport run_suite_matrix(Ctx& ctx, const VerifyOptions& opt);
SuiteReport run_suite_cocycle(Ctx& ctx, const VerifyOptions& opt);
SuiteReport run_suite_classes(Ctx& ctx, const VerifyOptions& opt);
SuiteReport run_suite_axioms(Ctx& ctx, const VerifyOptions& opt);
SuiteReport run_suite_chartable(Ctx& ctx);
std::vector<SuiteReport> run_all_suites(Ctx& ctx, const VerifyOptions& opt);

std::string report_to_text(const SuiteReport& report);
std::string report_to_json(const SuiteReport& report);

} // namespace reesyl
