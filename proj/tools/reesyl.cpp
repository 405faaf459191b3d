// Command-line front end: construction, enumeration, table emission, and the
// verification suites.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "reesyl/emit.hpp"
#include "reesyl/parallel.hpp"
#include "reesyl/verify.hpp"

namespace {

using namespace reesyl;
using nlohmann::json;

struct Output {
    std::string path; // empty = stdout

    void write(const std::string& bytes) const {
        if (path.empty()) {
            std::cout << bytes;
            return;
        }
        std::ofstream os(path, std::ios::binary);
        if (!os) throw std::runtime_error("cannot open output file '" + path + "'");
        os << bytes;
        if (!os) throw std::runtime_error("failed writing to '" + path + "'");
    }
};

int fail_with_record(const std::string& what, const std::string& detail) {
    json j{{"failure", what}, {"detail", detail}};
    std::cout << j.dump() << "\n";
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact construction and verification of the Ree Sylow 3-subgroup, "
                 "its conjugacy classes, supercharacter table and q=3 character table"};
    app.require_subcommand(1);

    unsigned m = 0;
    std::string format = "text";
    std::uint64_t samples = 100000;
    std::uint64_t seed = 0;
    unsigned jobs = 0; // 0 = resolve via REE_SYL_JOBS, default 1
    Output out;

    const auto add_common = [&](CLI::App* cmd, bool with_m = true) {
        if (with_m) cmd->add_option("--m", m, "tower index; the field is GF(3^(2m+1))");
        cmd->add_option("--format", format, "text|csv|json")->default_str("text");
        cmd->add_option("--output", out.path, "write to a file instead of stdout");
    };

    auto* cmd_field = app.add_subcommand("field-info", "parameters of the working field");
    add_common(cmd_field);

    auto* cmd_group = app.add_subcommand("group", "evaluate a group law on elements");
    std::string group_op;
    std::vector<std::string> group_args;
    cmd_group->add_option("op", group_op, "mul|inv|conj|comm")->required();
    cmd_group->add_option("elem", group_args, "elements Y(<t1>;<t3>;<t4>)")->expected(1, 2);
    add_common(cmd_group);

    auto* cmd_chev = app.add_subcommand("chevalley", "matrix realization checks");
    auto* cmd_chev_check =
        cmd_chev->add_subcommand("check", "closed-form matrix diff and commutator suites");
    cmd_chev_check->add_option("--samples", samples, "sampling budget for m >= 1");
    cmd_chev_check->add_option("--seed", seed, "seed for sampled checks");
    add_common(cmd_chev_check);

    auto* cmd_orbits = app.add_subcommand("orbits", "orbit records of the pattern space");
    std::string pattern_arg;
    cmd_orbits->add_option("--pattern", pattern_arg, "single pattern a12;a13;a14");
    add_common(cmd_orbits);

    auto* cmd_classes = app.add_subcommand("classes", "conjugacy classes");
    bool brute_force = false;
    cmd_classes->add_flag("--brute-force", brute_force, "closure scan instead of closed form");
    add_common(cmd_classes);

    auto* cmd_super = app.add_subcommand("superclasses", "the superclass partition");
    add_common(cmd_super);

    auto* cmd_supertable = app.add_subcommand("supertable", "the supercharacter table");
    cmd_supertable->add_option("--samples", samples, "constancy samples per part for m >= 2");
    cmd_supertable->add_option("--seed", seed, "seed for sampled constancy");
    cmd_supertable->add_option("--jobs", jobs, "worker threads");
    add_common(cmd_supertable);

    auto* cmd_chartable = app.add_subcommand("chartable", "the q = 3 character table");
    bool chartable_verify = false;
    cmd_chartable->add_flag("--verify", chartable_verify,
                            "run orthogonality, decomposition and the formula diff");
    add_common(cmd_chartable, false);

    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    cmd_verify->add_option("--suite", suite, "all|cocycle|matrix|classes|axioms|chartable");
    cmd_verify->add_option("--samples", samples, "sampling budget for m >= 1 identity checks");
    cmd_verify->add_option("--seed", seed, "seed for sampled checks");
    cmd_verify->add_option("--jobs", jobs, "worker threads (REE_SYL_JOBS as fallback)");
    add_common(cmd_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints help/error text
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        const Format fmt = parse_format(format);
        VerifyOptions opt{samples, seed, resolve_jobs(jobs)};

        if (cmd_field->parsed()) {
            const Fq F = Fq::make(m);
            out.write(emit_field_info(F, fmt));
            return 0;
        }

        if (cmd_group->parsed()) {
            const Fq F = Fq::make(m);
            const ReeSylow U(F);
            const bool unary = group_op == "inv";
            if (group_args.size() != (unary ? 1u : 2u))
                throw CLI::ValidationError("group", group_op + " takes " +
                                                        (unary ? std::string("1 element")
                                                               : std::string("2 elements")));
            const GroupElem x = U.parse(group_args[0]);
            GroupElem r;
            if (group_op == "inv") {
                r = U.inv(x);
            } else {
                const GroupElem y = U.parse(group_args[1]);
                if (group_op == "mul") r = U.mul(x, y);
                else if (group_op == "conj") r = U.conjugate(x, y);
                else if (group_op == "comm") r = U.commutator(x, y);
                else throw CLI::ValidationError("group", "unknown op '" + group_op + "'");
            }
            out.write(U.to_string(r) + "\n");
            return 0;
        }

        if (cmd_chev_check->parsed()) {
            Ctx ctx(m);
            SuiteReport report = run_suite_matrix(ctx, opt);
            out.write(fmt == Format::Json ? report_to_json(report) + "\n"
                                          : report_to_text(report));
            if (!report.pass)
                return fail_with_record("suite matrix", "a matrix-realization check failed");
            return 0;
        }

        if (cmd_orbits->parsed()) {
            Ctx ctx(m);
            std::vector<OrbitRecord> records;
            if (!pattern_arg.empty())
                records.push_back(ctx.O.orbit_of(ctx.O.parse(pattern_arg)));
            else
                records = ctx.O.classify_all();
            out.write(emit_orbits(ctx.F, ctx.O, records, fmt));
            return 0;
        }

        if (cmd_classes->parsed()) {
            Ctx ctx(m);
            std::vector<ClassRecord> classes;
            if (brute_force) {
                classes = ctx.C.all_classes_bruteforce();
            } else {
                const std::uint64_t q = ctx.F.q();
                std::vector<char> seen(ctx.U.order(), 0);
                for (std::uint64_t i = 0; i < ctx.U.order(); ++i) {
                    if (seen[i]) continue;
                    ClassRecord rec = ctx.C.class_of(ctx.U.elem_at(i));
                    for (const GroupElem& g : rec.members) seen[ctx.U.elem_index(g)] = 1;
                    classes.push_back(std::move(rec));
                }
                (void)q;
            }
            const SuperclassPartition partition = ctx.C.superclass_partition();
            out.write(emit_classes(ctx.F, ctx.U, ctx.C, classes, partition, fmt));
            return 0;
        }

        if (cmd_super->parsed()) {
            Ctx ctx(m);
            out.write(emit_superclasses(ctx.F, ctx.U, ctx.C, ctx.C.superclass_partition(), fmt));
            return 0;
        }

        if (cmd_supertable->parsed()) {
            Ctx ctx(m);
            const SuperTable table = ctx.S.build_supertable(opt.jobs, samples, seed);
            out.write(emit_supertable(ctx.F, ctx.C, ctx.S, table, fmt));
            if (!table.constancy_ok)
                return fail_with_record("supertable constancy", table.constancy_detail);
            if (!table.fixture_mismatches.empty())
                return fail_with_record("supertable closed form",
                                        std::to_string(table.fixture_mismatches.size()) +
                                            " cells differ from the closed-form table");
            return 0;
        }

        if (cmd_chartable->parsed()) {
            Ctx ctx(0);
            IrrTheory irr(ctx.F, ctx.U, ctx.O, ctx.C);
            const CharTable table = irr.build_char_table();
            std::string bytes = emit_chartable(ctx.F, ctx.U, table, fmt);
            if (chartable_verify) {
                SuiteReport report = run_suite_chartable(ctx);
                bytes += fmt == Format::Json ? report_to_json(report) + "\n"
                                             : report_to_text(report);
                out.write(bytes);
                if (!report.pass)
                    return fail_with_record("suite chartable", "a character-table check failed");
                return 0;
            }
            out.write(bytes);
            if (!table.pass)
                return fail_with_record("chartable", "a character-table assertion failed");
            return 0;
        }

        if (cmd_verify->parsed()) {
            Ctx ctx(m);
            std::vector<SuiteReport> reports;
            if (suite == "all") reports = run_all_suites(ctx, opt);
            else if (suite == "cocycle") reports.push_back(run_suite_cocycle(ctx, opt));
            else if (suite == "matrix") reports.push_back(run_suite_matrix(ctx, opt));
            else if (suite == "classes") reports.push_back(run_suite_classes(ctx, opt));
            else if (suite == "axioms") reports.push_back(run_suite_axioms(ctx, opt));
            else if (suite == "chartable") reports.push_back(run_suite_chartable(ctx));
            else throw CLI::ValidationError("verify", "unknown suite '" + suite + "'");

            std::string bytes;
            bool pass = true;
            for (const auto& report : reports) {
                bytes += fmt == Format::Json ? report_to_json(report) + "\n"
                                             : report_to_text(report);
                pass = pass && report.pass;
            }
            out.write(bytes);
            if (!pass) return fail_with_record("verify --suite " + suite, "a check failed");
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        return fail_with_record("internal error", e.what());
    }
    return 2;
}
