#include "reesyl/irrchar.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace reesyl {
namespace {

// Coset of the center: U/Z(U) in coordinates (t1,t3), q = 3.
struct Quotient {
    const Fq* F;
    const ReeSylow* U;

    int index(Fe t1, Fe t3) const { return static_cast<int>(t1 * 3 + t3); }

    std::pair<Fe, Fe> mul(std::pair<Fe, Fe> x, std::pair<Fe, Fe> y) const {
        const GroupElem p = U->mul({x.first, x.second, 0}, {y.first, y.second, 0});
        return {p.t1, p.t3};
    }
};

} // namespace

IrrTheory::IrrTheory(const Fq& F, const ReeSylow& U, const Orbits& O, const Classes& C)
    : F_(&F), U_(&U), O_(&O), C_(&C) {
    if (F.q() != 3)
        throw std::invalid_argument("the irreducible character table is built for q = 3 only");
}

std::vector<IrrChar> IrrTheory::linear_characters() const {
    const ReeSylow& U = *U_;
    Quotient Q{F_, U_};

    // The quotient must be elementary abelian of order 9.
    for (Fe t1 = 0; t1 < 3; ++t1)
        for (Fe t3 = 0; t3 < 3; ++t3) {
            const auto x = std::make_pair(t1, t3);
            const auto sq = Q.mul(x, x);
            if (Q.mul(sq, x) != std::make_pair(Fe{0}, Fe{0}))
                throw std::logic_error("quotient by the center is not of exponent 3");
            for (Fe s1 = 0; s1 < 3; ++s1)
                for (Fe s3 = 0; s3 < 3; ++s3)
                    if (Q.mul(x, {s1, s3}) != Q.mul({s1, s3}, x))
                        throw std::logic_error("quotient by the center is not abelian");
        }

    // Discrete log of every coset with respect to the generators
    // abar = a(1)Z and bbar = b(1)Z.
    std::array<std::pair<int, int>, 9> dlog{};
    std::array<char, 9> seen{};
    const std::pair<Fe, Fe> abar{1, 0}, bbar{0, 1};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            std::pair<Fe, Fe> g{0, 0};
            for (int k = 0; k < i; ++k) g = Q.mul(g, abar);
            for (int k = 0; k < j; ++k) g = Q.mul(g, bbar);
            const int idx = Q.index(g.first, g.second);
            if (seen[idx]) throw std::logic_error("generators do not span the quotient");
            seen[idx] = 1;
            dlog[idx] = {i, j};
        }

    const std::uint64_t n = U.order();
    std::vector<IrrChar> chars;
    for (int alpha = 0; alpha < 3; ++alpha)
        for (int beta = 0; beta < 3; ++beta) {
            IrrChar chi;
            chi.label = "lin[" + std::to_string(alpha) + "," + std::to_string(beta) + "]";
            chi.degree = 1;
            chi.dense.resize(n);
            for (std::uint64_t i = 0; i < n; ++i) {
                const GroupElem u = U.elem_at(i);
                const auto [di, dj] = dlog[Q.index(u.t1, u.t3)];
                chi.dense[i] = to_eisval(omega_pow(alpha * di + beta * dj));
            }
            for (std::uint64_t i = 0; i < n; ++i)
                for (std::uint64_t j = 0; j < n; ++j) {
                    const GroupElem prod = U.mul(U.elem_at(i), U.elem_at(j));
                    const Eisenstein lhs = to_eisenstein(chi.dense[U.elem_index(prod)]);
                    const Eisenstein rhs =
                        to_eisenstein(chi.dense[i]) * to_eisenstein(chi.dense[j]);
                    if (!(lhs == rhs))
                        throw std::logic_error(chi.label + " is not multiplicative");
                }
            chars.push_back(std::move(chi));
        }
    return chars;
}

std::vector<IrrChar> IrrTheory::induced_characters() const {
    const Fq& F = *F_;
    const ReeSylow& U = *U_;
    const std::uint64_t n = U.order();
    const mpz_class subgroup_order = 9; // H = {Y(0,t3,t4)}

    std::vector<IrrChar> chars;
    for (Fe a14 = 1; a14 < 3; ++a14) {
        IrrChar chi;
        chi.label = "ind[" + std::to_string(a14) + "]";
        chi.degree = 3;
        chi.dense.resize(n);
        for (std::uint64_t i = 0; i < n; ++i) {
            const GroupElem u = U.elem_at(i);
            Eisenstein sum;
            for (std::uint64_t gi = 0; gi < n; ++gi) {
                const GroupElem v = U.conjugate(u, U.elem_at(gi));
                if (v.t1 != 0) continue; // outside H
                sum += theta_char(F, F.neg(F.mul(a14, v.t4)));
            }
            chi.dense[i] = to_eisval(exact_div(sum, subgroup_order));
        }
        chars.push_back(std::move(chi));
    }
    return chars;
}

Eisenstein IrrTheory::value_at(const IrrChar& chi, const GroupElem& g) const {
    return to_eisenstein(chi.dense[U_->elem_index(g)]);
}

CharTable IrrTheory::build_char_table() const {
    const ReeSylow& U = *U_;
    CharTable table;
    table.classes = C_->all_classes_bruteforce();
    table.rows = linear_characters();
    for (auto& chi : induced_characters()) table.rows.push_back(std::move(chi));

    for (const auto& chi : table.rows) {
        std::vector<Eisenstein> row;
        row.reserve(table.classes.size());
        for (const auto& cls : table.classes) row.push_back(value_at(chi, cls.representative));
        table.values.push_back(std::move(row));
    }

    { // every row is a class function
        bool ok = true;
        std::string detail = "all rows constant on all conjugacy classes";
        for (std::size_t ri = 0; ri < table.rows.size() && ok; ++ri)
            for (std::size_t ci = 0; ci < table.classes.size() && ok; ++ci)
                for (const GroupElem& g : table.classes[ci].members)
                    if (!(value_at(table.rows[ri], g) == table.values[ri][ci])) {
                        ok = false;
                        detail = table.rows[ri].label + " varies on class of " +
                                 U.to_string(table.classes[ci].representative);
                        break;
                    }
        table.checks.push_back({"class-functions", ok, detail});
    }

    const mpz_class group_order = static_cast<long>(U.order());
    { // first orthogonality, class-weighted
        bool ok = true;
        std::string detail = "<chi_i, chi_j> = delta_ij for all pairs";
        for (std::size_t i = 0; i < table.rows.size() && ok; ++i)
            for (std::size_t j = 0; j < table.rows.size(); ++j) {
                Eisenstein sum;
                for (std::size_t ci = 0; ci < table.classes.size(); ++ci) {
                    Eisenstein term = table.values[i][ci] * conj(table.values[j][ci]);
                    term.a *= static_cast<long>(table.classes[ci].size());
                    term.b *= static_cast<long>(table.classes[ci].size());
                    sum += term;
                }
                const Eisenstein expected =
                    i == j ? Eisenstein(group_order, 0) : Eisenstein();
                if (!(sum == expected)) {
                    ok = false;
                    detail = "<" + table.rows[i].label + ", " + table.rows[j].label +
                             "> scaled = " + to_string(sum);
                    break;
                }
            }
        table.checks.push_back({"first-orthogonality", ok, detail});
    }

    { // second (column) orthogonality
        bool ok = true;
        std::string detail = "column relations hold for all class pairs";
        for (std::size_t ci = 0; ci < table.classes.size() && ok; ++ci)
            for (std::size_t cj = 0; cj < table.classes.size(); ++cj) {
                Eisenstein sum;
                for (std::size_t ri = 0; ri < table.rows.size(); ++ri)
                    sum += table.values[ri][ci] * conj(table.values[ri][cj]);
                Eisenstein expected;
                if (ci == cj)
                    expected = Eisenstein(group_order / static_cast<long>(
                                              table.classes[ci].size()),
                                          0);
                if (!(sum == expected)) {
                    ok = false;
                    detail = "columns " + U.to_string(table.classes[ci].representative) +
                             ", " + U.to_string(table.classes[cj].representative) +
                             " give " + to_string(sum);
                    break;
                }
            }
        table.checks.push_back({"second-orthogonality", ok, detail});
    }

    { // completeness: 11 rows, 11 classes, sum of squared degrees = 27
        long sq = 0;
        for (const auto& chi : table.rows) sq += chi.degree * chi.degree;
        const bool ok = table.rows.size() == 11 && table.classes.size() == 11 && sq == 27;
        std::ostringstream os;
        os << table.rows.size() << " characters, " << table.classes.size()
           << " classes, sum deg^2 = " << sq;
        table.checks.push_back({"completeness", ok, os.str()});
    }

    table.pass = true;
    for (const auto& c : table.checks) table.pass = table.pass && c.pass;
    return table;
}

TableDiff IrrTheory::formula_table_diff(const CharTable& table) const {
    const Fq& F = *F_;

    // Closed-form rows, evaluated at the class representatives.
    struct FormulaRow {
        std::string label;
        std::vector<Eisenstein> cells;
    };
    std::vector<FormulaRow> lin_rows, ind_rows;
    for (Fe a12 = 0; a12 < 3; ++a12)
        for (Fe a13 = 0; a13 < 3; ++a13) {
            FormulaRow row;
            row.label = "lin_formula[" + std::to_string(a12) + "," + std::to_string(a13) + "]";
            for (const auto& cls : table.classes) {
                const GroupElem& r = cls.representative;
                row.cells.push_back(
                    theta_char(F, F.sub(F.mul(a12, r.t1), F.mul(a13, r.t3))));
            }
            lin_rows.push_back(std::move(row));
        }
    for (Fe a14 = 1; a14 < 3; ++a14) {
        FormulaRow row;
        row.label = "ind_formula[" + std::to_string(a14) + "]";
        for (const auto& cls : table.classes) {
            const GroupElem& r = cls.representative;
            if (r.t1 == 0 && r.t3 == 0) {
                Eisenstein v = theta_char(F, F.neg(F.mul(a14, r.t4)));
                v.a *= 3;
                v.b *= 3;
                row.cells.push_back(v);
            } else {
                row.cells.push_back(Eisenstein());
            }
        }
        ind_rows.push_back(std::move(row));
    }

    const std::size_t ncls = table.classes.size();
    const auto mismatch_count = [&](const std::vector<Eisenstein>& a,
                                    const std::vector<Eisenstein>& b) {
        std::size_t count = 0;
        for (std::size_t k = 0; k < ncls; ++k)
            if (!(a[k] == b[k])) ++count;
        return count;
    };

    // Assign computed rows to formula rows, minimizing total cell mismatches;
    // permutations are scanned in lexicographic order so ties resolve
    // deterministically. Degrees never mix (a cross match differs everywhere).
    TableDiff diff;
    std::vector<std::size_t> lin_cost(9 * 9), best_perm(9);
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = 0; j < 9; ++j)
            lin_cost[i * 9 + j] = mismatch_count(table.values[i], lin_rows[j].cells);
    std::vector<std::size_t> perm(9);
    std::iota(perm.begin(), perm.end(), 0);
    std::size_t best = SIZE_MAX;
    do {
        std::size_t cost = 0;
        for (std::size_t i = 0; i < 9; ++i) cost += lin_cost[i * 9 + perm[i]];
        if (cost < best) {
            best = cost;
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<std::size_t> ind_perm = {0, 1};
    const std::size_t indA = mismatch_count(table.values[9], ind_rows[0].cells) +
                             mismatch_count(table.values[10], ind_rows[1].cells);
    const std::size_t indB = mismatch_count(table.values[9], ind_rows[1].cells) +
                             mismatch_count(table.values[10], ind_rows[0].cells);
    if (indB < indA) ind_perm = {1, 0};

    for (std::size_t i = 0; i < 9; ++i) {
        const auto& formula = lin_rows[best_perm[i]];
        diff.assignment.emplace_back(table.rows[i].label, formula.label);
        for (std::size_t k = 0; k < ncls; ++k)
            if (!(table.values[i][k] == formula.cells[k]))
                diff.mismatches.push_back({table.rows[i].label, formula.label, k,
                                           table.values[i][k], formula.cells[k]});
    }
    for (std::size_t i = 0; i < 2; ++i) {
        const auto& formula = ind_rows[ind_perm[i]];
        diff.assignment.emplace_back(table.rows[9 + i].label, formula.label);
        for (std::size_t k = 0; k < ncls; ++k)
            if (!(table.values[9 + i][k] == formula.cells[k]))
                diff.mismatches.push_back({table.rows[9 + i].label, formula.label, k,
                                           table.values[9 + i][k], formula.cells[k]});
    }
    return diff;
}

DecompReport IrrTheory::decomposition_report(const CharTable& table) const {
    const ReeSylow& U = *U_;
    const Orbits& O = *O_;
    const std::uint64_t n = U.order();
    const mpz_class group_order = static_cast<long>(n);

    DecompReport report;
    const std::vector<OrbitRecord> records = O.classify_all();
    SuperTheory S(*F_, U, O, *C_);

    for (const auto& rec : records) {
        const std::vector<EisVal> psi = S.dense_values(rec);
        DecompEntry entry;
        entry.supercharacter = S.row_label({rec.verge, rec.family, 0, {}});
        entry.integral = true;
        std::vector<long> mults(table.rows.size(), 0);
        for (std::size_t ri = 0; ri < table.rows.size(); ++ri) {
            const Eisenstein scaled =
                S.inner_product_scaled(psi, table.rows[ri].dense);
            Eisenstein ip;
            bool ok = true;
            try {
                ip = exact_div(scaled, group_order);
            } catch (const std::domain_error&) {
                ok = false;
            }
            if (!ok || ip.b != 0 || ip.a < 0) {
                entry.integral = false;
                continue;
            }
            mults[ri] = static_cast<long>(ip.a.get_si());
            if (mults[ri] != 0)
                entry.multiplicities.emplace_back(table.rows[ri].label, mults[ri]);
        }
        report.entries.push_back(std::move(entry));

        // structural expectations per family
        const long total = std::accumulate(mults.begin(), mults.end(), 0L);
        const long lin_count =
            std::count_if(mults.begin(), mults.begin() + 9, [](long v) { return v == 1; });
        bool ok = report.entries.back().integral;
        std::string what;
        switch (rec.family) {
            case Family::Zero: {
                // must be exactly the all-ones row
                bool is_trivial = false;
                for (std::size_t ri = 0; ri < 9; ++ri)
                    if (mults[ri] == 1) {
                        is_trivial = true;
                        for (const auto& v : table.rows[ri].dense)
                            is_trivial = is_trivial && v == EisVal{1, 0};
                    }
                ok = ok && total == 1 && is_trivial;
                what = "trivial supercharacter is the trivial character";
                break;
            }
            case Family::F1:
                ok = ok && total == 1 && lin_count == 1;
                what = "degree-1 supercharacter equals one linear character";
                break;
            case Family::F3:
                ok = ok && lin_count == 3 && total == 3;
                what = "degree-q supercharacter is a sum of exactly three linear characters";
                break;
            case Family::F4:
                ok = ok && total == 3 && mults[9] + mults[10] == 3 &&
                     (mults[9] == 3 || mults[10] == 3);
                what = "degree-q^2 supercharacter is 3 times one induced character";
                break;
        }
        std::ostringstream os;
        os << entry.supercharacter << " = ";
        bool first = true;
        for (const auto& [label, m] : report.entries.back().multiplicities) {
            if (!first) os << " + ";
            if (m != 1) os << m << "*";
            os << label;
            first = false;
        }
        report.checks.push_back({what, ok, os.str()});
    }

    report.pass = true;
    for (const auto& c : report.checks) report.pass = report.pass && c.pass;
    return report;
}

} // namespace reesyl
