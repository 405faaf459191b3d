#include "reesyl/superchar.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "reesyl/parallel.hpp"

namespace reesyl {

EisVal to_eisval(const Eisenstein& z) {
    if (!z.a.fits_slong_p() || !z.b.fits_slong_p())
        throw std::overflow_error("Eisenstein value too large for dense storage");
    return {z.a.get_si(), z.b.get_si()};
}

Eisenstein to_eisenstein(const EisVal& v) { return {v.a, v.b}; }

Eisenstein SuperTheory::supercharacter(const Pattern& verge, const GroupElem& u) const {
    if (!O_->is_verge(verge))
        throw std::invalid_argument("supercharacter wants a verge pattern, got " +
                                    O_->to_string(verge));
    return O_->orbit_character(O_->orbit_of(verge), u);
}

Eisenstein SuperTheory::closed_form_cell(const Pattern& verge,
                                         const SuperclassLabel& label) const {
    const Fq& F = *F_;
    const long q = static_cast<long>(F.q());
    const Family fam = O_->family_of(verge);
    switch (fam) {
        case Family::Zero:
            return {1, 0};
        case Family::F1:
            // 1 everywhere except theta(A12* t1*) on C1(t1*)
            if (label.kind == SuperKind::C1)
                return theta_char(F, F.mul(verge.a12, label.t));
            return {1, 0};
        case Family::F3: {
            if (label.kind == SuperKind::C1) return {0, 0};
            Eisenstein v(q, 0);
            if (label.kind == SuperKind::C3)
                v = v * theta_char(F, F.neg(F.mul(verge.a13, label.t)));
            return v;
        }
        case Family::F4: {
            if (label.kind == SuperKind::C1 || label.kind == SuperKind::C3) return {0, 0};
            Eisenstein v(q * q, 0);
            if (label.kind == SuperKind::C4)
                v = v * theta_char(F, F.neg(F.mul(verge.a14, label.t)));
            return v;
        }
    }
    return {0, 0};
}

std::vector<EisVal> SuperTheory::dense_values(const OrbitRecord& R, unsigned jobs) const {
    const std::uint64_t n = U_->order();
    if (F_->q() > 27)
        throw std::length_error("dense character values capped at q <= 27");
    std::vector<EisVal> out(n);
    for_shards(n, jobs, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i)
            out[i] = to_eisval(O_->orbit_character(R, U_->elem_at(i)));
    });
    return out;
}

Eisenstein SuperTheory::inner_product_scaled(const std::vector<EisVal>& r1,
                                             const std::vector<EisVal>& r2) const {
    if (r1.size() != r2.size())
        throw std::invalid_argument("inner product needs functions on the same group");
    Eisenstein acc;
    long long a = 0, b = 0;
    for (std::size_t i = 0; i < r1.size(); ++i) {
        // r1 * conj(r2), accumulated componentwise
        const long long x1 = r1[i].a, y1 = r1[i].b;
        const long long x2 = r2[i].a - r2[i].b, y2 = -r2[i].b;
        a += x1 * x2 - y1 * y2;
        b += x1 * y2 + y1 * x2 - y1 * y2;
        if ((i & 0xfff) == 0xfff) { // fold into GMP well before any overflow
            acc += Eisenstein(a, b);
            a = b = 0;
        }
    }
    acc += Eisenstein(a, b);
    return acc;
}

SuperTable SuperTheory::build_supertable(unsigned jobs, std::uint64_t samples,
                                         std::uint64_t seed) const {
    const Fq& F = *F_;
    const ReeSylow& U = *U_;
    const std::uint64_t q = F.q();
    if (q > 243) throw std::length_error("supercharacter table capped at q <= 243");

    const SuperclassPartition P = C_->superclass_partition();
    const std::vector<OrbitRecord> records = O_->classify_all();

    SuperTable table;
    for (const auto& part : P.parts) {
        table.columns.push_back(part.label);
        table.column_reps.push_back(part.representative);
        table.column_sizes.push_back(part.members.size());
    }

    const bool full_scan = q <= 27;
    std::mt19937_64 rng(seed);

    for (const auto& rec : records) {
        SuperRow row;
        row.verge = rec.verge;
        row.family = rec.family;
        row.degree = rec.members.size();
        row.cells.resize(P.parts.size());

        if (full_scan) {
            const std::vector<EisVal> dense = dense_values(rec, jobs);
            std::vector<char> cell_set(P.parts.size(), 0);
            for (std::uint64_t i = 0; i < dense.size(); ++i) {
                const std::size_t pi = static_cast<std::size_t>(P.part_id[i]);
                if (!cell_set[pi]) {
                    cell_set[pi] = 1;
                    row.cells[pi] = to_eisenstein(dense[i]);
                } else if (!(to_eisenstein(dense[i]) == row.cells[pi])) {
                    table.constancy_ok = false;
                    table.constancy_detail = row_label(row) + " is not constant on " +
                                             C_->label_to_string(P.parts[pi].label) +
                                             " (element " + U.to_string(U.elem_at(i)) + ")";
                }
            }
        } else {
            for (std::size_t pi = 0; pi < P.parts.size(); ++pi) {
                const auto& part = P.parts[pi];
                row.cells[pi] = O_->orbit_character(rec, part.representative);
                for (std::uint64_t s = 0; s < samples; ++s) {
                    const GroupElem u = part.members[rng() % part.members.size()];
                    if (!(O_->orbit_character(rec, u) == row.cells[pi])) {
                        table.constancy_ok = false;
                        table.constancy_detail = row_label(row) + " is not constant on " +
                                                 C_->label_to_string(part.label);
                    }
                }
            }
        }
        table.rows.push_back(std::move(row));
    }

    for (std::size_t ri = 0; ri < table.rows.size(); ++ri)
        for (std::size_t ci = 0; ci < table.columns.size(); ++ci) {
            const Eisenstein expected =
                closed_form_cell(table.rows[ri].verge, table.columns[ci]);
            if (!(table.rows[ri].cells[ci] == expected))
                table.fixture_mismatches.push_back(
                    {ri, ci, table.rows[ri].cells[ci], expected});
        }
    return table;
}

TheoryReport SuperTheory::verify_theory(unsigned jobs) const {
    const Fq& F = *F_;
    if (F.q() > 27)
        throw std::length_error("exhaustive axiom verification capped at q <= 27");

    TheoryReport report;
    const SuperclassPartition P = C_->superclass_partition();
    const std::vector<OrbitRecord> records = O_->classify_all();

    { // (a) equal counts
        const std::uint64_t expected = C_->superclass_count_formula();
        const bool ok = records.size() == P.parts.size() && records.size() == expected;
        std::ostringstream os;
        os << "|X| = " << records.size() << ", |K| = " << P.parts.size()
           << ", 3(q-1)+1 = " << expected;
        report.axioms.push_back({"counts", ok, os.str()});
    }

    std::vector<std::vector<EisVal>> dense;
    dense.reserve(records.size());
    for (const auto& rec : records) dense.push_back(dense_values(rec, jobs));

    { // (b) constancy on every part, pointwise
        bool ok = true;
        std::string detail = "all characters constant on all superclasses";
        for (std::size_t ri = 0; ri < records.size() && ok; ++ri) {
            std::vector<char> seen(P.parts.size(), 0);
            std::vector<EisVal> first(P.parts.size());
            for (std::uint64_t i = 0; i < dense[ri].size(); ++i) {
                const std::size_t pi = static_cast<std::size_t>(P.part_id[i]);
                if (!seen[pi]) {
                    seen[pi] = 1;
                    first[pi] = dense[ri][i];
                } else if (!(dense[ri][i] == first[pi])) {
                    ok = false;
                    detail = "character " + O_->to_string(records[ri].verge) +
                             " varies on " + C_->label_to_string(P.parts[pi].label);
                    break;
                }
            }
        }
        report.axioms.push_back({"constancy", ok, detail});
    }

    { // (c) pairwise orthogonality, exact zero
        bool ok = true;
        std::string detail = "all distinct pairs exactly orthogonal";
        for (std::size_t i = 0; i < dense.size() && ok; ++i)
            for (std::size_t j = i + 1; j < dense.size(); ++j) {
                const Eisenstein ip = inner_product_scaled(dense[i], dense[j]);
                if (!ip.is_zero()) {
                    ok = false;
                    detail = "rows " + O_->to_string(records[i].verge) + " and " +
                             O_->to_string(records[j].verge) +
                             " have scaled inner product " + to_string(ip);
                    break;
                }
            }
        report.axioms.push_back({"orthogonality", ok, detail});
    }

    { // (d) {1} is a part
        bool found = false;
        for (const auto& part : P.parts)
            if (part.members.size() == 1 && part.members[0] == ReeSylow::identity())
                found = true;
        report.axioms.push_back({"identity-part", found, "{1} is a member of the partition"});
    }

    report.pass = true;
    for (const auto& ax : report.axioms) report.pass = report.pass && ax.pass;
    return report;
}

std::string SuperTheory::row_label(const SuperRow& row) const {
    switch (row.family) {
        case Family::Zero: return "Psi[0]";
        case Family::F1: return "Psi[e12*" + F_->to_string(row.verge.a12) + "]";
        case Family::F3: return "Psi[e13*" + F_->to_string(row.verge.a13) + "]";
        case Family::F4: return "Psi[e14*" + F_->to_string(row.verge.a14) + "]";
    }
    return "?";
}

} // namespace reesyl
