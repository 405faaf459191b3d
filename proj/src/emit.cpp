#include "reesyl/emit.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace reesyl {
namespace {

using nlohmann::json;

json mpz_json(const mpz_class& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str(); // exactness over convenience for out-of-range values
}

std::string pad(const std::string& s, std::size_t width) {
    return s + std::string(s.size() < width ? width - s.size() : 0, ' ');
}

std::string render_grid(const std::vector<std::vector<std::string>>& grid) {
    std::vector<std::size_t> widths;
    for (const auto& row : grid)
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (widths.size() <= c) widths.resize(c + 1, 0);
            widths[c] = std::max(widths[c], row[c].size());
        }
    std::ostringstream os;
    for (const auto& row : grid) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) os << "  ";
            os << pad(row[c], widths[c]);
        }
        os << '\n';
    }
    return os.str();
}

std::string csv_line(const std::vector<std::string>& cells) {
    std::ostringstream os;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) os << ',';
        os << csv_cell(cells[i]);
    }
    os << '\n';
    return os.str();
}

} // namespace

Format parse_format(const std::string& name) {
    if (name == "text") return Format::Text;
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    throw std::invalid_argument("unknown format '" + name + "' (want text|csv|json)");
}

json eisenstein_json(const Eisenstein& z) {
    return json{{"a", mpz_json(z.a)}, {"b", mpz_json(z.b)}};
}

std::string csv_cell(const std::string& raw) {
    if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
    std::string out = "\"";
    for (char ch : raw) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string emit_field_info(const Fq& F, Format fmt) {
    std::ostringstream mod;
    for (std::size_t i = 0; i < F.modulus().size(); ++i) {
        if (i) mod << ',';
        mod << static_cast<int>(F.modulus()[i]);
    }
    if (fmt == Format::Json) {
        json j{{"m", F.m()},
               {"degree", F.degree()},
               {"q", F.q()},
               {"theta", F.theta()},
               {"modulus", mod.str()}};
        return j.dump() + "\n";
    }
    std::ostringstream os;
    os << "GF(3^" << F.degree() << "), q = " << F.q() << ", theta = " << F.theta()
       << ", modulus coefficients (low to high) = " << mod.str() << "\n";
    return os.str();
}

std::string emit_classes(const Fq& F, const ReeSylow& U, const Classes& C,
                         const std::vector<ClassRecord>& classes,
                         const SuperclassPartition& partition, Format fmt) {
    (void)F;
    const auto label_of = [&](const ClassRecord& cls) {
        const auto pid = partition.part_id[U.elem_index(cls.representative)];
        return C.label_to_string(partition.parts[static_cast<std::size_t>(pid)].label);
    };
    if (fmt == Format::Json) {
        json arr = json::array();
        for (const auto& cls : classes)
            arr.push_back({{"rep", U.to_string(cls.representative)},
                           {"size", cls.size()},
                           {"superclass_label", label_of(cls)}});
        return arr.dump() + "\n";
    }
    std::vector<std::vector<std::string>> grid;
    grid.push_back({"rep", "size", "superclass"});
    for (const auto& cls : classes)
        grid.push_back({U.to_string(cls.representative), std::to_string(cls.size()),
                        label_of(cls)});
    if (fmt == Format::Csv) {
        std::string out;
        for (const auto& row : grid) out += csv_line(row);
        return out;
    }
    return render_grid(grid);
}

std::string emit_superclasses(const Fq& F, const ReeSylow& U, const Classes& C,
                              const SuperclassPartition& partition, Format fmt) {
    (void)F;
    if (fmt == Format::Json) {
        json arr = json::array();
        for (const auto& part : partition.parts)
            arr.push_back({{"label", C.label_to_string(part.label)},
                           {"rep", U.to_string(part.representative)},
                           {"size", part.members.size()}});
        return arr.dump() + "\n";
    }
    std::vector<std::vector<std::string>> grid;
    grid.push_back({"label", "rep", "size"});
    for (const auto& part : partition.parts)
        grid.push_back({C.label_to_string(part.label), U.to_string(part.representative),
                        std::to_string(part.members.size())});
    if (fmt == Format::Csv) {
        std::string out;
        for (const auto& row : grid) out += csv_line(row);
        return out;
    }
    return render_grid(grid);
}

std::string emit_supertable(const Fq& F, const Classes& C, const SuperTheory& S,
                            const SuperTable& table, Format fmt) {
    (void)F;
    if (fmt == Format::Json) {
        json j;
        j["columns"] = json::array();
        for (std::size_t ci = 0; ci < table.columns.size(); ++ci)
            j["columns"].push_back({{"label", C.label_to_string(table.columns[ci])},
                                    {"size", table.column_sizes[ci]}});
        j["rows"] = json::array();
        for (const auto& row : table.rows) {
            json cells = json::array();
            for (const auto& cell : row.cells) cells.push_back(eisenstein_json(cell));
            j["rows"].push_back({{"label", S.row_label(row)},
                                 {"degree", row.degree},
                                 {"values", cells}});
        }
        return j.dump() + "\n";
    }
    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> head{"supercharacter"};
    for (const auto& col : table.columns) head.push_back(C.label_to_string(col));
    grid.push_back(head);
    for (const auto& row : table.rows) {
        std::vector<std::string> line{S.row_label(row)};
        for (const auto& cell : row.cells) line.push_back(to_string(cell));
        grid.push_back(line);
    }
    if (fmt == Format::Csv) {
        std::string out;
        for (const auto& row : grid) out += csv_line(row);
        return out;
    }
    return render_grid(grid);
}

std::string emit_chartable(const Fq& F, const ReeSylow& U, const CharTable& table,
                           Format fmt) {
    (void)F;
    if (fmt == Format::Json) {
        json j;
        j["columns"] = json::array();
        for (const auto& cls : table.classes)
            j["columns"].push_back(
                {{"rep", U.to_string(cls.representative)}, {"size", cls.size()}});
        j["rows"] = json::array();
        for (std::size_t ri = 0; ri < table.rows.size(); ++ri) {
            json cells = json::array();
            for (const auto& v : table.values[ri]) cells.push_back(eisenstein_json(v));
            j["rows"].push_back({{"label", table.rows[ri].label},
                                 {"degree", table.rows[ri].degree},
                                 {"values", cells}});
        }
        return j.dump() + "\n";
    }
    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> head{"character"};
    for (const auto& cls : table.classes) head.push_back(U.to_string(cls.representative));
    grid.push_back(head);
    for (std::size_t ri = 0; ri < table.rows.size(); ++ri) {
        std::vector<std::string> line{table.rows[ri].label};
        for (const auto& v : table.values[ri]) line.push_back(to_string(v));
        grid.push_back(line);
    }
    if (fmt == Format::Csv) {
        std::string out;
        for (const auto& row : grid) out += csv_line(row);
        return out;
    }
    return render_grid(grid);
}

std::string emit_orbits(const Fq& F, const Orbits& O,
                        const std::vector<OrbitRecord>& records, Format fmt) {
    (void)F;
    if (fmt == Format::Json) {
        json arr = json::array();
        for (const auto& rec : records)
            arr.push_back({{"verge", O.to_string(rec.verge)},
                           {"size", rec.size()},
                           {"stabilizer_order", rec.stabilizer_order},
                           {"family", family_name(rec.family)}});
        return arr.dump() + "\n";
    }
    std::vector<std::vector<std::string>> grid;
    grid.push_back({"verge", "size", "stabilizer", "family"});
    for (const auto& rec : records)
        grid.push_back({O.to_string(rec.verge), std::to_string(rec.size()),
                        std::to_string(rec.stabilizer_order), family_name(rec.family)});
    if (fmt == Format::Csv) {
        std::string out;
        for (const auto& row : grid) out += csv_line(row);
        return out;
    }
    return render_grid(grid);
}

std::string emit_entry_mismatches(const Fq& F, const std::vector<EntryMismatch>& diffs,
                                  Format fmt) {
    if (fmt == Format::Json) {
        json arr = json::array();
        for (const auto& d : diffs)
            arr.push_back({{"row", d.row},
                           {"col", d.col},
                           {"closed_form", F.to_string(d.closed_form)},
                           {"computed", F.to_string(d.computed)}});
        return arr.dump() + "\n";
    }
    if (diffs.empty()) return "no mismatching entries\n";
    std::vector<std::vector<std::string>> grid;
    grid.push_back({"row", "col", "closed_form", "computed"});
    for (const auto& d : diffs)
        grid.push_back({std::to_string(d.row), std::to_string(d.col),
                        F.to_string(d.closed_form), F.to_string(d.computed)});
    if (fmt == Format::Csv) {
        std::string out;
        for (const auto& row : grid) out += csv_line(row);
        return out;
    }
    return render_grid(grid);
}

std::string emit_table_diff(const ReeSylow& U, const CharTable& table,
                            const TableDiff& diff, Format fmt) {
    if (fmt == Format::Json) {
        json j;
        j["assignment"] = json::array();
        for (const auto& [from, to] : diff.assignment)
            j["assignment"].push_back({{"computed", from}, {"formula", to}});
        j["mismatches"] = json::array();
        for (const auto& d : diff.mismatches)
            j["mismatches"].push_back(
                {{"row", d.row_label},
                 {"formula_row", d.formula_label},
                 {"class_rep", U.to_string(table.classes[d.cls].representative)},
                 {"computed", eisenstein_json(d.computed)},
                 {"formula", eisenstein_json(d.formula)}});
        return j.dump() + "\n";
    }
    std::ostringstream os;
    os << "row assignment (computed -> formula):\n";
    for (const auto& [from, to] : diff.assignment) os << "  " << from << " -> " << to << "\n";
    if (diff.mismatches.empty()) {
        os << "no mismatching cells\n";
    } else {
        os << diff.mismatches.size() << " mismatching cells:\n";
        std::vector<std::vector<std::string>> grid;
        grid.push_back({"row", "formula_row", "class", "computed", "formula"});
        for (const auto& d : diff.mismatches)
            grid.push_back({d.row_label, d.formula_label,
                            U.to_string(table.classes[d.cls].representative),
                            to_string(d.computed), to_string(d.formula)});
        os << render_grid(grid);
    }
    return os.str();
}

} // namespace reesyl
