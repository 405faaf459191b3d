// Deterministic text / CSV / JSON renderings of the tables and reports.
// Identical inputs produce identical bytes; everything is ordered.

#pragma once

#include <string>
#include <vector>

#include "reesyl/chevalley.hpp"
#include "reesyl/classes.hpp"
#include "reesyl/irrchar.hpp"
#include "reesyl/orbits.hpp"
#include "reesyl/superchar.hpp"

#include "json.hpp"

namespace reesyl {

enum class Format { Text, Csv, Json };

Format parse_format(const std::string& name); // throws std::invalid_argument

nlohmann::json eisenstein_json(const Eisenstein& z);

std::string csv_cell(const std::string& raw);

std::string emit_field_info(const Fq& F, Format fmt);

std::string emit_classes(const Fq& F, const ReeSylow& U, const Classes& C,
                         const std::vector<ClassRecord>& classes,
                         const SuperclassPartition& partition, Format fmt);

std::string emit_superclasses(const Fq& F, const ReeSylow& U, const Classes& C,
                              const SuperclassPartition& partition, Format fmt);

std::string emit_supertable(const Fq& F, const Classes& C, const SuperTheory& S,
                            const SuperTable& table, Format fmt);

std::string emit_chartable(const Fq& F, const ReeSylow& U, const CharTable& table,
                           Format fmt);

std::string emit_orbits(const Fq& F, const Orbits& O,
                        const std::vector<OrbitRecord>& records, Format fmt);

std::string emit_entry_mismatches(const Fq& F, const std::vector<EntryMismatch>& diffs,
                                  Format fmt);

std::string emit_table_diff(const ReeSylow& U, const CharTable& table,
                            const TableDiff& diff, Format fmt);

} // namespace reesyl
