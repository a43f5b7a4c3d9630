#pragma once

#include <filesystem>
#include <string>

#include "ringlab/claims.hpp"

namespace ringlab {

inline constexpr const char* kEngineVersion = "0.1.0";

struct IoError : Error {
    using Error::Error;
};

/// Ring wire format:
///   {"order": n, "zero": z, "one": o, "add": [[..]..], "mul": [[..]..],
///    "label": "..."} with row-major tables. load re-validates the axioms.
std::string ring_to_json(const FiniteRing& r);
FiniteRing ring_from_json(const std::string& text, const RingLimits& limits = {});
void save_ring(const FiniteRing& r, const std::filesystem::path& path);
FiniteRing load_ring(const std::filesystem::path& path, const RingLimits& limits = {});

/// Group wire format: {"order": m, "identity": e, "cayley": [[..]..]}.
std::string group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const std::string& text, const RingLimits& limits = {});
void save_group(const FiniteGroup& g, const std::filesystem::path& path);
FiniteGroup load_group(const std::filesystem::path& path, const RingLimits& limits = {});

/// Classification record as a flat object: "expression", "characteristic",
/// then one key per class verdict (true / false / null for skipped).
std::string record_to_json(const ClassificationRecord& rec, const std::string& expression,
                           int indent = 2);

/// Census table: one row per catalog ring; columns are expression, order,
/// characteristic, then the verdicts in alphabetical order.
std::string census_csv(Engine& engine, const Catalog& catalog);
std::string census_json(Engine& engine, const Catalog& catalog, int indent = 2);

/// Report format:
///   {"catalog_size": n, "claims": [{"id","anchor","subjects","pass","fail",
///    "skipped","not_applicable","witnesses":[...]}], "config": {...}}
std::string report_to_json(const Report& report, int indent = 2);
std::string report_to_table(const Report& report);

/// Disk-backed record store: one JSON file per ring hash under `dir`,
/// tagged with the engine version and the expensive-predicate threshold;
/// entries from other versions or thresholds are ignored.
std::shared_ptr<Engine::RecordStore> make_disk_record_store(const std::filesystem::path& dir);

}  // namespace ringlab
