// JSON/CSV serialization: the cycle catalog, search reports, checkpoints,
// and histograms. Big integers are emitted as decimal strings when they do
// not fit a JSON-safe number; readers accept both.
#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcollatz/cycles.hpp"
#include "qcollatz/stats.hpp"

namespace qcollatz {

nlohmann::json int_to_json(const Int& v);
Int int_from_json(const nlohmann::json& j);

nlohmann::json cycle_to_json(const Cycle& c);

// Raw catalog row; verify_catalog_entry recomputes every field from (q, n0).
struct CatalogEntry {
  std::uint64_t q = 0;
  Int n0;
  Int x0;
  std::uint64_t p = 0;
  std::uint64_t P_p = 0;
  std::uint64_t s = 0;
  std::uint64_t h = 0;
  Int lambda;
  std::string parity;
};

CatalogEntry catalog_entry_from_json(const nlohmann::json& j);
nlohmann::json catalog_entry_to_json(const CatalogEntry& e);

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& file,
                                       std::optional<std::uint64_t> q_filter = {});
void save_catalog(const std::filesystem::path& file, const std::vector<CatalogEntry>& entries);

struct CatalogCheck {
  CatalogEntry entry;
  bool ok = false;
  std::vector<std::string> mismatches;
};

// Rebuilds the cycle from (q, n0) alone and recomputes every field, the
// structural invariants, both periodicity conditions, the divisor condition,
// the parity-coefficient bounds and the class exclusions.
CatalogCheck verify_catalog_entry(const CatalogEntry& e);

nlohmann::json report_to_json(const SearchReport& rep);

struct Checkpoint {
  std::uint64_t q = 0;
  std::string method;
  SearchBounds bounds;
  std::uint64_t chunk_size = 0;  // orbit method: seeds per chunk
  std::uint64_t budget = 0;      // parity method: enumeration budget
  std::uint64_t next_chunk = 0;
  SearchReport partial;  // merged counters + cycles of chunks [0, next_chunk)
};

nlohmann::json checkpoint_to_json(const Checkpoint& cp);
Checkpoint checkpoint_from_json(const nlohmann::json& j);
void save_checkpoint(const std::filesystem::path& file, const Checkpoint& cp);
Checkpoint load_checkpoint(const std::filesystem::path& file);

nlohmann::json histogram_to_json(const MuHistogram& h);
void histogram_to_csv(std::ostream& out, const MuHistogram& h);

}  // namespace qcollatz
