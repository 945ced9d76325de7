#include "qcollatz/io.hpp"

#include <fstream>

namespace qcollatz {

namespace {

constexpr std::uint64_t json_safe_max = (std::uint64_t{1} << 53) - 1;

void require(bool cond, const char* msg) {
  if (!cond) throw std::domain_error(msg);
}

}  // namespace

nlohmann::json int_to_json(const Int& v) {
  if (sgn(v) >= 0 && fits_u64(v) && to_u64(v) <= json_safe_max)
    return to_u64(v);
  return v.get_str();
}

Int int_from_json(const nlohmann::json& j) {
  if (j.is_number_unsigned()) return Int(static_cast<unsigned long>(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::domain_error("expected integer or decimal string");
}

nlohmann::json cycle_to_json(const Cycle& c) {
  return nlohmann::json{
      {"q", c.q()},
      {"n0", int_to_json(c.min_seed_n())},
      {"x0", int_to_json(c.min_seed_x())},
      {"p", c.period()},
      {"P_p", c.total_parity()},
      {"s", c.s()},
      {"h", c.class_h()},
      {"lambda", int_to_json(c.lambda())},
      {"parity", c.parity().to_string()},
  };
}

CatalogEntry catalog_entry_from_json(const nlohmann::json& j) {
  CatalogEntry e;
  e.q = j.at("q").get<std::uint64_t>();
  e.n0 = int_from_json(j.at("n0"));
  e.x0 = int_from_json(j.at("x0"));
  e.p = j.at("p").get<std::uint64_t>();
  e.P_p = j.at("P_p").get<std::uint64_t>();
  e.s = j.at("s").get<std::uint64_t>();
  e.h = j.at("h").get<std::uint64_t>();
  e.lambda = int_from_json(j.at("lambda"));
  e.parity = j.at("parity").get<std::string>();
  return e;
}

nlohmann::json catalog_entry_to_json(const CatalogEntry& e) {
  return nlohmann::json{
      {"q", e.q},       {"n0", int_to_json(e.n0)}, {"x0", int_to_json(e.x0)},
      {"p", e.p},       {"P_p", e.P_p},            {"s", e.s},
      {"h", e.h},       {"lambda", int_to_json(e.lambda)},
      {"parity", e.parity},
  };
}

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& file,
                                       std::optional<std::uint64_t> q_filter) {
  std::ifstream in(file);
  if (!in) throw std::domain_error("cannot open catalog file: " + file.string());
  nlohmann::json doc = nlohmann::json::parse(in);
  require(doc.is_array(), "catalog must be a JSON array");
  std::vector<CatalogEntry> out;
  for (const auto& j : doc) {
    CatalogEntry e = catalog_entry_from_json(j);
    if (!q_filter || e.q == *q_filter) out.push_back(std::move(e));
  }
  return out;
}

void save_catalog(const std::filesystem::path& file, const std::vector<CatalogEntry>& entries) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& e : entries) doc.push_back(catalog_entry_to_json(e));
  std::ofstream out(file);
  if (!out) throw std::domain_error("cannot write catalog file: " + file.string());
  out << doc.dump(2) << '\n';
}

CatalogCheck verify_catalog_entry(const CatalogEntry& e) {
  CatalogCheck check;
  check.entry = e;
  auto mismatch = [&](const std::string& what) { check.mismatches.push_back(what); };

  try {
    Multiplier q(e.q);
    // rebuild one period of the orbit from n0 alone
    std::vector<Int> orbit;
    orbit.reserve(e.p);
    Int n = e.n0;
    for (std::uint64_t j = 0; j < e.p; ++j) {
      orbit.push_back(n);
      n = t_map(q, n);
    }
    if (n != e.n0) {
      mismatch("orbit does not close after p steps");
      return check;
    }
    Cycle c = Cycle::from_orbit_n(q, std::move(orbit));

    if (c.min_seed_n() != e.n0) mismatch("n0 is not the orbit minimum");
    if (c.min_seed_x() != e.x0) mismatch("x0 != X_q(n0)");
    if (c.period() != e.p) mismatch("period mismatch");
    if (c.total_parity() != e.P_p) mismatch("total parity mismatch");
    if (c.s() != e.s) mismatch("s mismatch");
    if (c.class_h() != e.h) mismatch("class h mismatch");
    if (c.lambda() != e.lambda) mismatch("lambda mismatch");
    if (c.parity().to_string() != e.parity) mismatch("parity vector mismatch");

    if (!second_periodicity_check(q, c.min_seed_n(), c.parity()))
      mismatch("second periodicity condition fails");
    if (!divisor_condition(q, c)) mismatch("divisor condition fails");
    if (!parity_coeff_bounds_check(q, c)) mismatch("parity coefficient bounds fail");
    if (class_excluded(q, c.class_h())) mismatch("class h is excluded");
    auto cc = cycle_congruence_solve(q, c.period(), c.s());
    if (!cc || cc->h != c.class_h()) mismatch("congruence solve does not return class h");
  } catch (const std::exception& ex) {
    mismatch(std::string("rebuild failed: ") + ex.what());
  }

  check.ok = check.mismatches.empty();
  return check;
}

nlohmann::json report_to_json(const SearchReport& rep) {
  nlohmann::json cycles = nlohmann::json::array();
  for (const auto& c : rep.cycles) cycles.push_back(cycle_to_json(c));
  nlohmann::json bounds;
  if (rep.bounds.n_max) bounds["n_max"] = rep.bounds.n_max;
  if (rep.bounds.p_max) bounds["p_max"] = rep.bounds.p_max;
  if (rep.bounds.step_cap) bounds["step_cap"] = rep.bounds.step_cap;
  if (rep.bounds.size_cap_bits) bounds["size_cap_bits"] = rep.bounds.size_cap_bits;
  return nlohmann::json{
      {"q", rep.q},
      {"method", rep.method},
      {"bounds", bounds},
      {"pi_count", rep.pi_count()},
      {"cycles", cycles},
      {"scanned", rep.scanned},
      {"undetermined", rep.undetermined},
      {"resolved_by_descent", rep.resolved_by_descent},
      {"pruned", rep.pruned},
      {"partial", rep.partial},
  };
}

nlohmann::json checkpoint_to_json(const Checkpoint& cp) {
  nlohmann::json cycles = nlohmann::json::array();
  for (const auto& c : cp.partial.cycles) cycles.push_back(cycle_to_json(c));
  return nlohmann::json{
      {"q", cp.q},
      {"method", cp.method},
      {"bounds",
       {{"n_max", cp.bounds.n_max},
        {"p_max", cp.bounds.p_max},
        {"step_cap", cp.bounds.step_cap},
        {"size_cap_bits", cp.bounds.size_cap_bits}}},
      {"chunk_size", cp.chunk_size},
      {"budget", cp.budget},
      {"next_chunk", cp.next_chunk},
      {"partial_counts",
       {{"scanned", cp.partial.scanned},
        {"undetermined", cp.partial.undetermined},
        {"resolved_by_descent", cp.partial.resolved_by_descent},
        {"pruned", cp.partial.pruned}}},
      {"cycles", cycles},
  };
}

Checkpoint checkpoint_from_json(const nlohmann::json& j) {
  Checkpoint cp;
  cp.q = j.at("q").get<std::uint64_t>();
  cp.method = j.at("method").get<std::string>();
  const auto& b = j.at("bounds");
  cp.bounds.n_max = b.at("n_max").get<std::uint64_t>();
  cp.bounds.p_max = b.at("p_max").get<std::uint64_t>();
  cp.bounds.step_cap = b.at("step_cap").get<std::uint64_t>();
  cp.bounds.size_cap_bits = b.at("size_cap_bits").get<std::uint64_t>();
  cp.chunk_size = j.at("chunk_size").get<std::uint64_t>();
  cp.budget = j.value("budget", std::uint64_t{0});
  cp.next_chunk = j.at("next_chunk").get<std::uint64_t>();
  cp.partial.q = cp.q;
  cp.partial.method = cp.method;
  cp.partial.bounds = cp.bounds;
  cp.partial.next_chunk = cp.next_chunk;
  const auto& counts = j.at("partial_counts");
  cp.partial.scanned = counts.at("scanned").get<std::uint64_t>();
  cp.partial.undetermined = counts.at("undetermined").get<std::uint64_t>();
  cp.partial.resolved_by_descent = counts.at("resolved_by_descent").get<std::uint64_t>();
  cp.partial.pruned = counts.at("pruned").get<std::uint64_t>();
  for (const auto& cj : j.at("cycles")) {
    CatalogEntry e = catalog_entry_from_json(cj);
    Multiplier q(e.q);
    std::vector<Int> orbit;
    orbit.reserve(e.p);
    Int n = e.n0;
    for (std::uint64_t s = 0; s < e.p; ++s) {
      orbit.push_back(n);
      if (s + 1 < e.p) n = t_map(q, n);
    }
    cp.partial.cycles.push_back(Cycle::from_orbit_n(q, std::move(orbit)));
  }
  return cp;
}

void save_checkpoint(const std::filesystem::path& file, const Checkpoint& cp) {
  std::ofstream out(file);
  if (!out) throw std::domain_error("cannot write checkpoint file: " + file.string());
  out << checkpoint_to_json(cp).dump(2) << '\n';
}

Checkpoint load_checkpoint(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::domain_error("cannot open checkpoint file: " + file.string());
  return checkpoint_from_json(nlohmann::json::parse(in));
}

nlohmann::json histogram_to_json(const MuHistogram& h) {
  nlohmann::json counts = nlohmann::json::array();
  for (std::uint64_t m = 0; m < h.counts.size(); ++m)
    counts.push_back({{"m", m}, {"count", h.counts[m]}});
  nlohmann::json j{
      {"q", h.q},
      {"k", h.k},
      {"mode", h.exhaustive ? "exhaustive" : "sampled"},
      {"total", h.total},
      {"counts", counts},
  };
  if (!h.exhaustive) {
    j["generator"] = "splitmix64-counter";
    j["seed"] = h.rng_seed;
  }
  return j;
}

void histogram_to_csv(std::ostream& out, const MuHistogram& h) {
  out << "m,count\n";
  for (std::uint64_t m = 0; m < h.counts.size(); ++m)
    out << m << ',' << h.counts[m] << '\n';
}

}  // namespace qcollatz
