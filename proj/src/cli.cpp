#include "qcollatz/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <memory>
#include <ostream>
#include <sstream>

#include "qcollatz/cycles.hpp"
#include "qcollatz/io.hpp"
#include "qcollatz/parallel.hpp"
#include "qcollatz/stats.hpp"

namespace qcollatz::cli {

namespace {

const CLI::Validator OddQ(
    [](std::string& s) -> std::string {
      try {
        unsigned long long v = std::stoull(s);
        if (std::to_string(v) != s) return "q must be odd >= 3";
        if (v < 3 || v % 2 == 0) return "q must be odd >= 3";
        if (v > Multiplier::max_q) return "q too large";
      } catch (...) {
        return "q must be odd >= 3";
      }
      return {};
    },
    "ODD_Q");

const CLI::Validator PositiveDecimal(
    [](std::string& s) -> std::string {
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        return "expected a positive decimal integer";
      if (s.find_first_not_of('0') == std::string::npos)
        return "expected a positive decimal integer";
      return {};
    },
    "POSDEC");

const CLI::Validator BitString(
    [](std::string& s) -> std::string {
      if (s.empty() || s.find_first_not_of("01") != std::string::npos)
        return "expected a nonempty string of 0/1";
      return {};
    },
    "BITS");

std::unique_ptr<CLI::App> build_app(Command& cmd) {
  auto app = std::make_unique<CLI::App>("qcollatz - workbench for qn+1 dynamical systems");
  app->require_subcommand(1);

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cmd.format, "output format")
        ->check(CLI::IsMember({"plain", "json", "csv"}))
        ->capture_default_str();
  };
  auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", cmd.threads,
                    "worker count (default: QCOLLATZ_THREADS or hardware)");
  };
  auto add_seed = [&](CLI::App* sub) {
    auto* n = sub->add_option("--n", cmd.n_str, "seed in n-space")->check(PositiveDecimal);
    auto* x = sub->add_option("--x", cmd.x_str, "seed in x-space (member of Z_cq)")
                  ->check(PositiveDecimal);
    n->excludes(x);
    x->excludes(n);
  };

  auto* orbit = app->add_subcommand("orbit", "compute a truncated orbit");
  orbit->add_option("--q", cmd.q, "odd multiplier q >= 3")->required()->check(OddQ);
  add_seed(orbit);
  orbit->add_option("--steps", cmd.steps, "orbit length k")->required()->check(CLI::PositiveNumber);
  orbit->add_option("--space", cmd.space, "output space")->check(CLI::IsMember({"n", "x"}))
      ->capture_default_str();
  orbit->add_option("--size-cap-bits", cmd.size_cap_bits, "iterate size cap in bits")
      ->capture_default_str();
  add_format(orbit);

  auto* parity = app->add_subcommand("parity", "parity vector of a seed");
  parity->add_option("--q", cmd.q, "odd multiplier q >= 3")->required()->check(OddQ);
  add_seed(parity);
  parity->add_option("--length", cmd.length, "vector length k")->required()
      ->check(CLI::PositiveNumber);
  add_format(parity);

  auto* seedof = app->add_subcommand("seed-of", "seed with a given parity vector");
  seedof->add_option("--q", cmd.q, "odd multiplier q >= 3")->required()->check(OddQ);
  seedof->add_option("--parity", cmd.parity_bits, "parity vector, leftmost = alpha^0")
      ->required()
      ->check(BitString);
  add_format(seedof);

  auto* search = app->add_subcommand("cycles-search", "search for cycles");
  auto* sq = search->add_option("--q", cmd.q, "odd multiplier q >= 3")->check(OddQ);
  auto* sm = search->add_option("--method", cmd.method, "search method")
                 ->check(CLI::IsMember({"orbit", "parity"}))
                 ->capture_default_str();
  auto* snm = search->add_option("--n-max", cmd.n_max, "orbit method: seed bound")
                  ->check(CLI::PositiveNumber)
                  ->capture_default_str();
  auto* spm = search->add_option("--p-max", cmd.p_max, "parity method: period bound")
                  ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{62}))
                  ->capture_default_str();
  auto* ssc = search->add_option("--step-cap", cmd.step_cap, "orbit method: step cap per seed")
                  ->check(CLI::PositiveNumber)
                  ->capture_default_str();
  auto* ssz = search->add_option("--size-cap-bits", cmd.search_size_cap_bits,
                                 "orbit method: iterate size cap in bits")
                  ->capture_default_str();
  auto* sbd = search->add_option("--budget", cmd.budget, "parity method: enumeration budget")
                  ->capture_default_str();
  auto* sck = search->add_option("--chunk-size", cmd.chunk_size, "seeds per work chunk")
                  ->capture_default_str();
  search->add_option("--checkpoint", cmd.checkpoint_file, "checkpoint file to write");
  search->add_option("--checkpoint-every", cmd.checkpoint_every,
                     "write a checkpoint every N chunks");
  auto* srs = search->add_option("--resume", cmd.resume_file,
                                 "resume from a checkpoint (takes parameters from it)");
  for (auto* opt : {sq, sm, snm, spm, ssc, ssz, sbd, sck}) srs->excludes(opt);
  add_threads(search);
  add_format(search);

  auto* verify = app->add_subcommand("cycles-verify", "recompute every field of cataloged cycles");
  verify->add_option("--q", cmd.q, "restrict to one multiplier")->check(OddQ);
  verify->add_option("--catalog", cmd.catalog_file, "catalog file")->capture_default_str();
  add_format(verify);

  auto* trivial = app->add_subcommand("trivial-search", "classify trivial cycles by total parity");
  trivial->add_option("--p-target", cmd.P_target, "total parity P")->required()
      ->check(CLI::PositiveNumber);
  trivial->add_option("--q-max", cmd.q_max, "odd q bound")->check(CLI::PositiveNumber)
      ->capture_default_str();
  trivial->add_option("--p-max", cmd.p_max, "period bound")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1000}))
      ->capture_default_str();
  add_format(trivial);

  auto* hist = app->add_subcommand("stats-hist", "histogram of total parity P_k over seeds");
  hist->add_option("--q", cmd.q, "odd multiplier q >= 3")->required()->check(OddQ);
  hist->add_option("--k", cmd.k, "vector length")->required()->check(CLI::PositiveNumber);
  hist->add_flag("--exhaustive", cmd.exhaustive, "enumerate all 2^k seeds");
  hist->add_option("--samples", cmd.samples, "sampled mode: number of seeds");
  hist->add_option("--seed", cmd.rng_seed, "sampled mode: generator seed")->capture_default_str();
  hist->add_option("--budget", cmd.budget, "exhaustive-mode budget")->capture_default_str();
  add_threads(hist);
  add_format(hist);

  auto* density = app->add_subcommand("stats-density",
                                      "fraction of seeds with mu_k above ln2/ln q");
  density->add_option("--q", cmd.q, "odd multiplier q >= 5")->required()->check(OddQ);
  density->add_option("--k", cmd.k, "vector length")->required()->check(CLI::PositiveNumber);
  density->add_option("--t", cmd.t, "seed bound")->required()->check(CLI::PositiveNumber);
  add_format(density);

  auto* bounds = app->add_subcommand("bounds-check", "exact growth-bound checks on an orbit");
  bounds->add_option("--q", cmd.q, "odd multiplier q >= 3")->required()->check(OddQ);
  add_seed(bounds);
  bounds->add_option("--steps", cmd.steps, "prefix count k")->required()
      ->check(CLI::PositiveNumber);
  bounds->add_option("--size-cap-bits", cmd.size_cap_bits, "iterate size cap in bits")
      ->capture_default_str();
  add_format(bounds);

  auto* vc = app->add_subcommand("verify-collatz", "check every n <= max reaches 1 under T_3");
  vc->add_option("--max", cmd.max_n, "seed bound")->capture_default_str();
  add_threads(vc);
  add_format(vc);

  return app;
}

void finalize(Command& cmd, const CLI::App& app) {
  const CLI::App* sub = app.get_subcommands().front();
  cmd.subcommand = sub->get_name();
  if (cmd.subcommand == "orbit" || cmd.subcommand == "parity" || cmd.subcommand == "bounds-check") {
    if (cmd.n_str.empty() && cmd.x_str.empty())
      throw CLI::RequiredError("one of --n / --x");
  }
  if (cmd.subcommand == "cycles-verify")
    cmd.q_filter_set = sub->count("--q") > 0;
  if (cmd.subcommand == "stats-hist") {
    if (cmd.exhaustive == (cmd.samples > 0))
      throw CLI::RequiredError("exactly one of --exhaustive / --samples");
  }
  if (cmd.subcommand == "cycles-search") {
    if (cmd.resume_file.empty() && cmd.q == 0)
      throw CLI::RequiredError("--q");
  }
}

CqInt resolve_seed(const Multiplier& q, const Command& cmd) {
  if (!cmd.n_str.empty()) return conjugate(q, Int(cmd.n_str));
  return CqInt(q, Int(cmd.x_str));
}

std::string rat_str(const Rat& r) {
  return r.get_str();
}

// ---------------------------------------------------------------------------

int run_orbit(const Command& cmd, std::ostream& out) {
  Multiplier q(cmd.q);
  CqInt x0 = resolve_seed(q, cmd);
  Trajectory traj = iterate(q, x0, cmd.steps, cmd.size_cap_bits);

  std::vector<Int> values;
  values.reserve(traj.length());
  for (const Int& x : traj.iterates)
    values.push_back(cmd.space == "n" ? unconjugate(q, CqInt::unchecked(x)) : x);

  if (cmd.format == "json") {
    nlohmann::json j{{"q", cmd.q},
                     {"space", cmd.space},
                     {"steps", cmd.steps},
                     {"capped", traj.capped},
                     {"parity", traj.parity.to_string()}};
    nlohmann::json vals = nlohmann::json::array();
    for (const Int& v : values) vals.push_back(int_to_json(v));
    j["values"] = vals;
    out << j.dump(2) << '\n';
  } else if (cmd.format == "csv") {
    out << "step,value\n";
    for (std::size_t i = 0; i < values.size(); ++i) out << i << ',' << values[i] << '\n';
  } else {
    for (std::size_t i = 0; i < values.size(); ++i)
      out << values[i] << (i + 1 < values.size() ? ' ' : '\n');
    if (traj.capped) out << "capped=yes length=" << traj.length() << '\n';
  }
  return traj.capped ? 3 : 0;
}

int run_parity(const Command& cmd, std::ostream& out) {
  Multiplier q(cmd.q);
  CqInt x0 = resolve_seed(q, cmd);
  ParityVector pv = parity_vector(q, x0, cmd.length);

  if (cmd.format == "json") {
    nlohmann::json j{{"q", cmd.q},
                     {"length", cmd.length},
                     {"parity", pv.to_string()},
                     {"P", pv.total_parity()},
                     {"mu", rat_str(pv.parity_coefficient())}};
    out << j.dump(2) << '\n';
  } else if (cmd.format == "csv") {
    out << "j,bit\n";
    for (std::size_t j = 0; j < pv.length(); ++j) out << j << ',' << int(pv.bit(j)) << '\n';
  } else {
    out << pv.to_string() << '\n';
    out << "P=" << pv.total_parity() << " mu=" << rat_str(pv.parity_coefficient()) << '\n';
  }
  return 0;
}

int run_seed_of(const Command& cmd, std::ostream& out) {
  Multiplier q(cmd.q);
  ParityVector pv = ParityVector::from_string(cmd.parity_bits);
  Int n0 = seed_from_parity(q, pv);
  Int x0 = conjugate(q, n0).value();

  if (cmd.format == "json") {
    nlohmann::json j{{"q", cmd.q},
                     {"parity", pv.to_string()},
                     {"n0", int_to_json(n0)},
                     {"x0", int_to_json(x0)}};
    out << j.dump(2) << '\n';
  } else if (cmd.format == "csv") {
    out << "n0,x0\n" << n0 << ',' << x0 << '\n';
  } else {
    out << "n0=" << n0 << " x0=" << x0 << '\n';
  }
  return 0;
}

void print_search_plain(const SearchReport& rep, const Multiplier& q, std::ostream& out) {
  out << "method=" << rep.method << " q=" << rep.q;
  if (rep.method == "orbit")
    out << " n_max=" << rep.bounds.n_max << " step_cap=" << rep.bounds.step_cap
        << " size_cap_bits=" << rep.bounds.size_cap_bits;
  else
    out << " p_max=" << rep.bounds.p_max;
  out << '\n';
  out << "scanned=" << rep.scanned << " undetermined=" << rep.undetermined
      << " resolved_by_descent=" << rep.resolved_by_descent << " pruned=" << rep.pruned
      << " partial=" << (rep.partial ? "yes" : "no") << '\n';
  out << "cycles=" << rep.pi_count() << '\n';
  for (const auto& c : rep.cycles) {
    out << "n0=" << c.min_seed_n() << " x0=" << c.min_seed_x() << " p=" << c.period()
        << " P=" << c.total_parity() << " s=" << c.s() << " h=" << c.class_h()
        << " lambda=" << c.lambda() << " mu=" << rat_str(c.mu())
        << " parity=" << c.parity().to_string() << " x_orbit=";
    std::vector<Int> xs = c.orbit_x(q);
    for (std::size_t i = 0; i < xs.size(); ++i) out << xs[i] << (i + 1 < xs.size() ? "," : "");
    out << '\n';
  }
}

void print_search_csv(const SearchReport& rep, std::ostream& out) {
  out << "q,n0,x0,p,P_p,s,h,lambda,mu,parity\n";
  for (const auto& c : rep.cycles)
    out << c.q() << ',' << c.min_seed_n() << ',' << c.min_seed_x() << ',' << c.period() << ','
        << c.total_parity() << ',' << c.s() << ',' << c.class_h() << ',' << c.lambda() << ','
        << rat_str(c.mu()) << ',' << c.parity().to_string() << '\n';
}

SearchReport drive_orbit_search(const Multiplier& q, const Command& cmd,
                                std::uint64_t start_chunk, SearchReport merged) {
  const std::uint64_t chunk_size = std::max<std::uint64_t>(1, cmd.chunk_size);
  const std::uint64_t total_chunks = (cmd.n_max + chunk_size - 1) / chunk_size;
  const unsigned threads = resolve_worker_count(cmd.threads);
  const std::uint64_t batch =
      cmd.checkpoint_every > 0 ? cmd.checkpoint_every : std::max<std::uint64_t>(1, total_chunks);

  merged.q = q.q();
  merged.method = "orbit";
  merged.bounds = SearchBounds{cmd.n_max, 0, cmd.step_cap, cmd.search_size_cap_bits};

  for (std::uint64_t c0 = start_chunk; c0 < total_chunks; c0 += batch) {
    const std::uint64_t cnt = std::min(batch, total_chunks - c0);
    auto results = run_indexed<SearchReport>(cnt, threads, [&](std::uint64_t i) {
      const std::uint64_t chunk = c0 + i;
      const std::uint64_t lo = chunk * chunk_size + 1;
      const std::uint64_t hi = std::min(cmd.n_max, chunk * chunk_size + chunk_size);
      return find_cycles_orbit_range(q, lo, hi, cmd.step_cap, cmd.search_size_cap_bits);
    });
    for (auto& r : results) merged.merge(r);
    merged.next_chunk = c0 + cnt;
    if (!cmd.checkpoint_file.empty())
      save_checkpoint(cmd.checkpoint_file, Checkpoint{q.q(), "orbit", merged.bounds, chunk_size,
                                                      0, merged.next_chunk, merged});
  }
  merged.bounds = SearchBounds{cmd.n_max, 0, cmd.step_cap, cmd.search_size_cap_bits};
  return merged;
}

SearchReport drive_parity_search(const Multiplier& q, const Command& cmd,
                                 std::uint64_t start_chunk, SearchReport merged) {
  // chunk i <-> vector length p = i + 2; budget decides how many lengths run
  std::uint64_t chunks = 0;
  std::uint64_t spent = 0;
  bool partial = false;
  for (std::uint64_t p = 2; p <= cmd.p_max; ++p) {
    const std::uint64_t cost = p <= 62 ? (std::uint64_t{1} << (p - 2)) : ~std::uint64_t{0};
    if (cost > cmd.budget || spent > cmd.budget - cost) {
      partial = true;
      break;
    }
    spent += cost;
    ++chunks;
  }
  const unsigned threads = resolve_worker_count(cmd.threads);
  const std::uint64_t batch = cmd.checkpoint_every > 0 ? cmd.checkpoint_every
                                                       : std::max<std::uint64_t>(1, chunks);

  merged.q = q.q();
  merged.method = "parity-enum";
  merged.bounds = SearchBounds{0, cmd.p_max, 0, 0};
  merged.partial = merged.partial || partial;

  for (std::uint64_t c0 = start_chunk; c0 < chunks; c0 += batch) {
    const std::uint64_t cnt = std::min(batch, chunks - c0);
    auto results = run_indexed<SearchReport>(cnt, threads, [&](std::uint64_t i) {
      return find_cycles_parity_enum_length(q, c0 + i + 2);
    });
    for (auto& r : results) merged.merge(r);
    merged.next_chunk = c0 + cnt;
    if (!cmd.checkpoint_file.empty())
      save_checkpoint(cmd.checkpoint_file, Checkpoint{q.q(), "parity-enum", merged.bounds, 0,
                                                      cmd.budget, merged.next_chunk, merged});
  }
  merged.bounds = SearchBounds{0, cmd.p_max, 0, 0};
  merged.partial = merged.partial || partial;
  return merged;
}

int run_cycles_search(const Command& cmd_in, std::ostream& out) {
  Command cmd = cmd_in;
  std::uint64_t start_chunk = 0;
  SearchReport base;

  if (!cmd.resume_file.empty()) {
    Checkpoint cp = load_checkpoint(cmd.resume_file);
    cmd.q = cp.q;
    cmd.method = cp.method == "parity-enum" ? "parity" : "orbit";
    cmd.n_max = cp.bounds.n_max;
    cmd.p_max = cp.bounds.p_max;
    cmd.step_cap = cp.bounds.step_cap;
    cmd.search_size_cap_bits = cp.bounds.size_cap_bits;
    if (cp.chunk_size > 0) cmd.chunk_size = cp.chunk_size;
    if (cp.budget > 0) cmd.budget = cp.budget;
    start_chunk = cp.next_chunk;
    base = std::move(cp.partial);
  }

  Multiplier q(cmd.q);
  SearchReport rep = cmd.method == "parity" ? drive_parity_search(q, cmd, start_chunk, std::move(base))
                                            : drive_orbit_search(q, cmd, start_chunk, std::move(base));

  if (cmd.format == "json") {
    out << report_to_json(rep).dump(2) << '\n';
  } else if (cmd.format == "csv") {
    print_search_csv(rep, out);
  } else {
    print_search_plain(rep, q, out);
  }
  return (rep.partial || rep.undetermined > 0) ? 3 : 0;
}

int run_cycles_verify(const Command& cmd, std::ostream& out) {
  std::optional<std::uint64_t> filter;
  if (cmd.q_filter_set) filter = cmd.q;
  std::vector<CatalogEntry> entries = load_catalog(cmd.catalog_file, filter);

  std::vector<CatalogCheck> checks;
  checks.reserve(entries.size());
  for (const auto& e : entries) checks.push_back(verify_catalog_entry(e));
  const std::size_t failed =
      static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(),
                                             [](const CatalogCheck& c) { return !c.ok; }));

  if (cmd.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& c : checks) {
      nlohmann::json row = catalog_entry_to_json(c.entry);
      row["ok"] = c.ok;
      row["mismatches"] = c.mismatches;
      rows.push_back(row);
    }
    out << nlohmann::json{{"catalog", cmd.catalog_file}, {"verified", checks.size() - failed},
                          {"failed", failed}, {"rows", rows}}
               .dump(2)
        << '\n';
  } else if (cmd.format == "csv") {
    out << "q,n0,p,ok\n";
    for (const auto& c : checks)
      out << c.entry.q << ',' << c.entry.n0 << ',' << c.entry.p << ',' << (c.ok ? 1 : 0) << '\n';
  } else {
    for (const auto& c : checks) {
      out << "q=" << c.entry.q << " n0=" << c.entry.n0 << " p=" << c.entry.p << ": "
          << (c.ok ? "OK" : "FAIL");
      if (!c.ok) {
        out << " (";
        for (std::size_t i = 0; i < c.mismatches.size(); ++i)
          out << c.mismatches[i] << (i + 1 < c.mismatches.size() ? "; " : "");
        out << ")";
      }
      out << '\n';
    }
    out << "verified=" << (checks.size() - failed) << " failed=" << failed << '\n';
  }
  return failed == 0 ? 0 : 1;
}

int run_trivial_search(const Command& cmd, std::ostream& out) {
  auto solutions = search_trivial_cycles(cmd.P_target, cmd.q_max, cmd.p_max);

  auto g_join = [](const std::vector<std::uint64_t>& g, char sep) {
    std::ostringstream s;
    for (std::size_t i = 0; i < g.size(); ++i) s << g[i] << (i + 1 < g.size() ? std::string(1, sep) : "");
    return s.str();
  };

  if (cmd.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& sln : solutions)
      rows.push_back({{"q", sln.q}, {"p", sln.p}, {"g", sln.g}});
    out << nlohmann::json{{"P_target", cmd.P_target},
                          {"q_max", cmd.q_max},
                          {"p_max", cmd.p_max},
                          {"solutions", rows}}
               .dump(2)
        << '\n';
  } else if (cmd.format == "csv") {
    out << "q,p,g\n";
    for (const auto& sln : solutions) out << sln.q << ',' << sln.p << ',' << g_join(sln.g, ';') << '\n';
  } else {
    for (const auto& sln : solutions)
      out << "q=" << sln.q << " p=" << sln.p << " g=" << g_join(sln.g, ',') << '\n';
    out << "solutions=" << solutions.size() << '\n';
  }
  return 0;
}

int run_stats_hist(const Command& cmd, std::ostream& out) {
  Multiplier q(cmd.q);
  MuHistogram hist;
  if (cmd.exhaustive) {
    hist = mu_distribution_exhaustive(q, cmd.k, cmd.budget);
  } else {
    // fixed-size sample chunks; the counter RNG makes any chunking identical
    const std::uint64_t chunk = 1 << 16;
    const std::uint64_t chunks = (cmd.samples + chunk - 1) / chunk;
    const unsigned threads = resolve_worker_count(cmd.threads);
    auto parts = run_indexed<MuHistogram>(chunks, threads, [&](std::uint64_t i) {
      const std::uint64_t lo = i * chunk;
      const std::uint64_t hi = std::min(cmd.samples, lo + chunk);
      return mu_distribution_sampled_range(q, cmd.k, lo, hi, cmd.rng_seed);
    });
    hist.q = cmd.q;
    hist.k = cmd.k;
    hist.exhaustive = false;
    hist.rng_seed = cmd.rng_seed;
    hist.counts.assign(cmd.k + 1, 0);
    for (const auto& part : parts) {
      hist.total += part.total;
      for (std::size_t m = 0; m < part.counts.size(); ++m) hist.counts[m] += part.counts[m];
    }
  }

  if (cmd.format == "json") {
    out << histogram_to_json(hist).dump(2) << '\n';
  } else if (cmd.format == "csv") {
    histogram_to_csv(out, hist);
  } else {
    out << "q=" << hist.q << " k=" << hist.k << " mode="
        << (hist.exhaustive ? "exhaustive" : "sampled") << " total=" << hist.total;
    if (!hist.exhaustive) out << " generator=splitmix64-counter seed=" << hist.rng_seed;
    out << '\n';
    histogram_to_csv(out, hist);
  }
  return 0;
}

int run_stats_density(const Command& cmd, std::ostream& out) {
  Multiplier q(cmd.q);
  DensityEstimate d = density_estimate(q, cmd.k, cmd.t);
  char frac[32];
  std::snprintf(frac, sizeof frac, "%.6f", d.fraction());

  if (cmd.format == "json") {
    out << nlohmann::json{{"q", d.q},
                          {"k", d.k},
                          {"t", d.t},
                          {"above", d.above},
                          {"fraction", d.fraction()},
                          {"P_threshold", d.p_threshold},
                          {"threshold_note",
                           "strict mu_k > ln2/ln q, decided exactly via q^P > 2^k"}}
               .dump(2)
        << '\n';
  } else if (cmd.format == "csv") {
    out << "q,k,t,above,fraction,P_threshold\n";
    out << d.q << ',' << d.k << ',' << d.t << ',' << d.above << ',' << frac << ','
        << d.p_threshold << '\n';
  } else {
    out << "q=" << d.q << " k=" << d.k << " t=" << d.t << " above=" << d.above
        << " fraction=" << frac << " P_threshold=" << d.p_threshold << '\n';
  }
  return 0;
}

int run_bounds_check(const Command& cmd, std::ostream& out) {
  Multiplier q(cmd.q);
  CqInt x0 = resolve_seed(q, cmd);
  Trajectory traj = iterate(q, x0, cmd.steps, cmd.size_cap_bits);
  BoundReport rep = check_growth_bounds(q, traj);

  if (cmd.format == "json") {
    out << nlohmann::json{{"q", cmd.q},
                          {"k", rep.k},
                          {"lower_ok", rep.lower_ok},
                          {"upper_checked", rep.upper_checked},
                          {"upper_violations", rep.upper_violations},
                          {"capped", traj.capped}}
               .dump(2)
        << '\n';
  } else if (cmd.format == "csv") {
    out << "violation_index\n";
    for (auto j : rep.upper_violations) out << j << '\n';
  } else {
    out << "k=" << rep.k << " lower_ok=" << (rep.lower_ok ? "yes" : "no")
        << " upper_checked=" << (rep.upper_checked ? "yes" : "no")
        << " upper_violations=" << rep.upper_violations.size() << '\n';
    for (auto j : rep.upper_violations) out << "violation at j=" << j << '\n';
  }
  return traj.capped ? 3 : 0;
}

struct CollatzChunk {
  std::uint64_t max_steps = 0;
  std::uint64_t argmax = 1;
  std::vector<std::uint64_t> failed;  // step guard hit
};

CollatzChunk verify_collatz_range(std::uint64_t lo, std::uint64_t hi) {
  constexpr std::uint64_t guard = 10'000'000;
  constexpr std::uint64_t odd_safe = (~std::uint64_t{0} - 1) / 3;
  CollatzChunk res;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    std::uint64_t v = n, steps = 0;
    bool ok = true;
    while (v != 1) {
      if (steps >= guard) {
        ok = false;
        break;
      }
      if (v & 1) {
        if (v > odd_safe) {
          // escalate this seed to arbitrary precision
          Int big = static_cast<unsigned long>(v);
          Multiplier q3(3);
          while (big != 1 && steps < guard) {
            big = t_map(q3, big);
            ++steps;
          }
          ok = big == 1;
          v = 1;
          break;
        }
        v = (3 * v + 1) >> 1;
      } else {
        v >>= 1;
      }
      ++steps;
    }
    if (!ok) {
      res.failed.push_back(n);
    } else if (steps > res.max_steps) {
      res.max_steps = steps;
      res.argmax = n;
    }
  }
  return res;
}

int run_verify_collatz(const Command& cmd, std::ostream& out) {
  const std::uint64_t chunk = 1 << 16;
  const std::uint64_t chunks = (cmd.max_n + chunk - 1) / chunk;
  const unsigned threads = resolve_worker_count(cmd.threads);
  auto parts = run_indexed<CollatzChunk>(chunks, threads, [&](std::uint64_t i) {
    const std::uint64_t lo = i * chunk + 1;
    const std::uint64_t hi = std::min(cmd.max_n, i * chunk + chunk);
    return verify_collatz_range(lo, hi);
  });

  CollatzChunk total;
  for (const auto& part : parts) {
    if (part.max_steps > total.max_steps) {
      total.max_steps = part.max_steps;
      total.argmax = part.argmax;
    }
    total.failed.insert(total.failed.end(), part.failed.begin(), part.failed.end());
  }
  const bool all_ok = total.failed.empty();

  if (cmd.format == "json") {
    out << nlohmann::json{{"max", cmd.max_n},
                          {"all_reached_one", all_ok},
                          {"max_steps", total.max_steps},
                          {"argmax", total.argmax},
                          {"failed", total.failed}}
               .dump(2)
        << '\n';
  } else if (cmd.format == "csv") {
    out << "n_max,all_reached_one,max_steps,argmax\n";
    out << cmd.max_n << ',' << (all_ok ? 1 : 0) << ',' << total.max_steps << ',' << total.argmax
        << '\n';
  } else {
    if (all_ok)
      out << "all reached 1 (n <= " << cmd.max_n << ")\n";
    else
      out << "FAILED: " << total.failed.size() << " seeds did not reach 1 within the step guard\n";
    out << "max_steps=" << total.max_steps << " at n=" << total.argmax << '\n';
  }
  return all_ok ? 0 : 3;
}

}  // namespace

Command parse(const std::vector<std::string>& args) {
  Command cmd;
  auto app = build_app(cmd);
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("qcollatz");
  for (const auto& a : args) argv.push_back(a.c_str());
  app->parse(static_cast<int>(argv.size()), argv.data());
  finalize(cmd, *app);
  return cmd;
}

int execute(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    if (cmd.subcommand == "orbit") return run_orbit(cmd, out);
    if (cmd.subcommand == "parity") return run_parity(cmd, out);
    if (cmd.subcommand == "seed-of") return run_seed_of(cmd, out);
    if (cmd.subcommand == "cycles-search") return run_cycles_search(cmd, out);
    if (cmd.subcommand == "cycles-verify") return run_cycles_verify(cmd, out);
    if (cmd.subcommand == "trivial-search") return run_trivial_search(cmd, out);
    if (cmd.subcommand == "stats-hist") return run_stats_hist(cmd, out);
    if (cmd.subcommand == "stats-density") return run_stats_density(cmd, out);
    if (cmd.subcommand == "bounds-check") return run_bounds_check(cmd, out);
    if (cmd.subcommand == "verify-collatz") return run_verify_collatz(cmd, out);
    err << "error: unknown subcommand\n";
    return 2;
  } catch (const budget_error& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Command cmd;
  {
    auto app = build_app(cmd);
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("qcollatz");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
      app->parse(static_cast<int>(argv.size()), argv.data());
      finalize(cmd, *app);
    } catch (const CLI::CallForHelp&) {
      out << app->help();
      return 0;
    } catch (const CLI::CallForAllHelp&) {
      out << app->help("", CLI::AppFormatMode::All);
      return 0;
    } catch (const CLI::ParseError& e) {
      err << "usage error: " << e.what() << '\n';
      return 2;
    }
  }
  return execute(cmd, out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  args.reserve(argc > 0 ? static_cast<std::size_t>(argc - 1) : 0);
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace qcollatz::cli
