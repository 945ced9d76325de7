// Command-line surface: flag parsing into a Command, dispatch, output
// formatting (plain/json/csv), checkpointed searches and worker pools.
// Exit codes: 0 success, 1 domain error, 2 usage error, 3 cap/budget-limited
// partial result.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qcollatz/trajectory.hpp"

namespace qcollatz::cli {

struct Command {
  std::string subcommand;
  std::string format = "plain";  // plain | json | csv

  std::uint64_t q = 0;
  unsigned threads = 0;  // 0 = auto (QCOLLATZ_THREADS or hardware)

  // orbit / parity / bounds-check seeds
  std::string n_str;  // decimal, n-space
  std::string x_str;  // decimal, x-space
  std::string space = "n";
  std::uint64_t steps = 0;
  std::uint64_t length = 0;
  std::uint64_t size_cap_bits = default_size_cap_bits;

  // seed-of
  std::string parity_bits;

  // cycles-search
  std::string method = "orbit";
  std::uint64_t n_max = 10000;
  std::uint64_t p_max = 7;
  std::uint64_t step_cap = 10000;
  std::uint64_t search_size_cap_bits = 256;
  std::uint64_t budget = std::uint64_t{1} << 26;
  std::uint64_t chunk_size = 1024;
  std::uint64_t checkpoint_every = 0;
  std::string checkpoint_file;
  std::string resume_file;

  // cycles-verify
  std::string catalog_file = "data/known_cycles.json";
  bool q_filter_set = false;

  // trivial-search
  std::uint64_t P_target = 1;
  std::uint64_t q_max = 10000;

  // stats
  unsigned k = 0;
  bool exhaustive = false;
  std::uint64_t samples = 0;
  std::uint64_t rng_seed = 0;
  std::uint64_t t = 0;

  // verify-collatz
  std::uint64_t max_n = 1000000;
};

// Throws CLI::ParseError (via CLI11) on usage errors.
Command parse(const std::vector<std::string>& args);

int execute(const Command& cmd, std::ostream& out, std::ostream& err);

// parse + execute with the full exit-code mapping.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qcollatz::cli
