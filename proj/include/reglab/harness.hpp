#pragma once

// Seeded generators and property suites. A suite run is a pure function of
// (name, trials, seed, field); --jobs only changes how trials are scheduled.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "reglab/json_io.hpp"
#include "reglab/scheme.hpp"

namespace reglab {

using Rng = std::mt19937_64;

/// Seed of trial `index` under master seed `seed` (splitmix64 mixing).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

struct GeneratorSpec {
  std::size_t ambient = 3;
  std::size_t degree = 5;
  /// Longest germ drawn; 1 gives reduced schemes.
  std::size_t max_germ_length = 1;
  /// Explicit germ lengths (sum must equal degree); overrides max_germ_length.
  std::vector<std::size_t> germ_lengths;
  /// Length of a planted collinear subscheme (0 or 1: none). Verified with
  /// max_collinear_length.
  std::size_t collinear = 0;
  /// Let the planted line carry a germ tangent to it.
  bool secant_through_germ = false;
  /// Redraw until invariant_t equals the span dimension min(N, d - 1).
  bool general_position = false;
  /// Redraw until the scheme spans P^N.
  bool nondegenerate = false;
  long box = 10;
  std::size_t cap = kDefaultEnumerationCap;
  std::size_t max_redraws = 200;

  /// Throws InvalidInput for inconsistent requests.
  void validate() const;
};

/// A scheme over Q meeting `spec`; `redraws` is incremented per rejected
/// draw. Throws RedrawsExhausted when the budget runs out.
FiniteScheme gen_scheme(const GeneratorSpec& spec, Rng& rng, std::size_t& redraws);

struct SuiteOptions {
  std::string name;
  /// 0 selects the suite's default count.
  std::size_t trials = 0;
  std::uint64_t seed = 1;
  Field field = Field::rationals();
  unsigned jobs = 1;
  std::size_t cap = kDefaultEnumerationCap;
  bool timing = false;
};

struct SuiteReport {
  std::string suite;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  Field field = Field::rationals();
  /// Reproducers: {"trial", "seed", "input", "detail"}.
  std::vector<Json> failures;
  std::size_t redraws = 0;
  /// Trials per bucket (case, label or shape), in first-seen order of index.
  std::vector<std::pair<std::string, std::size_t>> buckets;
  std::size_t fp_checked = 0;
  std::size_t fp_agreed = 0;
  double wall_ms = 0;
  bool timing = false;

  bool passed() const { return failures.empty(); }
  Json to_json() const;
};

const std::vector<std::string>& suite_names();
std::size_t default_trials(const std::string& suite);

/// Throws InvalidInput for an unknown suite.
SuiteReport run_suite(const SuiteOptions& options);

}  // namespace reglab
