#pragma once

// Internal: per-trial property checks behind run_suite.

#include <string>

#include "reglab/harness.hpp"

namespace reglab::suites {

struct TrialOutcome {
  bool ok = true;
  std::string bucket;
  Json input;
  std::string detail;
  std::size_t redraws = 0;
  bool fp_checked = false;
  bool fp_agreed = false;

  void fail(std::string why) {
    if (ok) detail = std::move(why);
    ok = false;
  }
};

long draw(Rng& rng, long lo, long hi);

/// gen_scheme followed by reduction into the requested field; draws that do
/// not survive the reduction count as redraws. Returns the scheme over Q and
/// over the target field.
std::pair<FiniteScheme, FiniteScheme> draw_scheme(const GeneratorSpec& spec, Rng& rng,
                                                  Field field, std::size_t& redraws);

/// Fills fp_checked/fp_agreed for every hundredth trial over F_p: the Hilbert
/// function of the reduction agrees with the one over Q.
void crosscheck(TrialOutcome& out, std::size_t index, const FiniteScheme& xq,
                const FiniteScheme& xf);

TrialOutcome prop1_2(Rng& rng, std::size_t index, const SuiteOptions& opt);
TrialOutcome cor1_3a(Rng& rng, std::size_t index, const SuiteOptions& opt);
TrialOutcome cor1_3b(Rng& rng, std::size_t index, const SuiteOptions& opt);
TrialOutcome invariance(Rng& rng, std::size_t index, const SuiteOptions& opt);
TrialOutcome hilbert_shape(Rng& rng, std::size_t index, const SuiteOptions& opt);
TrialOutcome lemma2_6(Rng& rng, std::size_t index, const SuiteOptions& opt);
TrialOutcome fiber_cases(Rng& rng, std::size_t index, const SuiteOptions& opt);
TrialOutcome mather_consistency(Rng& rng, std::size_t index, const SuiteOptions& opt);
TrialOutcome flatness(Rng& rng, std::size_t index, const SuiteOptions& opt);
TrialOutcome lemma3_1(Rng& rng, std::size_t index, const SuiteOptions& opt);

/// Fiber types cycled through by fiber_cases, as (n, label).
const std::vector<std::pair<unsigned, std::string>>& fiber_types();

}  // namespace reglab::suites
