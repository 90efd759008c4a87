#include "reglab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <set>
#include <thread>

#include "reglab/error.hpp"
#include "suites.hpp"

namespace reglab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Vector int_vector(const std::vector<long>& v) {
  Vector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

std::vector<long> random_point(Rng& rng, std::size_t n, long box) {
  std::vector<long> p(n);
  for (auto& x : p) x = suites::draw(rng, -box, box);
  return p;
}

std::vector<long> random_direction(Rng& rng, std::size_t n, long box) {
  for (;;) {
    auto v = random_point(rng, n, box);
    for (long x : v)
      if (x != 0) return v;
  }
}

// Affine germ at p (chart 0) with first-order direction v; the higher jet
// coefficients are random unless `straight`, which keeps the germ on the
// line through p with direction v.
CurvilinearGerm affine_germ(const std::vector<long>& p, const std::vector<long>& v, std::size_t len,
                            bool straight, Rng& rng, long box) {
  std::vector<long> homog{1};
  homog.insert(homog.end(), p.begin(), p.end());
  const ProjPoint support(int_vector(homog));
  if (len == 1) return CurvilinearGerm::reduced(support);
  std::vector<Series> jet;
  for (std::size_t i = 0; i < p.size(); ++i) {
    Series s{Scalar(p[i]), Scalar(v[i])};
    for (std::size_t j = 2; j < len; ++j) s.emplace_back(straight ? 0L : suites::draw(rng, -box, box));
    jet.push_back(std::move(s));
  }
  return CurvilinearGerm::from_jet(support, 0, jet);
}

std::vector<std::size_t> split_lengths(std::size_t total, std::size_t max_len, Rng& rng) {
  std::vector<std::size_t> out;
  while (total > 0) {
    const std::size_t l = std::min<std::size_t>(total, 1 + rng() % std::max<std::size_t>(max_len, 1));
    out.push_back(l);
    total -= l;
  }
  return out;
}

FiniteScheme draw_once(const GeneratorSpec& s, Rng& rng) {
  const std::size_t n = s.ambient;
  std::vector<CurvilinearGerm> germs;
  std::size_t placed = 0;
  if (s.collinear >= 2) {
    const auto p0 = random_point(rng, n, s.box);
    const auto v = random_direction(rng, n, s.box);
    std::set<long> used;
    auto fresh = [&] {
      for (;;) {
        const long t = suites::draw(rng, -s.box, s.box);
        if (used.insert(t).second) return t;
      }
    };
    auto on_line = [&](long t) {
      std::vector<long> p(n);
      for (std::size_t i = 0; i < n; ++i) p[i] = p0[i] + t * v[i];
      return p;
    };
    if (s.secant_through_germ) {
      const std::size_t len = std::min<std::size_t>(s.collinear, 2 + rng() % 2);
      germs.push_back(affine_germ(on_line(fresh()), v, len, true, rng, s.box));
      placed = len;
    }
    while (placed < s.collinear) {
      germs.push_back(affine_germ(on_line(fresh()), v, 1, true, rng, s.box));
      ++placed;
    }
  }
  const auto lengths = s.germ_lengths.empty() ? split_lengths(s.degree - placed, s.max_germ_length, rng)
                                              : s.germ_lengths;
  for (std::size_t len : lengths) {
    germs.push_back(affine_germ(random_point(rng, n, s.box), random_direction(rng, n, s.box), len, false,
                                rng, s.box));
  }
  return FiniteScheme(n, std::move(germs));
}

bool meets_spec(const GeneratorSpec& s, const FiniteScheme& x) {
  const long span = span_dim(x);
  if (s.nondegenerate && span != static_cast<long>(s.ambient)) return false;
  if (s.collinear >= 3 && max_collinear_length(x).length != s.collinear) return false;
  if (s.general_position) {
    const long want = static_cast<long>(std::min(s.ambient, s.degree - 1));
    if (span != want) return false;
    if (static_cast<long>(invariant_t(x, s.cap)) != std::max(want, 1L)) return false;
  }
  return true;
}

using TrialFn = suites::TrialOutcome (*)(Rng&, std::size_t, const SuiteOptions&);

struct SuiteEntry {
  const char* name;
  TrialFn fn;
  std::size_t default_trials;
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> r = {
      {"prop1_2", suites::prop1_2, 1000},
      {"cor1_3a", suites::cor1_3a, 600},
      {"cor1_3b", suites::cor1_3b, 300},
      {"lemma2_6", suites::lemma2_6, 4000},
      {"fiber_cases", suites::fiber_cases, 100 * suites::fiber_types().size()},
      {"mather_consistency", suites::mather_consistency, 100},
      {"flatness", suites::flatness, 100},
      {"lemma3_1", suites::lemma3_1, 100},
      {"invariance", suites::invariance, 200},
      {"hilbert_shape", suites::hilbert_shape, 300},
  };
  return r;
}

const SuiteEntry& find_suite(const std::string& name) {
  for (const auto& e : registry())
    if (name == e.name) return e;
  throw InvalidInput("unknown suite \"" + name + "\"");
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

void GeneratorSpec::validate() const {
  if (ambient == 0) throw InvalidInput("generator ambient dimension must be positive");
  if (degree == 0) throw InvalidInput("generator degree must be positive");
  if (box <= 0) throw InvalidInput("coordinate box must be positive");
  if (collinear > degree) throw InvalidInput("planted collinear length exceeds the degree");
  if (collinear >= 3 && ambient < 2) throw InvalidInput("a planted line needs ambient dimension >= 2");
  if (secant_through_germ && collinear < 2) throw InvalidInput("a germ on the secant needs a planted line");
  if (!germ_lengths.empty()) {
    std::size_t sum = 0;
    for (auto l : germ_lengths) {
      if (l == 0) throw InvalidInput("germ lengths must be positive");
      sum += l;
    }
    if (collinear >= 2) throw InvalidInput("explicit germ lengths cannot be combined with a planted line");
    if (sum != degree) throw InvalidInput("germ lengths do not add up to the degree");
  }
  if (general_position && degree > cap) throw InvalidInput("general position checks need degree <= cap");
  if (general_position && collinear >= 3) throw InvalidInput("general position excludes planted lines");
}

FiniteScheme gen_scheme(const GeneratorSpec& spec, Rng& rng, std::size_t& redraws) {
  spec.validate();
  for (std::size_t attempt = 0; attempt <= spec.max_redraws; ++attempt) {
    try {
      FiniteScheme x = draw_once(spec, rng);
      if (meets_spec(spec, x)) return x;
    } catch (const InvalidInput&) {
      // coincident supports or a degenerate jet
    }
    ++redraws;
  }
  throw RedrawsExhausted("generator gave up after " + std::to_string(spec.max_redraws) + " redraws");
}

Json SuiteReport::to_json() const {
  Json j;
  j["suite"] = suite;
  j["trials"] = trials;
  j["seed"] = seed;
  j["field"] = field_to_json(field);
  j["passed"] = passed();
  j["failures"] = failures;
  j["redraws"] = redraws;
  Json b = Json::object();
  for (const auto& [k, v] : buckets) b[k] = v;
  j["buckets"] = b;
  if (!field.is_rational()) j["fp_crosscheck"] = Json{{"checked", fp_checked}, {"agreed", fp_agreed}};
  if (timing) j["wall_ms"] = static_cast<long long>(wall_ms);
  return j;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& e : registry()) v.emplace_back(e.name);
    return v;
  }();
  return names;
}

std::size_t default_trials(const std::string& suite) { return find_suite(suite).default_trials; }

SuiteReport run_suite(const SuiteOptions& options) {
  const SuiteEntry& entry = find_suite(options.name);
  const std::size_t trials = options.trials ? options.trials : entry.default_trials;
  const auto start = std::chrono::steady_clock::now();

  std::vector<suites::TrialOutcome> results(trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < trials; i = next++) {
      Rng rng(trial_seed(options.seed, i));
      try {
        results[i] = entry.fn(rng, i, options);
      } catch (const std::exception& e) {
        results[i].fail(std::string("exception: ") + e.what());
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(trials)));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  SuiteReport r;
  r.suite = entry.name;
  r.trials = trials;
  r.seed = options.seed;
  r.field = options.field;
  r.timing = options.timing;
  for (std::size_t i = 0; i < trials; ++i) {
    auto& t = results[i];
    r.redraws += t.redraws;
    if (!t.bucket.empty()) {
      auto it = std::find_if(r.buckets.begin(), r.buckets.end(), [&](auto& b) { return b.first == t.bucket; });
      if (it == r.buckets.end()) r.buckets.emplace_back(t.bucket, 1);
      else ++it->second;
    }
    if (t.fp_checked) {
      ++r.fp_checked;
      if (t.fp_agreed) ++r.fp_agreed;
    }
    if (!t.ok) {
      Json f;
      f["trial"] = i;
      f["seed"] = trial_seed(options.seed, i);
      f["input"] = t.input;
      f["detail"] = t.detail;
      r.failures.push_back(std::move(f));
    }
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

namespace suites {

long draw(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

std::pair<FiniteScheme, FiniteScheme> draw_scheme(const GeneratorSpec& spec, Rng& rng, Field field,
                                                  std::size_t& redraws) {
  for (std::size_t attempt = 0; attempt <= spec.max_redraws; ++attempt) {
    FiniteScheme xq = gen_scheme(spec, rng, redraws);
    if (field.is_rational()) return {xq, xq};
    try {
      FiniteScheme xf = xq.in_field(field);
      GeneratorSpec check = spec;
      if (meets_spec(check, xf)) return {std::move(xq), std::move(xf)};
    } catch (const InvalidInput&) {
      // supports collide or a denominator vanishes mod p
    }
    ++redraws;
  }
  throw RedrawsExhausted("no draw survives reduction mod " + std::to_string(field.characteristic()));
}

}  // namespace suites

}  // namespace reglab
