#include <set>

#include "reglab/error.hpp"
#include "reglab/normality.hpp"
#include "reglab/projection.hpp"
#include "reglab/separation.hpp"
#include "suites.hpp"

namespace reglab::suites {

namespace {

const Field kQ = Field::rationals();

// Fiber planes use coordinates (U, T1, T2); every point has U = 1 and the
// planted line is T2 = m T1 + c U with m != 0.
class FiberBuilder {
 public:
  explicit FiberBuilder(Rng& rng) : rng_(rng) {
    m_ = draw(rng_, 1, 3) * (draw(rng_, 0, 1) ? 1 : -1);
    c_ = draw(rng_, -5, 5);
  }

  void aligned(std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      const long s = fresh_x();
      add({s, m_ * s + c_}, {}, 1);
    }
  }
  void aligned_double() {
    const long s = fresh_x();
    add({s, m_ * s + c_}, {1, m_}, 2);
  }
  void off(std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) add(off_point(), {}, 1);
  }
  void off_double() {
    for (;;) {
      const long dx = draw(rng_, -4, 4), dy = draw(rng_, -4, 4);
      if (dy != m_ * dx) return add(off_point(), {dx, dy}, 2);
    }
  }
  FiniteScheme build() const { return FiniteScheme(2, germs_); }
  std::size_t degree() const {
    std::size_t d = 0;
    for (const auto& g : germs_) d += g.length();
    return d;
  }

 private:
  long fresh_x() {
    for (;;) {
      const long s = draw(rng_, -10, 10);
      if (xs_.insert(s).second) return s;
    }
  }
  std::pair<long, long> off_point() {
    for (;;) {
      const long x = draw(rng_, -10, 10), y = draw(rng_, -10, 10);
      if (y != m_ * x + c_) return {x, y};
    }
  }
  void add(std::pair<long, long> p, std::pair<long, long> v, std::size_t len) {
    const ProjPoint support(Vector{Scalar(1), Scalar(p.first), Scalar(p.second)});
    if (len == 1) {
      germs_.push_back(CurvilinearGerm::reduced(support));
    } else {
      germs_.push_back(CurvilinearGerm::from_jet(
          support, 0, {Series{Scalar(p.first), Scalar(v.first)}, Series{Scalar(p.second), Scalar(v.second)}}));
    }
  }

  Rng& rng_;
  long m_ = 1, c_ = 0;
  std::set<long> xs_;
  std::vector<CurvilinearGerm> germs_;
};

// Lines carrying length >= 3 must meet U = 0 where T1 and T2 are nonzero.
bool admissible_fiber(const FiniteScheme& x) {
  const auto& g = x.germs();
  auto bad_line = [&](const Vector& p, const Vector& q) {
    const auto l = LinearSubspace::spanned_by({p, q}, 2, kQ);
    if (l.dim() != 1 || contact_length(x, l) < 3) return false;
    // the line's point on U = 0
    Vector at_infinity{Scalar(0), q[1] * p[0] - p[1] * q[0], q[2] * p[0] - p[2] * q[0]};
    return at_infinity[1].is_zero() || at_infinity[2].is_zero();
  };
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].support()[0].is_zero()) return false;
    if (g[i].length() >= 2) {
      const Vector p = g[i].coefficient(0), v = g[i].coefficient(1);
      Vector q(3, Scalar(0));
      for (std::size_t k = 0; k < 3; ++k) q[k] = p[k] + v[k];
      if (bad_line(p, q)) return false;
    }
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (bad_line(g[i].support().coords(), g[j].support().coords())) return false;
  }
  return true;
}

void build_fiber(FiberBuilder& b, unsigned n, const std::string& label, Rng& rng) {
  const long coin = draw(rng, 0, 2);
  if (n == 5) {
    if (label == "1.i") return b.aligned(5);
    if (label == "1.ii") return b.aligned(4), b.off(1);
    if (label == "1.iii") return coin ? (b.aligned(3), b.off(2)) : b.off(5);
    if (label == "2.i") return b.aligned_double(), b.aligned(3);
    if (label == "2.ii") {
      if (coin == 0) return b.aligned_double(), b.aligned(2), b.off(1);
      if (coin == 1) return b.off_double(), b.aligned(3);
      return b.off_double(), b.off(3);
    }
    if (label == "y6") {
      if (coin == 0) return b.aligned(6);
      if (coin == 1) return b.aligned(5), b.off(1);
      return b.aligned(static_cast<std::size_t>(draw(rng, 2, 4))), b.off(6 - b.degree());
    }
  } else {
    if (label == "line") {
      const auto d = static_cast<std::size_t>(draw(rng, 5, 7));
      if (d <= 6 && coin) return b.aligned_double(), b.aligned(d - 2);
      return b.aligned(d);
    }
    if (label == "5.plane") {
      if (coin == 0) return b.aligned(4), b.off(1);
      if (coin == 1) return b.aligned_double(), b.aligned(static_cast<std::size_t>(draw(rng, 1, 2))),
                            b.off(5 - b.degree());
      return b.off_double(), b.off(3);
    }
    if (label == "6.secant5") return b.aligned_double(), b.aligned(3), b.off(1);
    if (label == "6.double") {
      if (coin == 0) return b.aligned_double(), b.aligned(2), b.off(2);
      if (coin == 1) return b.off_double(), b.aligned(3), b.off(1);
      return b.off_double(), b.off(4);
    }
    if (label == "reduced") {
      const auto d = static_cast<std::size_t>(draw(rng, 6, 7));
      const auto on = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(d) - 1));
      return b.aligned(on), b.off(d - on);
    }
  }
  throw InvalidInput("unknown fiber type " + label);
}

// The quadric-case recipes: V_1 = V, V_2 = S^2(V), V_j = {T1^j} for
// 3 <= j <= n.
FormSpaceRecipe quadric_recipe(unsigned n) {
  FormSpaceRecipe r;
  r.t_count = 2;
  r.standard = true;
  for (unsigned j = 3; j <= n; ++j) r.spaces[j] = {Form::monomial({j, 0})};
  return r;
}

}  // namespace

const std::vector<std::pair<unsigned, std::string>>& fiber_types() {
  static const std::vector<std::pair<unsigned, std::string>> types = {
      {5, "1.i"},  {5, "1.ii"},    {5, "1.iii"},   {5, "2.i"},       {5, "2.ii"},     {5, "y6"},
      {6, "line"}, {6, "5.plane"}, {6, "6.secant5"}, {6, "6.double"}, {6, "reduced"},
  };
  return types;
}

TrialOutcome lemma2_6(Rng& rng, std::size_t index, const SuiteOptions&) {
  TrialOutcome out;
  SeparatorConfig cfg;
  cfg.n = static_cast<unsigned>(3 + (index % 8) / 2);
  cfg.which = 1 + static_cast<int>(index % 2);
  out.bucket = "n=" + std::to_string(cfg.n) + " case " + std::to_string(cfg.which);
  const std::size_t aligned = cfg.which == 1 ? cfg.n + 1 : cfg.n;
  const std::size_t off = cfg.n + 3 - aligned;
  auto nonzero = [&] {
    for (;;)
      if (const long v = draw(rng, -10, 10); v != 0) return v;
  };
  for (;;) {
    cfg.a = Scalar(nonzero());
    cfg.b = Scalar(nonzero());
    std::set<long> us;
    cfg.u.clear();
    while (cfg.u.size() < aligned) {
      const long u = nonzero();
      if (us.insert(u).second) cfg.u.emplace_back(u);
    }
    cfg.off_line.clear();
    while (cfg.off_line.size() < off)
      cfg.off_line.push_back(Vector{Scalar(nonzero()), Scalar(draw(rng, -10, 10)), Scalar(draw(rng, -10, 10))});
    try {
      cfg.validate();
      break;
    } catch (const InvalidInput&) {
      ++out.redraws;
    }
  }
  out.input = separator_to_json(cfg);
  std::vector<Form> forms;
  try {
    forms = lemma26_separators(cfg);
  } catch (const DegenerateConfiguration& e) {
    out.fail(std::string("solver failed: ") + e.what());
    return out;
  }
  const auto allowed = separating_monomials(cfg.n);
  const std::set<Exponents> allowed_set(allowed.begin(), allowed.end());
  const auto pts = cfg.points();
  if (forms.size() != pts.size()) out.fail("wrong number of separators");
  for (std::size_t i = 0; i < forms.size() && i < pts.size(); ++i) {
    for (const auto& [e, c] : forms[i].terms())
      if (!allowed_set.count(e)) out.fail("separator uses a monomial outside the allowed list");
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const Scalar v = forms[i].evaluate(pts[j]);
      if (v != Scalar(i == j ? 1 : 0)) out.fail("separator " + std::to_string(i) + " is wrong at point " + std::to_string(j));
    }
  }
  if (separating_rank(cfg) != cfg.n + 3) out.fail("evaluation rank below n+3");
  return out;
}

TrialOutcome fiber_cases(Rng& rng, std::size_t index, const SuiteOptions&) {
  TrialOutcome out;
  const auto& [n, label] = fiber_types()[index % fiber_types().size()];
  out.bucket = "n=" + std::to_string(n) + " " + label;
  for (std::size_t attempt = 0;; ++attempt) {
    if (attempt > 500) throw RedrawsExhausted("no fiber of type " + label);
    FiberBuilder b(rng);
    std::optional<FiniteScheme> x;
    try {
      build_fiber(b, n, label, rng);
      x = b.build();
    } catch (const InvalidInput&) {
      ++out.redraws;
      continue;
    }
    const auto prof = classify_fiber(*x, n);
    if (prof.label != label || !admissible_fiber(*x)) {
      ++out.redraws;
      continue;
    }
    out.input = scheme_to_json(*x);
    out.input["n"] = n;
    out.input["label"] = label;
    if (!prof.predicted) {
      out.fail("no prediction for an admissible fiber");
      return out;
    }
    const unsigned k = *prof.predicted;
    const unsigned actual = minimal_normality_degree(*x);
    if (prof.prediction_exact ? actual != k : actual > k) {
      out.fail("predicted " + std::to_string(k) + ", minimal normality degree " + std::to_string(actual));
    }
    if (!recipe_separates(*x, quadric_recipe(n), k, Vector{Scalar(1), Scalar(0), Scalar(0)})) {
      out.fail("recipe does not separate at degree " + std::to_string(k));
    }
    return out;
  }
}

}  // namespace reglab::suites
