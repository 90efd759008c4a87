#include "reglab/projection.hpp"

#include <algorithm>
#include <string>

#include "reglab/error.hpp"
#include "reglab/normality.hpp"

namespace reglab {

namespace {

const Field kQ = Field::rationals();

// Dehomogenised t/s polynomial of a binary form, and its degree deficit.
UPoly affine_part(const Vector& form) {
  std::vector<mpq_class> c;
  for (const auto& x : form) {
    if (!x.field().is_rational()) throw InvalidInput("curve computations need rational coefficients");
    c.push_back(x.rational());
  }
  return UPoly(std::move(c));
}

std::size_t deficit(const Vector& form, const UPoly& p) {
  return form.size() - 1 - static_cast<std::size_t>(p.degree());
}

BinaryRoots roots_of(const UPoly& g, std::size_t at_infinity) {
  BinaryRoots out;
  if (at_infinity > 0) out.rational.push_back({Vector{Scalar(0, kQ), Scalar(1, kQ)}, at_infinity});
  if (g.degree() <= 0) return out;
  const auto factors = square_free_decomposition(g);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& f = factors[i];
    if (f.degree() <= 0) continue;
    const auto rs = rational_roots(f);
    for (const auto& r : rs) out.rational.push_back({Vector{Scalar(1, kQ), Scalar(r, kQ)}, i + 1});
    const auto rest = static_cast<std::size_t>(f.degree()) - rs.size();
    if (rest > 0) out.irrational.push_back({rest, i + 1});
  }
  return out;
}

BinaryRoots common_roots(const std::vector<Vector>& forms) {
  UPoly g;
  std::optional<std::size_t> inf;
  bool any = false;
  for (const auto& f : forms) {
    const UPoly p = affine_part(f);
    if (p.is_zero()) continue;
    any = true;
    g = gcd(g, p);
    const auto def = deficit(f, p);
    inf = inf ? std::min(*inf, def) : def;
  }
  if (!any) throw InvalidInput("common roots of zero forms");
  return roots_of(g, *inf);
}

Scalar eval_binary(const Vector& form, const Vector& param) {
  const std::size_t d = form.size() - 1;
  Scalar acc(0, kQ);
  for (std::size_t j = 0; j <= d; ++j) {
    Scalar term = form[j];
    for (std::size_t k = 0; k < d - j; ++k) term *= param[0];
    for (std::size_t k = 0; k < j; ++k) term *= param[1];
    acc += term;
  }
  return acc;
}

std::vector<Vector> compose_all(const RationalCurve& c, const std::vector<Vector>& linears) {
  std::vector<Vector> out;
  for (const auto& l : linears) out.push_back(c.compose(l));
  return out;
}

// Germ of C at a parameter of the given multiplicity.
CurvilinearGerm germ_at(const RationalCurve& c, const Vector& param, std::size_t len) {
  const unsigned d = c.degree();
  std::vector<Series> coords;
  for (const auto& f : c.forms()) {
    Series s = zero_vector(len, kQ);
    if (param[0].is_zero()) {
      for (std::size_t k = 0; k < len && k <= d; ++k) s[k] = f[d - k];
    } else {
      const UPoly shifted = affine_part(f).shifted(param[1].rational());
      for (std::size_t k = 0; k < len; ++k) s[k] = Scalar(shifted.coeff(k), kQ);
    }
    coords.push_back(std::move(s));
  }
  return CurvilinearGerm::from_homogeneous(coords, len);
}

unsigned line_prediction(const FiberProfile& p) { return static_cast<unsigned>(p.total - 1); }

}  // namespace

std::vector<Fiber> project_scheme(const FiniteScheme& x, const LinearSubspace& center) {
  if (center.ambient() != x.ambient()) throw InvalidInput("center and scheme live in different spaces");
  if (center.forms().empty()) throw InvalidInput("projection from the whole space");
  std::vector<Fiber> out;
  const auto& germs = x.germs();
  for (std::size_t i = 0; i < germs.size(); ++i) {
    Vector img;
    for (const auto& l : center.forms()) img.push_back(dot(l, germs[i].support().coords()));
    if (is_zero_vector(img)) {
      throw CenterMeetsScheme("center contains support point " + std::to_string(i + 1));
    }
    ProjPoint p(img);
    auto it = std::find_if(out.begin(), out.end(), [&](const Fiber& f) { return f.image == p; });
    if (it == out.end()) {
      out.push_back({p, SubschemeSelector{std::vector<std::size_t>(germs.size(), 0)}, 0});
      it = std::prev(out.end());
    }
    it->selector.lengths[i] = germs[i].length();
    it->length += germs[i].length();
  }
  return out;
}

std::map<std::size_t, std::size_t> yk_counts(const std::vector<Fiber>& fibers) {
  std::map<std::size_t, std::size_t> out;
  std::size_t longest = 0;
  for (const auto& f : fibers) longest = std::max(longest, f.length);
  for (std::size_t k = 1; k <= longest; ++k) {
    out[k] = static_cast<std::size_t>(
        std::count_if(fibers.begin(), fibers.end(), [&](const Fiber& f) { return f.length >= k; }));
  }
  return out;
}

MatherCheck mather_inequality(const FiberProfile& f, unsigned n) {
  MatherCheck m;
  for (std::size_t i = 0; i < f.deltas.size(); ++i) m.sum += f.deltas[i] + f.gammas[i];
  m.holds = m.sum <= n + 1;
  return m;
}

unsigned minimal_normality_degree(const FiniteScheme& x) { return finite_scheme_regularity(x) - 1; }

FiberProfile classify_fiber(const FiniteScheme& fiber, unsigned n) {
  FiberProfile p;
  for (const auto& g : fiber.germs()) {
    p.deltas.push_back(g.length());
    p.gammas.push_back(g.length() - 1);
  }
  p.total = fiber.degree();
  p.support = fiber.germs().size();
  p.span = span_dim(fiber);
  p.max_collinear = max_collinear_length(fiber).length;

  auto set = [&](std::string label, unsigned k, bool exact) {
    p.label = std::move(label);
    p.predicted = k;
    p.prediction_exact = exact;
  };

  if (!mather_inequality(p, n).holds) {
    p.label = "impossible";
    return p;
  }
  const bool planar_case = n == 5 || n == 6;
  if (!planar_case || p.total < 5) {
    set(planar_case ? "below" : "generic", normality_threshold_bound(fiber), false);
    return p;
  }
  if (p.span > 2) {
    // Fibers of a projection from a line lie in a plane.
    set("nonplanar", normality_threshold_bound(fiber), false);
    return p;
  }
  const bool reduced = fiber.is_reduced();

  if (n == 5) {
    if (p.total == 5 && reduced) {
      if (p.span == 1) set("1.i", 4, true);
      else if (p.max_collinear >= 4) set("1.ii", 3, true);
      else set("1.iii", 2, true);
    } else if (p.total == 5) {
      // Mather leaves support 4 with one double point.
      if (p.span == 1) set("2.i", 4, true);
      else set("2.ii", p.max_collinear >= 4 ? 3 : 2, true);
    } else {
      // total 6, reduced by Mather: separated in degree 5
      set("y6", 5, p.span == 1);
    }
    return p;
  }

  // n == 6
  if (p.span == 1) {
    set("line", line_prediction(p), true);
  } else if (p.total == 5) {
    set("5.plane", p.max_collinear >= 4 ? 3 : 2, true);
  } else if (p.total == 6 && !reduced) {
    if (p.max_collinear >= 5) set("6.secant5", 4, true);
    else set("6.double", 3, false);
  } else {
    set("reduced", 6, false);
  }
  return p;
}

RationalCurve::RationalCurve(std::size_t ambient, unsigned degree, std::vector<Vector> forms)
    : ambient_(ambient), degree_(degree), forms_(std::move(forms)) {
  if (degree_ == 0) throw InvalidInput("curve degree must be positive");
  if (forms_.size() != ambient_ + 1) {
    throw InvalidInput("curve in P^" + std::to_string(ambient_) + " needs " +
                       std::to_string(ambient_ + 1) + " forms");
  }
  for (const auto& f : forms_) {
    if (f.size() != degree_ + 1) throw InvalidInput("curve form has the wrong number of coefficients");
    for (const auto& x : f)
      if (!x.field().is_rational()) throw InvalidInput("curves are defined over Q only");
  }
  bool all_zero = true;
  for (const auto& f : forms_) all_zero = all_zero && is_zero_vector(f);
  if (all_zero) throw InvalidInput("curve forms are all zero");
  if (common_roots(forms_).total() > 0) throw InvalidInput("curve forms share a common factor");
}

Vector RationalCurve::compose(const Vector& linear) const {
  if (linear.size() != ambient_ + 1) throw InvalidInput("linear form has the wrong length");
  Vector out = zero_vector(degree_ + 1, kQ);
  for (std::size_t i = 0; i <= ambient_; ++i) {
    if (linear[i].is_zero()) continue;
    for (std::size_t j = 0; j <= degree_; ++j) out[j] += linear[i] * forms_[i][j];
  }
  return out;
}

Vector RationalCurve::point(const Vector& param) const {
  Vector out;
  for (const auto& f : forms_) out.push_back(eval_binary(f, param));
  return out;
}

std::size_t BinaryRoots::total() const {
  std::size_t t = 0;
  for (const auto& [p, m] : rational) t += m;
  for (const auto& [deg, m] : irrational) t += deg * m;
  return t;
}

BinaryRoots binary_roots(const Vector& form) {
  if (is_zero_vector(form)) throw InvalidInput("roots of the zero form");
  return common_roots({form});
}

std::size_t common_root_length(const std::vector<Vector>& forms) { return common_roots(forms).total(); }

CurveFiber curve_fiber_scheme(const RationalCurve& c, const LinearSubspace& center, const Vector& y) {
  if (center.ambient() != c.ambient() || center.forms().size() != 2) {
    throw InvalidInput("curve fibers need a center of codimension 2 in P^" + std::to_string(c.ambient()));
  }
  if (y.size() != 2 || is_zero_vector(y)) throw InvalidInput("fiber point must be a point of P^1");
  const auto ab = compose_all(c, center.forms());
  if (common_root_length(ab) > 0) throw CenterMeetsCurve("projection center meets the curve");
  Vector g = zero_vector(c.degree() + 1, kQ);
  for (std::size_t j = 0; j <= c.degree(); ++j) g[j] = y[1] * ab[0][j] - y[0] * ab[1][j];
  const auto roots = binary_roots(g);
  CurveFiber out;
  out.total = roots.total();
  out.irrational = roots.irrational;
  std::vector<CurvilinearGerm> germs;
  for (const auto& [param, m] : roots.rational) germs.push_back(germ_at(c, param, m));
  if (!germs.empty()) out.scheme = FiniteScheme(c.ambient(), std::move(germs));
  return out;
}

std::size_t curve_linear_section_length(const RationalCurve& c, const LinearSubspace& l) {
  if (l.ambient() != c.ambient()) throw InvalidInput("subspace and curve live in different spaces");
  const auto composed = compose_all(c, l.forms());
  bool all_zero = true;
  for (const auto& f : composed) all_zero = all_zero && is_zero_vector(f);
  if (all_zero) throw CurveInSubspace("curve lies in the linear subspace");
  return common_root_length(composed);
}

PlaneFiber curve_plane_fiber(const RationalCurve& c, const LinearSubspace& center, const Vector& param) {
  if (center.ambient() != c.ambient() || center.forms().size() != 3) {
    throw InvalidInput("plane projection needs a center of codimension 3 in P^" + std::to_string(c.ambient()));
  }
  const auto a = compose_all(c, center.forms());
  if (common_root_length(a) > 0) throw CenterMeetsCurve("projection center meets the curve");
  Vector y;
  for (const auto& f : a) y.push_back(eval_binary(f, param));
  std::vector<Vector> minors;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      Vector m = zero_vector(c.degree() + 1, kQ);
      for (std::size_t k = 0; k <= c.degree(); ++k) m[k] = y[i] * a[j][k] - y[j] * a[i][k];
      minors.push_back(std::move(m));
    }
  bool all_zero = true;
  for (const auto& m : minors) all_zero = all_zero && is_zero_vector(m);
  if (all_zero) throw InvalidInput("the curve projects to a point");
  const auto roots = common_roots(minors);
  PlaneFiber out;
  out.total = roots.total();
  for (const auto& [p, m] : roots.rational) out.mather.sum += 2 * m - 1;
  for (const auto& [deg, m] : roots.irrational) out.mather.sum += deg * (2 * m - 1);
  out.mather.holds = out.mather.sum <= 2;
  return out;
}

std::size_t schubert_codim(std::size_t t, std::size_t n_ambient, std::size_t k, std::size_t n) {
  const long v = static_cast<long>(t) *
                 (static_cast<long>(n_ambient) - static_cast<long>(k) - static_cast<long>(n) + static_cast<long>(t));
  if (v < 0) throw InvalidInput("Schubert condition out of range");
  return static_cast<std::size_t>(v);
}

std::size_t x_q_codim(std::size_t q) { return q * (q + 1); }

std::size_t secant_locus_dim_bound(std::size_t n, std::size_t k) {
  if (k < 1 || k > n + 1) throw InvalidInput("secant locus bound needs 1 <= k <= n+1");
  return n + 1 + k;
}

}  // namespace reglab
