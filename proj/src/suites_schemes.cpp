#include <algorithm>

#include "reglab/error.hpp"
#include "reglab/normality.hpp"
#include "suites.hpp"

namespace reglab::suites {

namespace {

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Json with_field(const FiniteScheme& xq, const SuiteOptions& opt) {
  Json j = scheme_to_json(xq);
  j["field"] = field_to_json(opt.field);
  return j;
}

std::string list(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

Matrix reduce(const Matrix& g, Field f) {
  if (f.is_rational()) return g;
  Matrix out(g.rows(), g.cols(), f);
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) out(i, j) = g(i, j).in_field(f);
  return out;
}

}  // namespace

void crosscheck(TrialOutcome& out, std::size_t index, const FiniteScheme& xq, const FiniteScheme& xf) {
  if (xf.field().is_rational() || index % 100 != 0) return;
  const unsigned top = static_cast<unsigned>(xq.degree());
  out.fp_checked = true;
  out.fp_agreed = hilbert_function_values(xq, top) == hilbert_function_values(xf, top);
}

TrialOutcome prop1_2(Rng& rng, std::size_t index, const SuiteOptions& opt) {
  TrialOutcome out;
  GeneratorSpec spec;
  spec.ambient = static_cast<std::size_t>(draw(rng, 1, 5));
  spec.degree = static_cast<std::size_t>(draw(rng, 1, 10));
  spec.max_germ_length = static_cast<std::size_t>(draw(rng, 1, 3));
  spec.cap = opt.cap;
  const bool plant = spec.ambient >= 2 && spec.degree >= 3 && draw(rng, 0, 1) == 1;
  if (plant) {
    spec.collinear = static_cast<std::size_t>(draw(rng, 3, static_cast<long>(spec.degree)));
    spec.secant_through_germ = draw(rng, 0, 1) == 1;
  }
  out.bucket = plant ? "planted" : "unplanted";
  auto [xq, x] = draw_scheme(spec, rng, opt.field, out.redraws);
  out.input = with_field(xq, opt);
  crosscheck(out, index, xq, x);
  const unsigned d = static_cast<unsigned>(x.degree());
  const unsigned bound = normality_threshold_bound(x, opt.cap);
  for (unsigned k = bound; k + 1 <= d; ++k) {
    if (!is_k_normal(x, k)) {
      out.fail("not " + std::to_string(k) + "-normal although the bound is " + std::to_string(bound));
      break;
    }
  }
  return out;
}

TrialOutcome cor1_3a(Rng& rng, std::size_t index, const SuiteOptions& opt) {
  TrialOutcome out;
  const bool plant = index % 2 == 0;
  out.bucket = plant ? "planted" : "secant-free";
  GeneratorSpec spec;
  spec.ambient = static_cast<std::size_t>(draw(rng, 2, 4));
  const long n = static_cast<long>(spec.ambient);
  spec.degree = static_cast<std::size_t>(draw(rng, n + 2, std::min(10L, n + 6)));
  spec.max_germ_length = static_cast<std::size_t>(draw(rng, 1, 2));
  spec.nondegenerate = true;
  spec.cap = opt.cap;
  const std::size_t secant = spec.degree - spec.ambient + 1;
  out.bucket += " d-N=" + std::to_string(spec.degree - spec.ambient);
  if (plant) {
    spec.collinear = secant;
    spec.secant_through_germ = draw(rng, 0, 1) == 1;
  }
  for (std::size_t attempt = 0;; ++attempt) {
    if (attempt > spec.max_redraws) throw RedrawsExhausted("no secant-free draw found");
    auto [xq, x] = draw_scheme(spec, rng, opt.field, out.redraws);
    if (!plant && max_collinear_length(x).length >= secant) {
      ++out.redraws;
      continue;
    }
    out.input = with_field(xq, opt);
    crosscheck(out, index, xq, x);
    const auto v = check_cor13a(x);
    if (v.has_secant != plant) out.fail("secant verdict disagrees with the construction");
    if (!v.equivalence_holds) {
      out.fail(std::string("normal(d-N)=") + (v.is_dN_normal ? "yes" : "no") +
               " normal(d-N-1)=" + (v.is_dN1_normal ? "yes" : "no") +
               " secant=" + (v.has_secant ? "yes" : "no"));
    }
    return out;
  }
}

TrialOutcome cor1_3b(Rng& rng, std::size_t index, const SuiteOptions& opt) {
  TrialOutcome out;
  GeneratorSpec spec;
  spec.ambient = static_cast<std::size_t>(draw(rng, 2, 4));
  const long n = static_cast<long>(spec.ambient);
  spec.degree = static_cast<std::size_t>(draw(rng, n + 1, 10));
  spec.max_germ_length = static_cast<std::size_t>(draw(rng, 1, 2));
  spec.general_position = true;
  spec.cap = opt.cap;
  out.bucket = "N=" + std::to_string(n);
  auto [xq, x] = draw_scheme(spec, rng, opt.field, out.redraws);
  out.input = with_field(xq, opt);
  crosscheck(out, index, xq, x);
  const long d = static_cast<long>(x.degree());
  const long from = (d - 1 + n - 1) / n;
  for (long k = from; k < d; ++k) {
    if (!is_k_normal(x, static_cast<unsigned>(k))) {
      out.fail("general-position scheme not " + std::to_string(k) + "-normal");
      break;
    }
  }
  return out;
}

TrialOutcome invariance(Rng& rng, std::size_t index, const SuiteOptions& opt) {
  TrialOutcome out;
  GeneratorSpec spec;
  spec.ambient = static_cast<std::size_t>(draw(rng, 1, 4));
  spec.degree = static_cast<std::size_t>(draw(rng, 1, 8));
  spec.max_germ_length = static_cast<std::size_t>(draw(rng, 1, 3));
  spec.cap = opt.cap;
  if (spec.ambient >= 2 && spec.degree >= 3 && draw(rng, 0, 1) == 1) {
    spec.collinear = static_cast<std::size_t>(draw(rng, 3, static_cast<long>(spec.degree)));
  }
  auto [xq, x] = draw_scheme(spec, rng, opt.field, out.redraws);
  crosscheck(out, index, xq, x);
  const std::size_t m = spec.ambient + 1;
  Matrix g(m, m, Field::rationals());
  for (;;) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) g(i, j) = Scalar(draw(rng, -3, 3));
    if (rank(g) == m && rank(reduce(g, opt.field)) == m) break;
    ++out.redraws;
  }
  out.input = with_field(xq, opt);
  Json rows = Json::array();
  for (std::size_t i = 0; i < m; ++i) {
    Vector r(g.row(i).begin(), g.row(i).end());
    rows.push_back(vector_to_json(r));
  }
  out.input["transform"] = rows;
  const FiniteScheme y = x.transformed(reduce(g, opt.field));
  const unsigned top = static_cast<unsigned>(x.degree());
  const auto phi_x = hilbert_function_values(x, top), phi_y = hilbert_function_values(y, top);
  if (phi_x != phi_y) out.fail("Hilbert functions differ: " + list(phi_x) + " vs " + list(phi_y));
  if (finite_scheme_regularity(x) != finite_scheme_regularity(y)) out.fail("regularity differs");
  if (invariant_t(x, opt.cap) != invariant_t(y, opt.cap)) out.fail("invariant t differs");
  if (max_collinear_length(x).length != max_collinear_length(y).length) out.fail("max collinear length differs");
  out.bucket = x.is_reduced() ? "reduced" : "nonreduced";
  return out;
}

TrialOutcome hilbert_shape(Rng& rng, std::size_t index, const SuiteOptions& opt) {
  TrialOutcome out;
  GeneratorSpec spec;
  spec.ambient = static_cast<std::size_t>(draw(rng, 1, 5));
  spec.degree = static_cast<std::size_t>(draw(rng, 1, 10));
  spec.max_germ_length = static_cast<std::size_t>(draw(rng, 1, 4));
  spec.cap = opt.cap;
  auto [xq, x] = draw_scheme(spec, rng, opt.field, out.redraws);
  out.input = with_field(xq, opt);
  crosscheck(out, index, xq, x);
  out.bucket = x.is_reduced() ? "reduced" : "nonreduced";
  const std::size_t d = x.degree();
  const std::size_t n = x.ambient();
  std::vector<std::size_t> phi;
  for (unsigned k = 0; k <= d + 1; ++k) phi.push_back(hilbert_function(x, k));
  for (std::size_t k = 0; k < phi.size(); ++k) {
    if (phi[k] > std::min(binom(n + k, k), d)) out.fail("phi exceeds its ceiling: " + list(phi));
    if (k > 0 && phi[k] < phi[k - 1]) out.fail("phi decreases: " + list(phi));
    if (k > 0 && phi[k - 1] == d && phi[k] != d) out.fail("phi leaves d: " + list(phi));
  }
  if (phi[0] != 1) out.fail("phi(0) != 1");
  if (phi[d] != d) out.fail("phi(d) != d: " + list(phi));
  return out;
}

}  // namespace reglab::suites
