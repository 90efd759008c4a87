#include "reglab/normality.hpp"

#include <algorithm>
#include <string>

namespace reglab {

namespace {

// powers[i][e] = (coordinate series i)^e mod t^len, for e <= max_degree.
std::vector<std::vector<Series>> coordinate_powers(const CurvilinearGerm& g, unsigned max_degree) {
  const std::size_t len = g.length();
  const Field f = g.field();
  std::vector<std::vector<Series>> powers(g.coords().size());
  for (std::size_t i = 0; i < g.coords().size(); ++i) {
    Series one = zero_vector(len, f);
    one[0] = Scalar(1, f);
    powers[i].push_back(std::move(one));
    for (unsigned e = 1; e <= max_degree; ++e) {
      powers[i].push_back(series::multiply(powers[i].back(), g.coords()[i], len));
    }
  }
  return powers;
}

Series monomial_series(const std::vector<std::vector<Series>>& powers, const Exponents& e,
                       std::size_t len, Field f) {
  Series acc;
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (first) {
      acc = powers[i][e[i]];
      first = false;
    } else {
      acc = series::multiply(acc, powers[i][e[i]], len);
    }
  }
  if (first) {
    acc = zero_vector(len, f);
    acc[0] = Scalar(1, f);
  }
  return acc;
}

Series form_series(const std::vector<std::vector<Series>>& powers, const Form& form,
                   std::size_t len, Field f) {
  Series acc = zero_vector(len, f);
  for (const auto& [e, c] : form.terms()) {
    const Series m = monomial_series(powers, e, len, f);
    for (std::size_t k = 0; k < len; ++k)
      if (!m[k].is_zero()) acc[k] += c * m[k];
  }
  return acc;
}

}  // namespace

Vector evaluate_form_on_germ(const Form& f, const CurvilinearGerm& g) {
  if (f.nvars() != g.ambient() + 1) throw InvalidInput("form and germ live in different spaces");
  return form_series(coordinate_powers(g, f.degree()), f, g.length(), g.field());
}

Matrix evaluation_matrix(const FiniteScheme& x, unsigned k) {
  const auto monos = monomials(x.ambient() + 1, k);
  const Field f = x.field();
  Matrix m(x.degree(), monos.size(), f);
  std::size_t row = 0;
  for (const auto& g : x.germs()) {
    const auto powers = coordinate_powers(g, k);
    for (std::size_t c = 0; c < monos.size(); ++c) {
      const Series s = monomial_series(powers, monos[c], g.length(), f);
      for (std::size_t j = 0; j < g.length(); ++j) m(row + j, c) = s[j];
    }
    row += g.length();
  }
  return m;
}

Matrix evaluation_matrix(const FiniteScheme& x, std::span<const Form> forms) {
  const Field f = x.field();
  Matrix m(x.degree(), forms.size(), f);
  unsigned max_degree = 0;
  for (const auto& form : forms) {
    if (form.nvars() != x.ambient() + 1) throw InvalidInput("form and scheme live in different spaces");
    max_degree = std::max(max_degree, form.degree());
  }
  std::size_t row = 0;
  for (const auto& g : x.germs()) {
    const auto powers = coordinate_powers(g, max_degree);
    for (std::size_t c = 0; c < forms.size(); ++c) {
      const Series s = form_series(powers, forms[c], g.length(), f);
      for (std::size_t j = 0; j < g.length(); ++j) m(row + j, c) = s[j];
    }
    row += g.length();
  }
  return m;
}

std::size_t hilbert_function(const FiniteScheme& x, unsigned k) {
  return rank(evaluation_matrix(x, k));
}

std::vector<std::size_t> hilbert_function_values(const FiniteScheme& x, unsigned max_degree) {
  std::vector<std::size_t> out;
  const std::size_t d = x.degree();
  for (unsigned k = 0; k <= max_degree; ++k) {
    // phi stays at d once reached.
    if (!out.empty() && out.back() == d) {
      out.push_back(d);
    } else {
      out.push_back(hilbert_function(x, k));
    }
  }
  return out;
}

bool is_k_normal(const FiniteScheme& x, unsigned k) { return hilbert_function(x, k) == x.degree(); }

unsigned finite_scheme_regularity(const FiniteScheme& x) {
  const std::size_t d = x.degree();
  // phi(d-1) = d for any length-d scheme, so the loop terminates by then.
  for (unsigned k = 0; k + 1 < d; ++k) {
    if (is_k_normal(x, k)) return k + 1;
  }
  return static_cast<unsigned>(std::max<std::size_t>(d, 1));
}

unsigned normality_threshold_bound(const FiniteScheme& x, std::size_t cap) {
  const long d = static_cast<long>(x.degree());
  const long n = span_dim(x);
  const long t = static_cast<long>(invariant_t(x, cap));
  const long num = d - n - 1;
  const long ceil = num <= 0 ? 0 : (num + t - 1) / t;
  return static_cast<unsigned>(std::max(1L, ceil + 1));
}

Cor13aVerdict check_cor13a(const FiniteScheme& x) {
  const long n = span_dim(x);
  if (n != static_cast<long>(x.ambient())) {
    throw InvalidInput("scheme spans P^" + std::to_string(n) + " inside P^" +
                       std::to_string(x.ambient()) + "; restrict to its span first");
  }
  Cor13aVerdict v;
  v.span = static_cast<std::size_t>(n);
  v.degree = x.degree();
  const long d = static_cast<long>(v.degree);
  v.is_dN_normal = is_k_normal(x, static_cast<unsigned>(d - n));
  // (d-N-1) >= 0 always since d >= N+1.
  v.is_dN1_normal = is_k_normal(x, static_cast<unsigned>(d - n - 1));
  v.has_secant = max_collinear_length(x).length >= static_cast<std::size_t>(d - n + 1);
  v.equivalence_holds = (v.is_dN_normal && !v.is_dN1_normal) == v.has_secant;
  return v;
}

}  // namespace reglab
