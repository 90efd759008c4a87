#include "reglab/separation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "reglab/error.hpp"
#include "reglab/normality.hpp"

namespace reglab {

namespace {

Exponents exps(unsigned u, unsigned t1, unsigned t2) { return {u, t1, t2}; }

std::vector<Vector> default_t_forms(std::size_t m, Field field) {
  std::vector<Vector> out;
  for (std::size_t i = 1; i <= m; ++i) {
    Vector v = zero_vector(m + 1, field);
    v[i] = Scalar(1, field);
    out.push_back(std::move(v));
  }
  return out;
}

Matrix monomial_values(const std::vector<Exponents>& monos, const std::vector<Vector>& pts,
                       Field field) {
  Matrix m(pts.size(), monos.size(), field);
  for (std::size_t r = 0; r < pts.size(); ++r)
    for (std::size_t c = 0; c < monos.size(); ++c)
      m(r, c) = Form::monomial(monos[c], field).evaluate(pts[r]);
  return m;
}

Form combine(const std::vector<Exponents>& monos, const Vector& coeffs, Field field) {
  Form f(3, std::accumulate(monos.front().begin(), monos.front().end(), 0U), field);
  for (std::size_t i = 0; i < monos.size(); ++i) f.add_term(monos[i], coeffs[i]);
  return f;
}

// Vector in the affine solution set whose value against `row` is nonzero.
std::optional<Vector> pick_nonvanishing(const AffineSolution& sol, const Vector& row) {
  if (!dot(row, sol.particular).is_zero()) return sol.particular;
  for (const auto& k : sol.kernel) {
    if (!dot(row, k).is_zero()) {
      Vector v = sol.particular;
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += k[i];
      return v;
    }
  }
  return std::nullopt;
}

Vector normalised(Vector v, const Vector& row) {
  const Scalar s = Scalar(1, row.front().field()) / dot(row, v);
  for (auto& x : v) x *= s;
  return v;
}

}  // namespace

std::vector<Form> FormSpaceRecipe::space(unsigned j, Field field) const {
  std::vector<Form> out;
  if (j == 0) {
    out.push_back(Form::constant(t_count, Scalar(1, field)));
    return out;
  }
  if (standard && (j == 1 || j == 2)) {
    for (const auto& e : monomials(t_count, j)) out.push_back(Form::monomial(e, field));
  }
  if (auto it = spaces.find(j); it != spaces.end()) {
    for (const auto& f : it->second) {
      if (f.nvars() != t_count || f.degree() != j) {
        throw InvalidInput("recipe space V_" + std::to_string(j) + " holds a form of the wrong shape");
      }
      out.push_back(f);
    }
  }
  return out;
}

unsigned FormSpaceRecipe::max_degree() const {
  unsigned m = standard ? 2 : 0;
  for (const auto& [j, forms] : spaces)
    if (!forms.empty()) m = std::max(m, j);
  return m;
}

std::vector<Form> recipe_space(const FormSpaceRecipe& recipe, unsigned k, const Vector& u) {
  const std::size_t m = recipe.t_count;
  if (m == 0) throw InvalidInput("recipe needs at least one T variable");
  if (u.size() != m + 1) {
    throw InvalidInput("U has " + std::to_string(u.size()) + " coefficients, expected " +
                       std::to_string(m + 1));
  }
  const Field field = u.front().field();
  const auto t_forms = recipe.t_forms.empty() ? default_t_forms(m, field) : recipe.t_forms;
  if (t_forms.size() != m) throw InvalidInput("recipe lists the wrong number of T forms");
  std::vector<Vector> basis = t_forms;
  basis.push_back(u);
  for (const auto& v : basis)
    if (v.size() != m + 1) throw InvalidInput("T form has the wrong length");
  if (rank(Matrix::from_rows(basis, m + 1, field)) != m + 1) {
    throw InvalidInput("U lies in the span of the T forms");
  }

  const Form uf = Form::linear(u);
  std::vector<Form> out;
  for (unsigned j = 0; j <= k; ++j) {
    const Form upow = uf.pow(k - j);
    for (const auto& v : recipe.space(j, field)) out.push_back(upow * v.compose(t_forms));
  }
  return out;
}

bool recipe_separates(const FiniteScheme& x, const FormSpaceRecipe& recipe, unsigned k,
                      const Vector& u) {
  if (x.ambient() != recipe.t_count) {
    throw InvalidInput("scheme lives in P^" + std::to_string(x.ambient()) +
                       " but U and T give coordinates on P^" + std::to_string(recipe.t_count));
  }
  const auto forms = recipe_space(recipe, k, u);
  if (forms.empty()) return false;
  return rank(evaluation_matrix(x, forms)) == x.degree();
}

void SeparatorConfig::validate() const {
  if (n < 3) throw InvalidInput("separator configuration needs n >= 3");
  if (which != 1 && which != 2) throw InvalidInput("separator case must be 1 or 2");
  if (a.is_zero() || b.is_zero()) throw InvalidInput("a and b must be nonzero");
  const std::size_t aligned = which == 1 ? n + 1 : n;
  const std::size_t off = which == 1 ? 2 : 3;
  if (u.size() != aligned) {
    throw InvalidInput("expected " + std::to_string(aligned) + " aligned u values, got " +
                       std::to_string(u.size()));
  }
  if (off_line.size() != off) {
    throw InvalidInput("expected " + std::to_string(off) + " off-line points, got " +
                       std::to_string(off_line.size()));
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) throw InvalidInput("aligned u values must be nonzero");
    for (std::size_t j = 0; j < i; ++j)
      if (u[i] == u[j]) throw InvalidInput("aligned u values must be distinct");
  }
  for (const auto& p : off_line) {
    if (p.size() != 3) throw InvalidInput("off-line points need 3 coordinates");
    if ((a * p[2] - b * p[1]).is_zero()) throw InvalidInput("off-line point lies on the line");
  }
  // distinct projective points
  FiniteScheme check(2, [&] {
    std::vector<CurvilinearGerm> g;
    for (const auto& p : points()) g.push_back(CurvilinearGerm::reduced(ProjPoint(p)));
    return g;
  }());
}

std::vector<Vector> SeparatorConfig::points() const {
  std::vector<Vector> out;
  for (const auto& ui : u) out.push_back(Vector{ui, a, b});
  for (const auto& p : off_line) out.push_back(p);
  return out;
}

std::vector<Exponents> separating_monomials(unsigned n) {
  std::vector<Exponents> out;
  for (unsigned j = 0; j <= n; ++j) out.push_back(exps(n - j, j, 0));
  out.push_back(exps(n - 1, 0, 1));
  out.push_back(exps(n - 2, 0, 2));
  out.push_back(exps(n - 2, 1, 1));
  return out;
}

std::vector<Form> lemma26_separators(const SeparatorConfig& cfg) {
  cfg.validate();
  const Field field = cfg.a.field();
  const unsigned n = cfg.n;
  const auto monos = separating_monomials(n);
  const auto pts = cfg.points();
  const Matrix values = monomial_values(monos, pts, field);
  const std::size_t aligned = cfg.u.size();

  // Coefficient of U^{n-k} s^k of F(U, s a, s b): the restriction to the line.
  auto restriction_rows = [&] {
    std::vector<Vector> rows(n + 1, zero_vector(monos.size(), field));
    for (std::size_t c = 0; c < monos.size(); ++c) {
      const auto& e = monos[c];
      Scalar v(1, field);
      for (unsigned i = 0; i < e[1]; ++i) v *= cfg.a;
      for (unsigned i = 0; i < e[2]; ++i) v *= cfg.b;
      rows[e[1] + e[2]][c] = v;
    }
    return rows;
  };

  std::vector<Form> out;
  for (std::size_t target = 0; target < pts.size(); ++target) {
    const Vector target_row(values.row(target).begin(), values.row(target).end());
    std::vector<Vector> rows;
    Vector rhs;
    auto add = [&](Vector row, Scalar value) {
      rows.push_back(std::move(row));
      rhs.push_back(std::move(value));
    };
    bool pick_member = false;

    if (target >= aligned && cfg.which == 2) {
      // Monic family: restriction to the line equals prod (U - u_i s).
      Vector e = zero_vector(n + 1, field);  // coefficients of prod, by power of s
      e[0] = Scalar(1, field);
      for (const auto& ui : cfg.u)
        for (std::size_t k = n; k >= 1; --k) e[k] -= ui * e[k - 1];
      const auto lr = restriction_rows();
      for (unsigned k = 0; k <= n; ++k) add(lr[k], e[k]);
      for (std::size_t p = aligned; p < pts.size(); ++p)
        if (p != target) add(Vector(values.row(p).begin(), values.row(p).end()), Scalar(0, field));
      pick_member = true;
    } else if (target >= aligned) {
      // Restriction to the line vanishes identically.
      for (auto& r : restriction_rows()) add(std::move(r), Scalar(0, field));
      for (std::size_t p = aligned; p < pts.size(); ++p)
        if (p != target) add(Vector(values.row(p).begin(), values.row(p).end()), Scalar(0, field));
      add(target_row, Scalar(1, field));
    } else {
      for (std::size_t p = 0; p < pts.size(); ++p)
        if (p != target) add(Vector(values.row(p).begin(), values.row(p).end()), Scalar(0, field));
      add(target_row, Scalar(1, field));
    }

    const auto sol = solve_affine(Matrix::from_rows(rows, monos.size(), field), rhs);
    std::optional<Vector> coeffs;
    if (sol) coeffs = pick_member ? pick_nonvanishing(*sol, target_row) : sol->particular;
    if (!coeffs && pick_member) {
      // The monic family misses separators that vanish on the whole line.
      rows.clear();
      rhs.clear();
      for (std::size_t p = 0; p < pts.size(); ++p)
        if (p != target) add(Vector(values.row(p).begin(), values.row(p).end()), Scalar(0, field));
      add(target_row, Scalar(1, field));
      if (auto direct = solve_affine(Matrix::from_rows(rows, monos.size(), field), rhs))
        coeffs = direct->particular;
    }
    if (!coeffs) {
      throw DegenerateConfiguration("no degree-" + std::to_string(n) +
                                    " separator for point " + std::to_string(target + 1) +
                                    " (case " + std::to_string(cfg.which) + ")");
    }
    out.push_back(combine(monos, normalised(*coeffs, target_row), field));
  }
  return out;
}

std::size_t separating_rank(const SeparatorConfig& cfg) {
  cfg.validate();
  return rank(monomial_values(separating_monomials(cfg.n), cfg.points(), cfg.a.field()));
}

}  // namespace reglab
