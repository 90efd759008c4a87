#pragma once

// Separating finite sets of points with restricted spaces of forms.

#include <cstddef>
#include <map>
#include <vector>

#include "reglab/form.hpp"
#include "reglab/scheme.hpp"

namespace reglab {

/// Spaces V_j of degree-j forms in the center variables T_1..T_m.
struct FormSpaceRecipe {
  std::size_t t_count = 0;
  /// Linear forms (ambient coefficient vectors) realising T_1..T_m. Empty
  /// means T_i = X_i for i = 1..m.
  std::vector<Vector> t_forms;
  /// Degree j >= 1 -> spanning forms in t_count variables.
  std::map<unsigned, std::vector<Form>> spaces;
  /// Adds V_1 = all linear and V_2 = all quadratic forms in T.
  bool standard = false;

  /// V_j with the standard pieces and constants (j = 0) filled in.
  std::vector<Form> space(unsigned j, Field field = Field::rationals()) const;
  unsigned max_degree() const;
};

/// {U^{k-j} v : v in V_j, 0 <= j <= k} as forms on P^m. Pieces of degree
/// above k are ignored. Throws InvalidInput when U depends on the T forms or
/// the ambient dimension is not m.
std::vector<Form> recipe_space(const FormSpaceRecipe& recipe, unsigned k, const Vector& u);

/// Rank of the recipe space evaluated on X equals deg X.
bool recipe_separates(const FiniteScheme& x, const FormSpaceRecipe& recipe, unsigned k,
                      const Vector& u);

/// n+3 points in P^2 with coordinates (U, T1, T2): the aligned ones are
/// (u_i, a, b), the others lie off the line a T2 - b T1 = 0.
struct SeparatorConfig {
  unsigned n = 3;
  int which = 2;  // 1: n+1 aligned, 2 off; 2: n aligned, 3 off
  Scalar a{1}, b{1};
  Vector u;
  std::vector<Vector> off_line;

  /// Throws InvalidInput when a configuration invariant fails.
  void validate() const;
  /// Aligned points first, then the off-line ones.
  std::vector<Vector> points() const;
};

/// U^{n-j} T1^j (0 <= j <= n), U^{n-1} T2, U^{n-2} T2^2, U^{n-2} T1 T2.
std::vector<Exponents> separating_monomials(unsigned n);

/// One form per point, equal to 1 there and vanishing at the other points,
/// each in the span of separating_monomials(n). Throws
/// DegenerateConfiguration when a required linear system has no solution.
std::vector<Form> lemma26_separators(const SeparatorConfig& cfg);

/// Rank of the evaluation of separating_monomials(n) on the points.
std::size_t separating_rank(const SeparatorConfig& cfg);

}  // namespace reglab
