#pragma once

// Hilbert functions, k-normality and regularity of finite schemes.

#include <cstddef>
#include <span>
#include <vector>

#include "reglab/form.hpp"
#include "reglab/scheme.hpp"

namespace reglab {

/// Coefficients of t^0..t^{len-1} of F restricted to the germ (dehomogenised
/// in the germ's chart).
Vector evaluate_form_on_germ(const Form& f, const CurvilinearGerm& g);

/// Rows: the d functionals of X (per germ, one per power of t). Columns: the
/// degree-k monomials in graded-lex order.
Matrix evaluation_matrix(const FiniteScheme& x, unsigned k);
/// Same rows, columns given by an explicit list of forms of a common degree.
Matrix evaluation_matrix(const FiniteScheme& x, std::span<const Form> forms);

std::size_t hilbert_function(const FiniteScheme& x, unsigned k);
std::vector<std::size_t> hilbert_function_values(const FiniteScheme& x, unsigned max_degree);
bool is_k_normal(const FiniteScheme& x, unsigned k);

/// 1 + min{k >= 0 : phi_X(k) = d}.
unsigned finite_scheme_regularity(const FiniteScheme& x);

/// ceil((d - n - 1) / t) + 1 with n = dim<X> and t the invariant t, at least 1.
unsigned normality_threshold_bound(const FiniteScheme& x, std::size_t cap = kDefaultEnumerationCap);

struct Cor13aVerdict {
  std::size_t span = 0;   // N = dim<X>
  std::size_t degree = 0;
  bool is_dN_normal = false;
  bool is_dN1_normal = false;  // (d-N-1)-normal
  bool has_secant = false;     // (d-N+1)-secant line
  bool equivalence_holds = false;
};

/// Evaluates both sides of: (d-N)-normal and not (d-N-1)-normal iff a
/// (d-N+1)-secant line exists. Throws InvalidInput when X spans less than its
/// ambient space.
Cor13aVerdict check_cor13a(const FiniteScheme& x);

}  // namespace reglab
