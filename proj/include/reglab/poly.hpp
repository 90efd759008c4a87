#pragma once

// Dense univariate polynomials over Q.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace reglab {

class UPoly {
 public:
  UPoly() = default;
  /// Coefficients in increasing degree; trailing zeros are trimmed.
  explicit UPoly(std::vector<mpq_class> coeffs);
  static UPoly monomial(std::size_t degree, const mpq_class& c = 1);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpq_class(0); }
  mpq_class lead() const { return c_.empty() ? mpq_class(0) : c_.back(); }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly scaled(const mpq_class& s) const;
  UPoly monic() const;
  mpq_class operator()(const mpq_class& x) const;
  UPoly derivative() const;
  /// p(a + e) as a polynomial in e.
  UPoly shifted(const mpq_class& a) const;

  friend bool operator==(const UPoly&, const UPoly&) = default;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

struct DivMod {
  UPoly quotient, remainder;
};
DivMod divmod(const UPoly& a, const UPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

/// Square-free factors f_1, f_2, ... with p = lead * prod f_i^i (f_i monic,
/// possibly 1).
std::vector<UPoly> square_free_decomposition(const UPoly& p);

/// Distinct rational roots of a nonzero polynomial, ascending. Candidates come
/// from floating-point eigenvalues of the companion matrix and are confirmed
/// exactly.
std::vector<mpq_class> rational_roots(const UPoly& p);

}  // namespace reglab
