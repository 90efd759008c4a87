#pragma once

// Homogeneous polynomials with exact coefficients.

#include <cstddef>
#include <map>
#include <vector>

#include "reglab/exactalg.hpp"

namespace reglab {

using Exponents = std::vector<unsigned>;

/// All exponent vectors of the given degree in `nvars` variables, graded
/// lexicographic (x0^k first).
std::vector<Exponents> monomials(std::size_t nvars, unsigned degree);

class Form {
 public:
  Form(std::size_t nvars, unsigned degree, Field field = Field::rationals());

  static Form monomial(const Exponents& e, Field field = Field::rationals());
  static Form linear(const Vector& coeffs);
  static Form constant(std::size_t nvars, const Scalar& c);

  std::size_t nvars() const { return nvars_; }
  unsigned degree() const { return degree_; }
  Field field() const { return field_; }
  const std::map<Exponents, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * x^e; e must have this form's degree.
  void add_term(const Exponents& e, const Scalar& c);

  Form operator*(const Form& rhs) const;
  Form operator+(const Form& rhs) const;
  Form scaled(const Scalar& c) const;
  Form pow(unsigned k) const;

  /// Substitutes the i-th variable by linear_forms[i] (each a coefficient
  /// vector in a common, possibly different, number of variables).
  Form compose(const std::vector<Vector>& linear_forms) const;

  Scalar evaluate(std::span<const Scalar> point) const;

  friend bool operator==(const Form&, const Form&) = default;

 private:
  std::size_t nvars_;
  unsigned degree_;
  Field field_;
  std::map<Exponents, Scalar> terms_;  // no zero coefficients
};

}  // namespace reglab
