#pragma once

// Exact scalars (Q or F_p) and dense exact linear algebra.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "reglab/error.hpp"

namespace reglab {

/// Coefficient field: the rationals (authoritative) or F_p for an odd prime p.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field{}; }
  /// Throws InvalidInput unless p is an odd prime below 2^62.
  static Field prime(std::uint64_t p);

  bool is_rational() const { return prime_ == 0; }
  std::uint64_t characteristic() const { return prime_; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  std::uint64_t prime_ = 0;
};

/// An element of Q (lowest terms, positive denominator) or of F_p (canonical
/// residue in [0, p)).
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value, Field field = Field::rationals());  // NOLINT(google-explicit-constructor)
  Scalar(const mpq_class& value, Field field = Field::rationals());

  /// Residue r (taken mod p) of F_p.
  static Scalar from_residue(std::uint64_t r, Field field);

  /// Accepts "p", "-p" or "p/q"; reduces into the field.
  static Scalar parse(std::string_view text, Field field = Field::rationals());

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Rational value; only valid over Q.
  const mpq_class& rational() const;
  /// Canonical residue; only valid over F_p.
  std::uint64_t residue() const { return residue_; }

  /// Same value reinterpreted in another field (Q -> F_p reduction, F_p -> F_p
  /// identity). Throws InvalidInput if a denominator vanishes mod p.
  Scalar in_field(Field target) const;

  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  void require_same_field(const Scalar& other) const;

  Field field_;
  mpq_class value_;             // used over Q
  std::uint64_t residue_ = 0;   // used over F_p
};

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n, Field field = Field::rationals());
Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b);
bool is_zero_vector(std::span<const Scalar> v);

/// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field field = Field::rationals());

  static Matrix identity(std::size_t n, Field field = Field::rationals());
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols, Field field);
  static Matrix from_ints(std::initializer_list<std::initializer_list<long>> rows,
                          Field field = Field::rationals());

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Scalar> values);

  Matrix transpose() const;
  Vector apply(std::span<const Scalar> x) const;
  Matrix operator*(const Matrix& rhs) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_;
  std::vector<Scalar> data_;
};

/// Exact rank. Fraction-free elimination over Q, modular elimination over F_p.
std::size_t rank(const Matrix& m);

/// Basis of the right null space; size = cols - rank.
std::vector<Vector> kernel_basis(const Matrix& m);

struct AffineSolution {
  Vector particular;
  std::vector<Vector> kernel;
};

/// Full solution set of m x = rhs, or nullopt when inconsistent.
std::optional<AffineSolution> solve_affine(const Matrix& m, std::span<const Scalar> rhs);

}  // namespace reglab
