#pragma once

// Zero-dimensional subschemes of P^N as disjoint unions of curvilinear germs.

#include <cstddef>
#include <optional>
#include <vector>

#include "reglab/exactalg.hpp"

namespace reglab {

inline constexpr std::size_t kDefaultEnumerationCap = 12;

/// Truncated power series a_0 + a_1 t + ... + a_{n-1} t^{n-1}.
using Series = Vector;

namespace series {
Series multiply(const Series& a, const Series& b, std::size_t len);
/// Multiplicative inverse mod t^len; requires a_0 != 0.
Series inverse(const Series& a, std::size_t len);
/// Index of the first nonzero coefficient, or a.size() if a == 0 mod t^len.
std::size_t order(const Series& a);
Series truncate(Series a, std::size_t len, Field field);
}  // namespace series

/// A point of P^N whose first nonzero coordinate is 1.
class ProjPoint {
 public:
  ProjPoint() = default;
  /// Throws InvalidInput on the zero vector.
  explicit ProjPoint(Vector coords);

  const Vector& coords() const { return coords_; }
  std::size_t ambient() const { return coords_.size() - 1; }
  Field field() const { return coords_.front().field(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

 private:
  Vector coords_;
};

/// A curvilinear germ of length len >= 1: a smooth parameterised germ truncated
/// mod t^len. Stored homogeneously with the chart coordinate identically 1.
class CurvilinearGerm {
 public:
  /// The reduced point p.
  static CurvilinearGerm reduced(const ProjPoint& p);

  /// `jet` holds the N affine coordinates (all indices except `chart`, in
  /// increasing order), each as a series of length `len`. Constant terms must
  /// match the dehomogenised support; the linear terms must not all vanish
  /// when len >= 2.
  static CurvilinearGerm from_jet(const ProjPoint& support, std::size_t chart,
                                  const std::vector<Series>& jet);

  /// From N+1 homogeneous coordinate series (any representative, constant
  /// terms not all zero). The chart is the first coordinate with nonzero
  /// constant term.
  static CurvilinearGerm from_homogeneous(const std::vector<Series>& coords, std::size_t len);

  const ProjPoint& support() const { return support_; }
  std::size_t chart() const { return chart_; }
  std::size_t length() const { return len_; }
  std::size_t ambient() const { return coords_.size() - 1; }
  Field field() const { return support_.field(); }

  /// Coordinate series in the chart (coordinate `chart` is the series 1).
  const std::vector<Series>& coords() const { return coords_; }
  /// The N affine coordinate series, chart coordinate omitted.
  std::vector<Series> jet() const;

  CurvilinearGerm truncated(std::size_t len) const;
  /// Coefficient vector of t^j across the N+1 coordinates.
  Vector coefficient(std::size_t j) const;

 private:
  CurvilinearGerm() = default;
  void validate() const;

  ProjPoint support_;
  std::size_t chart_ = 0;
  std::size_t len_ = 1;
  std::vector<Series> coords_;
};

/// Per-germ truncation lengths selecting a closed subscheme.
struct SubschemeSelector {
  std::vector<std::size_t> lengths;

  std::size_t total() const;
  friend bool operator==(const SubschemeSelector&, const SubschemeSelector&) = default;
};

class FiniteScheme {
 public:
  /// Throws InvalidInput if empty, mixed ambient/field, or supports collide.
  FiniteScheme(std::size_t ambient, std::vector<CurvilinearGerm> germs);

  std::size_t ambient() const { return ambient_; }
  Field field() const { return germs_.front().field(); }
  const std::vector<CurvilinearGerm>& germs() const { return germs_; }
  std::size_t degree() const;
  bool is_reduced() const;

  SubschemeSelector whole() const;
  /// Germs truncated per the selector; zero-length germs dropped.
  std::vector<CurvilinearGerm> select(const SubschemeSelector& sel) const;
  /// Subscheme as a scheme in its own right (total length must be >= 1).
  FiniteScheme subscheme(const SubschemeSelector& sel) const;

  /// Image under the invertible linear map g ((N+1)x(N+1)).
  FiniteScheme transformed(const Matrix& g) const;
  /// All coordinates reduced into another field.
  FiniteScheme in_field(Field target) const;

 private:
  std::size_t ambient_;
  std::vector<CurvilinearGerm> germs_;
};

/// Common zero locus of independent linear forms on P^N.
class LinearSubspace {
 public:
  /// Throws InvalidInput unless the forms are independent (N+1 entries each).
  LinearSubspace(std::size_t ambient, std::vector<Vector> forms);

  /// Smallest linear subspace containing the given points (projective span).
  static LinearSubspace spanned_by(const std::vector<Vector>& points, std::size_t ambient,
                                   Field field);

  std::size_t ambient() const { return ambient_; }
  const std::vector<Vector>& forms() const { return forms_; }
  /// Projective dimension; -1 for the empty subspace.
  long dim() const { return static_cast<long>(ambient_) - static_cast<long>(forms_.size()); }
  bool contains(std::span<const Scalar> point) const;

 private:
  std::size_t ambient_;
  std::vector<Vector> forms_;
};

/// Degree-1 evaluation rows of the selected subscheme.
Matrix linear_evaluation_matrix(const FiniteScheme& x, const SubschemeSelector& sel);

/// dim <X'> = rank(degree-1 evaluation) - 1; -1 for the empty subscheme.
long span_dim(const FiniteScheme& x, const SubschemeSelector& sel);
long span_dim(const FiniteScheme& x);

/// Every selector of total length exactly `length`, each once, in
/// lexicographic order of the length vectors.
std::vector<SubschemeSelector> enumerate_subschemes(const FiniteScheme& x, std::size_t length,
                                                    std::size_t cap = kDefaultEnumerationCap);

/// Largest k such that every subscheme of length <= k+1 is linearly
/// independent, computed inside the span of X. For a single reduced point
/// (span dimension 0) the value is 1.
std::size_t invariant_t(const FiniteScheme& x, std::size_t cap = kDefaultEnumerationCap);

/// Length of the largest intersection of the germ with the subspace.
std::size_t contact_length(const CurvilinearGerm& g, const LinearSubspace& l);
std::size_t contact_length(const FiniteScheme& x, const LinearSubspace& l);

struct CollinearWitness {
  std::size_t length = 0;
  std::optional<LinearSubspace> line;  // present when length >= 2
};

/// Maximum length of a subscheme contained in a line.
CollinearWitness max_collinear_length(const FiniteScheme& x);

}  // namespace reglab
