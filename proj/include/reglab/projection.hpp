#pragma once

// Linear projections of finite schemes and rational curves, fiber statistics
// and the fiber case analysis for generic projections of 5- and 6-folds.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reglab/poly.hpp"
#include "reglab/scheme.hpp"

namespace reglab {

struct Fiber {
  ProjPoint image;
  SubschemeSelector selector;
  std::size_t length = 0;
};

/// Groups the germs of X by their image under projection from `center`
/// (images are the cutting forms evaluated at the supports). Throws
/// CenterMeetsScheme if the center contains a support point.
std::vector<Fiber> project_scheme(const FiniteScheme& x, const LinearSubspace& center);

/// k -> number of images whose fiber has length >= k, for k = 1..max.
std::map<std::size_t, std::size_t> yk_counts(const std::vector<Fiber>& fibers);

struct FiberProfile {
  std::vector<std::size_t> deltas;  // germ lengths
  std::vector<std::size_t> gammas;  // delta - 1
  std::size_t total = 0;
  std::size_t support = 0;
  long span = 0;
  std::size_t max_collinear = 0;
  std::string label;
  /// Degree k from the case analysis with the fiber k-normal; nullopt when
  /// the fiber cannot occur.
  std::optional<unsigned> predicted;
  /// The case analysis names the minimum, not only an upper bound.
  bool prediction_exact = false;
};

struct MatherCheck {
  std::size_t sum = 0;
  bool holds = false;
};

/// sum of (delta + gamma) over the fiber compared with n + 1.
MatherCheck mather_inequality(const FiberProfile& f, unsigned n);

/// Profile of a fiber of a generic projection of an n-dimensional variety to
/// a hypersurface, with the case label and predicted normality degree.
FiberProfile classify_fiber(const FiniteScheme& fiber, unsigned n);

/// Smallest k >= 0 with the scheme k-normal.
unsigned minimal_normality_degree(const FiniteScheme& x);

/// P^1 -> P^N given by N+1 binary forms of degree d; forms[i][j] is the
/// coefficient of s^{d-j} t^j in coordinate i. Rational coefficients only.
class RationalCurve {
 public:
  /// Throws InvalidInput on ragged input or a common factor of the forms.
  RationalCurve(std::size_t ambient, unsigned degree, std::vector<Vector> forms);

  std::size_t ambient() const { return ambient_; }
  unsigned degree() const { return degree_; }
  const std::vector<Vector>& forms() const { return forms_; }

  /// The binary form L(C(s, t)) for a linear form L.
  Vector compose(const Vector& linear) const;
  /// C(s, t) at a parameter point.
  Vector point(const Vector& param) const;

 private:
  std::size_t ambient_;
  unsigned degree_;
  std::vector<Vector> forms_;
};

/// Roots of a binary form: distinct rational parameters (s : t) with
/// multiplicity, plus irrational clusters (degree of the factor, multiplicity).
struct BinaryRoots {
  std::vector<std::pair<Vector, std::size_t>> rational;
  std::vector<std::pair<std::size_t, std::size_t>> irrational;
  std::size_t total() const;
};

/// Throws InvalidInput for the zero form.
BinaryRoots binary_roots(const Vector& form);

/// Length of the common zero scheme of binary forms of one degree (the gcd
/// degree, roots at infinity included). Zero forms are skipped; throws
/// InvalidInput when every form is zero.
std::size_t common_root_length(const std::vector<Vector>& forms);

struct CurveFiber {
  std::optional<FiniteScheme> scheme;  // germs at rational parameters
  std::vector<std::pair<std::size_t, std::size_t>> irrational;
  std::size_t total = 0;
};

/// Fiber of the projection C -> P^1 with center of codimension 2 over y.
/// Throws CenterMeetsCurve when the center meets C.
CurveFiber curve_fiber_scheme(const RationalCurve& c, const LinearSubspace& center,
                              const Vector& y);

/// Length of C intersected with L. Throws CurveInSubspace when C lies in L.
std::size_t curve_linear_section_length(const RationalCurve& c, const LinearSubspace& l);

/// Fiber of C -> P^2 (center of codimension 3) through the image of the
/// parameter `param`, with its sum of (delta + gamma).
struct PlaneFiber {
  std::size_t total = 0;
  MatherCheck mather;
};
PlaneFiber curve_plane_fiber(const RationalCurve& c, const LinearSubspace& center,
                             const Vector& param);

std::size_t schubert_codim(std::size_t t, std::size_t n_ambient, std::size_t k, std::size_t n);
std::size_t x_q_codim(std::size_t q);
std::size_t secant_locus_dim_bound(std::size_t n, std::size_t k);

}  // namespace reglab
