#pragma once

// Closed-form regularity bounds and the arithmetic behind them.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace reglab {

/// Bound from a surjection built from spaces V_j: case 1 uses
/// (d-e+1) + sum_{j>=3} (j-2) dim V_j, case 2 uses
/// (d-e+1) - 2 dim V_1 - dim V_2 + sum_{j>=4} (j-3) dim V_j.
long lemma23_bound(long d, long e, const std::map<unsigned, long>& dims, long dim_v1, long dim_v2,
                   int which);

struct BoundQuery {
  long n = 1;
  long d = 1;
  long e = 1;
  bool smooth = true;
  /// Contained in a hyperquadric; nullopt when unknown.
  std::optional<bool> quadric;
  /// e-1 of the minimal generators are quadrics.
  bool quadric_generators = false;
};

struct RegularityBound {
  long value = 0;
  std::string source;
  bool conditional = false;
  long eisenbud_goto = 0;  // d - e + 1
  long bel = 0;            // min{e,n} d - n + 1
};

/// Sharpest applicable bound for the query; falls back to the general bound
/// min{e,n} d - n + 1.
RegularityBound known_regularity_bound(const BoundQuery& q);

/// Linearly normal fivefolds (n = 5) or sixfolds (n = 6) with no quadrics and
/// H^1(O_X) = 0, codimension e >= 4.
long corollary_bounds(long n, long d, long e);

struct SurfaceBound {
  long normality_threshold = 0;
  long regularity_bound = 0;
};
/// Integral surfaces with d - e >= 2.
SurfaceBound integral_surface_bound(long d, long e);

struct HilbertBound {
  long value = 0;
  bool rounded = false;  // P(d-e) was not an integer
};
/// (d-e+1) + ceil(P(d-e)), P given by coefficients in increasing degree.
HilbertBound hilbert_polynomial_regularity_bound(long d, long e, const std::vector<mpq_class>& p);

struct PushforwardC1 {
  long c1 = 0;
  bool inequality_holds = false;  // c1 <= -d
};
PushforwardC1 pushforward_c1(long d, long rho_a);

long complete_intersection_regularity(const std::vector<long>& degrees);

}  // namespace reglab
