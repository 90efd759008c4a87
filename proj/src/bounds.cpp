#include "reglab/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "reglab/error.hpp"

namespace reglab {

long lemma23_bound(long d, long e, const std::map<unsigned, long>& dims, long dim_v1, long dim_v2,
                   int which) {
  if (dim_v1 < 0 || dim_v2 < 0) throw InvalidInput("space dimensions must be nonnegative");
  for (const auto& [j, v] : dims)
    if (v < 0) throw InvalidInput("space dimensions must be nonnegative");
  long value = d - e + 1;
  if (which == 1) {
    for (const auto& [j, v] : dims)
      if (j >= 3) value += static_cast<long>(j - 2) * v;
  } else if (which == 2) {
    value -= 2 * dim_v1 + dim_v2;
    for (const auto& [j, v] : dims)
      if (j >= 4) value += static_cast<long>(j - 3) * v;
  } else {
    throw InvalidInput("bound case must be 1 or 2");
  }
  return value;
}

RegularityBound known_regularity_bound(const BoundQuery& q) {
  if (q.n < 1 || q.d < 1 || q.e < 1) throw InvalidInput("n, d and e must be positive");
  RegularityBound b;
  b.eisenbud_goto = q.d - q.e + 1;
  b.bel = std::min(q.e, q.n) * q.d - q.n + 1;
  b.value = b.bel;
  b.source = "general bound min{e,n}d-n+1";
  auto use = [&](long v, std::string src, bool cond = false) {
    b.value = v;
    b.source = std::move(src);
    b.conditional = cond;
  };
  const long eg = b.eisenbud_goto;

  if (q.e == 1) {
    use(q.d, "hypersurface");
    return b;
  }
  if (q.n == 1) {
    use(eg, "integral curves");
    return b;
  }
  if (q.n == 2 && !q.smooth) {
    if (q.d - q.e >= 2) use(integral_surface_bound(q.d, q.e).regularity_bound, "integral surfaces");
    return b;
  }
  if (!q.smooth) return b;
  if (q.quadric_generators && q.n <= 5) {
    use(eg, "e-1 quadric generators", true);
    return b;
  }
  switch (q.n) {
    case 2: use(eg, "smooth surfaces"); break;
    case 3: use(eg + 1, "smooth threefolds"); break;
    case 4: use(eg + 4, "smooth fourfolds"); break;
    case 5:
      if (q.e == 3) {
        if (q.quadric == false) use(q.d - 5, "fivefolds in P^8 on no quadric");
        else use(q.d + 4, q.quadric ? "fivefolds in P^8 on a quadric" : "fivefolds in P^8, quadric unknown");
      } else if (q.e >= 4) {
        use(eg + 10, "smooth fivefolds");
      }
      break;
    case 6:
      if (q.e == 3) {
        if (q.quadric == false) use(q.d, "sixfolds in P^9 on no quadric");
        else use(q.d + 8, q.quadric ? "sixfolds in P^9 on a quadric" : "sixfolds in P^9, quadric unknown");
      } else if (q.e >= 4) {
        use(eg + 20, "smooth sixfolds");
      }
      break;
    default: break;
  }
  return b;
}

long corollary_bounds(long n, long d, long e) {
  if (e < 4) throw InvalidInput("corollary bounds need codimension e >= 4");
  const long base = (d - e + 1) - 2 * (e - 1) - e * (e - 1) / 2;
  if (n == 5) return base + 4;
  if (n == 6) return base + 10;
  throw InvalidInput("corollary bounds exist for n = 5 and n = 6 only");
}

SurfaceBound integral_surface_bound(long d, long e) {
  if (d - e < 2) throw InvalidInput("integral surface bound needs d - e >= 2");
  SurfaceBound s;
  s.normality_threshold = (d - e) * (d + 2) - d - 2;
  s.regularity_bound = (d - e + 1) * d - (2 * e + 1);
  return s;
}

HilbertBound hilbert_polynomial_regularity_bound(long d, long e, const std::vector<mpq_class>& p) {
  mpq_class value = 0;
  const mpq_class x = d - e;
  for (auto it = p.rbegin(); it != p.rend(); ++it) value = value * x + *it;
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  HilbertBound h;
  h.rounded = value.get_den() != 1;
  h.value = (d - e + 1) + c.get_si();
  return h;
}

PushforwardC1 pushforward_c1(long d, long rho_a) {
  if (d < 1 || rho_a < 0) throw InvalidInput("need d >= 1 and rho_a >= 0");
  PushforwardC1 r;
  r.c1 = 1 - rho_a - d;
  r.inequality_holds = r.c1 <= -d;
  return r;
}

long complete_intersection_regularity(const std::vector<long>& degrees) {
  if (degrees.empty()) throw InvalidInput("complete intersection needs at least one degree");
  for (long x : degrees)
    if (x < 1) throw InvalidInput("complete intersection degrees must be positive");
  return std::accumulate(degrees.begin(), degrees.end(), 0L) - static_cast<long>(degrees.size()) + 1;
}

}  // namespace reglab
