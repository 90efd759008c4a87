#include "reglab/error.hpp"
#include "reglab/projection.hpp"
#include "suites.hpp"

namespace reglab::suites {

namespace {

const Field kQ = Field::rationals();

Vector random_vector(Rng& rng, std::size_t size, long box) {
  Vector v;
  for (std::size_t i = 0; i < size; ++i) v.emplace_back(draw(rng, -box, box));
  return v;
}

// Nondegenerate rational curve of degree d in P^N (d >= N).
RationalCurve random_curve(Rng& rng, std::size_t n, unsigned d, std::size_t& redraws) {
  for (;;) {
    std::vector<Vector> forms;
    for (std::size_t i = 0; i <= n; ++i) forms.push_back(random_vector(rng, d + 1, 10));
    try {
      if (rank(Matrix::from_rows(forms, d + 1, kQ)) == n + 1) return RationalCurve(n, d, forms);
    } catch (const InvalidInput&) {
      // common factor
    }
    ++redraws;
  }
}

Vector random_param(Rng& rng) {
  if (draw(rng, 0, 9) == 0) return Vector{Scalar(1), Scalar(0)};
  return Vector{Scalar(draw(rng, -6, 6)), Scalar(draw(rng, 1, 6))};
}

std::pair<std::size_t, unsigned> curve_shape(Rng& rng, std::size_t min_ambient) {
  const auto n = static_cast<std::size_t>(draw(rng, static_cast<long>(min_ambient), 5));
  const auto d = static_cast<unsigned>(draw(rng, std::max<long>(static_cast<long>(n), 2), 6));
  return {n, d};
}

}  // namespace

TrialOutcome flatness(Rng& rng, std::size_t, const SuiteOptions&) {
  TrialOutcome out;
  const auto [n, d] = curve_shape(rng, 2);
  out.bucket = "d=" + std::to_string(d);
  const RationalCurve c = random_curve(rng, n, d, out.redraws);
  for (;;) {
    std::vector<Vector> forms{random_vector(rng, n + 1, 10), random_vector(rng, n + 1, 10)};
    try {
      const LinearSubspace center(n, forms);
      std::vector<Vector> ys;
      for (int i = 0; i < 3; ++i) {
        Vector y = random_vector(rng, 2, 10);
        if (!is_zero_vector(y)) ys.push_back(y);
      }
      const Vector p = c.point(random_param(rng));
      ys.push_back(Vector{dot(forms[0], p), dot(forms[1], p)});
      out.input = Json{{"curve", curve_to_json(c)}, {"center", subspace_to_json(center)}};
      for (const auto& y : ys) {
        const CurveFiber f = curve_fiber_scheme(c, center, y);
        std::size_t parts = f.scheme ? f.scheme->degree() : 0;
        for (const auto& [deg, m] : f.irrational) parts += deg * m;
        if (f.total != d || parts != d) {
          out.input["y"] = vector_to_json(y);
          out.fail("fiber has length " + std::to_string(f.total) + " (parts " + std::to_string(parts) +
                   "), expected " + std::to_string(d));
        }
      }
      return out;
    } catch (const CenterMeetsCurve&) {
      ++out.redraws;
    } catch (const InvalidInput&) {
      ++out.redraws;
    }
  }
}

TrialOutcome lemma3_1(Rng& rng, std::size_t, const SuiteOptions&) {
  TrialOutcome out;
  const auto [n, d] = curve_shape(rng, 2);
  const RationalCurve c = random_curve(rng, n, d, out.redraws);
  const auto r = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(n) - 1));
  out.bucket = "r=" + std::to_string(r);
  for (;;) {
    const auto on_curve = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(r) + 1));
    std::vector<Vector> pts;
    std::vector<Vector> params;
    for (std::size_t i = 0; i < on_curve; ++i) {
      const Vector t = random_param(rng);
      bool repeat = false;
      for (const auto& q : params) repeat = repeat || (q[0] * t[1] == q[1] * t[0]);
      if (repeat) continue;
      params.push_back(t);
      pts.push_back(c.point(t));
    }
    while (pts.size() < r + 1) pts.push_back(random_vector(rng, n + 1, 10));
    const LinearSubspace l = LinearSubspace::spanned_by(pts, n, kQ);
    if (l.dim() != static_cast<long>(r)) {
      ++out.redraws;
      continue;
    }
    out.input = Json{{"curve", curve_to_json(c)}, {"subspace", subspace_to_json(l)}};
    std::size_t len = 0;
    try {
      len = curve_linear_section_length(c, l);
    } catch (const CurveInSubspace&) {
      ++out.redraws;
      continue;
    }
    const long bound = static_cast<long>(d) - (static_cast<long>(n) - 1 - static_cast<long>(r));
    if (static_cast<long>(len) > bound) {
      out.fail("section length " + std::to_string(len) + " exceeds " + std::to_string(bound));
    }
    if (len < params.size()) out.fail("section misses a planted curve point");
    return out;
  }
}

TrialOutcome mather_consistency(Rng& rng, std::size_t, const SuiteOptions&) {
  TrialOutcome out;
  const auto [n, d] = curve_shape(rng, 3);
  const RationalCurve c = random_curve(rng, n, d, out.redraws);
  const bool on_secant = draw(rng, 0, 1) == 1;
  out.bucket = on_secant ? "center on a secant" : "random center";
  for (;;) {
    std::vector<Vector> pts, params;
    if (on_secant) {
      params = {random_param(rng), random_param(rng)};
      if (params[0][0] * params[1][1] == params[0][1] * params[1][0]) continue;
      const Vector a = c.point(params[0]), b = c.point(params[1]);
      const Scalar al(draw(rng, 1, 5)), be(draw(rng, 1, 5) * (draw(rng, 0, 1) ? 1 : -1));
      Vector q;
      for (std::size_t i = 0; i <= n; ++i) q.push_back(al * a[i] + be * b[i]);
      pts.push_back(q);
    }
    while (pts.size() < n - 2) pts.push_back(random_vector(rng, n + 1, 10));
    const LinearSubspace center = LinearSubspace::spanned_by(pts, n, kQ);
    if (center.dim() != static_cast<long>(n) - 3) {
      ++out.redraws;
      continue;
    }
    params.push_back(random_param(rng));
    params.push_back(random_param(rng));
    out.input = Json{{"curve", curve_to_json(c)}, {"center", subspace_to_json(center)}};
    try {
      for (std::size_t i = 0; i < params.size(); ++i) {
        const PlaneFiber f = curve_plane_fiber(c, center, params[i]);
        if (!f.mather.holds) {
          out.input["param"] = vector_to_json(params[i]);
          out.fail("fiber sum " + std::to_string(f.mather.sum) + " exceeds 2");
        }
        if (on_secant && i < 2 && f.total < 2) out.fail("planted secant fiber has length below 2");
      }
    } catch (const CenterMeetsCurve&) {
      TrialOutcome fresh;
      fresh.bucket = out.bucket;
      fresh.redraws = out.redraws + 1;
      out = std::move(fresh);
      continue;
    }
    return out;
  }
}

}  // namespace reglab::suites
