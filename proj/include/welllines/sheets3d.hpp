#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "welllines/core.hpp"
#include "welllines/critical.hpp"
#include "welllines/lambertw.hpp"

namespace welllines {

struct SheetPoint {
  double u;
  double v;
  double R;
};

// The intersection of one Lambert sheet (a Lambert line extruded along
// the R axis) with the cone R = sqrt(u^2 + v^2).  Parametrized by v,
// which is monotone along an upper-half-plane Lambert line.
struct SheetCurve {
  LambertLineSpec spec;
  std::vector<SheetPoint> points;
};

namespace detail {

// u on the Lambert line of the given parity at ordinate v.
inline double line_u(StateParity parity, double v) {
  return parity == StateParity::Even ? v * std::tan(v)
                                     : -v / std::tan(v);
}

inline double cone_R(StateParity parity, double v) {
  const double u = line_u(parity, v);
  return std::hypot(u, v);
}

// Solve R(v) = R_max on a half-band where R is monotone.
inline double band_edge(StateParity parity, double R_max, double lo,
                        double hi, bool increasing) {
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    const double mid = 0.5 * (lo + hi);
    const bool above = cone_R(parity, mid) > R_max;
    if (above == increasing)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

// Snap an image that should lie exactly on the ray: the off-axis
// component of forward_map is roundoff noise, and on the negative real
// axis (a branch cut) its sign would pick a side at random.  Using
// +0.0 keeps the upper-side limit, matching the on-cut convention of
// lambert_w.
inline ComplexPoint snap_to_ray(ComplexPoint z, AxialRay ray) {
  if (ray == AxialRay::PosReal || ray == AxialRay::NegReal)
    return {z.real(), +0.0};
  return {0.0, z.imag()};
}

inline BranchIndex branch_of_point(ComplexPoint w, AxialRay ray) {
  const ComplexPoint z = snap_to_ray(forward_map(w), ray);
  for (BranchIndex k = -10; k <= 10; ++k) {
    if (std::abs(lambert_w(k, z) - w) <= 1e-8 * std::max(1.0, std::abs(w)))
      return k;
  }
  throw std::runtime_error("branch_of_point: no branch matched");
}

}  // namespace detail

// One curve per Lambert sheet whose tangency with the cone lies inside
// R <= R_max; sheets with no tangency in range are omitted.  Each
// curve attains its R-minimum at (u, v) = (-1, v_t) and is clipped to
// the cone region R <= R_max.
inline std::vector<SheetCurve> intersection_curves(double R_max,
                                                   std::size_t n = 257) {
  if (!(R_max > 0.0))
    throw std::invalid_argument("intersection_curves: R_max > 0");
  std::vector<SheetCurve> out;
  const double half_pi = detail::kPi / 2.0;
  const int count =
      std::max(2, static_cast<int>(std::ceil(2.0 * R_max / detail::kPi)) + 2);
  for (const auto& c : critical_strengths(count)) {
    if (c.R_c > R_max) break;
    // Band of the tangent line: between its two asymptotes, which are
    // consecutive odd (Even parity) or even (Odd parity) multiples of
    // pi/2.
    int m0 = static_cast<int>(std::floor(c.v_t / half_pi));
    const int want_odd = c.parity == StateParity::Even ? 1 : 0;
    if (m0 % 2 != want_odd) --m0;
    const double v_lo = m0 * half_pi;
    const double v_hi = (m0 + 2) * half_pi;
    const double v_a =
        detail::band_edge(c.parity, R_max, v_lo + 1e-12, c.v_t, false);
    const double v_b =
        detail::band_edge(c.parity, R_max, c.v_t, v_hi - 1e-12, true);

    SheetCurve curve;
    curve.spec = {detail::branch_of_point({-1.0, c.v_t}, c.ray), c.ray};
    curve.points.reserve(n + 1);
    bool inserted_vt = false;
    for (std::size_t i = 0; i < n; ++i) {
      const double v = v_a + (v_b - v_a) * double(i) / double(n - 1);
      if (!inserted_vt && v > c.v_t) {
        curve.points.push_back({-1.0, c.v_t, c.R_c});
        inserted_vt = true;
      }
      const double u = detail::line_u(c.parity, v);
      curve.points.push_back({u, v, std::hypot(u, v)});
    }
    out.push_back(std::move(curve));
  }
  return out;
}

// Drop the named coordinate: U -> (v, R), V -> (u, R), R -> (u, v).
// Projection along R reproduces the 2-D Lambert-line diagram.
enum class Axis3 { U, V, R };

inline std::vector<std::vector<std::array<double, 2>>> project(
    const std::vector<SheetCurve>& curves, Axis3 axis) {
  if (curves.empty()) throw std::invalid_argument("project: no curves");
  std::vector<std::vector<std::array<double, 2>>> out;
  out.reserve(curves.size());
  for (const auto& c : curves) {
    std::vector<std::array<double, 2>> poly;
    poly.reserve(c.points.size());
    for (const auto& p : c.points) {
      switch (axis) {
        case Axis3::U: poly.push_back({p.v, p.R}); break;
        case Axis3::V: poly.push_back({p.u, p.R}); break;
        case Axis3::R: poly.push_back({p.u, p.v}); break;
      }
    }
    out.push_back(std::move(poly));
  }
  return out;
}

}  // namespace welllines
