#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "welllines/core.hpp"
#include "welllines/lambertw.hpp"

namespace welllines {

// Physical description of a finite square well.
struct WellParams {
  double half_width_L;
  double depth_V0;
  double mass_m;
  double hbar;
};

// One intersection of the strength circle u^2 + v^2 = R^2 with a
// Lambert line.  Even states satisfy u = v tan(v), odd states
// u = -v cot(v); v = 0 is excluded.
struct BoundState {
  StateParity parity;
  double u;
  double v;
  double R;
  int quadrant;  // 1..4
  // Set when another root of the same parity lies nearby in theta,
  // i.e. the circle is close to tangency with a Lambert line.
  bool near_critical = false;
};

struct SolveOptions {
  bool include_negative_u = true;
  bool include_lower_half_plane = false;
  double tolerance = 1e-10;
};

// Dimensionless strength R = (L/hbar) sqrt(2 m V0).
inline double strength_from_params(const WellParams& p) {
  if (!(p.half_width_L > 0.0) || !(p.depth_V0 > 0.0) ||
      !(p.mass_m > 0.0) || !(p.hbar > 0.0))
    throw std::invalid_argument("strength_from_params: all parameters must be positive");
  return p.half_width_L / p.hbar * std::sqrt(2.0 * p.mass_m * p.depth_V0);
}

namespace detail {

// Pole-free parity residuals on the circle, as functions of theta.
// These are e^{-u} times the real/imaginary parts of F(w), so sign
// changes bracket intersections without tan/cot poles.
inline double circle_even(double R, double theta) {
  const double u = R * std::cos(theta), v = R * std::sin(theta);
  return u * std::cos(v) - v * std::sin(v);
}
inline double circle_odd(double R, double theta) {
  const double u = R * std::cos(theta), v = R * std::sin(theta);
  return v * std::cos(v) + u * std::sin(v);
}

template <class F>
inline double bisect_theta(F&& f, double lo, double hi) {
  double flo = f(lo);
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((flo < 0.0) == (fm < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Two same-parity roots closer than this in theta get the
// near-critical flag.
constexpr double kNearCriticalTheta = 0.02;

// Locates the maximum of f in [lo, hi] by ternary search.  Between
// two adjacent roots f has a single extremum, so this is unimodal.
template <class F>
inline double extremum_theta(F&& f, double lo, double hi) {
  while (hi - lo > 1e-13) {
    const double a = lo + (hi - lo) / 3.0;
    const double b = hi - (hi - lo) / 3.0;
    if (f(a) > f(b))
      hi = b;
    else
      lo = a;
  }
  return 0.5 * (lo + hi);
}

template <class F>
inline std::vector<double> upper_half_roots(double R, F&& f) {
  // At least ceil(16 R / pi) + 16 samples per quadrant.
  const std::size_t per_quadrant =
      static_cast<std::size_t>(std::ceil(16.0 * R / kPi)) + 16;
  const std::size_t n = 2 * per_quadrant;
  const double eps = 1e-9;
  std::vector<double> ts(n + 1), fs(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    ts[i] = eps + (kPi - 2.0 * eps) * double(i) / double(n);
    fs[i] = f(ts[i]);
  }
  std::vector<double> roots;
  for (std::size_t i = 1; i <= n; ++i) {
    if ((fs[i - 1] < 0.0) != (fs[i] < 0.0)) {
      roots.push_back(bisect_theta(f, ts[i - 1], ts[i]));
      continue;
    }
    // A near-tangent pair of roots can fall between grid points with
    // no sign change.  Same-sign local extrema of |f| are refined; if
    // the extremum value flips sign, two roots straddle it.
    if (i + 1 <= n && (fs[i] < 0.0) == (fs[i + 1] < 0.0) &&
        std::abs(fs[i]) <= std::abs(fs[i - 1]) &&
        std::abs(fs[i]) <= std::abs(fs[i + 1])) {
      const double sign = fs[i] < 0.0 ? 1.0 : -1.0;
      auto g = [&f, sign](double t) { return sign * f(t); };
      const double te = extremum_theta(g, ts[i - 1], ts[i + 1]);
      if (g(te) > 0.0) {
        roots.push_back(bisect_theta(f, ts[i - 1], te));
        roots.push_back(bisect_theta(f, te, ts[i + 1]));
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

inline void append_states(double R, StateParity parity,
                          const std::vector<double>& thetas,
                          std::vector<BoundState>& out) {
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    const double th = thetas[i];
    const double u = R * std::cos(th), v = R * std::sin(th);
    BoundState s{parity, u, v, R, u >= 0.0 ? 1 : 2, false};
    if ((i > 0 && th - thetas[i - 1] < kNearCriticalTheta) ||
        (i + 1 < thetas.size() && thetas[i + 1] - th < kNearCriticalTheta))
      s.near_critical = true;
    out.push_back(s);
  }
}

inline std::vector<BoundState> finalize_states(double R,
                                               std::vector<BoundState> states,
                                               const SolveOptions& opts) {
  if (!opts.include_negative_u) {
    std::erase_if(states, [](const BoundState& s) { return s.u < 0.0; });
  }
  if (opts.include_lower_half_plane) {
    const std::size_t upper = states.size();
    for (std::size_t i = 0; i < upper; ++i) {
      BoundState m = states[i];
      m.v = -m.v;
      m.quadrant = m.u >= 0.0 ? 4 : 3;
      states.push_back(m);
    }
  }
  std::sort(states.begin(), states.end(),
            [](const BoundState& a, const BoundState& b) {
              if (a.parity != b.parity) return a.parity < b.parity;
              return a.v < b.v;
            });
  return states;
}

}  // namespace detail

// All intersections of the strength circle with the Lambert lines,
// located by bracketing sign changes of the pole-free parity residuals
// along theta and refining by bisection.  The point (R, 0) is always
// excluded.  States are sorted by increasing v within parity.
inline std::vector<BoundState> solve_states(double R,
                                            const SolveOptions& opts = {}) {
  if (!(R > 0.0)) throw std::invalid_argument("solve_states: R must be positive");
  std::vector<BoundState> states;
  detail::append_states(
      R, StateParity::Even,
      detail::upper_half_roots(R, [R](double t) { return detail::circle_even(R, t); }),
      states);
  detail::append_states(
      R, StateParity::Odd,
      detail::upper_half_roots(R, [R](double t) { return detail::circle_odd(R, t); }),
      states);
  return detail::finalize_states(R, std::move(states), opts);
}

// Same contract as solve_states, but found in the z-plane: walk the
// image of the strength circle under F and refine the axis crossings.
// Imaginary-axis crossings are even states, real-axis crossings odd.
inline std::vector<BoundState> states_via_z_plane(double R,
                                                  const SolveOptions& opts = {}) {
  if (!(R > 0.0)) throw std::invalid_argument("states_via_z_plane: R must be positive");
  auto x_of = [R](double t) { return forward_map(std::polar(R, t)).real(); };
  auto y_of = [R](double t) { return forward_map(std::polar(R, t)).imag(); };
  std::vector<BoundState> states;
  detail::append_states(R, StateParity::Even, detail::upper_half_roots(R, x_of),
                        states);
  detail::append_states(R, StateParity::Odd, detail::upper_half_roots(R, y_of),
                        states);
  return detail::finalize_states(R, std::move(states), opts);
}

// Bound-state energy E = -u^2 hbar^2 / (2 m L^2); lies in (-V0, 0) for
// 0 < |u| < R.
inline double energy_of_state(const BoundState& s, const WellParams& p) {
  const double R = strength_from_params(p);
  if (std::abs(R - s.R) > 1e-8 * std::max(1.0, s.R))
    throw std::invalid_argument("energy_of_state: WellParams strength does not match state R");
  const double uL = s.u / p.half_width_L;
  return -uL * uL * p.hbar * p.hbar / (2.0 * p.mass_m);
}

}  // namespace welllines
