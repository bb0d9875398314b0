#pragma once

#include <cmath>
#include <vector>

#include "welllines/core.hpp"
#include "welllines/lambertw.hpp"

namespace welllines {

enum class Spacing { Linear, Log };

// One sampled Lambert line: w-plane points w_i = W_k(t_i z0) together
// with the strictly increasing parameter values t_i.
struct SampledCurve {
  LambertLineSpec spec;
  std::vector<ComplexPoint> points;
  std::vector<double> params;
};

namespace detail {

// Residual of the parity equation from the expanded forward map:
// Imaginary lines zero u cos v - v sin v, Real lines v cos v + u sin v.
inline double parity_residual(LineParity parity, ComplexPoint w) {
  const double u = w.real();
  const double v = w.imag();
  if (parity == LineParity::Imaginary)
    return u * std::cos(v) - v * std::sin(v);
  return v * std::cos(v) + u * std::sin(v);
}

constexpr double kCurveGap = 0.05;
constexpr int kMaxRefineLevels = 20;

inline void append_refined(const LambertLineSpec& spec, double t0,
                           ComplexPoint w0, double t1, ComplexPoint w1,
                           Spacing spacing, int level,
                           std::vector<double>& ts,
                           std::vector<ComplexPoint>& ws) {
  if (std::abs(w1 - w0) > kCurveGap && level < kMaxRefineLevels) {
    const double tm = spacing == Spacing::Log ? std::sqrt(t0 * t1)
                                              : 0.5 * (t0 + t1);
    const ComplexPoint wm =
        lambert_w(spec.branch, tm * ray_direction(spec.ray));
    append_refined(spec, t0, w0, tm, wm, spacing, level + 1, ts, ws);
    append_refined(spec, tm, wm, t1, w1, spacing, level + 1, ts, ws);
    return;
  }
  ts.push_back(t1);
  ws.push_back(w1);
}

}  // namespace detail

// Draw one Lambert line as a parametric curve w(t) = W_k(t z0),
// t in [t_min, t_max].  Consecutive points farther apart than 0.05 in
// the w-plane are refined by bisection in t.  The real branches 0 and
// -1 on the negative real ray have a corner at t = 1/e (z = -1/e);
// that parameter value is inserted exactly so the corner is sampled.
inline SampledCurve sample_lambert_line(LambertLineSpec spec, double t_min,
                                        double t_max, std::size_t n,
                                        Spacing spacing) {
  if (!(t_min > 0.0) || !(t_max > t_min) || n < 2)
    throw std::invalid_argument("sample_lambert_line: need 0 < t_min < t_max, n >= 2");

  std::vector<double> base;
  base.reserve(n + 1);
  if (spacing == Spacing::Log) {
    const double l0 = std::log(t_min), l1 = std::log(t_max);
    for (std::size_t i = 0; i < n; ++i)
      base.push_back(std::exp(l0 + (l1 - l0) * double(i) / double(n - 1)));
  } else {
    for (std::size_t i = 0; i < n; ++i)
      base.push_back(t_min + (t_max - t_min) * double(i) / double(n - 1));
  }
  base.front() = t_min;
  base.back() = t_max;

  const double corner = 1.0 / detail::kE;
  if ((spec.branch == 0 || spec.branch == -1) &&
      spec.ray == AxialRay::NegReal && corner > t_min && corner < t_max) {
    for (std::size_t i = 0; i + 1 < base.size(); ++i) {
      if (base[i] < corner && base[i + 1] > corner) {
        base.insert(base.begin() + i + 1, corner);
        break;
      }
    }
  }

  const ComplexPoint z0 = ray_direction(spec.ray);
  SampledCurve out{spec, {}, {}};
  out.points.push_back(lambert_w(spec.branch, base[0] * z0));
  out.params.push_back(base[0]);
  for (std::size_t i = 1; i < base.size(); ++i) {
    const ComplexPoint w = lambert_w(spec.branch, base[i] * z0);
    detail::append_refined(spec, out.params.back(), out.points.back(),
                           base[i], w, spacing, 0, out.params, out.points);
  }
  return out;
}

// Ordinates v >= 0 where this Lambert line crosses the vertical axis
// u = 0.  These are exact multiples of pi/2: even multiples for
// Imaginary parity, odd for Real (Table 1).  Candidates are filtered to
// the given branch and ray by checking that w = iv maps onto the
// spec's axial ray and back onto the spec's branch.
inline std::vector<double> v_axis_crossings(LambertLineSpec spec,
                                            double v_max) {
  std::vector<double> out;
  const LineParity parity = spec.parity();
  const int start = parity == LineParity::Imaginary ? 0 : 1;
  for (int m = start;; m += 2) {
    const double v = m * detail::kPi / 2.0;
    if (v > v_max) break;
    const ComplexPoint w{0.0, v};
    const ComplexPoint z = forward_map(w);
    // On which ray does F(iv) land?
    AxialRay ray;
    if (parity == LineParity::Imaginary) {
      if (std::abs(z.real()) > 1e-9 * std::max(1.0, std::abs(z))) continue;
      if (v == 0.0) {
        // The origin belongs to the branch-0 imaginary lines on both
        // imaginary rays.
        if (spec.branch == 0) out.push_back(0.0);
        continue;
      }
      ray = z.imag() > 0.0 ? AxialRay::PosImag : AxialRay::NegImag;
    } else {
      if (std::abs(z.imag()) > 1e-9 * std::max(1.0, std::abs(z))) continue;
      ray = z.real() > 0.0 ? AxialRay::PosReal : AxialRay::NegReal;
    }
    if (ray != spec.ray) continue;
    if (std::abs(lambert_w(spec.branch, z) - w) > 1e-9) continue;
    out.push_back(v);
  }
  return out;
}

// Horizontal asymptote ordinates 0 < v <= v_max for lines of this
// parity: odd multiples of pi/2 for Imaginary lines, even (nonzero)
// multiples for Real lines.
inline std::vector<double> asymptotes(LambertLineSpec spec, double v_max) {
  std::vector<double> out;
  const int start = spec.parity() == LineParity::Imaginary ? 1 : 2;
  for (int m = start;; m += 2) {
    const double v = m * detail::kPi / 2.0;
    if (v > v_max) break;
    out.push_back(v);
  }
  return out;
}

// z-plane image of the circle |w| = R: z_i = F(R exp(i theta_i)) for
// theta uniform on [0, 2 pi].  The first and last points coincide.
inline std::vector<ComplexPoint> image_of_circle(double R, std::size_t n) {
  if (!(R > 0.0) || n < 8)
    throw std::invalid_argument("image_of_circle: need R > 0, n >= 8");
  std::vector<ComplexPoint> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double theta = 2.0 * detail::kPi * double(i) / double(n - 1);
    out.push_back(forward_map(std::polar(R, theta)));
  }
  out.back() = out.front();
  return out;
}

}  // namespace welllines
