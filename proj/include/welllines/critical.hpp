#pragma once

#include <cmath>
#include <vector>

#include "welllines/core.hpp"
#include "welllines/lambertw.hpp"

namespace welllines {

// One tangency of a strength circle with a Lambert line.  The tangency
// point is (-1, v_t), the critical radius is R_c = sqrt(1 + v_t^2),
// and the z-plane image (-1 + i v_t) e^{-1 + i v_t} lies on an axial
// ray with |z| = R_c / e.
struct CriticalStrength {
  int index_n;  // 1-based, ordered by v_t
  double v_t;
  double R_c;
  StateParity parity;
  ComplexPoint z_image;
  AxialRay ray;
};

namespace detail {

// z-plane image of the w-plane point (-1, v).
inline ComplexPoint spiral_point(double v) {
  return forward_map({-1.0, v});
}

// The spiral's argument is v + pi - arctan(v); it crosses an axial ray
// when v - arctan(v) = n pi / 2.  The left side is monotone in v, so
// bisection is safe.
inline double tangency_ordinate(int n) {
  auto f = [n](double v) { return v - std::atan(v) - n * kPi / 2.0; };
  double lo = 0.0, hi = n * kPi / 2.0 + kPi;  // f(hi) > 0 since atan < pi/2
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

inline AxialRay ray_of_image(ComplexPoint z) {
  if (std::abs(z.real()) >= std::abs(z.imag()))
    return z.real() > 0.0 ? AxialRay::PosReal : AxialRay::NegReal;
  return z.imag() > 0.0 ? AxialRay::PosImag : AxialRay::NegImag;
}

}  // namespace detail

// The first `count` critical strengths, ordered by tangency ordinate.
// Parities alternate starting with Even (the real lines through
// (-1, 0) are excluded, so n = 1 is the first imaginary-line tangency).
inline std::vector<CriticalStrength> critical_strengths(int count) {
  if (count < 1) throw std::invalid_argument("critical_strengths: count >= 1");
  std::vector<CriticalStrength> out;
  out.reserve(count);
  for (int n = 1; n <= count; ++n) {
    const double v = detail::tangency_ordinate(n);
    const ComplexPoint z = detail::spiral_point(v);
    CriticalStrength c;
    c.index_n = n;
    c.v_t = v;
    c.R_c = std::sqrt(1.0 + v * v);
    c.parity = (n % 2 == 1) ? StateParity::Even : StateParity::Odd;
    c.z_image = z;
    c.ray = detail::ray_of_image(z);
    out.push_back(c);
  }
  return out;
}

// |slope_product + 1| where slope_product = (dv/du along the Lambert
// line) * (v/u of the radius), with u taken from the parity equation
// at ordinate v_t and du/dv = u(u+1)/v + v.  Zero at a tangency.
inline double tangency_residual(double v_t, StateParity parity) {
  if (!(v_t > 0.0)) throw std::invalid_argument("tangency_residual: v_t > 0");
  const double c = std::cos(v_t), s = std::sin(v_t);
  double u;
  if (parity == StateParity::Even) {
    if (std::abs(c) < 1e-12)
      throw std::domain_error("tangency_residual: v_t at an imaginary-line asymptote");
    u = v_t * s / c;
  } else {
    if (std::abs(s) < 1e-12)
      throw std::domain_error("tangency_residual: v_t at a real-line asymptote");
    u = -v_t * c / s;
  }
  const double du_dv = u * (u + 1.0) / v_t + v_t;
  const double slope_product = (1.0 / du_dv) * (v_t / u);
  return std::abs(slope_product + 1.0);
}

// z-plane samples of the u = -1 line: (-1 + iv) e^{-1 + iv} at n
// uniform ordinates.  All points have modulus sqrt(1 + v^2) / e.
inline std::vector<ComplexPoint> spiral_samples(double v_min, double v_max,
                                                std::size_t n) {
  if (!(v_min >= 0.0) || !(v_max > v_min) || n < 2)
    throw std::invalid_argument("spiral_samples: need 0 <= v_min < v_max, n >= 2");
  std::vector<ComplexPoint> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double v = v_min + (v_max - v_min) * double(i) / double(n - 1);
    out.push_back(detail::spiral_point(v));
  }
  return out;
}

// The critical strength nearest to R and the signed relative margin
// (R - R_c) / R_c.
inline std::pair<CriticalStrength, double> sensitivity_margin(double R) {
  if (!(R > 0.0)) throw std::invalid_argument("sensitivity_margin: R > 0");
  // v_t grows like n pi / 2, so this count always reaches past R.
  const int count = std::max(2, static_cast<int>(std::ceil(2.0 * R / detail::kPi)) + 2);
  const auto all = critical_strengths(count);
  const CriticalStrength* best = &all.front();
  for (const auto& c : all)
    if (std::abs(R - c.R_c) < std::abs(R - best->R_c)) best = &c;
  return {*best, (R - best->R_c) / best->R_c};
}

}  // namespace welllines
