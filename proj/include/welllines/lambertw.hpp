#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "welllines/core.hpp"

namespace welllines {

// z = F(w) = w exp(w), evaluated through the expanded real/imaginary
// form exp(u)[u cos v - v sin v] + i exp(u)[v cos v + u sin v].
inline ComplexPoint forward_map(ComplexPoint w) {
  const double u = w.real();
  const double v = w.imag();
  if (u > 700.0)
    throw std::range_error("forward_map: exp(u) overflows for u > 700");
  const double eu = std::exp(u);
  const double cv = std::cos(v);
  const double sv = std::sin(v);
  return {eu * (u * cv - v * sv), eu * (v * cv + u * sv)};
}

namespace detail {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kE = std::numbers::e;
// Omega constant, W_0(1).
inline constexpr double kOmega = 0.5671432904097838;

// Series about the branch point w = -1, z = -1/e, in the variable
// p = +-sqrt(2(ez+1)).  Coefficients from the standard expansion.
inline ComplexPoint branch_point_series(ComplexPoint p) {
  static constexpr double mu[] = {
      -1.0,
      1.0,
      -1.0 / 3.0,
      11.0 / 72.0,
      -43.0 / 540.0,
      769.0 / 17280.0,
      -221.0 / 8505.0,
      680863.0 / 43545600.0,
      -1963.0 / 204120.0,
      226287557.0 / 37623398400.0,
  };
  ComplexPoint acc = mu[9];
  for (int i = 8; i >= 0; --i) acc = acc * p + mu[i];
  return acc;
}

// Halley refinement of w exp(w) = z.  Returns true on convergence.
inline bool halley(ComplexPoint z, ComplexPoint& w) {
  for (int it = 0; it < 64; ++it) {
    const ComplexPoint ew = std::exp(w);
    const ComplexPoint f = w * ew - z;
    // Near the branch point the derivative vanishes and rounding in f
    // keeps the step from shrinking further; a residual at the
    // floating-point floor is converged.
    if (std::abs(f) <= 4.0 * std::numeric_limits<double>::epsilon() *
                          std::abs(z))
      return true;
    const ComplexPoint wp1 = w + 1.0;
    const ComplexPoint denom =
        ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    const ComplexPoint step = f / denom;
    w -= step;
    if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(w))) return true;
  }
  return false;
}

// Real-axis Halley for the real branches (k = 0 with x >= -1/e, and
// k = -1 with -1/e <= x < 0).  Keeps the imaginary part exactly zero.
inline bool halley_real(double x, double& u) {
  for (int it = 0; it < 64; ++it) {
    const double eu = std::exp(u);
    const double f = u * eu - x;
    if (std::abs(f) <= 4.0 * std::numeric_limits<double>::epsilon() *
                          std::abs(x))
      return true;
    const double up1 = u + 1.0;
    const double denom = eu * up1 - (u + 2.0) * f / (2.0 * up1);
    const double step = f / denom;
    u -= step;
    if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(u))) return true;
  }
  return false;
}

inline double lambert_w_real(BranchIndex k, double x) {
  const double bp = -1.0 / kE;
  if (k == 0) {
    if (x == 0.0) return 0.0;
    double u;
    if (std::abs(x - bp) < 1e-3) {
      return branch_point_series(std::sqrt(2.0 * (kE * x + 1.0))).real();
    } else if (x < -0.25) {
      u = branch_point_series(std::sqrt(2.0 * (kE * x + 1.0))).real();
    } else if (x < 1.0) {
      u = x * (1.0 - x);
    } else if (x < 10.0) {
      u = kOmega + (x - 1.0) * kOmega / (1.0 + kOmega);
    } else {
      const double l = std::log(x);
      u = l - std::log(l);
    }
    if (!halley_real(x, u)) throw convergence_error(k, {x, 0.0});
    return u;
  }
  // k == -1, x in [-1/e, 0)
  if (std::abs(x - bp) < 1e-3) {
    return branch_point_series(-std::sqrt(2.0 * (kE * x + 1.0))).real();
  }
  double u;
  if (x < -0.25) {
    u = branch_point_series(-std::sqrt(2.0 * (kE * x + 1.0))).real();
  } else {
    const double l = std::log(-x);
    u = l - std::log(-l);
  }
  if (!halley_real(x, u)) throw convergence_error(k, {x, 0.0});
  return u;
}

inline ComplexPoint lambert_w_upper(BranchIndex k, ComplexPoint z) {
  // Callers guarantee Im(z) >= 0 here.
  const double bp = -1.0 / kE;
  const ComplexPoint two_pi_ik{0.0, 2.0 * kPi * k};

  // Real branches stay exactly real.
  if (z.imag() == 0.0) {
    const double x = z.real();
    if (k == 0 && x >= bp) return {lambert_w_real(0, x), 0.0};
    if (k == -1 && x >= bp && x < 0.0) return {lambert_w_real(-1, x), 0.0};
  }

  const ComplexPoint dz = z - ComplexPoint{bp, 0.0};
  const bool near_corner = std::abs(dz) < 1e-3;
  if ((k == 0 || k == -1) && near_corner) {
    // The series alone is accurate inside this disc; Halley's
    // denominators degrade as w -> -1.
    const ComplexPoint p = std::sqrt(2.0 * (kE * z + 1.0));
    return branch_point_series(k == 0 ? p : -p);
  }

  // Candidate initial guesses, tried in order until Halley converges.
  // The preferred init depends on where z sits, but no single choice
  // works everywhere (the log init can land near the w = -1
  // singularity for moderate z, for example).
  ComplexPoint inits[4];
  int n_inits = 0;
  if ((k == 0 || k == -1) && std::abs(dz) < 0.1) {
    const ComplexPoint p = std::sqrt(2.0 * (kE * z + 1.0));
    inits[n_inits++] = branch_point_series(k == 0 ? p : -p);
  }
  if (k == 0 && std::abs(z) < 1.0 && z.imag() != 0.0) {
    // Excluded for on-cut points (real z < -1/e): a real init would
    // trap Halley on the real axis.
    inits[n_inits++] = z * (1.0 - z + 1.5 * z * z);
  }
  const ComplexPoint l1 = std::log(z) + two_pi_ik;
  if (std::abs(l1) > 1.0) inits[n_inits++] = l1 - std::log(l1);
  if (k == 0) {
    // Expansion about W_0(1) covers the annulus around z = 1.
    inits[n_inits++] = kOmega + (z - 1.0) * (kOmega / (1.0 + kOmega));
  }
  // A converged root must also lie in branch k, which the
  // unwinding-number identity k = ceil((Im(w + Log w) - pi)/(2 pi))
  // characterizes exactly.  A root caught in an adjacent branch is
  // repaired by shifting the init across the strip and iterating again.
  auto branch_of = [](ComplexPoint w) {
    const ComplexPoint t = w + std::log(w);
    // On-cut points sit exactly on the strip boundary Im t = (2k+1)pi;
    // the small backoff keeps roundoff from tipping them into the next
    // branch (legitimate upper-half-plane points only approach the
    // boundary from below).
    return static_cast<int>(std::ceil((t.imag() - kPi - 1e-9) / (2.0 * kPi)));
  };
  for (int i = 0; i < n_inits; ++i) {
    ComplexPoint w = inits[i];
    if (!halley(z, w)) continue;
    int got = branch_of(w);
    for (int repair = 0; repair < 4 && got != k; ++repair) {
      w += ComplexPoint{0.0, 2.0 * kPi * (k - got)};
      if (!halley(z, w)) break;
      got = branch_of(w);
    }
    if (got == k) return w;
  }
  throw convergence_error(k, z);
}

}  // namespace detail

// Branch k of the Lambert W function: the solution of w exp(w) = z
// whose imaginary part lies in the strip ((2k-1)pi, (2k+1)pi], with
// the usual branch cuts along the negative real z-axis.
inline ComplexPoint lambert_w(BranchIndex k, ComplexPoint z) {
  if (z == ComplexPoint{0.0, 0.0}) {
    if (k == 0) return {0.0, 0.0};
    throw std::domain_error("lambert_w: z = 0 is a singularity of branch " +
                            std::to_string(k));
  }
  // Mirror symmetry W_k(conj z) = conj(W_{-k}(z)) reduces everything to
  // the closed upper half-plane.
  if (std::signbit(z.imag()))
    return std::conj(detail::lambert_w_upper(-k, std::conj(z)));
  return detail::lambert_w_upper(k, z);
}

}  // namespace welllines
