#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "welllines/fsw.hpp"

using namespace welllines;
using Catch::Matchers::WithinAbs;

namespace {

constexpr double kPi = std::numbers::pi;

int count_of(const std::vector<BoundState>& states, StateParity p, int quadrant) {
  int n = 0;
  for (const auto& s : states)
    if (s.parity == p && s.quadrant == quadrant) ++n;
  return n;
}

// Independent oracle: bisection on the pole-free parity residual over a
// theta bracket on the circle of radius R.
double bisect_oracle(double R, StateParity p, double lo, double hi) {
  auto f = [R, p](double th) {
    const double u = R * std::cos(th), v = R * std::sin(th);
    return p == StateParity::Even ? u * std::cos(v) - v * std::sin(v)
                                  : v * std::cos(v) + u * std::sin(v);
  };
  REQUIRE(f(lo) * f(hi) < 0.0);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(lo) * f(mid) <= 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("strength formula") {
  CHECK_THAT(strength_from_params({1.0, 12.5, 1.0, 1.0}), WithinAbs(5.0, 1e-14));
  CHECK_THAT(strength_from_params({2.0, 12.5, 1.0, 1.0}), WithinAbs(10.0, 1e-14));
  const double R1 = strength_from_params({1.3, 3.7, 0.8, 1.1});
  const double R2 = strength_from_params({1.3, 7.4, 0.8, 1.1});
  CHECK_THAT(R2 / R1, WithinAbs(std::sqrt(2.0), 1e-13));
  CHECK_THROWS_AS(strength_from_params({-1.0, 1.0, 1.0, 1.0}),
                  std::invalid_argument);
}

TEST_CASE("R = 5 upper-half-plane spectrum") {
  const auto states = solve_states(5.0);
  REQUIRE(states.size() == 6);
  CHECK(count_of(states, StateParity::Even, 1) == 2);
  CHECK(count_of(states, StateParity::Odd, 1) == 2);
  CHECK(count_of(states, StateParity::Even, 2) == 1);
  CHECK(count_of(states, StateParity::Odd, 2) == 1);

  // Ground even state against the bisection oracle.
  const double th = bisect_oracle(5.0, StateParity::Even, 1e-6, 0.5);
  const BoundState* ground = nullptr;
  for (const auto& s : states)
    if (s.parity == StateParity::Even && (!ground || s.v < ground->v))
      ground = &s;
  REQUIRE(ground);
  CHECK_THAT(ground->u, WithinAbs(5.0 * std::cos(th), 1e-10));
  CHECK_THAT(ground->v, WithinAbs(5.0 * std::sin(th), 1e-10));

  // States are sorted by increasing v within parity.
  for (std::size_t i = 1; i < states.size(); ++i)
    if (states[i].parity == states[i - 1].parity)
      CHECK(states[i].v > states[i - 1].v);
}

TEST_CASE("R = 4.2 has four states; excluding u < 0 at R = 5 leaves four") {
  CHECK(solve_states(4.2).size() == 4);
  SolveOptions opts;
  opts.include_negative_u = false;
  const auto physical = solve_states(5.0, opts);
  CHECK(physical.size() == 4);
  // Standard FSW count floor(2R/pi) + 1.
  CHECK(physical.size() == std::size_t(std::floor(2.0 * 5.0 / kPi)) + 1);
  for (const auto& s : physical) CHECK(s.u >= 0.0);
}

TEST_CASE("every state satisfies its parity equation and the circle") {
  for (double R : {0.7, 2.9, 5.0, 8.3}) {
    for (const auto& s : solve_states(R)) {
      CHECK(std::abs(s.u * s.u + s.v * s.v - R * R) <= 1e-10 * R * R);
      const double resid =
          s.parity == StateParity::Even
              ? s.u * std::cos(s.v) - s.v * std::sin(s.v)
              : s.v * std::cos(s.v) + s.u * std::sin(s.v);
      CHECK(std::abs(resid) <= 1e-10 * std::max(1.0, R));
      CHECK(s.v > 0.0);
      CHECK(std::abs(s.v) > 1e-6);  // (R, 0) and (-R, 0) excluded
    }
  }
}

TEST_CASE("z-plane solving agrees with w-plane solving") {
  for (double R : {0.5, 4.2, 5.0, 9.7}) {
    const auto a = solve_states(R);
    const auto b = states_via_z_plane(R);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].parity == b[i].parity);
      CHECK_THAT(a[i].u, WithinAbs(b[i].u, 1e-8));
      CHECK_THAT(a[i].v, WithinAbs(b[i].v, 1e-8));
    }
  }
  const auto small = states_via_z_plane(0.5);
  REQUIRE(small.size() == 1);
  CHECK(small[0].parity == StateParity::Even);
  CHECK(small[0].quadrant == 1);
  CHECK(states_via_z_plane(4.2).size() == 4);
}

TEST_CASE("state count is monotone in R and jumps by two at a tangency") {
  const auto c42 = solve_states(4.2).size();
  const auto c461 = solve_states(4.61).size();
  const auto c5 = solve_states(5.0).size();
  CHECK(c42 == 4);
  CHECK(c461 == 6);
  CHECK(c5 == 6);
}

TEST_CASE("lower half-plane states mirror the upper ones") {
  SolveOptions opts;
  opts.include_lower_half_plane = true;
  const auto states = solve_states(5.0, opts);
  REQUIRE(states.size() == 12);
  for (const auto& s : states) {
    bool has_mirror = false;
    for (const auto& t : states)
      if (t.parity == s.parity && std::abs(t.u - s.u) < 1e-12 &&
          std::abs(t.v + s.v) < 1e-12)
        has_mirror = true;
    CHECK(has_mirror);
  }
}

TEST_CASE("near-critical pair is flagged at R = 4.6034") {
  const auto states = solve_states(4.6034);
  int flagged = 0;
  for (const auto& s : states)
    if (s.near_critical) {
      ++flagged;
      CHECK(s.parity == StateParity::Odd);
      CHECK_THAT(s.u, WithinAbs(-1.0, 0.2));
    }
  CHECK(flagged == 2);
  // Away from a tangency nothing is flagged.
  for (const auto& s : solve_states(5.0)) CHECK_FALSE(s.near_critical);
}

TEST_CASE("energy mapping") {
  const WellParams p{1.0, 12.5, 1.0, 1.0};  // R = 5
  BoundState boundary{StateParity::Even, 0.0, 5.0, 5.0, 1, false};
  CHECK_THAT(energy_of_state(boundary, p), WithinAbs(0.0, 1e-14));
  BoundState bottom{StateParity::Even, 5.0, 0.0, 5.0, 1, false};
  CHECK_THAT(energy_of_state(bottom, p), WithinAbs(-12.5, 1e-10));

  const auto states = solve_states(5.0);
  for (const auto& s : states) {
    const double E = energy_of_state(s, p);
    CHECK_THAT(E, WithinAbs(-s.u * s.u / 2.0, 1e-12));
    CHECK(E > -12.5);
    CHECK(E < 0.0);
  }

  const WellParams wrong{1.0, 8.0, 1.0, 1.0};
  CHECK_THROWS_AS(energy_of_state(states[0], wrong), std::invalid_argument);
}
