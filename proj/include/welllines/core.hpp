#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace welllines {

// A point u+iv in the w-plane or x+iy in the z-plane.
using ComplexPoint = std::complex<double>;

// Branch subscript k of the multi-branch Lambert W function.
using BranchIndex = int;

// One of the four half-lines from the z-plane origin.
enum class AxialRay { PosReal, PosImag, NegReal, NegImag };

// Parity class of a Lambert line: Imaginary lines satisfy u = v tan(v)
// (image on the imaginary z-axis), Real lines satisfy u = -v cot(v)
// (image on the real z-axis).
enum class LineParity { Imaginary, Real };

// Parity of a bound-state wavefunction. Even states sit on Imaginary
// lines, Odd states on Real lines.
enum class StateParity { Even, Odd };

inline ComplexPoint ray_direction(AxialRay r) {
  switch (r) {
    case AxialRay::PosReal: return {1.0, 0.0};
    case AxialRay::PosImag: return {0.0, 1.0};
    case AxialRay::NegReal: return {-1.0, 0.0};
    case AxialRay::NegImag: return {0.0, -1.0};
  }
  return {1.0, 0.0};
}

inline LineParity ray_parity(AxialRay r) {
  return (r == AxialRay::PosImag || r == AxialRay::NegImag)
             ? LineParity::Imaginary
             : LineParity::Real;
}

inline const char* to_string(AxialRay r) {
  switch (r) {
    case AxialRay::PosReal: return "PosReal";
    case AxialRay::PosImag: return "PosImag";
    case AxialRay::NegReal: return "NegReal";
    case AxialRay::NegImag: return "NegImag";
  }
  return "?";
}

inline const char* to_string(LineParity p) {
  return p == LineParity::Imaginary ? "Imaginary" : "Real";
}

inline const char* to_string(StateParity p) {
  return p == StateParity::Even ? "Even" : "Odd";
}

// The identity of one Lambert line: branch index plus the axial ray of
// the z-plane whose preimage it is.
struct LambertLineSpec {
  BranchIndex branch;
  AxialRay ray;

  LineParity parity() const { return ray_parity(ray); }
};

// Thrown when an iterative evaluation fails to converge.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(BranchIndex k, ComplexPoint z)
      : std::runtime_error("lambert_w failed to converge: k=" +
                           std::to_string(k) + " z=(" +
                           std::to_string(z.real()) + "," +
                           std::to_string(z.imag()) + ")"),
        branch(k),
        argument(z) {}

  BranchIndex branch;
  ComplexPoint argument;
};

}  // namespace welllines
