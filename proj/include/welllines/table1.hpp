#pragma once

#include <array>
#include <string>

namespace welllines {

// One row of the Lambert line properties table: a property name and
// its value for the Imaginary and Real line families.
struct LinePropertyRow {
  std::string property;
  std::string imaginary;
  std::string real;
};

// Machine-readable classification of the two Lambert line families.
// Used as the source of truth for parity, crossings, asymptotes, line
// styles, and wavefunction parity.
inline std::array<LinePropertyRow, 6> emit_table1() {
  return {{
      {"equation", "u = v tan(v)", "u = -v cot(v)"},
      {"ordinate_crossings_pi_over_2_multiple", "EVEN", "ODD"},
      {"asymptote_crossings_pi_over_2_multiple", "ODD", "EVEN"},
      {"line_style", "BLUE SOLID", "RED DASHED"},
      {"axial_ray", "x = 0, y < 0 or y > 0", "x > 0 or x < 0, y = 0"},
      {"wavefunction_parity", "EVEN", "ODD"},
  }};
}

}  // namespace welllines
