#pragma once

#include <charconv>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "welllines/core.hpp"
#include "welllines/critical.hpp"
#include "welllines/fsw.hpp"
#include "welllines/sheets3d.hpp"
#include "welllines/table1.hpp"
#include "welllines/wmap.hpp"

namespace welllines {

// Shortest round-trip decimal rendering; deterministic across runs.
inline std::string num(double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

inline void csv_lines(std::ostream& os, const std::vector<SampledCurve>& curves) {
  os << "branch,ray,parity,t,u,v\n";
  for (const auto& c : curves)
    for (std::size_t i = 0; i < c.points.size(); ++i)
      os << c.spec.branch << ',' << to_string(c.spec.ray) << ','
         << to_string(c.spec.parity()) << ',' << num(c.params[i]) << ','
         << num(c.points[i].real()) << ',' << num(c.points[i].imag()) << '\n';
}

inline void csv_solve(std::ostream& os, const std::vector<BoundState>& states,
                      const WellParams* params = nullptr) {
  os << "parity,quadrant,u,v,R,near_critical";
  if (params) os << ",energy";
  os << '\n';
  for (const auto& s : states) {
    os << to_string(s.parity) << ',' << s.quadrant << ',' << num(s.u) << ','
       << num(s.v) << ',' << num(s.R) << ',' << (s.near_critical ? 1 : 0);
    if (params) os << ',' << num(energy_of_state(s, *params));
    os << '\n';
  }
}

inline void csv_critical(std::ostream& os,
                         const std::vector<CriticalStrength>& cs) {
  os << "n,parity,v_t,R_c,z_re,z_im,ray\n";
  for (const auto& c : cs)
    os << c.index_n << ',' << to_string(c.parity) << ',' << num(c.v_t) << ','
       << num(c.R_c) << ',' << num(c.z_image.real()) << ','
       << num(c.z_image.imag()) << ',' << to_string(c.ray) << '\n';
}

inline void csv_spiral(std::ostream& os, const std::vector<ComplexPoint>& pts,
                       double v_min, double v_max) {
  os << "v,x,y\n";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double v =
        v_min + (v_max - v_min) * double(i) / double(pts.size() - 1);
    os << num(v) << ',' << num(pts[i].real()) << ',' << num(pts[i].imag())
       << '\n';
  }
}

inline void csv_sheets(std::ostream& os, const std::vector<SheetCurve>& curves) {
  os << "curve_id,u,v,R\n";
  for (std::size_t id = 0; id < curves.size(); ++id)
    for (const auto& p : curves[id].points)
      os << id << ',' << num(p.u) << ',' << num(p.v) << ',' << num(p.R) << '\n';
}

inline void csv_table1(std::ostream& os) {
  os << "property,imaginary,real\n";
  for (const auto& r : emit_table1())
    os << r.property << ",\"" << r.imaginary << "\",\"" << r.real << "\"\n";
}

inline void csv_circle_image(std::ostream& os,
                             const std::vector<ComplexPoint>& pts) {
  os << "theta,x,y\n";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double theta =
        2.0 * detail::kPi * double(i) / double(pts.size() - 1);
    os << num(theta) << ',' << num(pts[i].real()) << ',' << num(pts[i].imag())
       << '\n';
  }
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

inline nlohmann::json json_lines(const std::vector<SampledCurve>& curves,
                                 double v_max_meta = 8.0) {
  nlohmann::json j;
  j["command"] = "lines";
  auto& arr = j["curves"];
  arr = nlohmann::json::array();
  for (const auto& c : curves) {
    nlohmann::json jc;
    jc["branch"] = c.spec.branch;
    jc["ray"] = to_string(c.spec.ray);
    jc["parity"] = to_string(c.spec.parity());
    // Branch coverage of the v-axis, derived from the curve itself.
    jc["v_axis_crossings"] = v_axis_crossings(c.spec, v_max_meta);
    jc["asymptotes"] = asymptotes(c.spec, v_max_meta);
    auto& pts = jc["points"];
    pts = nlohmann::json::array();
    for (std::size_t i = 0; i < c.points.size(); ++i)
      pts.push_back({{"t", c.params[i]},
                     {"u", c.points[i].real()},
                     {"v", c.points[i].imag()}});
    arr.push_back(std::move(jc));
  }
  return j;
}

inline nlohmann::json json_solve(const std::vector<BoundState>& states,
                                 const WellParams* params = nullptr) {
  nlohmann::json j;
  j["command"] = "solve";
  auto& arr = j["states"];
  arr = nlohmann::json::array();
  for (const auto& s : states) {
    nlohmann::json js{{"parity", to_string(s.parity)},
                      {"quadrant", s.quadrant},
                      {"u", s.u},
                      {"v", s.v},
                      {"R", s.R},
                      {"near_critical", s.near_critical}};
    if (params) js["energy"] = energy_of_state(s, *params);
    arr.push_back(std::move(js));
  }
  return j;
}

inline nlohmann::json json_critical(const std::vector<CriticalStrength>& cs) {
  nlohmann::json j;
  j["command"] = "critical";
  auto& arr = j["critical_strengths"];
  arr = nlohmann::json::array();
  for (const auto& c : cs)
    arr.push_back({{"n", c.index_n},
                   {"parity", to_string(c.parity)},
                   {"v_t", c.v_t},
                   {"R_c", c.R_c},
                   {"z_re", c.z_image.real()},
                   {"z_im", c.z_image.imag()},
                   {"ray", to_string(c.ray)}});
  return j;
}

inline nlohmann::json json_spiral(const std::vector<ComplexPoint>& pts,
                                  double v_min, double v_max) {
  nlohmann::json j;
  j["command"] = "spiral";
  j["v_min"] = v_min;
  j["v_max"] = v_max;
  auto& arr = j["points"];
  arr = nlohmann::json::array();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double v =
        v_min + (v_max - v_min) * double(i) / double(pts.size() - 1);
    arr.push_back({{"v", v}, {"x", pts[i].real()}, {"y", pts[i].imag()}});
  }
  return j;
}

inline nlohmann::json json_sheets(const std::vector<SheetCurve>& curves,
                                  double R_max) {
  nlohmann::json j;
  j["command"] = "sheets";
  j["R_max"] = R_max;
  j["sheet_selection"] =
      "sheets whose tangency ordinate satisfies v_t <= sqrt(R_max^2 - 1)";
  auto& arr = j["curves"];
  arr = nlohmann::json::array();
  for (std::size_t id = 0; id < curves.size(); ++id) {
    nlohmann::json jc;
    jc["curve_id"] = id;
    jc["branch"] = curves[id].spec.branch;
    jc["ray"] = to_string(curves[id].spec.ray);
    auto& pts = jc["points"];
    pts = nlohmann::json::array();
    for (const auto& p : curves[id].points)
      pts.push_back({{"u", p.u}, {"v", p.v}, {"R", p.R}});
    arr.push_back(std::move(jc));
  }
  return j;
}

inline nlohmann::json json_table1() {
  nlohmann::json j;
  j["command"] = "table1";
  auto& arr = j["rows"];
  arr = nlohmann::json::array();
  for (const auto& r : emit_table1())
    arr.push_back({{"property", r.property},
                   {"imaginary", r.imaginary},
                   {"real", r.real}});
  return j;
}

inline std::array<LinePropertyRow, 6> parse_table1(const nlohmann::json& j) {
  std::array<LinePropertyRow, 6> rows;
  const auto& arr = j.at("rows");
  for (std::size_t i = 0; i < 6; ++i)
    rows[i] = {arr.at(i).at("property"), arr.at(i).at("imaginary"),
               arr.at(i).at("real")};
  return rows;
}

// ---------------------------------------------------------------------------
// SVG
// ---------------------------------------------------------------------------

// Line styles follow the conventions used throughout: imaginary lines
// solid blue, real lines dashed red, asymptotes blue-dotted and
// red-dash-dot, branch 0/-1 real-line overlays green with +-0.3
// vertical offsets.
struct SvgStyle {
  std::string stroke;
  std::string dasharray;  // empty for solid
};

inline SvgStyle svg_style(LineParity p) {
  return p == LineParity::Imaginary ? SvgStyle{"#0000cc", ""}
                                    : SvgStyle{"#cc0000", "7,4"};
}

inline SvgStyle svg_asymptote_style(LineParity p) {
  return p == LineParity::Imaginary ? SvgStyle{"#0000cc", "1,4"}
                                    : SvgStyle{"#cc0000", "9,3,2,3"};
}

inline SvgStyle svg_overlay_style(BranchIndex branch) {
  return branch == 0 ? SvgStyle{"#008800", ""} : SvgStyle{"#008800", "7,4"};
}

class SvgWriter {
 public:
  SvgWriter(double xmin, double xmax, double ymin, double ymax,
            int width = 720, int height = 720)
      : xmin_(xmin), xmax_(xmax), ymin_(ymin), ymax_(ymax),
        width_(width), height_(height) {}

  void polyline(const std::vector<ComplexPoint>& pts, const SvgStyle& style) {
    if (pts.size() < 2) return;
    body_ << "<polyline fill=\"none\" stroke=\"" << style.stroke << "\"";
    if (!style.dasharray.empty())
      body_ << " stroke-dasharray=\"" << style.dasharray << "\"";
    body_ << " points=\"";
    bool first = true;
    for (const auto& p : pts) {
      if (!visible(p)) {
        // Break the polyline at clipped points to keep asymptotic
        // excursions from drawing across the frame.
        if (!first) body_ << "\" /><polyline fill=\"none\" stroke=\""
                          << style.stroke << "\" points=\"";
        first = true;
        continue;
      }
      if (!first) body_ << ' ';
      body_ << num(sx(p.real())) << ',' << num(sy(p.imag()));
      first = false;
    }
    body_ << "\" />\n";
  }

  void hline(double y, const SvgStyle& style) {
    polyline({{xmin_, y}, {xmax_, y}}, style);
  }

  void dot(ComplexPoint p, const std::string& fill) {
    if (!visible(p)) return;
    body_ << "<circle cx=\"" << num(sx(p.real())) << "\" cy=\""
          << num(sy(p.imag())) << "\" r=\"4\" fill=\"" << fill << "\" />\n";
  }

  void axes() {
    body_ << "<line x1=\"" << num(sx(xmin_)) << "\" y1=\"" << num(sy(0.0))
          << "\" x2=\"" << num(sx(xmax_)) << "\" y2=\"" << num(sy(0.0))
          << "\" stroke=\"#888888\" />\n";
    body_ << "<line x1=\"" << num(sx(0.0)) << "\" y1=\"" << num(sy(ymin_))
          << "\" x2=\"" << num(sx(0.0)) << "\" y2=\"" << num(sy(ymax_))
          << "\" stroke=\"#888888\" />\n";
  }

  std::string finish() const {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_
       << "\" height=\"" << height_ << "\" viewBox=\"0 0 " << width_ << ' '
       << height_ << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\" />\n"
       << body_.str() << "</svg>\n";
    return os.str();
  }

 private:
  bool visible(ComplexPoint p) const {
    const double mx = 0.05 * (xmax_ - xmin_), my = 0.05 * (ymax_ - ymin_);
    return p.real() >= xmin_ - mx && p.real() <= xmax_ + mx &&
           p.imag() >= ymin_ - my && p.imag() <= ymax_ + my;
  }
  double sx(double x) const {
    return (x - xmin_) / (xmax_ - xmin_) * width_;
  }
  double sy(double y) const {
    return (ymax_ - y) / (ymax_ - ymin_) * height_;
  }

  double xmin_, xmax_, ymin_, ymax_;
  int width_, height_;
  std::ostringstream body_;
};

}  // namespace welllines
