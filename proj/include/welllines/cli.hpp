#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "welllines/export.hpp"

namespace welllines {

enum class Command { Lines, Solve, Critical, Spiral, Sheets, Figure, Table1 };
enum class Format { CSV, JSON, SVG };

// One export request: a command, an output format, a destination path
// (empty for stdout), and free-form options.
struct ExportJob {
  Command command;
  Format format = Format::CSV;
  std::string output_path;
  std::map<std::string, std::string> options;
};

namespace cli_detail {

inline double opt_double(const ExportJob& job, const std::string& key,
                         double fallback) {
  auto it = job.options.find(key);
  if (it == job.options.end()) return fallback;
  try {
    return std::stod(it->second);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad numeric option --" + key + "=" + it->second);
  }
}

inline long opt_long(const ExportJob& job, const std::string& key,
                     long fallback) {
  auto it = job.options.find(key);
  if (it == job.options.end()) return fallback;
  try {
    return std::stol(it->second);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad integer option --" + key + "=" + it->second);
  }
}

inline bool opt_bool(const ExportJob& job, const std::string& key,
                     bool fallback) {
  auto it = job.options.find(key);
  if (it == job.options.end()) return fallback;
  return it->second == "1" || it->second == "true";
}

inline double default_tolerance() {
  if (const char* env = std::getenv("WELLLINES_TOL")) {
    try {
      return std::stod(env);
    } catch (const std::exception&) {
    }
  }
  return 1e-10;
}

inline SolveOptions solve_options(const ExportJob& job) {
  SolveOptions o;
  o.include_negative_u = opt_bool(job, "include-negative-u", true);
  o.include_lower_half_plane = opt_bool(job, "include-lower-half", false);
  o.tolerance = opt_double(job, "tol", default_tolerance());
  return o;
}

inline std::optional<WellParams> well_params(const ExportJob& job) {
  const bool any = job.options.count("L") || job.options.count("V0") ||
                   job.options.count("mass") || job.options.count("hbar");
  if (!any) return std::nullopt;
  if (!(job.options.count("L") && job.options.count("V0") &&
        job.options.count("mass") && job.options.count("hbar")))
    throw std::invalid_argument("well parameters require all of --L --V0 --mass --hbar");
  return WellParams{opt_double(job, "L", 0), opt_double(job, "V0", 0),
                    opt_double(job, "mass", 0), opt_double(job, "hbar", 0)};
}

inline AxialRay parse_ray(const std::string& s) {
  if (s == "PosReal") return AxialRay::PosReal;
  if (s == "PosImag") return AxialRay::PosImag;
  if (s == "NegReal") return AxialRay::NegReal;
  if (s == "NegImag") return AxialRay::NegImag;
  throw std::invalid_argument("unknown ray: " + s);
}

// The Lambert line set drawn in the all-branches figures.
inline std::vector<LambertLineSpec> default_line_specs() {
  std::vector<LambertLineSpec> specs;
  for (BranchIndex k = -3; k <= 3; ++k)
    for (AxialRay ray : {AxialRay::PosReal, AxialRay::PosImag,
                         AxialRay::NegReal, AxialRay::NegImag})
      specs.push_back({k, ray});
  return specs;
}

inline std::vector<SampledCurve> sample_lines(
    const std::vector<LambertLineSpec>& specs, double t_min, double t_max,
    std::size_t n) {
  std::vector<SampledCurve> out;
  out.reserve(specs.size());
  for (const auto& s : specs)
    out.push_back(sample_lambert_line(s, t_min, t_max, n, Spacing::Log));
  return out;
}

inline std::string render_lines_svg(const std::vector<SampledCurve>& curves,
                                    bool with_asymptotes, bool with_overlays,
                                    const std::vector<BoundState>* states,
                                    const std::vector<double>& circle_radii) {
  const double lim = 8.0;
  SvgWriter svg(-lim, lim, -lim, lim);
  svg.axes();
  if (with_asymptotes) {
    for (LineParity p : {LineParity::Imaginary, LineParity::Real}) {
      for (double v : asymptotes({0, p == LineParity::Imaginary
                                         ? AxialRay::PosImag
                                         : AxialRay::PosReal},
                                 lim)) {
        svg.hline(v, svg_asymptote_style(p));
        svg.hline(-v, svg_asymptote_style(p));
      }
    }
  }
  for (const auto& c : curves)
    svg.polyline(c.points, svg_style(c.spec.parity()));
  if (with_overlays) {
    // Branch 0/-1 real Lambert lines redrawn in green, offset +-0.3 so
    // the real-valued stretches are visible off the abscissa.
    for (BranchIndex k : {0, -1}) {
      const double offset = k == 0 ? 0.3 : -0.3;
      for (AxialRay ray : {AxialRay::PosReal, AxialRay::NegReal}) {
        if (k == -1 && ray == AxialRay::PosReal) continue;
        auto c = sample_lambert_line({k, ray}, 1e-8, 1e3, 257, Spacing::Log);
        for (auto& p : c.points) p += ComplexPoint{0.0, offset};
        svg.polyline(c.points, svg_overlay_style(k));
      }
    }
  }
  for (double R : circle_radii) {
    std::vector<ComplexPoint> circle;
    for (int i = 0; i <= 360; ++i)
      circle.push_back(std::polar(R, detail::kPi * i / 180.0));
    svg.polyline(circle, SvgStyle{"#222222", ""});
  }
  if (states)
    for (const auto& s : *states)
      svg.dot({s.u, s.v},
              s.parity == StateParity::Even ? "#0000cc" : "#cc0000");
  return svg.finish();
}

inline int write_output(const ExportJob& job, const std::string& content) {
  if (job.output_path.empty()) {
    std::cout << content;
    return 0;
  }
  std::ofstream os(job.output_path, std::ios::binary);
  if (!os) {
    std::cerr << "welllines: cannot open " << job.output_path << '\n';
    return 4;
  }
  os << content;
  return os.good() ? 0 : 4;
}

inline std::string run_figure(const ExportJob& job);

}  // namespace cli_detail

// Executes one export job; returns the process exit status
// (0 success, 2 bad arguments, 3 numeric failure, 4 I/O failure).
inline int run(const ExportJob& job) {
  using namespace cli_detail;
  std::string content;
  try {
    switch (job.command) {
      case Command::Lines: {
        const double t_min = opt_double(job, "tmin", 1e-8);
        const double t_max = opt_double(job, "tmax", 1e3);
        const std::size_t n = opt_long(job, "n", 512);
        std::vector<LambertLineSpec> specs;
        if (job.options.count("branch") && job.options.count("ray")) {
          specs.push_back({static_cast<BranchIndex>(opt_long(job, "branch", 0)),
                           parse_ray(job.options.at("ray"))});
        } else {
          specs = default_line_specs();
        }
        auto curves = sample_lines(specs, t_min, t_max, n);
        if (job.format == Format::CSV) {
          std::ostringstream os;
          csv_lines(os, curves);
          content = os.str();
        } else if (job.format == Format::JSON) {
          content = json_lines(curves).dump(2) + "\n";
        } else {
          content = render_lines_svg(curves, false, false, nullptr, {});
        }
        break;
      }
      case Command::Solve: {
        if (job.format == Format::SVG)
          throw std::invalid_argument("solve has no SVG output; use figure 6/8");
        const auto params = well_params(job);
        double R;
        if (job.options.count("R")) {
          R = opt_double(job, "R", 0);
          if (params &&
              std::abs(strength_from_params(*params) - R) > 1e-8 * std::max(1.0, R))
            throw std::invalid_argument("--R disagrees with the well parameters");
        } else if (params) {
          R = strength_from_params(*params);
        } else {
          throw std::invalid_argument("solve requires --R or well parameters");
        }
        auto states = solve_states(R, solve_options(job));
        if (job.format == Format::CSV) {
          std::ostringstream os;
          csv_solve(os, states, params ? &*params : nullptr);
          content = os.str();
        } else {
          content = json_solve(states, params ? &*params : nullptr).dump(2) + "\n";
        }
        break;
      }
      case Command::Critical: {
        if (job.format == Format::SVG)
          throw std::invalid_argument("critical has no SVG output; use figure 9/10");
        auto cs = critical_strengths(static_cast<int>(opt_long(job, "count", 4)));
        if (job.format == Format::CSV) {
          std::ostringstream os;
          csv_critical(os, cs);
          content = os.str();
        } else {
          content = json_critical(cs).dump(2) + "\n";
        }
        break;
      }
      case Command::Spiral: {
        const double v_min = opt_double(job, "vmin", 0.0);
        const double v_max = opt_double(job, "vmax", 30.0);
        const std::size_t n = opt_long(job, "n", 1024);
        auto pts = spiral_samples(v_min, v_max, n);
        if (job.format == Format::CSV) {
          std::ostringstream os;
          csv_spiral(os, pts, v_min, v_max);
          content = os.str();
        } else if (job.format == Format::JSON) {
          content = json_spiral(pts, v_min, v_max).dump(2) + "\n";
        } else {
          double lim = 0.0;
          for (const auto& p : pts)
            lim = std::max({lim, std::abs(p.real()), std::abs(p.imag())});
          SvgWriter svg(-lim, lim, -lim, lim);
          svg.axes();
          svg.polyline(pts, SvgStyle{"#222222", ""});
          content = svg.finish();
        }
        break;
      }
      case Command::Sheets: {
        const double R_max = opt_double(job, "rmax", 8.7);
        auto curves = intersection_curves(R_max);
        if (job.format == Format::CSV) {
          std::ostringstream os;
          csv_sheets(os, curves);
          content = os.str();
        } else if (job.format == Format::JSON) {
          content = json_sheets(curves, R_max).dump(2) + "\n";
        } else {
          throw std::invalid_argument("sheets has no SVG output; use figure 11");
        }
        break;
      }
      case Command::Table1: {
        if (job.format == Format::CSV) {
          std::ostringstream os;
          csv_table1(os);
          content = os.str();
        } else if (job.format == Format::JSON) {
          content = json_table1().dump(2) + "\n";
        } else {
          throw std::invalid_argument("table1 has no SVG output");
        }
        break;
      }
      case Command::Figure:
        content = run_figure(job);
        break;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "welllines: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "welllines: " << e.what() << '\n';
    return 3;
  }
  return cli_detail::write_output(job, content);
}

namespace cli_detail {

inline std::string run_figure(const ExportJob& job) {
  const std::string id = job.options.count("id") ? job.options.at("id") : "";
  const std::string base = id.empty() ? "" : id.substr(0, id.find_first_of("abcd"));
  const char sub = id.size() > base.size() ? id.back() : '\0';
  if (id != base + (sub ? std::string(1, sub) : std::string()) ||
      (sub && base != "7" && base != "9" && base != "11"))
    throw std::invalid_argument("unknown figure id: " + id);
  const auto params = well_params(job);

  auto lines_figure = [&](bool asym, bool overlays,
                          std::vector<double> radii,
                          const std::vector<BoundState>* states) {
    auto curves = sample_lines(default_line_specs(), 1e-8, 1e3, 257);
    if (job.format == Format::CSV) {
      std::ostringstream os;
      if (states)
        csv_solve(os, *states, params ? &*params : nullptr);
      else
        csv_lines(os, curves);
      return os.str();
    }
    if (job.format == Format::JSON) {
      auto j = json_lines(curves);
      j["command"] = "figure " + id;
      if (states) j["states"] = json_solve(*states)["states"];
      return j.dump(2) + "\n";
    }
    return render_lines_svg(curves, asym, overlays, states, radii);
  };

  if (base == "1") return lines_figure(false, false, {}, nullptr);
  if (base == "2") return lines_figure(false, false, {}, nullptr);
  if (base == "3") return lines_figure(true, false, {}, nullptr);
  if (base == "5") return lines_figure(false, true, {}, nullptr);

  if (base == "4") {
    // Real-valued W of a real argument: branch 0 for x >= -1/e, branch
    // -1 for -1/e <= x < 0, drawn in the (x, u) plane.
    const double bp = -1.0 / detail::kE;
    std::vector<std::pair<int, std::vector<ComplexPoint>>> curves;
    for (BranchIndex k : {0, -1}) {
      std::vector<ComplexPoint> pts;
      const double x_max = k == 0 ? 6.0 : -1e-4;
      for (int i = 0; i <= 512; ++i) {
        const double x = bp + (x_max - bp) * i / 512.0;
        pts.push_back({x, lambert_w(k, {x, 0.0}).real()});
      }
      curves.emplace_back(k, std::move(pts));
    }
    if (job.format == Format::CSV) {
      std::ostringstream os;
      os << "branch,x,u\n";
      for (const auto& [k, pts] : curves)
        for (const auto& p : pts)
          os << k << ',' << num(p.real()) << ',' << num(p.imag()) << '\n';
      return os.str();
    }
    if (job.format == Format::JSON) {
      nlohmann::json j;
      j["command"] = "figure 4";
      auto& arr = j["curves"];
      arr = nlohmann::json::array();
      for (const auto& [k, pts] : curves) {
        nlohmann::json jc;
        jc["branch"] = k;
        auto& jp = jc["points"];
        jp = nlohmann::json::array();
        for (const auto& p : pts)
          jp.push_back({{"x", p.real()}, {"u", p.imag()}});
        arr.push_back(std::move(jc));
      }
      return j.dump(2) + "\n";
    }
    SvgWriter svg(-1.0, 6.0, -5.0, 2.0);
    svg.axes();
    for (const auto& [k, pts] : curves) svg.polyline(pts, svg_overlay_style(k));
    return svg.finish();
  }

  if (base == "6" || base == "8") {
    const std::vector<double> radii =
        base == "6" ? std::vector<double>{5.0}
                    : std::vector<double>{5.0, 4.2, 4.6034};
    std::vector<BoundState> states;
    for (double R : radii) {
      auto s = solve_states(R, solve_options(job));
      states.insert(states.end(), s.begin(), s.end());
    }
    return lines_figure(false, false, radii, &states);
  }

  if (base == "7") {
    const double R = opt_double(job, "R", 5.0);
    const std::size_t n = opt_long(job, "n", 4097);
    auto pts = image_of_circle(R, n);
    // One curve, four viewports: 1x, 16x, 160x, 1600x.
    static const double mags[] = {1.0, 16.0, 160.0, 1600.0};
    if (job.format == Format::CSV) {
      std::ostringstream os;
      csv_circle_image(os, pts);
      return os.str();
    }
    auto states = states_via_z_plane(R, solve_options(job));
    if (job.format == Format::JSON) {
      nlohmann::json j;
      j["command"] = "figure " + id;
      j["R"] = R;
      j["viewports"] = {1, 16, 160, 1600};
      auto& jp = j["points"];
      jp = nlohmann::json::array();
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const double theta = 2.0 * detail::kPi * double(i) / double(n - 1);
        jp.push_back({{"theta", theta}, {"x", pts[i].real()}, {"y", pts[i].imag()}});
      }
      j["states"] = json_solve(states)["states"];
      return j.dump(2) + "\n";
    }
    const double mag = sub ? mags[sub - 'a'] : 1.0;
    const double lim = R * std::exp(R) / mag;
    SvgWriter svg(-lim, lim, -lim, lim);
    svg.axes();
    svg.polyline(pts, SvgStyle{"#222222", ""});
    for (const auto& s : states)
      svg.dot(forward_map({s.u, s.v}),
              s.parity == StateParity::Even ? "#0000cc" : "#cc0000");
    return svg.finish();
  }

  if (base == "9") {
    auto cs = critical_strengths(4);
    if (sub) cs = {cs[sub - 'a']};
    if (job.format == Format::CSV) {
      std::ostringstream os;
      csv_critical(os, cs);
      return os.str();
    }
    if (job.format == Format::JSON) {
      auto j = json_critical(cs);
      j["command"] = "figure " + id;
      return j.dump(2) + "\n";
    }
    auto curves = sample_lines(default_line_specs(), 1e-8, 1e3, 257);
    std::vector<double> radii;
    std::vector<BoundState> states;
    for (const auto& c : cs) {
      radii.push_back(c.R_c);
      states.push_back({c.parity, -1.0, c.v_t, c.R_c, 2, true});
    }
    return render_lines_svg(curves, false, false, &states, radii);
  }

  if (base == "10") {
    auto cs = critical_strengths(19);
    const double v_max = cs.back().v_t + 0.5;
    auto pts = spiral_samples(0.0, v_max, 2048);
    if (job.format == Format::CSV) {
      std::ostringstream os;
      csv_critical(os, cs);
      return os.str();
    }
    if (job.format == Format::JSON) {
      auto j = json_critical(cs);
      j["command"] = "figure 10";
      j["spiral"] = json_spiral(pts, 0.0, v_max)["points"];
      return j.dump(2) + "\n";
    }
    double lim = 0.0;
    for (const auto& p : pts)
      lim = std::max({lim, std::abs(p.real()), std::abs(p.imag())});
    SvgWriter svg(-lim, lim, -lim, lim);
    svg.axes();
    svg.polyline(pts, SvgStyle{"#222222", ""});
    for (const auto& c : cs)
      svg.dot(c.z_image,
              c.parity == StateParity::Even ? "#0000cc" : "#cc0000");
    return svg.finish();
  }

  if (base == "11") {
    const double R_max = opt_double(job, "rmax", 8.7);
    auto curves = intersection_curves(R_max);
    if (job.format == Format::CSV) {
      std::ostringstream os;
      csv_sheets(os, curves);
      return os.str();
    }
    if (job.format == Format::JSON) {
      auto j = json_sheets(curves, R_max);
      j["command"] = "figure " + id;
      return j.dump(2) + "\n";
    }
    // Projections: a along v, b along u, c along R, d oblique.
    auto proj = [&](const SheetPoint& p) -> ComplexPoint {
      switch (sub) {
        case 'b': return {p.v, p.R};
        case 'c': return {p.u, p.v};
        case 'd':
          return {p.u + 0.35 * p.v, p.R + 0.2 * p.v};
        default: return {p.u, p.R};
      }
    };
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    std::vector<std::vector<ComplexPoint>> polys;
    for (const auto& c : curves) {
      std::vector<ComplexPoint> poly;
      for (const auto& p : c.points) {
        const ComplexPoint q = proj(p);
        xmin = std::min(xmin, q.real());
        xmax = std::max(xmax, q.real());
        ymin = std::min(ymin, q.imag());
        ymax = std::max(ymax, q.imag());
        poly.push_back(q);
      }
      polys.push_back(std::move(poly));
    }
    SvgWriter svg(xmin - 0.5, xmax + 0.5, ymin - 0.5, ymax + 0.5);
    svg.axes();
    for (std::size_t i = 0; i < polys.size(); ++i)
      svg.polyline(polys[i], svg_style(curves[i].spec.parity()));
    return svg.finish();
  }

  throw std::invalid_argument("unknown figure id: " + id);
}

}  // namespace cli_detail

// Parses command-line arguments and executes the export job.
inline int run_cli(std::vector<std::string> args) {
  CLI::App app{"Lambert line / finite square well toolkit"};
  app.require_subcommand(1);

  ExportJob job;
  std::string format = "csv";
  std::string figure_id;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format)->check(CLI::IsMember({"csv", "json", "svg"}));
    sub->add_option("--out", job.output_path);
    for (const char* key :
         {"R", "count", "rmax", "include-negative-u", "include-lower-half",
          "tol", "tmin", "tmax", "n", "vmin", "vmax", "branch", "ray", "L",
          "V0", "mass", "hbar"}) {
      sub->add_option_function<std::string>(
          std::string("--") + key,
          [&job, key = std::string(key)](const std::string& v) {
            job.options[key] = v;
          });
    }
  };

  std::map<std::string, Command> commands = {
      {"lines", Command::Lines},     {"solve", Command::Solve},
      {"critical", Command::Critical}, {"spiral", Command::Spiral},
      {"sheets", Command::Sheets},   {"figure", Command::Figure},
      {"table1", Command::Table1},
  };
  for (auto& [name, cmd] : commands) {
    auto* sub = app.add_subcommand(name);
    add_common(sub);
    if (cmd == Command::Figure)
      sub->add_option("id", figure_id)->required();
  }

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  job.command = commands.at(app.get_subcommands().front()->get_name());
  if (!figure_id.empty()) job.options["id"] = figure_id;
  job.format = format == "json" ? Format::JSON
             : format == "svg" ? Format::SVG
                               : Format::CSV;
  return run(job);
}

}  // namespace welllines
