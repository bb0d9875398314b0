#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "welllines/cli.hpp"

using namespace welllines;

namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

fs::path tmpdir() {
  auto d = fs::temp_directory_path() / "welllines_test";
  fs::create_directories(d);
  return d;
}

int lines_in(const std::string& s) {
  int n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("table1 round-trips through JSON") {
  const auto rows = emit_table1();
  const auto parsed = parse_table1(json_table1());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(parsed[i].property == rows[i].property);
    CHECK(parsed[i].imaginary == rows[i].imaginary);
    CHECK(parsed[i].real == rows[i].real);
  }
  CHECK(rows[0].imaginary == "u = v tan(v)");
  CHECK(rows[0].real == "u = -v cot(v)");
  CHECK(rows[1].imaginary == "EVEN");
  CHECK(rows[1].real == "ODD");
}

TEST_CASE("figure 6 CSV is the R = 5 bound-state table") {
  const auto out = tmpdir() / "fig6.csv";
  REQUIRE(run_cli({"figure", "6", "--format", "csv", "--out", out.string()}) == 0);
  const auto text = slurp(out);
  CHECK(lines_in(text) == 7);  // header + 6 states
  CHECK(text.rfind("parity,quadrant,u,v,R,near_critical\n", 0) == 0);
}

TEST_CASE("critical --count 19 emits 19 rows") {
  const auto out = tmpdir() / "crit19.csv";
  REQUIRE(run_cli({"critical", "--count", "19", "--format", "csv", "--out",
                   out.string()}) == 0);
  const auto text = slurp(out);
  CHECK(lines_in(text) == 20);
  CHECK(text.rfind("n,parity,v_t,R_c,z_re,z_im,ray\n", 0) == 0);
}

TEST_CASE("solve --R 4.2 as JSON has four states") {
  const auto out = tmpdir() / "solve42.json";
  REQUIRE(run_cli({"solve", "--R", "4.2", "--format", "json", "--out",
                   out.string()}) == 0);
  const auto j = nlohmann::json::parse(slurp(out));
  CHECK(j["states"].size() == 4);
  CHECK(!j["states"][0].contains("energy"));
}

TEST_CASE("energy column appears only with well parameters") {
  const auto base = tmpdir();
  REQUIRE(run_cli({"solve", "--R", "5", "--out", (base / "a.csv").string()}) == 0);
  CHECK(slurp(base / "a.csv").rfind("parity,quadrant,u,v,R,near_critical\n", 0) == 0);
  REQUIRE(run_cli({"solve", "--L", "1", "--V0", "12.5", "--mass", "1",
                   "--hbar", "1", "--out", (base / "b.csv").string()}) == 0);
  CHECK(slurp(base / "b.csv").rfind("parity,quadrant,u,v,R,near_critical,energy\n",
                                    0) == 0);
  // Incomplete parameter sets are rejected.
  CHECK(run_cli({"solve", "--R", "5", "--L", "1"}) == 2);
  // Inconsistent R and parameters are rejected.
  CHECK(run_cli({"solve", "--R", "4", "--L", "1", "--V0", "12.5", "--mass",
                 "1", "--hbar", "1"}) == 2);
}

TEST_CASE("identical jobs are byte-identical") {
  const auto base = tmpdir();
  for (auto args : {std::vector<std::string>{"figure", "6", "--format", "csv"},
                    std::vector<std::string>{"critical", "--count", "7",
                                             "--format", "json"},
                    std::vector<std::string>{"lines", "--branch", "1", "--ray",
                                             "NegImag", "--format", "csv"},
                    std::vector<std::string>{"sheets", "--format", "csv"}}) {
    auto a1 = args, a2 = args;
    a1.insert(a1.end(), {"--out", (base / "d1").string()});
    a2.insert(a2.end(), {"--out", (base / "d2").string()});
    REQUIRE(run_cli(a1) == 0);
    REQUIRE(run_cli(a2) == 0);
    const auto s1 = slurp(base / "d1"), s2 = slurp(base / "d2");
    CHECK(!s1.empty());
    CHECK(s1 == s2);
  }
}

TEST_CASE("CSV schemas are stable") {
  const auto base = tmpdir();
  const std::pair<std::vector<std::string>, std::string> cases[] = {
      {{"lines", "--branch", "0", "--ray", "PosReal"}, "branch,ray,parity,t,u,v"},
      {{"spiral"}, "v,x,y"},
      {{"sheets"}, "curve_id,u,v,R"},
      {{"table1"}, "property,imaginary,real"},
      {{"figure", "7"}, "theta,x,y"},
      {{"figure", "4"}, "branch,x,u"},
  };
  for (const auto& [args, header] : cases) {
    auto a = args;
    a.insert(a.end(), {"--out", (base / "schema").string()});
    REQUIRE(run_cli(a) == 0);
    CHECK(slurp(base / "schema").rfind(header + "\n", 0) == 0);
  }
}

TEST_CASE("figure 8 rows cover all three strengths") {
  const auto out = tmpdir() / "fig8.csv";
  REQUIRE(run_cli({"figure", "8", "--out", out.string()}) == 0);
  const auto text = slurp(out);
  CHECK(text.find(",5,") != std::string::npos);
  CHECK(text.find(",4.2,") != std::string::npos);
  CHECK(text.find(",4.6034,") != std::string::npos);
  CHECK(lines_in(text) == 1 + 6 + 4 + 6);
}

TEST_CASE("SVG output uses the legend styles") {
  const auto out = tmpdir() / "fig5.svg";
  REQUIRE(run_cli({"figure", "5", "--format", "svg", "--out", out.string()}) == 0);
  const auto svg = slurp(out);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("#0000cc") != std::string::npos);   // imaginary: blue
  CHECK(svg.find("#cc0000") != std::string::npos);   // real: red
  CHECK(svg.find("#008800") != std::string::npos);   // overlays: green
  CHECK(svg.find("stroke-dasharray") != std::string::npos);

  const auto out3 = tmpdir() / "fig3.svg";
  REQUIRE(run_cli({"figure", "3", "--format", "svg", "--out", out3.string()}) == 0);
  CHECK(slurp(out3).find("stroke-dasharray=\"1,4\"") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run_cli({"figure", "12"}) == 2);            // unknown figure id
  CHECK(run_cli({"figure", "7e"}) == 2);            // unknown sub-id
  CHECK(run_cli({"solve"}) == 2);                   // missing R
  CHECK(run_cli({"solve", "--R", "abc"}) == 2);     // bad numeric
  CHECK(run_cli({"nonsense"}) == 2);                // unknown command
  CHECK(run_cli({"solve", "--R", "5", "--out",
                 "/nonexistent-dir/x.csv"}) == 4);  // unwritable path
  CHECK(run_cli({"critical", "--count", "0"}) == 2);  // option validation
}

TEST_CASE("WELLLINES_TOL is honoured as the default tolerance") {
  setenv("WELLLINES_TOL", "1e-8", 1);
  const auto out = tmpdir() / "tol.csv";
  CHECK(run_cli({"solve", "--R", "5", "--out", out.string()}) == 0);
  unsetenv("WELLLINES_TOL");
  CHECK(lines_in(slurp(out)) == 7);
}
