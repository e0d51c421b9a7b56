#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "brach/cli.hpp"
#include "brach/curve_io.hpp"
#include "brach/cycloid.hpp"
#include "brach/mesh.hpp"

using namespace brach;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

double json_number(const std::string& body, const std::string& key) {
  const auto pos = body.find("\"" + key + "\"");
  REQUIRE(pos != std::string::npos);
  const auto colon = body.find(':', pos);
  return std::strtod(body.c_str() + colon + 1, nullptr);
}

std::string json_string(const std::string& body, const std::string& key) {
  const auto pos = body.find("\"" + key + "\"");
  REQUIRE(pos != std::string::npos);
  const auto first = body.find('"', body.find(':', pos));
  const auto last = body.find('"', first + 1);
  return body.substr(first + 1, last - first - 1);
}

}  // namespace

TEST_CASE("solve command") {
  SUBCASE("the endpoint-maximum anchor beta/b = 2/pi") {
    const CliResult r = run_cli({"solve", "--b", "3.141592653589793", "--beta", "2"});
    CHECK(r.code == 0);
    CHECK(json_number(r.out, "theta_tilde") == doctest::Approx(M_PI).epsilon(1e-10));
    CHECK(json_number(r.out, "k") == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(json_string(r.out, "class") == "MaxAtEndpoint");
  }
  SUBCASE("unit problem") {
    const CliResult r = run_cli({"solve", "--b", "1", "--beta", "1"});
    CHECK(r.code == 0);
    CHECK(json_number(r.out, "theta_tilde") == doctest::Approx(2.4120111439).epsilon(1e-9));
    // theta_tilde(1) = 2.412 < pi, so the arc is still rising at b
    CHECK(json_string(r.out, "class") == "StrictlyIncreasing");
    CHECK(json_number(r.out, "time") == doctest::Approx(2.5819045128).epsilon(1e-9));
  }
  SUBCASE("non-positive input exits 2") {
    CHECK(run_cli({"solve", "--b", "1", "--beta", "-1"}).code == 2);
    CHECK(run_cli({"solve", "--b", "0", "--beta", "1"}).code == 2);
  }
}

TEST_CASE("time command") {
  SUBCASE("line closed form") {
    const CliResult r = run_cli({"time", "--curve", "line", "--b", "1", "--beta", "1"});
    CHECK(r.code == 0);
    CHECK(json_number(r.out, "time") == doctest::Approx(2.8284271247).epsilon(1e-7));
    CHECK(r.out.find("\"converged\": true") != std::string::npos);
  }
  SUBCASE("cycloid quadrature agrees with the solve record") {
    const CliResult t = run_cli({"time", "--curve", "cycloid", "--b", "1", "--beta", "1"});
    const CliResult s = run_cli({"solve", "--b", "1", "--beta", "1"});
    CHECK(t.code == 0);
    CHECK(json_number(t.out, "time") ==
          doctest::Approx(json_number(s.out, "time")).epsilon(1e-5));
  }
  SUBCASE("file curve equals the built-in that produced it") {
    const Mesh mesh = make_mesh(256, 1.0, 3.0);
    save_curve_csv(line_curve(1.0, 1.0, mesh), "cli_line.csv");
    const CliResult file_r =
        run_cli({"time", "--curve", "file=cli_line.csv", "--b", "1", "--beta", "1"});
    const CliResult line_r = run_cli({"time", "--curve", "line", "--b", "1", "--beta", "1"});
    CHECK(file_r.code == 0);
    CHECK(std::fabs(json_number(file_r.out, "time") - json_number(line_r.out, "time")) <= 1e-9);
    std::remove("cli_line.csv");
  }
  SUBCASE("missing file exits 4") {
    CHECK(run_cli({"time", "--curve", "file=missing.csv", "--b", "1", "--beta", "1"}).code == 4);
  }
  SUBCASE("unknown curve kind exits 2") {
    CHECK(run_cli({"time", "--curve", "zigzag", "--b", "1", "--beta", "1"}).code == 2);
  }
  SUBCASE("quadrature that cannot settle exits 3 with diagnostics") {
    const CliResult r = run_cli(
        {"time", "--curve", "line", "--b", "1", "--beta", "1", "--max-levels", "0"});
    CHECK(r.code == 3);
    CHECK(r.err.find("numerical diagnostic") != std::string::npos);
  }
}

TEST_CASE("compare command orders the classics") {
  for (const char* ratio : {"0.1", "0.5", "1", "2", "5"}) {
    const CliResult r = run_cli({"compare", "--b", "1", "--beta", ratio});
    REQUIRE(r.code == 0);
    const double cyc = json_number(r.out, "cycloid");
    const double cir = json_number(r.out, "circle");
    const double lin = json_number(r.out, "line");
    CHECK(cyc < cir);
    CHECK(cir < lin);
  }
  SUBCASE("unit problem values") {
    const CliResult r = run_cli({"compare", "--b", "1", "--beta", "1"});
    REQUIRE(r.code == 0);
    CHECK(json_number(r.out, "cycloid") == doctest::Approx(2.5819045128).epsilon(1e-8));
  }
  SUBCASE("csv format") {
    const CliResult r = run_cli({"compare", "--b", "1", "--beta", "1", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("curve,time,relative_excess_vs_cycloid\n", 0) == 0);
    CHECK(r.out.find("cycloid,") != std::string::npos);
  }
}

TEST_CASE("residuals command") {
  const CliResult cyc = run_cli({"residuals", "--curve", "cycloid", "--b", "1", "--beta", "1",
                                 "--n", "256"});
  REQUIRE(cyc.code == 0);
  const auto weak_pos = cyc.out.find("\"weak\"");
  REQUIRE(weak_pos != std::string::npos);
  CHECK(json_number(cyc.out.substr(weak_pos), "sup") <= 1e-6);
  const auto bel_pos = cyc.out.find("\"beltrami\"");
  CHECK(json_number(cyc.out.substr(bel_pos), "k_max_dev") <= 1e-10 * 1.146);

  const CliResult line = run_cli({"residuals", "--curve", "line", "--b", "1", "--beta", "1",
                                  "--n", "256"});
  REQUIRE(line.code == 0);
  const auto line_weak = line.out.find("\"weak\"");
  CHECK(json_number(line.out.substr(line_weak), "sup") >= 1e-2);
}

TEST_CASE("sweep command") {
  SUBCASE("classes flip exactly at 2/pi") {
    const double anchor = 2.0 / M_PI;
    std::ostringstream from, to;
    from.precision(17);
    to.precision(17);
    from << (anchor - 0.1);
    to << (anchor + 0.1);
    const CliResult r =
        run_cli({"sweep", "--from", from.str(), "--to", to.str(), "--steps", "3"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string header, row_low, row_mid, row_high;
    std::getline(lines, header);
    std::getline(lines, row_low);
    std::getline(lines, row_mid);
    std::getline(lines, row_high);
    CHECK(header == "ratio,theta_tilde,k,class,exact_time");
    CHECK(row_low.find("RisesThenFalls") != std::string::npos);   // ratio below 2/pi
    CHECK(row_mid.find("MaxAtEndpoint") != std::string::npos);    // lands on 2/pi
    CHECK(row_high.find("StrictlyIncreasing") != std::string::npos);
  }
  SUBCASE("theta column strictly decreases down the table") {
    const CliResult r = run_cli({"sweep", "--from", "0.2", "--to", "5", "--steps", "25"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);  // header
    double prev = 1e9;
    int rows = 0;
    while (std::getline(lines, line)) {
      const auto c1 = line.find(',');
      const double theta = std::strtod(line.c_str() + c1 + 1, nullptr);
      CHECK(theta < prev);
      prev = theta;
      ++rows;
    }
    CHECK(rows == 25);
  }
  SUBCASE("a single step gives two rows") {
    const CliResult r = run_cli({"sweep", "--from", "0.5", "--to", "1.0", "--steps", "2"});
    REQUIRE(r.code == 0);
    int rows = -1;  // header
    std::istringstream lines(r.out);
    std::string line;
    while (std::getline(lines, line)) ++rows;
    CHECK(rows == 2);
  }
  SUBCASE("bad ranges exit 2") {
    CHECK(run_cli({"sweep", "--from", "1", "--to", "0.5", "--steps", "5"}).code == 2);
    CHECK(run_cli({"sweep", "--from", "0.5", "--to", "1", "--steps", "1"}).code == 2);
  }
}

TEST_CASE("plot command") {
  SUBCASE("the unit trio renders three deterministic polylines") {
    const std::vector<std::string> args{"plot", "--b",   "1",       "--beta",
                                        "1",    "--out", "trio.svg"};
    REQUIRE(run_cli(args).code == 0);
    std::ifstream first_in("trio.svg");
    std::stringstream first;
    first << first_in.rdbuf();

    REQUIRE(run_cli(args).code == 0);
    std::ifstream second_in("trio.svg");
    std::stringstream second;
    second << second_in.rdbuf();

    CHECK(first.str() == second.str());  // byte-identical on identical input
    std::size_t polylines = 0, pos = 0;
    while ((pos = first.str().find("<polyline", pos)) != std::string::npos) {
      ++polylines;
      ++pos;
    }
    CHECK(polylines == 3);
    CHECK(first.str().find("</svg>") != std::string::npos);
    std::remove("trio.svg");
  }
  SUBCASE("empty curve list exits 2") {
    CHECK(run_cli({"plot", "--b", "1", "--beta", "1", "--curves", "", "--out", "x.svg"}).code ==
          2);
  }
  SUBCASE("unwritable path exits 4") {
    CHECK(run_cli({"plot", "--b", "1", "--beta", "1", "--out", "no_dir/x.svg"}).code == 4);
  }
}

TEST_CASE("help and parse errors") {
  CHECK(run_cli({"--help"}).code == 0);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"solve", "--b", "1"}).code == 2);  // missing --beta
}

TEST_CASE("json output is stable across runs") {
  const CliResult a = run_cli({"solve", "--b", "1.25", "--beta", "0.75"});
  const CliResult b = run_cli({"solve", "--b", "1.25", "--beta", "0.75"});
  CHECK(a.out == b.out);
}
