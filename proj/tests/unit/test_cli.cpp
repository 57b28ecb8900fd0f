#include <sys/wait.h>

#include <cstdio>
#include <filesystem>

#include "so32/io.hpp"
#include "support.hpp"

#ifndef SO32_CLI_PATH
#define SO32_CLI_PATH ""
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("so32_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run(const std::string& args) {
  const fs::path err = scratch() / "stderr.txt";
  const std::string cmd = std::string("\"") + SO32_CLI_PATH + "\" " + args + " 2>\"" + err.string() + "\"";
  RunResult r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = so32::test::slurp(err.string());
  return r;
}

std::string path(const std::string& name) { return (scratch() / name).string(); }

void write(const std::string& name, const std::string& text) {
  std::ofstream(path(name), std::ios::binary) << text;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("eval prints the shortest round-trip value") {
    const RunResult r = run("eval --l 1 --m 1 --x 0");
    CHECK(r.code == 0);
    CHECK(r.out == "-0.7071067811865476\n");
    CHECK(run("eval --l 2 --m 0 --x 0 --derivative").out == "0\n");
    CHECK(std::stod(run("eval --l 1 --m 0 --x 0.3 --derivative").out) == doctest::Approx(1.0).epsilon(1e-15));
  }

  TEST_CASE("usage and domain errors exit with 2") {
    const RunResult r = run("eval --l 1 --m 2 --x 0");
    CHECK(r.code == 2);
    CHECK(r.err.find("inadmissible (l,m)") != std::string::npos);
    CHECK(run("eval --l 1 --m 0 --x 1").code == 2);
    CHECK(run("eval --l 1 --m 0 --x 0 --bogus").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("").code == 2);
    CHECK(run("verify --suite nope").code == 2);
    CHECK(run("spectrum --op Kp").code == 2);
    CHECK(run("apply --op Jp --in " + path("missing.json")).code == 2);
  }

  TEST_CASE("table writes CSV") {
    const RunResult r = run("table --lmax 2 --nodes 3 --out " + path("t.csv"));
    CHECK(r.code == 0);
    const std::string csv = so32::test::slurp(path("t.csv"));
    CHECK(csv.rfind("l,m,x,T,dT\n0,0,", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 9 * 3);
  }

  TEST_CASE("apply maps coefficient files") {
    write("v.json", R"({"l_max":3,"entries":[{"l":1,"m":0,"re":1.0}]})");
    CHECK(run("apply --op Jp --in " + path("v.json") + " --out " + path("w.json")).code == 0);
    const auto w = so32::io::read_json_file(path("w.json"));
    CHECK(w["entries"][0]["m"] == 1);
    CHECK(w["entries"][0]["re"].get<double>() == doctest::Approx(std::sqrt(2.0)));

    write("edge.json", R"({"l_max":2,"entries":[{"l":2,"m":0,"re":1.0}]})");
    const auto edge = so32::io::json::parse(run("apply --op Kp --in " + path("edge.json")).out);
    CHECK(edge["overflow"] == true);
    CHECK(edge["entries"].empty());
  }

  TEST_CASE("commutator report") {
    const RunResult r = run("commutator --a Kp --b Jm --lmax 6 --report " + path("c.json"));
    CHECK(r.code == 0);
    const auto j = so32::io::read_json_file(path("c.json"));
    CHECK(j["validity_l_max"] == 5);
    CHECK(j["pass"] == true);
    CHECK(j["relation"].is_string());
  }

  TEST_CASE("generate and spectrum") {
    const RunResult g = run("generate --l 3 --m -2 --quiet");
    CHECK(g.code == 0);
    const auto j = so32::io::json::parse(g.out);
    CHECK(j["entries"].size() == 1);
    CHECK(j["entries"][0]["re"].get<double>() == doctest::Approx(1.0).epsilon(1e-10));

    const auto s = so32::io::json::parse(run("spectrum --op R3 --lmax 4 --parity even").out);
    CHECK(s["eigenvalues"] == so32::io::json::array({0.5, 2.5, 4.5, 6.5, 8.5}));
  }

  TEST_CASE("transform analyze and synthesize") {
    const so32::QuadratureRule rule = so32::gauss_legendre(6);
    const so32::GridFunction f = so32::GridFunction::sample(rule, 0, [](double x) { return x; });
    so32::io::write_json_file(path("grid.json"), so32::io::to_json(f));
    CHECK(run("transform analyze --m 0 --lmax 3 --in " + path("grid.json") + " --out " + path("spectrum.json")).code == 0);
    const auto sp = so32::io::read_json_file(path("spectrum.json"));
    CHECK(sp["coeffs"][1]["c"].get<double>() == doctest::Approx(std::sqrt(2.0 / 3.0)));
    CHECK(run("transform analyze --m 1 --lmax 3 --in " + path("grid.json")).code == 2);
    CHECK(run("transform analyze --m 0 --lmax 7 --in " + path("grid.json")).code == 2);

    const auto grid = so32::io::json::parse(run("transform synthesize --nodes 6 --in " + path("spectrum.json")).out);
    const so32::GridFunction back = so32::io::grid_from_json(grid);
    for (std::size_t k = 0; k < back.values.size(); ++k) CHECK(back.values[k] == doctest::Approx(rule.nodes()[k]));
  }

  TEST_CASE("sht round trip through files") {
    write("cc.json",
          R"({"l_max":3,"entries":[{"l":0,"m":0,"re":1.0,"im":0.0},{"l":3,"m":-2,"re":0.5,"im":-0.25}]})");
    CHECK(run("sht synthesize --ntheta 4 --nphi 7 --in " + path("cc.json") + " --out " + path("field.json")).code == 0);
    CHECK(run("sht analyze --ntheta 4 --nphi 7 --lmax 3 --in " + path("field.json") + " --out " + path("back.json"))
              .code == 0);
    const so32::ComplexCoeffs back = so32::io::complex_coeffs_from_json(so32::io::read_json_file(path("back.json")));
    CHECK(std::abs(back.get({3, -2}) - so32::cplx(0.5, -0.25)) < 1e-12);
    CHECK(std::abs(back.get({0, 0}) - so32::cplx(1.0, 0.0)) < 1e-12);
    CHECK(run("sht analyze --ntheta 5 --in " + path("field.json")).code == 2);
    CHECK(run("sht analyze --lmax 4 --in " + path("field.json")).code == 2);
  }

  TEST_CASE("verify exit codes and byte-identical reports") {
    CHECK(run("verify --suite casimir --lmax 10 --tol 1e-10 --quiet --out " + path("r1.json")).code == 0);
    CHECK(run("verify --suite casimir --lmax 10 --tol 1e-10 --quiet --out " + path("r2.json")).code == 0);
    const std::string a = so32::test::slurp(path("r1.json"));
    CHECK(a == so32::test::slurp(path("r2.json")));
    const auto j = so32::io::json::parse(a);
    bool seen = false;
    for (const auto& c : j["checks"])
      if (c.contains("observed") && c["id"].get<std::string>().find("so32") != std::string::npos) {
        CHECK(c["observed"].get<double>() == doctest::Approx(-1.25));
        seen = true;
      }
    CHECK(seen);

    CHECK(run("verify --suite casimir --tol 1e-30 --quiet --out " + path("r3.json")).code == 1);
    CHECK(so32::io::read_json_file(path("r3.json"))["pass"] == false);
  }
}
