#include <cmath>

#include "so32/alp.hpp"
#include "so32/errors.hpp"
#include "so32/transforms.hpp"
#include "support.hpp"

using namespace so32;
using G = Generator;

namespace {

ChannelSpectrum random_spectrum(int m, int l_max) {
  ChannelSpectrum s(m, l_max);
  for (int l = std::abs(m); l <= l_max; ++l) s.set(l, test::uniform());
  return s;
}

}  // namespace

TEST_SUITE("transforms") {
  TEST_CASE("analyze examples") {
    const QuadratureRule rule = gauss_legendre(8);
    const ChannelSpectrum sx = analyze(GridFunction::sample(rule, 0, [](double x) { return x; }), 3);
    CHECK(sx.at(1) == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-15));
    for (int l : {0, 2, 3}) CHECK(std::abs(sx.at(l)) < 1e-14);

    const ChannelSpectrum s21 =
        analyze(GridFunction::sample(rule, 1, [](double x) { return eval_T(2, 1, x); }), 5);
    CHECK(s21.at(2) == doctest::Approx(1.0 / std::sqrt(2.5)).epsilon(1e-14));
    for (int l : {1, 3, 4, 5}) CHECK(std::abs(s21.at(l)) < 1e-14);

    const ChannelSpectrum zero = analyze(GridFunction::sample(rule, 2, [](double) { return 0.0; }), 4);
    for (double c : zero.values()) CHECK(c == 0.0);
  }

  TEST_CASE("analyze needs enough nodes") {
    const QuadratureRule rule = gauss_legendre(4);
    const GridFunction f = GridFunction::sample(rule, 0, [](double x) { return x; });
    CHECK_NOTHROW(analyze(f, 3));
    CHECK_THROWS_AS(analyze(f, 4), UsageError);
  }

  TEST_CASE("synthesize examples") {
    const QuadratureRule rule = gauss_legendre(6);
    ChannelSpectrum s(0, 3);
    s.set(1, std::sqrt(2.0 / 3.0));
    const GridFunction f = synthesize(s, rule);
    for (std::size_t k = 0; k < rule.nodes().size(); ++k) CHECK(std::abs(f.values[k] - rule.nodes()[k]) < 1e-13);

    const GridFunction zero = synthesize(ChannelSpectrum(2, 5), rule);
    CHECK(zero.m == 2);
    for (double v : zero.values) CHECK(v == 0.0);
  }

  TEST_CASE("round trip and idempotence on band-limited data") {
    for (int l_max : {0, 3, 8, 12, 16})
      for (int m : {0, 1, -2, 5}) {
        if (std::abs(m) > l_max) continue;
        const QuadratureRule rule = gauss_legendre(l_max + 1);
        const ChannelSpectrum s = random_spectrum(m, l_max);
        const ChannelSpectrum back = analyze(synthesize(s, rule), l_max);
        for (int l = std::abs(m); l <= l_max; ++l) REQUIRE(std::abs(back.at(l) - s.at(l)) < 1e-11);

        const GridFunction once = synthesize(back, rule);
        const GridFunction twice = synthesize(analyze(once, l_max), rule);
        for (std::size_t k = 0; k < once.values.size(); ++k)
          REQUIRE(std::abs(once.values[k] - twice.values[k]) < 1e-12);
      }
  }

  TEST_CASE("T-basis conversion carries sqrt(l+1/2)") {
    ChannelSpectrum s(1, 4);
    s.set(3, 2.0);
    const RealCoeffs t = to_t_basis(s, Truncation(4));
    CHECK(t.get({3, 1}) == doctest::Approx(2.0 * std::sqrt(3.5)));
    const ChannelSpectrum back = from_t_basis(t, 1, 4);
    CHECK(back.at(3) == doctest::Approx(2.0));
  }

  TEST_CASE("inner product examples") {
    const QuadratureRule rule = gauss_legendre(10);
    const GridFunction x = GridFunction::sample(rule, 0, [](double t) { return t; });
    CHECK(inner_product(analyze(x, 5), analyze(x, 5)) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(grid_inner_product({x}, {x}) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));

    for (int l = 0; l <= 6; ++l) {
      const GridFunction t = GridFunction::sample(rule, 0, [l](double v) { return eval_T(l, 0, v); });
      CHECK(grid_inner_product({t}, {t}) == doctest::Approx(1.0 / (l + 0.5)).epsilon(1e-13));
    }
    CHECK(inner_product(analyze(x, 5), ChannelSpectrum(0, 5)) == 0.0);

    const RealCoeffs a = RealCoeffs::unit(Truncation(3), {1, 0});
    CHECK_THROWS_AS(inner_product(a, RealCoeffs(Truncation(4))), UsageError);
    CHECK_THROWS_AS(inner_product(ChannelSpectrum(0, 3), ChannelSpectrum(1, 3)), UsageError);
  }

  TEST_CASE("coefficient and grid inner products agree") {
    const int l_max = 9;
    const QuadratureRule rule = gauss_legendre(l_max + 1);
    std::vector<ChannelSpectrum> f, g;
    std::vector<GridFunction> fg, gg;
    for (int m = -3; m <= 3; ++m) {
      f.push_back(random_spectrum(m, l_max));
      g.push_back(random_spectrum(m, l_max));
      fg.push_back(synthesize(f.back(), rule));
      gg.push_back(synthesize(g.back(), rule));
    }
    CHECK(inner_product(f, g) == doctest::Approx(grid_inner_product(fg, gg)).epsilon(1e-12));
  }

  TEST_CASE("Parseval examples") {
    const QuadratureRule rule = gauss_legendre(8);
    const ParsevalResult px = parseval_check({GridFunction::sample(rule, 0, [](double x) { return x; })}, 4);
    CHECK(std::abs(px.lhs - 2.0 / 3.0) < 1e-12);
    CHECK(std::abs(px.rhs - 2.0 / 3.0) < 1e-12);
    CHECK(px.band_limited);

    const ParsevalResult p32 =
        parseval_check({GridFunction::sample(rule, 2, [](double x) { return orthonormal_basis(3, 2, x); })}, 5);
    CHECK(std::abs(p32.lhs - 1.0) < 1e-12);
    CHECK(std::abs(p32.rhs - 1.0) < 1e-12);

    const ParsevalResult p0 = parseval_check({GridFunction::sample(rule, 0, [](double) { return 0.0; })}, 3);
    CHECK(p0.lhs == 0.0);
    CHECK(p0.rhs == 0.0);
  }

  TEST_CASE("Parseval on 100 random band-limited spectra") {
    const int l_max = 16;
    const QuadratureRule rule = gauss_legendre(l_max + 1);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<GridFunction> channels;
      for (int m = -l_max; m <= l_max; m += 4) channels.push_back(synthesize(random_spectrum(m, l_max), rule));
      const ParsevalResult r = parseval_check(channels, l_max);
      REQUIRE(r.band_limited);
      REQUIRE(std::abs(r.lhs - r.rhs) <= 1e-10 * (1 + r.lhs));
    }
  }

  TEST_CASE("non-band-limited input is flagged") {
    const QuadratureRule rule = gauss_legendre(12);
    const ParsevalResult r = parseval_check({GridFunction::sample(rule, 0, [](double x) { return std::exp(x); })}, 3);
    CHECK_FALSE(r.band_limited);
    CHECK(r.roundtrip_residual > 1e-4);
  }

  TEST_CASE("completeness kernel") {
    for (double x : {-0.6, 0.0, 0.3}) CHECK(completeness_kernel(0, 0, x, 0.77) == doctest::Approx(0.5));
    CHECK(completeness_kernel(2, 7, 0.31, -0.58) == completeness_kernel(2, 7, -0.58, 0.31));

    const int l_max = 7;
    const QuadratureRule rule = gauss_legendre(l_max + 1);
    const ChannelSpectrum s = random_spectrum(2, l_max);
    const GridFunction f = synthesize(s, rule);
    for (double x : {-0.9, -0.25, 0.4, 0.88}) {
      double direct = 0.0;
      for (int l = 2; l <= l_max; ++l) direct += s.at(l) * orthonormal_basis(l, 2, x);
      CHECK(std::abs(kernel_project(f, l_max, x) - direct) < 1e-10);
    }
  }

  TEST_CASE("ladders act consistently on spectra and grids") {
    const int l_max = 8;
    const QuadratureRule rule = gauss_legendre(l_max + 3);
    for (G g : kAllGenerators) {
      CAPTURE(name(g));
      const ChannelSpectrum s = random_spectrum(1, l_max);
      const ChannelSpectrum via_ladder = apply_ladder(g, s);
      const ChannelSpectrum via_grid = analyze(apply_diff_to_spectrum(g, s, rule), via_ladder.l_max());
      REQUIRE(via_ladder.m() == via_grid.m());
      for (int l = via_ladder.l_min(); l <= via_ladder.l_max(); ++l)
        REQUIRE(std::abs(via_ladder.at(l) - via_grid.at(l)) < 1e-9);
    }
  }
}
