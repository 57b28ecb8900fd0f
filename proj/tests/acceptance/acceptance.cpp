// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "so32/alp.hpp"
#include "so32/differential.hpp"
#include "so32/generators.hpp"
#include "so32/sphere.hpp"
#include "so32/structure.hpp"
#include "so32/transforms.hpp"

#ifndef SO32_CLI_PATH
#define SO32_CLI_PATH "so32"
#endif

namespace {

using namespace so32;
using G = Generator;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Independent transcription of the ladder elements as integer products.
long long element_square(G g, long long l, long long m) {
  switch (g) {
    case G::Jp: return (l - m) * (l + m + 1);
    case G::Jm: return (l + m) * (l - m + 1);
    case G::Kp: return (l - m + 1) * (l + m + 1);
    case G::Km: return (l + m) * (l - m);
    case G::Rp: return (l + m + 2) * (l + m + 1);
    case G::Rm: return (l + m) * (l + m - 1);
    case G::Sp: return (l - m + 2) * (l - m + 1);
    case G::Sm: return (l - m) * (l - m - 1);
    default: return 0;
  }
}

double diagonal_value(G g, int l, int m) {
  switch (g) {
    case G::J3: return m;
    case G::K3: return l + 0.5;
    case G::R3: return l + m + 0.5;
    case G::S3: return l - m + 0.5;
    default: return 0.0;
  }
}

double window_gap(const SparseOperator& a, const SparseOperator& b, int window) {
  double worst = 0.0;
  const auto modes = lattice(a.truncation());
  for (ModeIndex from : modes) {
    if (from.l > window) continue;
    for (ModeIndex to : modes) worst = std::max(worst, std::abs(a.element(to, from) - b.element(to, from)));
  }
  return worst;
}

Outcome matrix_elements() {
  const int l_cap = 12;
  const Truncation t(l_cap + 1);
  double worst = 0.0;
  for (G g : kAllGenerators) {
    const SparseOperator op = generator(g, t);
    const Shift s = shift_of(g);
    for (ModeIndex mode : lattice(Truncation(l_cap))) {
      const RealCoeffs out = op.apply(RealCoeffs::unit(t, mode));
      const ModeIndex image{mode.l + s.dl, mode.m + s.dm};
      const double expected = is_diagonal(g) ? diagonal_value(g, mode.l, mode.m)
                              : is_admissible(image) ? std::sqrt(static_cast<long double>(element_square(g, mode.l, mode.m)))
                                                     : 0.0;
      const double got = is_admissible(image) ? out.get(image) : 0.0;
      worst = std::max(worst, std::abs(got - expected) / std::max(1.0, std::abs(expected)));
      RealCoeffs rest = out;
      if (is_admissible(image)) rest.set(image, 0.0);
      worst = std::max(worst, rest.norm());
    }
  }
  return {worst <= 1e-14, "max relative deviation " + fmt(worst) + " over 12 generators, l <= 12"};
}

Outcome commutator_table() {
  const Truncation t(12);
  double worst = 0.0;
  for (const BracketRelation& rel : structure_relations()) {
    const SparseOperator lhs = commutator(generator(rel.lhs, t), generator(rel.rhs, t));
    worst = std::max(worst, window_gap(lhs, relation_rhs(rel, t), 10));
  }
  return {worst <= 1e-12,
          std::to_string(structure_relations().size()) + " brackets, max deviation " + fmt(worst) + " on l <= 10"};
}

Outcome casimirs() {
  const int l_max = 12;
  const Truncation t(l_max);
  double diag = 0.0;
  for (CasimirKind kind :
       {CasimirKind::so21_K, CasimirKind::so3_J, CasimirKind::so21_R, CasimirKind::so21_S, CasimirKind::so32}) {
    const SparseOperator c = casimir(kind, t);
    for (ModeIndex from : lattice(t)) {
      if (from.l > l_max - 2) continue;
      for (ModeIndex to : lattice(t)) {
        double expected = 0.0;
        if (to == from) {
          const double l = from.l, m = from.m;
          switch (kind) {
            case CasimirKind::so21_K: expected = m * m - 0.25; break;
            case CasimirKind::so3_J: expected = l * (l + 1); break;
            case CasimirKind::so21_R:
            case CasimirKind::so21_S: expected = -3.0 / 16.0; break;
            case CasimirKind::so32: expected = -1.25; break;
          }
        }
        diag = std::max(diag, std::abs(c.element(to, from) - expected));
      }
    }
  }
  double comm = 0.0;
  const SparseOperator c = casimir(CasimirKind::so32, t);
  for (G g : kBasisGenerators)
    comm = std::max(comm, window_gap(commutator(c, generator(g, t)), SparseOperator::zero(t), l_max - 3));
  return {diag <= 1e-11 && comm <= 1e-10, "diagonal deviation " + fmt(diag) + ", [C, X] deviation " + fmt(comm)};
}

Outcome ladder_vs_differential() {
  const QuadratureRule rule = gauss_legendre(32);
  double worst = 0.0;
  for (G g : kAllGenerators) {
    const Shift s = shift_of(g);
    for (ModeIndex mode : lattice(Truncation(10)))
      if (is_admissible(mode.l + s.dl, mode.m + s.dm))
        worst = std::max(worst, ladder_diff_consistency(g, mode.l, mode.m, rule));
  }
  return {worst <= 1e-9, "max nodal error " + fmt(worst) + " on 32 nodes, l <= 10"};
}

Outcome legendre_ode() {
  const QuadratureRule rule = gauss_legendre(32);
  double residual = 0.0;
  double mismatch = 0.0;
  for (CasimirKind kind :
       {CasimirKind::so21_K, CasimirKind::so3_J, CasimirKind::so21_R, CasimirKind::so21_S, CasimirKind::so32})
    for (ModeIndex mode : lattice(Truncation(12))) {
      const OdeRouteResult r = ode_residual_from_casimir(kind, mode.l, mode.m, rule);
      residual = std::max(residual, r.max_abs_residual);
      mismatch = std::max(mismatch, r.max_prefactor_mismatch);
    }
  double direct = 0.0;
  for (ModeIndex mode : lattice(Truncation(12)))
    for (double x : rule.nodes())
      direct = std::max(direct, std::abs(legendre_bracket(mode.l, mode.m, x, eval_T(mode.l, mode.m, x),
                                                          eval_T_derivative(mode.l, mode.m, x),
                                                          eval_T_second_derivative(mode.l, mode.m, x))));
  return {residual <= 1e-9 && mismatch <= 1e-9 && direct <= 1e-9,
          "direct residual " + fmt(direct) + ", route residual " + fmt(residual) + ", prefactor mismatch " +
              fmt(mismatch)};
}

Outcome orthogonality_parseval() {
  const auto t0 = Clock::now();
  const int l_max = 12;
  const QuadratureRule rule = gauss_legendre(l_max + 1);

  double gram = 0.0;
  for (int m = -l_max; m <= l_max; ++m)
    for (int l = std::abs(m); l <= l_max; ++l)
      for (int lp = std::abs(m); lp <= l_max; ++lp) {
        const double g = rule.integrate([&](double x) { return orthonormal_basis(l, m, x) * orthonormal_basis(lp, m, x); });
        gram = std::max(gram, std::abs(g - (l == lp ? 1.0 : 0.0)));
      }

  std::mt19937_64 rng(20120101);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  double parseval = 0.0;
  double roundtrip = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<GridFunction> channels;
    std::vector<ChannelSpectrum> spectra;
    for (int m = -l_max; m <= l_max; ++m) {
      ChannelSpectrum s(m, l_max);
      for (int l = std::abs(m); l <= l_max; ++l) s.set(l, coeff(rng));
      channels.push_back(synthesize(s, rule));
      spectra.push_back(s);
    }
    const ParsevalResult r = parseval_check(channels, l_max);
    parseval = std::max(parseval, std::abs(r.lhs - r.rhs) / (1.0 + r.lhs));
    for (std::size_t c = 0; c < channels.size(); ++c) {
      const ChannelSpectrum back = analyze(channels[c], l_max);
      for (int l = back.l_min(); l <= l_max; ++l)
        roundtrip = std::max(roundtrip, std::abs(back.at(l) - spectra[c].at(l)));
    }
  }
  const double elapsed = seconds_since(t0);
  return {gram <= 1e-11 && parseval <= 1e-10 && roundtrip <= 1e-11 && elapsed <= 10.0,
          "Gram " + fmt(gram) + ", Parseval " + fmt(parseval) + ", round trip " + fmt(roundtrip) + ", " +
              fmt(elapsed) + " s"};
}

Outcome irreducibility() {
  const Truncation t(10);
  double worst = 0.0;
  for (ModeIndex mode : lattice(t))
    worst = std::max(worst, (generate_mode(mode.l, mode.m, t) - RealCoeffs::unit(t, mode)).norm());
  return {worst <= 1e-10, "max |generated - unit| " + fmt(worst) + " over l <= 10"};
}

Outcome spectra() {
  const int l_max = 12;
  const Truncation t(l_max);
  bool ok = true;
  for (int m = -l_max; m <= l_max; ++m) {
    std::vector<double> expected;
    for (int l = std::abs(m); l <= l_max; ++l) expected.push_back(l + 0.5);
    ok = ok && spectrum(G::K3, t, {.fixed_m = m}) == expected;
  }
  std::vector<double> even, odd;
  for (int k = 0; 2 * k <= 2 * l_max; ++k) even.push_back(0.5 + 2 * k);
  for (int k = 0; 2 * k + 1 <= 2 * l_max; ++k) odd.push_back(1.5 + 2 * k);
  ok = ok && spectrum(G::R3, t, {.parity = 0}) == even;
  ok = ok && spectrum(G::R3, t, {.parity = 1}) == odd;
  ok = ok && spectrum(G::S3, t, {.parity = 0}) == even;
  return {ok, "K3 per channel and R3/S3 by parity compared exactly"};
}

Outcome sphere() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);

  const int l_rt = 8;
  const SphereGrid grid8 = SphereGrid::gauss(l_rt + 1, 2 * l_rt + 1);
  ComplexCoeffs c{Truncation(l_rt)};
  for (ModeIndex mode : lattice(Truncation(l_rt))) c.set(mode, {u(rng), u(rng)});
  const double roundtrip = sht_analyze(sht_synthesize(c, grid8), l_rt).max_abs_diff(c);

  const int l_el = 6;
  const SphereGrid grid6 = SphereGrid::gauss(l_el + 3, 2 * l_el + 5);
  double elements = 0.0;
  for (G g : kAllGenerators) {
    const Shift s = shift_of(g);
    for (ModeIndex mode : lattice(Truncation(l_el)))
      if (is_admissible(mode.l + s.dl, mode.m + s.dm))
        elements = std::max(elements, std::abs(primed_matrix_element(g, mode.l, mode.m, grid6) -
                                               cplx(matrix_element(g, mode.l, mode.m), 0.0)));
  }

  const int l_cas = 5;
  const SphereGrid grid5 = SphereGrid::gauss(l_cas + 3, 2 * l_cas + 5);
  double cas = 0.0;
  for (ModeIndex mode : lattice(Truncation(l_cas))) {
    const SphereField y = sample_Y(mode.l, mode.m, grid5);
    const SphereField out = so32_casimir_on_field(y, l_cas);
    for (std::size_t k = 0; k < y.values.size(); ++k) cas = std::max(cas, std::abs(out.values[k] + 1.25 * y.values[k]));
  }
  return {roundtrip <= 1e-10 && elements <= 1e-9 && cas <= 1e-8,
          "SHT round trip " + fmt(roundtrip) + ", primed elements " + fmt(elements) + ", Casimir " + fmt(cas)};
}

Outcome end_to_end() {
  const std::string cmd = std::string("\"") + SO32_CLI_PATH + "\" verify --suite all --lmax 12 --quiet > /dev/null";
  const auto t0 = Clock::now();
  const int status = std::system(cmd.c_str());
  const double elapsed = seconds_since(t0);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code == 0 && elapsed <= 60.0, "exit " + std::to_string(code) + " in " + fmt(elapsed) + " s"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"matrix-element fidelity", matrix_elements},
      {"commutator table", commutator_table},
      {"Casimir eigenvalues", casimirs},
      {"ladder/differential consistency", ladder_vs_differential},
      {"Legendre ODE via Casimir routes", legendre_ode},
      {"orthogonality and Parseval", orthogonality_parseval},
      {"irreducibility generation", irreducibility},
      {"K3 and R3 spectra", spectra},
      {"sphere transforms and primed operators", sphere},
      {"end-to-end verify --suite all", end_to_end},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
