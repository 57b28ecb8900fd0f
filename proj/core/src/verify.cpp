#include "so32/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "so32/alp.hpp"
#include "so32/differential.hpp"
#include "so32/errors.hpp"
#include "so32/generators.hpp"
#include "so32/quadrature.hpp"
#include "so32/sphere.hpp"
#include "so32/structure.hpp"
#include "so32/transforms.hpp"

namespace so32 {
namespace {

// Sphere checks are capped to these degrees regardless of --lmax.
constexpr int kSphereTransformCap = 8;
constexpr int kSpherePrimedCap = 6;
constexpr int kSphereCasimirCap = 5;

class Recorder {
 public:
  explicit Recorder(VerifyReport& report) : report_(report) {}

  CheckRecord& add(std::string id, std::string anchor, double deviation, double default_tol,
                   std::optional<int> window = std::nullopt) {
    CheckRecord r;
    r.id = std::move(id);
    r.anchor = std::move(anchor);
    r.max_deviation = deviation;
    r.tolerance = report_.options.tol.value_or(default_tol);
    r.validity_l_max = window;
    r.pass = std::isfinite(deviation) && deviation <= r.tolerance;
    report_.checks.push_back(std::move(r));
    return report_.checks.back();
  }

  // Checks that must hold exactly ignore --tol.
  CheckRecord& add_exact(std::string id, std::string anchor, bool ok, std::optional<int> window = std::nullopt) {
    CheckRecord r;
    r.id = std::move(id);
    r.anchor = std::move(anchor);
    r.max_deviation = ok ? 0.0 : 1.0;
    r.tolerance = 0.0;
    r.validity_l_max = window;
    r.pass = ok;
    report_.checks.push_back(std::move(r));
    return report_.checks.back();
  }

 private:
  VerifyReport& report_;
};

// Largest |A - B| over columns whose mode has l <= window.
double column_deviation(const SparseOperator& a, const SparseOperator& b, int window) {
  const std::size_t n = a.truncation().size();
  const std::vector<double> da = a.to_dense();
  const std::vector<double> db = b.to_dense();
  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (mode_at(j).l > window) continue;
    for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(da[i * n + j] - db[i * n + j]));
  }
  return worst;
}

SparseOperator diagonal(Truncation trunc, const std::function<double(int, int)>& value) {
  SparseOperator op(trunc);
  for (const ModeIndex mode : lattice(trunc)) op.push(flat_index(mode), flat_index(mode), value(mode.l, mode.m));
  return op;
}

std::string gname(Generator g) { return std::string(name(g)); }

// Integer products written out independently of the generator factory.
long double expected_square(Generator g, long double l, long double m) {
  switch (g) {
    case Generator::Jp: return (l - m) * (l + m + 1);
    case Generator::Jm: return (l + m) * (l - m + 1);
    case Generator::Kp: return (l - m + 1) * (l + m + 1);
    case Generator::Km: return (l + m) * (l - m);
    case Generator::Rp: return (l + m + 2) * (l + m + 1);
    case Generator::Rm: return (l + m) * (l + m - 1);
    case Generator::Sp: return (l - m + 2) * (l - m + 1);
    case Generator::Sm: return (l - m) * (l - m - 1);
    default: return 0;
  }
}

std::vector<double> half_integers(int first_twice, int last_twice, int step_twice) {
  std::vector<double> out;
  for (int t = first_twice; t <= last_twice; t += step_twice) out.push_back(t / 2.0);
  return out;
}

// --- algebra -----------------------------------------------------------------

void suite_algebra(VerifyReport& report) {
  Recorder rec(report);
  const int L = report.options.l_max;
  const Truncation trunc(L);

  for (Generator g : kLadderGenerators) {
    const SparseOperator op = generator(g, trunc);
    const Shift s = shift_of(g);
    double worst = 0.0;
    for (const ModeIndex mode : lattice(trunc)) {
      const ModeIndex image{mode.l + s.dl, mode.m + s.dm};
      const double stored = trunc.contains(image) ? op.element(image, mode) : matrix_element(g, mode.l, mode.m);
      const double expected = static_cast<double>(std::sqrt(expected_square(g, mode.l, mode.m)));
      const double scale = std::max(1.0, expected);
      worst = std::max(worst, std::abs(stored - expected) / scale);
    }
    rec.add("matrix_element/" + gname(g), gname(g) + " T_l^m = sqrt(integer product) T_l'^m'", worst, 1e-14, L);
  }

  for (const BracketRelation& rel : structure_relations()) {
    const SparseOperator lhs = commutator(generator(rel.lhs, trunc), generator(rel.rhs, trunc));
    const SparseOperator rhs = relation_rhs(rel, trunc);
    const int window = std::min(lhs.valid_l_max(), rhs.valid_l_max());
    rec.add("bracket/" + gname(rel.lhs) + "," + gname(rel.rhs), rel.formula(), column_deviation(lhs, rhs, window),
            1e-12, window);
  }

  const std::pair<Generator, Generator> adjoint_pairs[] = {
      {Generator::Jp, Generator::Jm}, {Generator::Kp, Generator::Km},
      {Generator::Rp, Generator::Rm}, {Generator::Sp, Generator::Sm}};
  for (const auto& [raise, lower] : adjoint_pairs) {
    const std::size_t n = trunc.size();
    const std::vector<double> up = generator(raise, trunc).to_dense();
    const std::vector<double> down = generator(lower, trunc).to_dense();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) worst = std::max(worst, std::abs(down[i * n + j] - up[j * n + i]));
    rec.add("adjoint/" + gname(lower), gname(lower) + " = " + gname(raise) + "^T", worst, 1e-13, L);
  }

  struct Factorization {
    Generator outer, inner;
    std::function<double(int, int)> value;
    const char* anchor;
  };
  const Factorization factorizations[] = {
      {Generator::Kp, Generator::Km, [](int l, int m) { return double(l) * l - double(m) * m; }, "K+K- = l^2 - m^2"},
      {Generator::Km, Generator::Kp, [](int l, int m) { return double(l + 1) * (l + 1) - double(m) * m; },
       "K-K+ = (l+1)^2 - m^2"},
      {Generator::Jp, Generator::Jm, [](int l, int m) { return double(l + m) * (l - m + 1); },
       "J+J- = (l+m)(l-m+1)"},
      {Generator::Jm, Generator::Jp, [](int l, int m) { return double(l - m) * (l + m + 1); },
       "J-J+ = (l-m)(l+m+1)"},
  };
  for (const auto& f : factorizations) {
    const SparseOperator prod = generator(f.outer, trunc) * generator(f.inner, trunc);
    const int window = prod.valid_l_max();
    rec.add("factorization/" + gname(f.outer) + gname(f.inner), f.anchor,
            column_deviation(prod, diagonal(trunc, f.value), window), 1e-12, window);
  }

  double worst = 0.0;
  for (const ModeIndex mode : lattice(trunc))
    worst = std::max(worst, generate_mode(mode.l, mode.m, trunc).max_abs_diff(RealCoeffs::unit(trunc, mode)));
  rec.add("generate_mode", "(1/l!) sqrt((l-|m|)!/(l+|m|)!) (J+-)^|m| (K+)^l |0,0> = |l,m>", worst, 1e-10, L);

  bool k3_ok = true;
  for (int m = -L; m <= L; ++m) {
    const int lo = 2 * std::abs(m) + 1;
    k3_ok = k3_ok && spectrum(Generator::K3, trunc, {.fixed_m = m}) == half_integers(lo, 2 * L + 1, 2);
  }
  rec.add_exact("spectrum/K3", "eigenvalues of K3 at fixed m = {|m|+1/2, |m|+3/2, ...}", k3_ok, L);

  bool j3_ok = true;
  for (int l = 0; l <= L; ++l) j3_ok = j3_ok && spectrum(Generator::J3, trunc, {.fixed_l = l}) == half_integers(-2 * l, 2 * l, 2);
  rec.add_exact("spectrum/J3", "eigenvalues of J3 at fixed l = {-l, ..., l}", j3_ok, L);

  for (Generator g : {Generator::R3, Generator::S3}) {
    const bool even = spectrum(g, trunc, {.parity = 0}) == half_integers(1, 4 * L + 1, 4);
    const bool odd = L == 0 || spectrum(g, trunc, {.parity = 1}) == half_integers(3, 4 * L - 1, 4);
    rec.add_exact("spectrum/" + gname(g) + "/even", "eigenvalues of " + gname(g) + " (l+m even) = {1/2, 5/2, 9/2, ...}", even, L);
    rec.add_exact("spectrum/" + gname(g) + "/odd", "eigenvalues of " + gname(g) + " (l+m odd) = {3/2, 7/2, 11/2, ...}", odd, L);
  }
}

// --- casimir -----------------------------------------------------------------

void suite_casimir(VerifyReport& report) {
  Recorder rec(report);
  const int L = report.options.l_max;
  const Truncation trunc(L);
  const std::pair<CasimirKind, const char*> kinds[] = {
      {CasimirKind::so21_K, "K3^2 - {K+,K-}/2 = m^2 - 1/4"},
      {CasimirKind::so3_J, "J3^2 + {J+,J-}/2 = l(l+1)"},
      {CasimirKind::so21_R, "(R3^2 - {R+,R-}/2)/4 = -3/16"},
      {CasimirKind::so21_S, "(S3^2 - {S+,S-}/2)/4 = -3/16"},
      {CasimirKind::so32, "J3^2 + K3^2 + {J+,J-}/2 - {K+,K-}/2 - {R+,R-}/4 - {S+,S-}/4 = -5/4"},
  };
  SparseOperator so32_casimir;
  for (const auto& [kind, anchor] : kinds) {
    const SparseOperator c = casimir(kind, trunc);
    const int window = c.valid_l_max();
    const SparseOperator expected = diagonal(trunc, [kind](int l, int m) { return casimir_eigenvalue(kind, l, m); });
    auto& r = rec.add("casimir/" + std::string(name(kind)), anchor, column_deviation(c, expected, window), 1e-11, window);
    if (kind == CasimirKind::so21_R || kind == CasimirKind::so21_S || kind == CasimirKind::so32) {
      double sum = 0.0;
      int count = 0;
      for (const ModeIndex mode : lattice(trunc))
        if (mode.l <= window) {
          sum += c.element(mode, mode);
          ++count;
        }
      if (count > 0) r.observed = sum / count;
    }
    if (kind == CasimirKind::so32) so32_casimir = c;
  }

  for (Generator g : kBasisGenerators) {
    const SparseOperator comm = commutator(so32_casimir, generator(g, trunc));
    const int window = comm.valid_l_max();
    rec.add("casimir_commutes/" + gname(g), "[C2(so32), " + gname(g) + "] = 0",
            column_deviation(comm, SparseOperator::zero(trunc), window), 1e-10, window);
  }
}

// --- diffops -----------------------------------------------------------------

void suite_diffops(VerifyReport& report) {
  Recorder rec(report);
  const int L = report.options.l_max;
  const QuadratureRule rule = gauss_legendre(report.options.nodes);

  for (Generator g : kAllGenerators) {
    double worst = 0.0;
    for (const ModeIndex mode : lattice(Truncation(L)))
      worst = std::max(worst, ladder_diff_consistency(g, mode.l, mode.m, rule));
    rec.add("ladder_vs_differential/" + gname(g), "differential " + gname(g) + " T_l^m = matrix element * T_l'^m'",
            worst, 1e-9, L);
  }

  const std::pair<CasimirKind, const char*> routes[] = {
      {CasimirKind::so21_K, "C2(K) - (M^2 - 1/4) = (1-x^2) E"},
      {CasimirKind::so3_J, "C2(J) - L(L+1) = -E"},
      {CasimirKind::so21_R, "R3^2 - {R+,R-}/2 + 3/4 = x^2 E"},
      {CasimirKind::so21_S, "S3^2 - {S+,S-}/2 + 3/4 = x^2 E"},
      {CasimirKind::so32, "C2(so32) + 5/4 = x^2 E"},
  };
  for (const auto& [kind, anchor] : routes) {
    double residual = 0.0;
    double mismatch = 0.0;
    for (const ModeIndex mode : lattice(Truncation(L))) {
      const OdeRouteResult r = ode_residual_from_casimir(kind, mode.l, mode.m, rule);
      residual = std::max(residual, r.max_abs_residual);
      mismatch = std::max(mismatch, r.max_prefactor_mismatch);
    }
    const std::string id = std::string(name(kind));
    rec.add("legendre_ode/" + id, "route residual on T_l^m, E = (1-x^2)T'' - 2xT' + (l(l+1) - m^2/(1-x^2))T",
            residual, 1e-9, L);
    rec.add("route_prefactor/" + id, anchor, mismatch, 1e-9, L);
  }

  double worst = 0.0;
  const int max_degree = std::min(L, rule.order() - 2);
  for (int k = 0; k <= max_degree; ++k) {
    std::vector<double> values;
    for (double x : rule.nodes()) values.push_back(legendre_p(k, x).p);
    worst = std::max(worst, x_dx_commutator_residual(rule, values));
  }
  rec.add("x_dx_commutator", "[X, D_x] = -1 on polynomial grid data", worst, 1e-12, max_degree);
}

// --- orthogonality -----------------------------------------------------------

void suite_orthogonality(VerifyReport& report) {
  Recorder rec(report);
  const int L = report.options.l_max;

  for (int n : {L + 1, report.options.nodes}) {
    const QuadratureRule rule = gauss_legendre(n);
    const auto& x = rule.nodes();
    const auto& w = rule.weights();
    double wsum = 0.0;
    double sym = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
      wsum += w[k];
      sym = std::max(sym, std::abs(x[k] + x[x.size() - 1 - k]));
    }
    double exact = 0.0;
    for (int d = 0; d <= 2 * n - 1; ++d) {
      const double truth = d % 2 == 1 ? 0.0 : 2.0 / (d + 1);
      exact = std::max(exact, std::abs(rule.integrate([d](double t) { return std::pow(t, d); }) - truth));
    }
    const std::string tag = "gauss_legendre/n=" + std::to_string(n);
    rec.add(tag + "/weight_sum", "sum w_k = 2", std::abs(wsum - 2.0), 1e-13);
    rec.add(tag + "/symmetry", "x_k = -x_{n+1-k}", sym, 1e-14);
    rec.add(tag + "/exactness", "sum w_k x_k^d = int x^d, d <= 2n-1", exact, 1e-13);
  }

  const QuadratureRule rule = gauss_legendre(L + 1);
  double gram = 0.0;
  for (int m = -L; m <= L; ++m) {
    const int lo = std::abs(m);
    for (int l = lo; l <= L; ++l)
      for (int lp = lo; lp <= L; ++lp) {
        const double g = rule.integrate([&](double t) { return eval_T(l, m, t) * (l + 0.5) * eval_T(lp, m, t); });
        gram = std::max(gram, std::abs(g - (l == lp ? 1.0 : 0.0)));
      }
  }
  rec.add("gram/T", "int T_l^m (l+1/2) T_l'^m dx = delta_ll'", gram, 1e-11, L);

  bool phase_ok = true;
  for (const ModeIndex mode : lattice(Truncation(L)))
    if (mode.m >= 0)
      for (double x : rule.nodes()) phase_ok = phase_ok && phase_relation_check(mode.l, mode.m, x);
  rec.add_exact("phase_relation", "T_l^-m = (-1)^m T_l^m", phase_ok, L);
}

// --- parseval ----------------------------------------------------------------

std::vector<ChannelSpectrum> random_spectra(int l_max, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<ChannelSpectrum> channels;
  for (int m = -l_max; m <= l_max; ++m) {
    ChannelSpectrum s(m, l_max);
    for (int l = std::abs(m); l <= l_max; ++l) s.set(l, dist(rng));
    channels.push_back(std::move(s));
  }
  return channels;
}

void suite_parseval(VerifyReport& report) {
  Recorder rec(report);
  const int L = report.options.l_max;
  const QuadratureRule rule = gauss_legendre(L + 1);
  std::mt19937_64 rng(report.options.seed);

  double parseval = 0.0;
  double roundtrip = 0.0;
  double idempotence = 0.0;
  double inner = 0.0;
  for (int trial = 0; trial < report.options.random_spectra; ++trial) {
    const std::vector<ChannelSpectrum> spectra = random_spectra(L, rng);
    std::vector<GridFunction> grids;
    for (const auto& s : spectra) grids.push_back(synthesize(s, rule));
    const ParsevalResult p = parseval_check(grids, L);
    parseval = std::max(parseval, std::abs(p.lhs - p.rhs) / (1.0 + p.lhs));
    inner = std::max(inner, std::abs(inner_product(spectra, spectra) - grid_inner_product(grids, grids)) / (1.0 + p.lhs));
    for (std::size_t c = 0; c < spectra.size(); ++c) {
      const ChannelSpectrum back = analyze(grids[c], L);
      for (std::size_t i = 0; i < back.values().size(); ++i)
        roundtrip = std::max(roundtrip, std::abs(back.values()[i] - spectra[c].values()[i]));
      const GridFunction once = synthesize(back, rule);
      const GridFunction twice = synthesize(analyze(once, L), rule);
      for (std::size_t k = 0; k < once.values.size(); ++k)
        idempotence = std::max(idempotence, std::abs(once.values[k] - twice.values[k]));
    }
  }
  rec.add("parseval", "sum (f_l^m)^2 = sum int (f^m)^2 dx, relative to 1+lhs", parseval, 1e-10, L);
  rec.add("inner_product", "sum f_l^m g_l^m = sum int f^m g^m dx, relative to 1+|f|^2", inner, 1e-10, L);
  rec.add("roundtrip", "analyze(synthesize(c)) = c", roundtrip, 1e-11, L);
  rec.add("projector_idempotence", "(synthesize analyze)^2 = synthesize analyze", idempotence, 1e-12, L);

  double kernel = 0.0;
  const double probes[] = {-0.83, -0.31, 0.07, 0.52, 0.9};
  for (int m : {0, 1, -2, L / 2}) {
    if (std::abs(m) > L) continue;
    ChannelSpectrum s = random_spectra(L, rng)[static_cast<std::size_t>(m + L)];
    const GridFunction f = synthesize(s, rule);
    for (double x : probes) {
      double truth = 0.0;
      for (int l = std::abs(m); l <= L; ++l) truth += s.at(l) * orthonormal_basis(l, m, x);
      kernel = std::max(kernel, std::abs(kernel_project(f, L, x) - truth));
    }
  }
  rec.add("completeness_kernel", "sum_k w_k K(x, x_k) f(x_k) = f(x) for band-limited f", kernel, 1e-10, L);

  const QuadratureRule wide = gauss_legendre(L + 2);
  double ladder = 0.0;
  for (Generator g : kLadderGenerators) {
    for (int m : {0, 1, -1, 2}) {
      if (std::abs(m) > L) continue;
      const ChannelSpectrum s = random_spectra(L, rng)[static_cast<std::size_t>(m + L)];
      const ChannelSpectrum algebraic = apply_ladder(g, s);
      const ChannelSpectrum differential = analyze(apply_diff_to_spectrum(g, s, wide), algebraic.l_max());
      for (int l = algebraic.l_min(); l <= algebraic.l_max(); ++l)
        ladder = std::max(ladder, std::abs(algebraic.at(l) - differential.at(l)));
    }
  }
  rec.add("ladder_on_spectrum", "coefficient-space ladder = differential form re-analyzed", ladder, 1e-9, L);
}

// --- sphere ------------------------------------------------------------------

void suite_sphere(VerifyReport& report) {
  Recorder rec(report);
  const int L = report.options.l_max;
  std::mt19937_64 rng(report.options.seed + 1);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);

  const int Lt = std::min(L, kSphereTransformCap);
  {
    const SphereGrid grid = SphereGrid::gauss(Lt + 1, 2 * Lt + 1);
    const auto modes = lattice(Truncation(Lt));
    std::vector<SphereField> samples;
    for (const ModeIndex mode : modes) samples.push_back(sample_Y(mode.l, mode.m, grid));
    const auto& w = grid.theta_rule().weights();
    const double dphi = 2.0 * std::numbers::pi / grid.n_phi();
    double gram = 0.0;
    for (std::size_t a = 0; a < modes.size(); ++a)
      for (std::size_t b = 0; b < modes.size(); ++b) {
        cplx sum{};
        for (int i = 0; i < grid.n_theta(); ++i)
          for (int j = 0; j < grid.n_phi(); ++j)
            sum += w[static_cast<std::size_t>(i)] * dphi * std::conj(samples[a].at(i, j)) * (modes[a].l + 0.5) *
                   samples[b].at(i, j);
        gram = std::max(gram, std::abs(sum - cplx(a == b ? 1.0 : 0.0)));
      }
    rec.add("sphere/gram", "int conj(Y_l^m) (l+1/2) Y_l'^m' dOmega = delta delta", gram, 1e-10, Lt);

    ComplexCoeffs c{Truncation(Lt)};
    for (const ModeIndex mode : modes) c.set(mode, cplx(dist(rng), dist(rng)));
    const ComplexCoeffs back = sht_analyze(sht_synthesize(c, grid), Lt);
    rec.add("sphere/roundtrip", "sht_analyze(sht_synthesize(c)) = c", back.max_abs_diff(c), 1e-10, Lt);

    SphereField real_field(grid);
    for (auto& v : real_field.values) v = cplx(dist(rng), 0.0);
    // band-limit the random real field first so the check is exact
    const SphereField band = sht_synthesize(sht_analyze(real_field, Lt), grid);
    SphereField real_band(grid);
    for (std::size_t k = 0; k < band.values.size(); ++k) real_band.values[k] = cplx(band.values[k].real(), 0.0);
    const ComplexCoeffs h = sht_analyze(real_band, Lt);
    double herm = 0.0;
    for (const ModeIndex mode : modes) {
      if (mode.m <= 0) continue;
      const double sign = mode.m % 2 == 0 ? 1.0 : -1.0;
      herm = std::max(herm, std::abs(h.get({mode.l, -mode.m}) - sign * std::conj(h.get(mode))));
    }
    rec.add("sphere/hermiticity", "real field: c_{l,-m} = (-1)^m conj(c_{l,m})", herm, 1e-11, Lt);
  }

  const int Lp = std::min(L, kSpherePrimedCap);
  {
    const SphereGrid grid = SphereGrid::gauss(Lp + 2, 2 * Lp + 3);
    for (Generator g : kAllGenerators) {
      double worst = 0.0;
      for (const ModeIndex mode : lattice(Truncation(Lp))) {
        const cplx got = primed_matrix_element(g, mode.l, mode.m, grid);
        worst = std::max(worst, std::abs(got - cplx(matrix_element(g, mode.l, mode.m), 0.0)));
      }
      rec.add("sphere/primed_element/" + gname(g), gname(g) + "' Y_l^m = matrix element * Y_l'^m'", worst, 1e-9, Lp);
    }
  }

  const int Lc = std::min(L, kSphereCasimirCap);
  {
    const SphereGrid grid = SphereGrid::gauss(Lc + 3, 2 * Lc + 5);
    double worst = 0.0;
    double observed = 0.0;
    for (const ModeIndex mode : lattice(Truncation(Lc))) {
      const SphereField y = sample_Y(mode.l, mode.m, grid);
      const SphereField cy = so32_casimir_on_field(y, Lc);
      const ComplexCoeffs cc = sht_analyze(cy, Lc + 1);
      observed = y_amplitude(cc.get(mode), mode.l).real();
      for (std::size_t k = 0; k < y.values.size(); ++k)
        worst = std::max(worst, std::abs(cy.values[k] + 1.25 * y.values[k]));
    }
    auto& r = rec.add("sphere/so32_casimir", "C2(so32) built from primed operators = -5/4 on Y_l^m", worst, 1e-8, Lc);
    r.observed = observed;
  }
}

using SuiteFn = void (*)(VerifyReport&);

struct SuiteEntry {
  const char* name;
  SuiteFn run;
};

constexpr SuiteEntry kSuites[] = {
    {"algebra", suite_algebra},         {"casimir", suite_casimir},   {"diffops", suite_diffops},
    {"orthogonality", suite_orthogonality}, {"parseval", suite_parseval}, {"sphere", suite_sphere},
};

}  // namespace

bool VerifyReport::pass() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& r) { return r.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : kSuites) out.emplace_back(s.name);
    return out;
  }();
  return names;
}

bool is_suite(std::string_view suite) noexcept {
  if (suite == "all") return true;
  return std::any_of(std::begin(kSuites), std::end(kSuites), [&](const SuiteEntry& s) { return suite == s.name; });
}

VerifyReport run_suite(std::string_view suite, const VerifyOptions& options) {
  if (!is_suite(suite)) throw UsageError("unknown suite '" + std::string(suite) + "'");
  if (options.l_max < 0) throw UsageError("--lmax must be non-negative");
  if (options.nodes < 2) throw UsageError("--nodes must be at least 2");
  VerifyReport report;
  report.suite = std::string(suite);
  report.options = options;
  for (const auto& s : kSuites) {
    if (suite != "all" && suite != s.name) continue;
    const std::size_t first = report.checks.size();
    s.run(report);
    if (suite == "all")
      for (std::size_t k = first; k < report.checks.size(); ++k) report.checks[k].id = std::string(s.name) + "/" + report.checks[k].id;
  }
  return report;
}

}  // namespace so32
