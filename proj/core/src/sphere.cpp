#include "so32/sphere.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "so32/alp.hpp"
#include "so32/differential.hpp"
#include "so32/errors.hpp"

namespace so32 {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const double kInvSqrtTwoPi = 1.0 / std::sqrt(kTwoPi);

std::vector<cplx> phase_table(int m, const SphereGrid& grid) {
  std::vector<cplx> table(static_cast<std::size_t>(grid.n_phi()));
  for (int j = 0; j < grid.n_phi(); ++j) table[static_cast<std::size_t>(j)] = std::polar(1.0, m * grid.phi(j));
  return table;
}

void require_resolution(const SphereGrid& grid, int l_max) {
  if (grid.n_theta() < l_max + 1)
    throw UsageError("n_theta=" + std::to_string(grid.n_theta()) + " too small for l_max=" +
                     std::to_string(l_max) + " (needs l_max+1)");
  if (grid.n_phi() < 2 * l_max + 1)
    throw UsageError("n_phi=" + std::to_string(grid.n_phi()) + " too small for l_max=" + std::to_string(l_max) +
                     " (needs 2 l_max+1)");
}

// Adds c * phase(phi) * e^{i m phi} * sqrt(l+1/2) * (g T_l^m)(x) to out.
void accumulate_primed(Generator g, int l, int m, cplx c, SphereField& out) {
  const SphereGrid& grid = out.grid;
  const std::vector<cplx> phases = phase_table(m + primed_phase(g), grid);
  const double norm = std::sqrt(l + 0.5);
  for (int i = 0; i < grid.n_theta(); ++i) {
    const double x = grid.x(i);
    const double radial =
        norm * realize(g, l, m, x).apply(eval_T(l, m, x), eval_T_derivative(l, m, x));
    if (radial == 0.0) continue;
    for (int j = 0; j < grid.n_phi(); ++j) out.at(i, j) += c * radial * phases[static_cast<std::size_t>(j)];
  }
}

}  // namespace

SphereGrid::SphereGrid(QuadratureRule theta_rule, int n_phi) : theta_rule_(std::move(theta_rule)), n_phi_(n_phi) {
  if (theta_rule_.order() < 1) throw UsageError("sphere grid needs at least one theta node");
  if (n_phi < 1) throw UsageError("sphere grid needs at least one phi node");
}

SphereGrid SphereGrid::gauss(int n_theta, int n_phi) { return SphereGrid(gauss_legendre(n_theta), n_phi); }

double SphereGrid::theta(int i) const { return std::acos(x(i)); }

double SphereGrid::phi(int j) const { return kTwoPi * j / n_phi_; }

SphereField::SphereField(SphereGrid g)
    : grid(std::move(g)), values(static_cast<std::size_t>(grid.n_theta() * grid.n_phi()), cplx{}) {}

cplx eval_Y(int l, int m, double theta, double phi) {
  if (!(theta > 0.0 && theta < std::numbers::pi)) throw DomainError("theta must lie strictly between the poles");
  return kInvSqrtTwoPi * eval_T(l, m, std::cos(theta)) * std::polar(1.0, m * phi);
}

double standard_sh_factor(int l) noexcept { return std::sqrt(l + 0.5); }

ComplexCoeffs to_standard_coefficients(const ComplexCoeffs& c) {
  ComplexCoeffs out = c;
  out *= cplx(std::sqrt(kTwoPi), 0.0);
  return out;
}

cplx y_amplitude(cplx coefficient, int l) noexcept { return coefficient * std::sqrt(kTwoPi * (l + 0.5)); }

SphereField sample_Y(int l, int m, const SphereGrid& grid) {
  if (!is_admissible(l, m)) throw DomainError("inadmissible (l,m) " + to_string({l, m}));
  SphereField f(grid);
  const std::vector<cplx> phases = phase_table(m, grid);
  for (int i = 0; i < grid.n_theta(); ++i) {
    const double t = kInvSqrtTwoPi * eval_T(l, m, grid.x(i));
    for (int j = 0; j < grid.n_phi(); ++j) f.at(i, j) = t * phases[static_cast<std::size_t>(j)];
  }
  return f;
}

ComplexCoeffs sht_analyze(const SphereField& f, int l_max) {
  const SphereGrid& grid = f.grid;
  require_resolution(grid, l_max);
  if (f.values.size() != static_cast<std::size_t>(grid.n_theta() * grid.n_phi()))
    throw UsageError("field shape does not match its grid");

  ComplexCoeffs out{Truncation(l_max)};
  const auto& weights = grid.theta_rule().weights();
  std::vector<cplx> channel(static_cast<std::size_t>(grid.n_theta()));
  for (int m = -l_max; m <= l_max; ++m) {
    const std::vector<cplx> phases = phase_table(-m, grid);
    for (int i = 0; i < grid.n_theta(); ++i) {
      cplx sum{};
      for (int j = 0; j < grid.n_phi(); ++j) sum += f.at(i, j) * phases[static_cast<std::size_t>(j)];
      channel[static_cast<std::size_t>(i)] = sum / static_cast<double>(grid.n_phi());
    }
    const int m_abs = m < 0 ? -m : m;
    std::vector<cplx> acc(static_cast<std::size_t>(l_max - m_abs + 1), cplx{});
    for (int i = 0; i < grid.n_theta(); ++i) {
      const std::vector<double> column = eval_T_column(m, l_max, grid.x(i));
      const cplx wf = weights[static_cast<std::size_t>(i)] * channel[static_cast<std::size_t>(i)];
      for (std::size_t k = 0; k < column.size(); ++k) acc[k] += wf * column[k];
    }
    for (std::size_t k = 0; k < acc.size(); ++k) {
      const int l = m_abs + static_cast<int>(k);
      out.set({l, m}, std::sqrt(l + 0.5) * acc[k]);
    }
  }
  return out;
}

SphereField sht_synthesize(const ComplexCoeffs& coeffs, const SphereGrid& grid) {
  SphereField f(grid);
  const int l_max = coeffs.truncation().l_max();
  for (int m = -l_max; m <= l_max; ++m) {
    std::vector<cplx> channel(static_cast<std::size_t>(grid.n_theta()), cplx{});
    bool any = false;
    for (int i = 0; i < grid.n_theta(); ++i) {
      const std::vector<double> column = eval_T_column(m, l_max, grid.x(i));
      const int m_abs = m < 0 ? -m : m;
      cplx sum{};
      for (std::size_t k = 0; k < column.size(); ++k) {
        const int l = m_abs + static_cast<int>(k);
        const cplx c = coeffs.get({l, m});
        if (c == cplx{}) continue;
        any = true;
        sum += c * std::sqrt(l + 0.5) * column[k];
      }
      channel[static_cast<std::size_t>(i)] = sum;
    }
    if (!any) continue;
    const std::vector<cplx> phases = phase_table(m, grid);
    for (int i = 0; i < grid.n_theta(); ++i)
      for (int j = 0; j < grid.n_phi(); ++j)
        f.at(i, j) += channel[static_cast<std::size_t>(i)] * phases[static_cast<std::size_t>(j)];
  }
  return f;
}

int primed_phase(Generator g) noexcept {
  switch (g) {
    case Generator::Jp:
    case Generator::Rp:
    case Generator::Sm: return 1;
    case Generator::Jm:
    case Generator::Rm:
    case Generator::Sp: return -1;
    default: return 0;
  }
}

SphereField apply_primed_to_mode(Generator g, int l, int m, const SphereGrid& grid) {
  if (!is_admissible(l, m)) throw DomainError("inadmissible (l,m) " + to_string({l, m}));
  SphereField out(grid);
  // sqrt(l+1/2) is folded into accumulate_primed; undo it for a bare Y_l^m.
  accumulate_primed(g, l, m, cplx(kInvSqrtTwoPi / std::sqrt(l + 0.5), 0.0), out);
  return out;
}

SphereField apply_primed(Generator g, const SphereField& f, int l_max) {
  const ComplexCoeffs coeffs = sht_analyze(f, l_max);
  SphereField out(f.grid);
  for (const auto& [mode, c] : coeffs.entries()) {
    if (c == cplx{}) continue;
    accumulate_primed(g, mode.l, mode.m, c, out);
  }
  return out;
}

SphereField so32_casimir_on_field(const SphereField& f, int l_max) {
  using G = Generator;
  auto product = [&](G outer, G inner) {
    return apply_primed(outer, apply_primed(inner, f, l_max), l_max + 1);
  };
  auto add = [](SphereField& acc, const SphereField& term, double scale) {
    for (std::size_t k = 0; k < acc.values.size(); ++k) acc.values[k] += scale * term.values[k];
  };
  SphereField out(f.grid);
  add(out, product(G::J3, G::J3), 1.0);
  add(out, product(G::K3, G::K3), 1.0);
  add(out, product(G::Jp, G::Jm), 0.5);
  add(out, product(G::Jm, G::Jp), 0.5);
  add(out, product(G::Kp, G::Km), -0.5);
  add(out, product(G::Km, G::Kp), -0.5);
  add(out, product(G::Rp, G::Rm), -0.25);
  add(out, product(G::Rm, G::Rp), -0.25);
  add(out, product(G::Sp, G::Sm), -0.25);
  add(out, product(G::Sm, G::Sp), -0.25);
  return out;
}

cplx primed_matrix_element(Generator g, int l, int m, const SphereGrid& grid) {
  const Shift s = shift_of(g);
  const ModeIndex image{l + s.dl, m + s.dm};
  if (!is_admissible(image)) return {};
  const ComplexCoeffs c = sht_analyze(apply_primed_to_mode(g, l, m, grid), l + 1);
  return y_amplitude(c.get(image), image.l);
}

}  // namespace so32
