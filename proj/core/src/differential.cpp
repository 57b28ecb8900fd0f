#include "so32/differential.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "so32/alp.hpp"
#include "so32/errors.hpp"

namespace so32 {
namespace {

void check_node(double x) {
  if (!(std::abs(x) < 1.0)) throw DomainError("differential form evaluated outside (-1,1)");
  if ((1.0 - x) * (1.0 + x) < kMinOneMinusX2)
    throw DomainError("node too close to the endpoints for the differential forms");
}

SecondOrderForm constant(double c) { return {0.0, 0.0, c}; }

SecondOrderForm anti(Generator a, Generator b, int l, int m, double x) {
  return compose(a, b, l, m, x) + compose(b, a, l, m, x);
}

SecondOrderForm square(Generator g, int l, int m, double x) { return compose(g, g, l, m, x); }

}  // namespace

FirstOrderForm realize(Generator g, int l, int m, double x) {
  check_node(x);
  const double one_minus_x2 = (1.0 - x) * (1.0 + x);
  const double s = std::sqrt(one_minus_x2);
  const double s3 = s * one_minus_x2;
  const double L = l;
  const double M = m;
  // d/dx (x s) = (1 - 2x^2)/s, d/dx (1/s) = x/s^3, d/dx (x/s) = 1/s^3
  const double dxs = (1.0 - 2.0 * x * x) / s;
  switch (g) {
    case Generator::Jp: return {-s, x / s, -x * M / s, -M / s3};
    case Generator::Jm: return {s, -x / s, -x * M / s, -M / s3};
    case Generator::Kp: return {-one_minus_x2, 2.0 * x, x * (L + 1.0), L + 1.0};
    case Generator::Km: return {one_minus_x2, -2.0 * x, x * L, L};
    case Generator::Rp: return {-x * s, -dxs, -M / s - s * (L + 1.0), -M * x / s3 + x * (L + 1.0) / s};
    case Generator::Rm: return {x * s, dxs, -M / s - s * L, -M * x / s3 + x * L / s};
    case Generator::Sp: return {x * s, dxs, -M / s + s * (L + 1.0), -M * x / s3 - x * (L + 1.0) / s};
    case Generator::Sm: return {-x * s, -dxs, -M / s + s * L, -M * x / s3 - x * L / s};
    case Generator::J3: return {0.0, 0.0, M, 0.0};
    case Generator::K3: return {0.0, 0.0, L + 0.5, 0.0};
    case Generator::R3: return {0.0, 0.0, L + M + 0.5, 0.0};
    case Generator::S3: return {0.0, 0.0, L - M + 0.5, 0.0};
  }
  return {};
}

SecondOrderForm compose(Generator outer, Generator inner, int l, int m, double x) {
  const Shift s = shift_of(inner);
  const FirstOrderForm B = realize(inner, l, m, x);
  const FirstOrderForm A = realize(outer, l + s.dl, m + s.dm, x);
  return {A.a * B.a, A.a * (B.da + B.b) + A.b * B.a, A.a * B.db + A.b * B.b};
}

GridFunction apply_diff(Generator g, int l, int m, const GridFunction& grid) {
  if (!is_admissible(l, m)) throw DomainError("inadmissible (l,m) " + to_string({l, m}));
  if (grid.values.size() != grid.rule.nodes().size())
    throw UsageError("grid values do not match the rule order");
  GridFunction out{grid.rule, m + shift_of(g).dm, {}};
  out.values.reserve(grid.values.size());
  const auto& nodes = grid.rule.nodes();
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const double x = nodes[k];
    const FirstOrderForm form = realize(g, l, m, x);
    out.values.push_back(form.apply(grid.values[k], eval_T_derivative(l, m, x)));
  }
  return out;
}

double ladder_diff_consistency(Generator g, int l, int m, const QuadratureRule& rule) {
  const Shift s = shift_of(g);
  const ModeIndex image{l + s.dl, m + s.dm};
  const double element = matrix_element(g, l, m);
  const bool image_exists = is_admissible(image);
  if (!image_exists && element != 0.0)
    throw DomainError("image mode " + to_string(image) + " is not admissible");

  const GridFunction operand = GridFunction::sample(rule, m, [&](double x) { return eval_T(l, m, x); });
  const GridFunction diff = apply_diff(g, l, m, operand);
  double worst = 0.0;
  for (std::size_t k = 0; k < diff.values.size(); ++k) {
    const double expected = image_exists ? element * eval_T(image.l, image.m, rule.nodes()[k]) : 0.0;
    worst = std::max(worst, std::abs(diff.values[k] - expected));
  }
  return worst;
}

double legendre_bracket(int l, int m, double x, double f, double df, double d2f) {
  const double one_minus_x2 = (1.0 - x) * (1.0 + x);
  return one_minus_x2 * d2f - 2.0 * x * df +
         (static_cast<double>(l) * (l + 1) - static_cast<double>(m) * m / one_minus_x2) * f;
}

SecondOrderForm casimir_route_form(CasimirKind kind, int l, int m, double x) {
  using G = Generator;
  switch (kind) {
    case CasimirKind::so21_K:
      return square(G::K3, l, m, x) + (-0.5) * anti(G::Kp, G::Km, l, m, x) +
             constant(-(static_cast<double>(m) * m - 0.25));
    case CasimirKind::so3_J:
      return square(G::J3, l, m, x) + 0.5 * anti(G::Jp, G::Jm, l, m, x) +
             constant(-static_cast<double>(l) * (l + 1));
    case CasimirKind::so21_R:
      return square(G::R3, l, m, x) + (-0.5) * anti(G::Rp, G::Rm, l, m, x) + constant(0.75);
    case CasimirKind::so21_S:
      return square(G::S3, l, m, x) + (-0.5) * anti(G::Sp, G::Sm, l, m, x) + constant(0.75);
    case CasimirKind::so32:
      return square(G::J3, l, m, x) + square(G::K3, l, m, x) + 0.5 * anti(G::Jp, G::Jm, l, m, x) +
             (-0.5) * anti(G::Kp, G::Km, l, m, x) + (-0.25) * anti(G::Rp, G::Rm, l, m, x) +
             (-0.25) * anti(G::Sp, G::Sm, l, m, x) + constant(1.25);
  }
  return {};
}

double route_prefactor(CasimirKind kind, double x) noexcept {
  switch (kind) {
    case CasimirKind::so21_K: return (1.0 - x) * (1.0 + x);
    case CasimirKind::so3_J: return -1.0;
    case CasimirKind::so21_R:
    case CasimirKind::so21_S:
    case CasimirKind::so32: return x * x;
  }
  return 0.0;
}

OdeRouteResult ode_residual_from_casimir(CasimirKind kind, int l, int m, const QuadratureRule& rule) {
  if (!is_admissible(l, m)) throw DomainError("inadmissible (l,m) " + to_string({l, m}));
  OdeRouteResult result;
  result.route_values.reserve(rule.nodes().size());
  result.bracket_values.reserve(rule.nodes().size());
  for (double x : rule.nodes()) {
    const double f = eval_T(l, m, x);
    const double df = eval_T_derivative(l, m, x);
    const double d2f = eval_T_second_derivative(l, m, x);
    const double route = casimir_route_form(kind, l, m, x).apply(f, df, d2f);
    const double bracket = legendre_bracket(l, m, x, f, df, d2f);
    result.route_values.push_back(route);
    result.bracket_values.push_back(bracket);
    result.max_abs_residual = std::max(result.max_abs_residual, std::abs(route));
    result.max_prefactor_mismatch =
        std::max(result.max_prefactor_mismatch, std::abs(route - route_prefactor(kind, x) * bracket));
  }
  return result;
}

std::vector<double> spectral_derivative(const QuadratureRule& rule, std::span<const double> values) {
  const auto& nodes = rule.nodes();
  const auto& weights = rule.weights();
  const std::size_t n = nodes.size();
  if (values.size() != n) throw UsageError("grid values do not match the rule order");

  // Barycentric weights of the Gauss-Legendre nodes: (-1)^j sqrt((1-x_j^2) w_j).
  std::vector<double> lambda(n);
  for (std::size_t j = 0; j < n; ++j)
    lambda[j] = ((j % 2 == 0) ? 1.0 : -1.0) * std::sqrt((1.0 - nodes[j] * nodes[j]) * weights[j]);

  // Off-diagonal D_ij = (lambda_j / lambda_i) / (x_i - x_j); D_ii = -sum_{j != i} D_ij.
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double d = (lambda[j] / lambda[i]) / (nodes[i] - nodes[j]);
      acc += d * (values[j] - values[i]);
    }
    out[i] = acc;
  }
  return out;
}

double x_dx_commutator_residual(const QuadratureRule& rule, std::span<const double> values) {
  const auto& nodes = rule.nodes();
  std::vector<double> xp(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) xp[k] = nodes[k] * values[k];
  const std::vector<double> dp = spectral_derivative(rule, values);
  const std::vector<double> dxp = spectral_derivative(rule, xp);
  double worst = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k)
    worst = std::max(worst, std::abs(nodes[k] * dp[k] - dxp[k] + values[k]));
  return worst;
}

}  // namespace so32
