#ifndef SO32_DIFFERENTIAL_HPP
#define SO32_DIFFERENTIAL_HPP

#include <span>
#include <vector>

#include "so32/generators.hpp"
#include "so32/quadrature.hpp"

namespace so32 {

/// Nodes with 1 - x^2 below this are rejected by the differential forms.
inline constexpr double kMinOneMinusX2 = 1e-10;

/// A first-order differential operator a(x) D_x + b(x), frozen at one x and
/// one operand mode (l, m). L and M inside the generator are replaced by the
/// operand's l and m. da and db are the x-derivatives of the coefficients,
/// which composition needs.
struct FirstOrderForm {
  double a = 0.0;
  double da = 0.0;
  double b = 0.0;
  double db = 0.0;

  double apply(double f, double df) const noexcept { return a * df + b * f; }
};

/// c2 f'' + c1 f' + c0 f.
struct SecondOrderForm {
  double c2 = 0.0;
  double c1 = 0.0;
  double c0 = 0.0;

  double apply(double f, double df, double d2f) const noexcept { return c2 * d2f + c1 * df + c0 * f; }

  SecondOrderForm& operator+=(const SecondOrderForm& o) noexcept {
    c2 += o.c2;
    c1 += o.c1;
    c0 += o.c0;
    return *this;
  }
  friend SecondOrderForm operator+(SecondOrderForm a, const SecondOrderForm& b) noexcept { return a += b; }
  friend SecondOrderForm operator*(double s, SecondOrderForm f) noexcept {
    f.c2 *= s;
    f.c1 *= s;
    f.c0 *= s;
    return f;
  }
};

/// Differential realization of a generator in x, acting on an operand with
/// labels (l, m):
///
///   J+- = -+ sqrt(1-x^2) D - x/sqrt(1-x^2) M
///   K+  = -(1-x^2) D + x (L+1)        K- = (1-x^2) D + x L
///   R+  = -x sqrt(1-x^2) D - M/sqrt(1-x^2) - sqrt(1-x^2)(L+1)
///   R-  =  x sqrt(1-x^2) D - M/sqrt(1-x^2) - sqrt(1-x^2) L
///   S+  =  x sqrt(1-x^2) D - M/sqrt(1-x^2) + sqrt(1-x^2)(L+1)
///   S-  = -x sqrt(1-x^2) D - M/sqrt(1-x^2) + sqrt(1-x^2) L
///
/// and the diagonal J3 = M, K3 = L+1/2, R3 = L+M+1/2, S3 = L-M+1/2.
FirstOrderForm realize(Generator g, int l, int m, double x);

/// outer * inner, where inner acts first on the operand (l, m) and outer
/// sees the operand shifted by inner's lattice displacement.
SecondOrderForm compose(Generator outer, Generator inner, int l, int m, double x);

/// Applies the differential form of g to grid samples of T_l^m. The
/// derivative comes from eval_T_derivative at the nodes. The result is
/// tagged with the image channel m + dm.
GridFunction apply_diff(Generator g, int l, int m, const GridFunction& grid);

/// max_k |apply_diff(g, T_l^m)(x_k) - c T_{l'}^{m'}(x_k)| with c the ladder
/// matrix element. Requires the image mode to be admissible.
double ladder_diff_consistency(Generator g, int l, int m, const QuadratureRule& rule);

/// (1-x^2) f'' - 2x f' + (l(l+1) - m^2/(1-x^2)) f.
double legendre_bracket(int l, int m, double x, double f, double df, double d2f);

/// Casimir minus its eigenvalue on (l, m), as a second-order differential
/// form at x. The R and S routes use the unscaled R3^2 - {R+,R-}/2 + 3/4.
SecondOrderForm casimir_route_form(CasimirKind kind, int l, int m, double x);

/// Factor multiplying the Legendre bracket that the route is expected to
/// reproduce: 1-x^2 (K), -1 (J), x^2 (R, S and so32).
double route_prefactor(CasimirKind kind, double x) noexcept;

struct OdeRouteResult {
  /// max_k |(C - eigenvalue) T_l^m (x_k)|
  double max_abs_residual = 0.0;
  /// max_k |route(x_k) - prefactor(x_k) * bracket(x_k)|
  double max_prefactor_mismatch = 0.0;
  std::vector<double> route_values;
  std::vector<double> bracket_values;
};

/// Evaluates a Casimir route to the Legendre equation on T_l^m at the
/// nodes. T'' comes from eval_T_second_derivative.
OdeRouteResult ode_residual_from_casimir(CasimirKind kind, int l, int m, const QuadratureRule& rule);

/// Derivative of the interpolating polynomial through the grid data
/// (barycentric differentiation matrix); exact for degree below the rule order.
std::vector<double> spectral_derivative(const QuadratureRule& rule, std::span<const double> values);

/// max_k |x p'(x) - (x p)'(x) + p(x)| with both derivatives spectral.
/// p must have degree at most order-2 so that x p stays resolved.
double x_dx_commutator_residual(const QuadratureRule& rule, std::span<const double> values);

}  // namespace so32

#endif  // SO32_DIFFERENTIAL_HPP
