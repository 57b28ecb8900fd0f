#ifndef SO32_ALP_HPP
#define SO32_ALP_HPP

#include <span>
#include <vector>

namespace so32 {

/// Normalized associated Legendre function
///
///   T_l^m(x) = sqrt((l-m)!/(l+m)!) P_l^m(x),
///
/// with P_l^m carrying the Condon-Shortley phase. Valid for |m| <= l and
/// x strictly inside (-1, 1); anything else throws DomainError.
///
/// The value is seeded from the closed form of T_{|m|}^{|m|} and advanced
/// upward in l with
///
///   sqrt((l-m+1)(l+m+1)) T_{l+1} = (2l+1) x T_l - sqrt((l+m)(l-m)) T_{l-1},
///
/// then T_l^{-m} = (-1)^m T_l^m is applied for negative orders.
double eval_T(int l, int m, double x);

/// dT_l^m/dx from the lowering relation
///   (x^2-1) T_l^m' = l x T_l^m - sqrt((l+m)(l-m)) T_{l-1}^m.
double eval_T_derivative(int l, int m, double x);

/// d^2T_l^m/dx^2 obtained by differentiating the first-derivative relation
/// once more. Does not use the Legendre equation.
double eval_T_second_derivative(int l, int m, double x);

/// T_l^m(x) for l = |m| .. l_max, in that order. Empty when l_max < |m|.
std::vector<double> eval_T_column(int m, int l_max, double x);

/// Checks T_l^{-m}(x) = (-1)^m T_l^m(x) within 1e-12 (m >= 0).
bool phase_relation_check(int l, int m, double x);

/// Legendre polynomial P_n(x) and its derivative, by the classic
/// three-term recurrence. Defined on the closed interval.
struct LegendreValue {
  double p = 0.0;
  double dp = 0.0;
};
LegendreValue legendre_p(int n, double x);

}  // namespace so32

#endif  // SO32_ALP_HPP
