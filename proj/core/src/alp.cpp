#include "so32/alp.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "so32/errors.hpp"
#include "so32/index.hpp"

namespace so32 {
namespace {

void check_domain(int l, int m, double x) {
  if (!is_admissible(l, m))
    throw DomainError("inadmissible (l,m) " + to_string({l, m}));
  if (!(std::abs(x) < 1.0))
    throw DomainError("x must lie in the open interval (-1,1), got " + std::to_string(x));
}

double phase(int m) { return (std::abs(m) % 2 == 0) ? 1.0 : -1.0; }

// sqrt((l+m)(l-m)) as it appears in the lowering relation.
double lowering_factor(int l, int m) {
  return std::sqrt(static_cast<double>(static_cast<long long>(l + m) * (l - m)));
}

// T_{|m|}^{|m|}(x) = (-1)^m sqrt((2m-1)!!/(2m)!!) (1-x^2)^{m/2}
double seed(int m, double one_minus_x2) {
  double acc = 1.0;
  for (int i = 1; i <= m; ++i) acc *= one_minus_x2 * (2.0 * i - 1.0) / (2.0 * i);
  return phase(m) * std::sqrt(acc);
}

// Fills T_l^{|m|} for l = |m| .. l_max, assuming the domain was checked.
void column_nonneg(int m, int l_max, double x, std::vector<double>& out) {
  out.clear();
  if (l_max < m) return;
  out.reserve(static_cast<std::size_t>(l_max - m + 1));
  const double one_minus_x2 = (1.0 - x) * (1.0 + x);
  double prev = 0.0;
  double curr = seed(m, one_minus_x2);
  out.push_back(curr);
  for (int l = m; l < l_max; ++l) {
    const double up = std::sqrt(static_cast<double>(static_cast<long long>(l - m + 1) * (l + m + 1)));
    const double next = ((2.0 * l + 1.0) * x * curr - lowering_factor(l, m) * prev) / up;
    prev = curr;
    curr = next;
    out.push_back(curr);
  }
}

struct Pair {
  double lower = 0.0;  // T_{l-1}^m, zero when l == |m|
  double value = 0.0;  // T_l^m
};

Pair tail_pair(int l, int m_abs, double x) {
  std::vector<double> col;
  column_nonneg(m_abs, l, x, col);
  Pair p;
  p.value = col.back();
  if (col.size() > 1) p.lower = col[col.size() - 2];
  return p;
}

double derivative_nonneg(int l, int m, double x, const Pair& p) {
  return (l * x * p.value - lowering_factor(l, m) * p.lower) / ((x - 1.0) * (x + 1.0));
}

}  // namespace

double eval_T(int l, int m, double x) {
  check_domain(l, m, x);
  const int m_abs = std::abs(m);
  const double t = tail_pair(l, m_abs, x).value;
  return m < 0 ? phase(m) * t : t;
}

double eval_T_derivative(int l, int m, double x) {
  check_domain(l, m, x);
  const int m_abs = std::abs(m);
  const double d = derivative_nonneg(l, m_abs, x, tail_pair(l, m_abs, x));
  return m < 0 ? phase(m) * d : d;
}

double eval_T_second_derivative(int l, int m, double x) {
  check_domain(l, m, x);
  const int m_abs = std::abs(m);
  std::vector<double> col;
  column_nonneg(m_abs, l, x, col);
  const std::size_t n = col.size();
  const double t = col[n - 1];
  const double t1 = n > 1 ? col[n - 2] : 0.0;
  const double t2 = n > 2 ? col[n - 3] : 0.0;

  const double d = derivative_nonneg(l, m_abs, x, {t1, t});
  const double d_lower = (l - 1 >= m_abs) ? derivative_nonneg(l - 1, m_abs, x, {t2, t1}) : 0.0;
  // derivative of (l x T - c T_{l-1}) / (x^2 - 1)
  const double second =
      (l * t + l * x * d - lowering_factor(l, m_abs) * d_lower - 2.0 * x * d) / ((x - 1.0) * (x + 1.0));
  return m < 0 ? phase(m) * second : second;
}

std::vector<double> eval_T_column(int m, int l_max, double x) {
  if (!(std::abs(x) < 1.0))
    throw DomainError("x must lie in the open interval (-1,1), got " + std::to_string(x));
  const int m_abs = std::abs(m);
  std::vector<double> col;
  column_nonneg(m_abs, l_max, x, col);
  if (m < 0 && m_abs % 2 == 1)
    for (double& v : col) v = -v;
  return col;
}

bool phase_relation_check(int l, int m, double x) {
  if (m < 0) throw DomainError("phase_relation_check expects m >= 0");
  const double pos = eval_T(l, m, x);
  const double neg = eval_T(l, -m, x);
  return std::abs(neg - phase(m) * pos) <= 1e-12;
}

LegendreValue legendre_p(int n, double x) {
  if (n < 0) throw DomainError("legendre_p: negative degree");
  if (n == 0) return {1.0, 0.0};
  double p0 = 1.0;
  double p1 = x;
  double dp0 = 0.0;
  double dp1 = 1.0;
  for (int k = 1; k < n; ++k) {
    const double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
    // (P_{k+1})' = (P_{k-1})' + (2k+1) P_k
    const double dp2 = dp0 + (2.0 * k + 1.0) * p1;
    p0 = p1;
    p1 = p2;
    dp0 = dp1;
    dp1 = dp2;
  }
  return {p1, dp1};
}

}  // namespace so32
