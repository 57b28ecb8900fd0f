#include "so32/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "so32/alp.hpp"
#include "so32/errors.hpp"

namespace so32 {
namespace {

constexpr double kNodeTolerance = 1e-15;
constexpr int kMaxIterations = 100;

// k-th largest root of P_n (k = 1 .. n). The interlacing bounds
// (k-1/2)pi/(n+1/2) < theta_k < k pi/(n+1/2) give a sign-change bracket.
double refine_root(int n, int k) {
  const double pi = std::numbers::pi;
  const double half = n + 0.5;
  double lo = std::cos(k * pi / half);
  double hi = std::cos((k - 0.5) * pi / half);
  double p_lo = legendre_p(n, lo).p;
  const bool bracketed = (p_lo > 0.0) != (legendre_p(n, hi).p > 0.0);

  double x = std::cos((k - 0.25) * pi / half);
  for (int it = 0; it < kMaxIterations; ++it) {
    const auto [p, dp] = legendre_p(n, x);
    if (p == 0.0) return x;
    if (bracketed) {
      if ((p > 0.0) == (p_lo > 0.0)) {
        lo = x;
        p_lo = p;
      } else {
        hi = x;
      }
    }
    double next = x - p / dp;
    if (bracketed && !(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - x);
    x = next;
    if (step < kNodeTolerance) break;
    if (bracketed && hi - lo < kNodeTolerance) break;
  }
  return x;
}

}  // namespace

QuadratureRule::QuadratureRule(std::vector<double> nodes, std::vector<double> weights)
    : nodes_(std::move(nodes)), weights_(std::move(weights)) {
  if (nodes_.size() != weights_.size())
    throw UsageError("quadrature nodes and weights differ in length");
  for (double x : nodes_)
    if (!(std::abs(x) < 1.0)) throw DomainError("quadrature node outside (-1,1)");
}

double QuadratureRule::integrate(const std::function<double(double)>& f) const {
  double sum = 0.0;
  for (std::size_t k = 0; k < nodes_.size(); ++k) sum += weights_[k] * f(nodes_[k]);
  return sum;
}

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre needs at least one node");
  std::vector<double> nodes(static_cast<std::size_t>(n));
  std::vector<double> weights(static_cast<std::size_t>(n));
  const int half = (n + 1) / 2;
  for (int k = 1; k <= half; ++k) {
    double x = refine_root(n, k);
    if (n % 2 == 1 && k == half) x = 0.0;
    const double dp = legendre_p(n, x).dp;
    const double w = 2.0 / ((1.0 - x) * (1.0 + x) * dp * dp);
    const auto hi = static_cast<std::size_t>(n - k);
    const auto lo = static_cast<std::size_t>(k - 1);
    nodes[hi] = x;
    nodes[lo] = -x;
    weights[hi] = w;
    weights[lo] = w;
  }
  return QuadratureRule(std::move(nodes), std::move(weights));
}

GridFunction GridFunction::sample(const QuadratureRule& rule, int m,
                                  const std::function<double(double)>& f) {
  GridFunction g{rule, m, {}};
  g.values.reserve(rule.nodes().size());
  for (double x : rule.nodes()) g.values.push_back(f(x));
  return g;
}

}  // namespace so32
