#ifndef SO32_QUADRATURE_HPP
#define SO32_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <vector>

namespace so32 {

/// n-point Gauss-Legendre rule on (-1, 1). Nodes ascending, mirror-symmetric.
class QuadratureRule {
 public:
  QuadratureRule() = default;
  QuadratureRule(std::vector<double> nodes, std::vector<double> weights);

  int order() const noexcept { return static_cast<int>(nodes_.size()); }
  const std::vector<double>& nodes() const noexcept { return nodes_; }
  const std::vector<double>& weights() const noexcept { return weights_; }

  double integrate(const std::function<double(double)>& f) const;

  friend bool operator==(const QuadratureRule&, const QuadratureRule&) = default;

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Nodes are the roots of P_n found by Newton iteration from Chebyshev-angle
/// guesses, with bisection inside the interlacing bracket whenever a Newton
/// step leaves it. Weights are 2 / ((1 - x^2) P_n'(x)^2).
QuadratureRule gauss_legendre(int n);

/// Samples of a single-channel function on the nodes of a rule.
struct GridFunction {
  QuadratureRule rule;
  int m = 0;
  std::vector<double> values;

  static GridFunction sample(const QuadratureRule& rule, int m,
                             const std::function<double(double)>& f);
};

}  // namespace so32

#endif  // SO32_QUADRATURE_HPP
