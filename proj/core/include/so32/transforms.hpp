#ifndef SO32_TRANSFORMS_HPP
#define SO32_TRANSFORMS_HPP

#include <vector>

#include "so32/generators.hpp"
#include "so32/index.hpp"
#include "so32/quadrature.hpp"

namespace so32 {

/// phi_l^m(x) = sqrt(l + 1/2) T_l^m(x), orthonormal on (-1, 1) for fixed m.
double orthonormal_basis(int l, int m, double x);

/// Coefficients of one m channel in the orthonormal basis phi_l^m,
/// stored for l = |m| .. l_max.
class ChannelSpectrum {
 public:
  ChannelSpectrum() = default;
  ChannelSpectrum(int m, int l_max);

  int m() const noexcept { return m_; }
  int l_max() const noexcept { return l_max_; }
  int l_min() const noexcept { return m_ < 0 ? -m_ : m_; }
  bool empty() const noexcept { return coeffs_.empty(); }

  double at(int l) const;
  void set(int l, double value);
  const std::vector<double>& values() const noexcept { return coeffs_; }

  friend bool operator==(const ChannelSpectrum&, const ChannelSpectrum&) = default;

 private:
  int m_ = 0;
  int l_max_ = -1;
  std::vector<double> coeffs_;
};

/// c_l = sum_k w_k phi_l^m(x_k) f(x_k). Needs rule order >= l_max + 1.
ChannelSpectrum analyze(const GridFunction& f, int l_max);

/// f(x_k) = sum_l c_l phi_l^m(x_k).
GridFunction synthesize(const ChannelSpectrum& s, const QuadratureRule& rule);

/// T-basis amplitudes a_l = sqrt(l+1/2) c_l as a coefficient vector.
RealCoeffs to_t_basis(const ChannelSpectrum& s, Truncation trunc);

/// Inverse of to_t_basis restricted to channel m.
ChannelSpectrum from_t_basis(const RealCoeffs& v, int m, int l_max);

/// sum_l f_l g_l for one channel.
double inner_product(const ChannelSpectrum& f, const ChannelSpectrum& g);

/// sum_m sum_l f_l^m g_l^m over paired channels (same m and l_max, same order).
double inner_product(const std::vector<ChannelSpectrum>& f, const std::vector<ChannelSpectrum>& g);

/// sum over modes of f g, reading both vectors as orthonormal coefficients.
double inner_product(const RealCoeffs& f, const RealCoeffs& g);

/// sum_m sum_k w_k f^m(x_k) g^m(x_k).
double grid_inner_product(const std::vector<GridFunction>& f, const std::vector<GridFunction>& g);

struct ParsevalResult {
  double lhs = 0.0;  // sum of squared coefficients
  double rhs = 0.0;  // quadrature of the squared samples
  /// max |synthesize(analyze(f)) - f| over all channels and nodes
  double roundtrip_residual = 0.0;
  bool band_limited = true;
};

/// Relative round-trip residual above which input is flagged as not
/// band-limited at the requested l_max.
inline constexpr double kBandLimitTolerance = 1e-10;

ParsevalResult parseval_check(const std::vector<GridFunction>& channels, int l_max);

/// sum_{l=|m|}^{l_max} T_l^m(x) (l+1/2) T_l^m(y).
double completeness_kernel(int m, int l_max, double x, double y);

/// sum_k w_k K(x, x_k) f(x_k): the truncated kernel acting on grid data.
double kernel_project(const GridFunction& f, int l_max, double x);

/// Applies a generator to a channel spectrum through the T-basis coefficient
/// vector and the exact ladder operator. The window is widened by one
/// degree so raising operators do not leak.
ChannelSpectrum apply_ladder(Generator g, const ChannelSpectrum& s);

/// Applies the generator's differential form mode by mode on the grid.
GridFunction apply_diff_to_spectrum(Generator g, const ChannelSpectrum& s, const QuadratureRule& rule);

}  // namespace so32

#endif  // SO32_TRANSFORMS_HPP
