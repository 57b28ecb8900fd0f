#ifndef SO32_SPHERE_HPP
#define SO32_SPHERE_HPP

#include <complex>
#include <vector>

#include "so32/generators.hpp"
#include "so32/index.hpp"
#include "so32/quadrature.hpp"

namespace so32 {

using cplx = std::complex<double>;

/// Gauss-Legendre in x = cos(theta) times n_phi equispaced phi = 2 pi j / n_phi.
class SphereGrid {
 public:
  SphereGrid() = default;
  SphereGrid(QuadratureRule theta_rule, int n_phi);
  static SphereGrid gauss(int n_theta, int n_phi);

  const QuadratureRule& theta_rule() const noexcept { return theta_rule_; }
  int n_theta() const noexcept { return theta_rule_.order(); }
  int n_phi() const noexcept { return n_phi_; }
  double x(int i) const { return theta_rule_.nodes()[static_cast<std::size_t>(i)]; }
  double theta(int i) const;
  double phi(int j) const;

  friend bool operator==(const SphereGrid&, const SphereGrid&) = default;

 private:
  QuadratureRule theta_rule_;
  int n_phi_ = 1;
};

/// Complex samples, row-major in (theta index, phi index).
struct SphereField {
  SphereGrid grid;
  std::vector<cplx> values;

  explicit SphereField(SphereGrid g = {});
  cplx& at(int i, int j) { return values[static_cast<std::size_t>(i * grid.n_phi() + j)]; }
  cplx at(int i, int j) const { return values[static_cast<std::size_t>(i * grid.n_phi() + j)]; }
};

/// Y_l^m(theta, phi) = e^{i m phi} T_l^m(cos theta) / sqrt(2 pi).
///
/// This normalization keeps the ladder matrix elements of the ALP; the
/// harmonics are orthonormal only with the extra weight (l + 1/2). Poles
/// are excluded.
cplx eval_Y(int l, int m, double theta, double phi);

/// Factor taking this normalization to the common orthonormal one:
/// Y_standard = standard_sh_factor(l) * Y_l^m.
double standard_sh_factor(int l) noexcept;

/// SHT coefficients are taken against b_l^m = sqrt(l+1/2) T_l^m(x) e^{i m phi},
/// so f = sum c_lm b_lm and (1/2pi) int |f|^2 dOmega = sum |c_lm|^2.
/// Converting to coefficients against the common orthonormal harmonics
/// multiplies by sqrt(2 pi).
ComplexCoeffs to_standard_coefficients(const ComplexCoeffs& c);

/// Amplitude against Y_l^m of a field whose SHT coefficient at (l, m) is c.
cplx y_amplitude(cplx coefficient, int l) noexcept;

SphereField sample_Y(int l, int m, const SphereGrid& grid);

/// Discrete Fourier projection over phi onto each channel, then a per-channel
/// Gauss-Legendre analysis. Needs n_theta >= l_max+1 and n_phi >= 2 l_max+1.
ComplexCoeffs sht_analyze(const SphereField& f, int l_max);

SphereField sht_synthesize(const ComplexCoeffs& coeffs, const SphereGrid& grid);

/// Phase carried by a primed ladder: e^{+i phi} for J+, R+, S-;
/// e^{-i phi} for J-, R-, S+; none for the K ladders and the diagonal ones.
int primed_phase(Generator g) noexcept;

/// Applies the primed generator to samples of Y_l^m: the phi phase factor
/// times the x-differential form acting on T_l^m.
SphereField apply_primed_to_mode(Generator g, int l, int m, const SphereGrid& grid);

/// Applies the primed generator to a band-limited field. The field is
/// decomposed with sht_analyze at l_max and every mode is acted on by its
/// differential form (with L and M set to that mode's labels).
SphereField apply_primed(Generator g, const SphereField& f, int l_max);

/// Quadratic so(3,2) Casimir built from primed operators, applied to a field
/// band-limited at l_max. The grid must resolve degree l_max + 1.
SphereField so32_casimir_on_field(const SphereField& f, int l_max);

/// <Y_{l'}^{m'}| g' |Y_l^m> recovered from the grid by SHT of the image.
cplx primed_matrix_element(Generator g, int l, int m, const SphereGrid& grid);

}  // namespace so32

#endif  // SO32_SPHERE_HPP
