#include "so32/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "so32/alp.hpp"
#include "so32/differential.hpp"
#include "so32/errors.hpp"

namespace so32 {

double orthonormal_basis(int l, int m, double x) { return std::sqrt(l + 0.5) * eval_T(l, m, x); }

ChannelSpectrum::ChannelSpectrum(int m, int l_max) : m_(m), l_max_(l_max) {
  const int lo = l_min();
  if (l_max >= lo) coeffs_.assign(static_cast<std::size_t>(l_max - lo + 1), 0.0);
}

double ChannelSpectrum::at(int l) const {
  if (l < l_min() || l > l_max_) return 0.0;
  return coeffs_[static_cast<std::size_t>(l - l_min())];
}

void ChannelSpectrum::set(int l, double value) {
  if (l < l_min() || l > l_max_)
    throw DomainError("degree " + std::to_string(l) + " outside channel m=" + std::to_string(m_) +
                      " with l_max=" + std::to_string(l_max_));
  coeffs_[static_cast<std::size_t>(l - l_min())] = value;
}

ChannelSpectrum analyze(const GridFunction& f, int l_max) {
  if (f.values.size() != f.rule.nodes().size()) throw UsageError("grid values do not match the rule order");
  if (f.rule.order() < l_max + 1)
    throw UsageError("quadrature order " + std::to_string(f.rule.order()) + " too small for l_max=" +
                     std::to_string(l_max) + " (needs l_max+1)");
  ChannelSpectrum s(f.m, l_max);
  if (s.empty()) return s;
  const auto& nodes = f.rule.nodes();
  const auto& weights = f.rule.weights();
  std::vector<double> acc(s.values().size(), 0.0);
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const std::vector<double> column = eval_T_column(f.m, l_max, nodes[k]);
    const double wf = weights[k] * f.values[k];
    for (std::size_t i = 0; i < column.size(); ++i) acc[i] += wf * column[i];
  }
  for (std::size_t i = 0; i < acc.size(); ++i) {
    const int l = s.l_min() + static_cast<int>(i);
    s.set(l, std::sqrt(l + 0.5) * acc[i]);
  }
  return s;
}

GridFunction synthesize(const ChannelSpectrum& s, const QuadratureRule& rule) {
  GridFunction g{rule, s.m(), std::vector<double>(rule.nodes().size(), 0.0)};
  if (s.empty()) return g;
  const auto& nodes = rule.nodes();
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const std::vector<double> column = eval_T_column(s.m(), s.l_max(), nodes[k]);
    double sum = 0.0;
    for (std::size_t i = 0; i < column.size(); ++i) {
      const int l = s.l_min() + static_cast<int>(i);
      sum += s.values()[i] * std::sqrt(l + 0.5) * column[i];
    }
    g.values[k] = sum;
  }
  return g;
}

RealCoeffs to_t_basis(const ChannelSpectrum& s, Truncation trunc) {
  RealCoeffs v(trunc);
  for (int l = s.l_min(); l <= s.l_max(); ++l) {
    const double c = s.at(l);
    if (c != 0.0) v.set({l, s.m()}, std::sqrt(l + 0.5) * c);
  }
  return v;
}

ChannelSpectrum from_t_basis(const RealCoeffs& v, int m, int l_max) {
  ChannelSpectrum s(m, l_max);
  for (const auto& [mode, amplitude] : v.entries()) {
    if (mode.m != m) continue;
    if (mode.l > l_max) {
      if (amplitude != 0.0) throw UsageError("coefficient beyond the requested l_max");
      continue;
    }
    s.set(mode.l, amplitude / std::sqrt(mode.l + 0.5));
  }
  return s;
}

double inner_product(const ChannelSpectrum& f, const ChannelSpectrum& g) {
  if (f.m() != g.m() || f.l_max() != g.l_max()) throw UsageError("spectra have mismatched truncations");
  double sum = 0.0;
  for (std::size_t i = 0; i < f.values().size(); ++i) sum += f.values()[i] * g.values()[i];
  return sum;
}

double inner_product(const std::vector<ChannelSpectrum>& f, const std::vector<ChannelSpectrum>& g) {
  if (f.size() != g.size()) throw UsageError("spectra have mismatched channel sets");
  double sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) sum += inner_product(f[i], g[i]);
  return sum;
}

double inner_product(const RealCoeffs& f, const RealCoeffs& g) {
  if (!(f.truncation() == g.truncation())) throw UsageError("coefficient vectors have mismatched truncations");
  double sum = 0.0;
  for (const auto& [mode, value] : f.entries()) sum += value * g.get(mode);
  return sum;
}

double grid_inner_product(const std::vector<GridFunction>& f, const std::vector<GridFunction>& g) {
  if (f.size() != g.size()) throw UsageError("grids have mismatched channel sets");
  double sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].m != g[i].m || !(f[i].rule == g[i].rule)) throw UsageError("grids have mismatched channels");
    const auto& w = f[i].rule.weights();
    for (std::size_t k = 0; k < w.size(); ++k) sum += w[k] * f[i].values[k] * g[i].values[k];
  }
  return sum;
}

ParsevalResult parseval_check(const std::vector<GridFunction>& channels, int l_max) {
  ParsevalResult r;
  double scale = 0.0;
  for (const GridFunction& f : channels) {
    const ChannelSpectrum s = analyze(f, l_max);
    for (double c : s.values()) r.lhs += c * c;
    const auto& w = f.rule.weights();
    for (std::size_t k = 0; k < w.size(); ++k) {
      r.rhs += w[k] * f.values[k] * f.values[k];
      scale = std::max(scale, std::abs(f.values[k]));
    }
    const GridFunction back = synthesize(s, f.rule);
    for (std::size_t k = 0; k < w.size(); ++k)
      r.roundtrip_residual = std::max(r.roundtrip_residual, std::abs(back.values[k] - f.values[k]));
  }
  r.band_limited = r.roundtrip_residual <= kBandLimitTolerance * (1.0 + scale);
  return r;
}

double completeness_kernel(int m, int l_max, double x, double y) {
  const std::vector<double> tx = eval_T_column(m, l_max, x);
  const std::vector<double> ty = eval_T_column(m, l_max, y);
  const int lo = std::abs(m);
  double sum = 0.0;
  for (std::size_t i = 0; i < tx.size(); ++i) sum += (lo + static_cast<double>(i) + 0.5) * (tx[i] * ty[i]);
  return sum;
}

double kernel_project(const GridFunction& f, int l_max, double x) {
  const auto& nodes = f.rule.nodes();
  const auto& weights = f.rule.weights();
  double sum = 0.0;
  for (std::size_t k = 0; k < nodes.size(); ++k)
    sum += weights[k] * completeness_kernel(f.m, l_max, x, nodes[k]) * f.values[k];
  return sum;
}

ChannelSpectrum apply_ladder(Generator g, const ChannelSpectrum& s) {
  const Shift shift = shift_of(g);
  const int out_l_max = s.l_max() + std::max(shift.dl, 0);
  const Truncation trunc(std::max(out_l_max, std::abs(s.m() + shift.dm)));
  const RealCoeffs image = generator(g, trunc).apply(to_t_basis(s, trunc));
  return from_t_basis(image, s.m() + shift.dm, out_l_max);
}

GridFunction apply_diff_to_spectrum(Generator g, const ChannelSpectrum& s, const QuadratureRule& rule) {
  GridFunction out{rule, s.m() + shift_of(g).dm, std::vector<double>(rule.nodes().size(), 0.0)};
  for (int l = s.l_min(); l <= s.l_max(); ++l) {
    const double c = s.at(l);
    if (c == 0.0) continue;
    const GridFunction operand = GridFunction::sample(rule, s.m(), [&](double x) { return eval_T(l, s.m(), x); });
    const GridFunction image = apply_diff(g, l, s.m(), operand);
    const double a = std::sqrt(l + 0.5) * c;
    for (std::size_t k = 0; k < out.values.size(); ++k) out.values[k] += a * image.values[k];
  }
  return out;
}

}  // namespace so32
