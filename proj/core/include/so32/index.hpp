#ifndef SO32_INDEX_HPP
#define SO32_INDEX_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <compare>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <string>
#include <type_traits>
#include <vector>

#include "so32/errors.hpp"

namespace so32 {

/// A weight-lattice point (l, m). Ordered by l, then m.
struct ModeIndex {
  int l = 0;
  int m = 0;

  friend constexpr auto operator<=>(const ModeIndex&, const ModeIndex&) = default;
};

constexpr bool is_admissible(long l, long m) noexcept {
  return l >= 0 && (m < 0 ? -m : m) <= l;
}

constexpr bool is_admissible(ModeIndex mode) noexcept {
  return is_admissible(mode.l, mode.m);
}

std::string to_string(ModeIndex mode);

/// Position of an admissible mode in the canonical (l asc, m asc) ordering.
constexpr std::size_t flat_index(ModeIndex mode) noexcept {
  return static_cast<std::size_t>(mode.l * mode.l + mode.l + mode.m);
}

ModeIndex mode_at(std::size_t flat) noexcept;

/// Finite window { (l,m) : |m| <= l <= l_max }.
class Truncation {
 public:
  Truncation() = default;
  explicit Truncation(int l_max);

  int l_max() const noexcept { return l_max_; }
  std::size_t size() const noexcept {
    return static_cast<std::size_t>(l_max_ + 1) * static_cast<std::size_t>(l_max_ + 1);
  }
  bool contains(ModeIndex mode) const noexcept {
    return is_admissible(mode) && mode.l <= l_max_;
  }

  friend bool operator==(const Truncation&, const Truncation&) = default;

 private:
  int l_max_ = 0;
};

/// All admissible modes with l <= l_max in canonical order.
std::vector<ModeIndex> lattice(const Truncation& trunc);

/// Finite-support vector over the truncated lattice.
///
/// Scalar is double for ALP work and std::complex<double> for the sphere.
/// Zero amplitudes may or may not be stored; comparisons ignore them.
/// The overflow flag records that some amplitude was pushed past l_max by
/// an operator and is therefore missing from the stored entries.
template <typename Scalar>
class CoeffVector {
 public:
  using scalar_type = Scalar;
  using container = std::map<ModeIndex, Scalar>;

  CoeffVector() = default;
  explicit CoeffVector(Truncation trunc) : trunc_(trunc) {}

  static CoeffVector unit(Truncation trunc, ModeIndex mode) {
    CoeffVector v(trunc);
    v.set(mode, Scalar(1));
    return v;
  }

  const Truncation& truncation() const noexcept { return trunc_; }
  const container& entries() const noexcept { return entries_; }
  bool overflow() const noexcept { return overflow_; }
  void mark_overflow() noexcept { overflow_ = true; }

  Scalar get(ModeIndex mode) const {
    auto it = entries_.find(mode);
    return it == entries_.end() ? Scalar(0) : it->second;
  }

  void set(ModeIndex mode, Scalar value) {
    check_mode(mode);
    entries_[mode] = value;
  }

  void add(ModeIndex mode, Scalar value) {
    check_mode(mode);
    entries_[mode] += value;
  }

  /// Drop entries with |value| <= threshold.
  CoeffVector pruned(double threshold = 0.0) const {
    CoeffVector out(trunc_);
    out.overflow_ = overflow_;
    for (const auto& [mode, value] : entries_)
      if (std::abs(value) > threshold) out.entries_.emplace(mode, value);
    return out;
  }

  double norm() const {
    double sum = 0.0;
    for (const auto& [mode, value] : entries_) sum += std::norm(value);
    return std::sqrt(sum);
  }

  /// Largest |this - other| over the union of supports.
  double max_abs_diff(const CoeffVector& other) const {
    double worst = 0.0;
    for (const auto& [mode, value] : entries_)
      worst = std::max(worst, std::abs(value - other.get(mode)));
    for (const auto& [mode, value] : other.entries_)
      if (!entries_.contains(mode)) worst = std::max(worst, std::abs(value));
    return worst;
  }

  CoeffVector& operator+=(const CoeffVector& rhs) {
    require_same_window(rhs);
    for (const auto& [mode, value] : rhs.entries_) entries_[mode] += value;
    overflow_ = overflow_ || rhs.overflow_;
    return *this;
  }

  CoeffVector& operator-=(const CoeffVector& rhs) {
    require_same_window(rhs);
    for (const auto& [mode, value] : rhs.entries_) entries_[mode] -= value;
    overflow_ = overflow_ || rhs.overflow_;
    return *this;
  }

  CoeffVector& operator*=(Scalar factor) {
    for (auto& [mode, value] : entries_) value *= factor;
    return *this;
  }

  friend CoeffVector operator+(CoeffVector lhs, const CoeffVector& rhs) { return lhs += rhs; }
  friend CoeffVector operator-(CoeffVector lhs, const CoeffVector& rhs) { return lhs -= rhs; }
  friend CoeffVector operator*(Scalar factor, CoeffVector v) { return v *= factor; }

  /// Equality up to pruning of zeros; the overflow flag participates.
  friend bool operator==(const CoeffVector& a, const CoeffVector& b) {
    return a.trunc_ == b.trunc_ && a.overflow_ == b.overflow_ && a.max_abs_diff(b) == 0.0;
  }

 private:
  void check_mode(ModeIndex mode) const {
    if (!is_admissible(mode))
      throw DomainError("inadmissible (l,m) " + to_string(mode));
    if (mode.l > trunc_.l_max())
      throw DomainError("mode " + to_string(mode) + " outside truncation l_max=" +
                        std::to_string(trunc_.l_max()));
  }

  void require_same_window(const CoeffVector& rhs) const {
    if (!(trunc_ == rhs.trunc_)) throw UsageError("truncation mismatch");
  }

  Truncation trunc_;
  container entries_;
  bool overflow_ = false;
};

using RealCoeffs = CoeffVector<double>;
using ComplexCoeffs = CoeffVector<std::complex<double>>;

}  // namespace so32

#endif  // SO32_INDEX_HPP
