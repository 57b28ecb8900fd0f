#ifndef SO32_GENERATORS_HPP
#define SO32_GENERATORS_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "so32/index.hpp"

namespace so32 {

enum class Generator : std::uint8_t { Jp, Jm, J3, Kp, Km, K3, Rp, Rm, R3, Sp, Sm, S3 };

inline constexpr std::array<Generator, 12> kAllGenerators = {
    Generator::Jp, Generator::Jm, Generator::J3, Generator::Kp, Generator::Km, Generator::K3,
    Generator::Rp, Generator::Rm, Generator::R3, Generator::Sp, Generator::Sm, Generator::S3};

/// The eight ladder generators (every generator except the diagonal ones).
inline constexpr std::array<Generator, 8> kLadderGenerators = {
    Generator::Jp, Generator::Jm, Generator::Kp, Generator::Km,
    Generator::Rp, Generator::Rm, Generator::Sp, Generator::Sm};

/// Ten independent generators: eight ladders plus the Cartan pair J3, K3
/// (R3 = K3 + J3 and S3 = K3 - J3).
inline constexpr std::array<Generator, 10> kBasisGenerators = {
    Generator::Jp, Generator::Jm, Generator::J3, Generator::Kp, Generator::Km,
    Generator::K3, Generator::Rp, Generator::Rm, Generator::Sp, Generator::Sm};

std::string_view name(Generator g) noexcept;
std::optional<Generator> parse_generator(std::string_view text) noexcept;
bool is_diagonal(Generator g) noexcept;

/// Lattice displacement (dl, dm) induced by an operator.
struct Shift {
  int dl = 0;
  int dm = 0;
  friend bool operator==(const Shift&, const Shift&) = default;
};

Shift shift_of(Generator g) noexcept;

/// Matrix element of a generator on T_l^m, i.e. the c in g T_l^m = c T_{l'}^{m'}.
/// Ladder elements are the square root of an exact integer product.
double matrix_element(Generator g, int l, int m);

/// Exact integer under the square root for ladder generators; nullopt for
/// diagonal ones. Computed in 64-bit integers.
std::optional<std::int64_t> matrix_element_square(Generator g, int l, int m) noexcept;

/// Exact sparse linear operator on a truncated coefficient space.
///
/// Column j lists the images of the j-th canonical mode. A column is marked
/// leaking when some of its true image lies beyond l_max; such columns are
/// inexact. valid_l_max is the largest l for which every column at or below
/// it is known to be exact from the construction (composition shrinks it by
/// the reach of the inner factor).
class SparseOperator {
 public:
  struct Entry {
    std::size_t row = 0;
    double value = 0.0;
  };

  SparseOperator() = default;
  explicit SparseOperator(Truncation trunc);

  static SparseOperator zero(Truncation trunc);
  static SparseOperator identity(Truncation trunc, double scale = 1.0);

  const Truncation& truncation() const noexcept { return trunc_; }
  const std::vector<Entry>& column(std::size_t j) const { return columns_.at(j); }
  bool leaks(std::size_t j) const { return leaks_.at(j) != 0; }
  int valid_l_max() const noexcept { return valid_l_max_; }
  int reach() const noexcept { return reach_; }
  const std::optional<Shift>& shift() const noexcept { return shift_; }

  /// <to| op |from>; zero when no entry is stored.
  double element(ModeIndex to, ModeIndex from) const;

  /// Dense row-major (size x size) copy.
  std::vector<double> to_dense() const;

  template <typename Scalar>
  CoeffVector<Scalar> apply(const CoeffVector<Scalar>& v) const;

  SparseOperator& operator*=(double factor);
  friend SparseOperator operator*(double factor, SparseOperator op) { return op *= factor; }
  friend SparseOperator operator+(const SparseOperator& a, const SparseOperator& b);
  friend SparseOperator operator-(const SparseOperator& a, const SparseOperator& b);

  /// Composition (a * b)v = a(b v).
  friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b);

  // Construction interface used by the generator factory.
  void push(std::size_t column, std::size_t row, double value);
  void mark_leak(std::size_t column) { leaks_.at(column) = 1; }
  void set_window(int valid_l_max, int reach, std::optional<Shift> shift) {
    valid_l_max_ = valid_l_max;
    reach_ = reach;
    shift_ = shift;
  }

 private:
  void require_same_window(const SparseOperator& other) const;
  SparseOperator combine(const SparseOperator& b, double sign) const;

  Truncation trunc_;
  std::vector<std::vector<Entry>> columns_;
  std::vector<std::uint8_t> leaks_;
  int valid_l_max_ = 0;
  int reach_ = 0;
  std::optional<Shift> shift_ = Shift{};
};

SparseOperator generator(Generator g, Truncation trunc);

template <typename Scalar>
CoeffVector<Scalar> apply(const SparseOperator& op, const CoeffVector<Scalar>& v) {
  return op.apply(v);
}

/// ab - ba.
SparseOperator commutator(const SparseOperator& a, const SparseOperator& b);
/// ab + ba.
SparseOperator anticommutator(const SparseOperator& a, const SparseOperator& b);

enum class CasimirKind : std::uint8_t { so21_K, so3_J, so21_R, so21_S, so32 };

std::string_view name(CasimirKind kind) noexcept;
std::optional<CasimirKind> parse_casimir(std::string_view text) noexcept;

/// so21_K: K3^2 - {K+,K-}/2
/// so3_J : J3^2 + {J+,J-}/2
/// so21_R: (R3^2 - {R+,R-}/2) / 4, i.e. with R -> R/2
/// so21_S: (S3^2 - {S+,S-}/2) / 4
/// so32  : J3^2 + K3^2 + {J+,J-}/2 - {K+,K-}/2 - {R+,R-}/4 - {S+,S-}/4
SparseOperator casimir(CasimirKind kind, Truncation trunc);

/// Eigenvalue the Casimir takes on T_l^m.
double casimir_eigenvalue(CasimirKind kind, int l, int m) noexcept;

/// Builds (1/l!) sqrt((l-|m|)!/(l+|m|)!) (J+-)^{|m|} (K+)^l |0,0> by
/// repeated operator application. Should reproduce the unit vector at (l, m).
RealCoeffs generate_mode(int l, int m, Truncation trunc);

/// Filter on lattice modes for spectrum().
struct SpectrumConstraint {
  std::optional<int> fixed_l{};
  std::optional<int> fixed_m{};
  /// 0: l+m even, 1: l+m odd.
  std::optional<int> parity{};
};

/// Sorted distinct eigenvalues of a diagonal generator over the modes of
/// the window that satisfy the constraint. Throws UsageError for ladders.
std::vector<double> spectrum(Generator g, Truncation trunc, const SpectrumConstraint& constraint = {});

// --- template implementation -------------------------------------------------

template <typename Scalar>
CoeffVector<Scalar> SparseOperator::apply(const CoeffVector<Scalar>& v) const {
  if (!(v.truncation() == trunc_)) throw UsageError("operator and vector truncations differ");
  CoeffVector<Scalar> out(trunc_);
  if (v.overflow()) out.mark_overflow();
  for (const auto& [mode, amplitude] : v.entries()) {
    if (amplitude == Scalar(0)) continue;
    const std::size_t j = flat_index(mode);
    if (leaks_[j]) out.mark_overflow();
    for (const Entry& e : columns_[j]) out.add(mode_at(e.row), Scalar(e.value) * amplitude);
  }
  return out;
}

}  // namespace so32

#endif  // SO32_GENERATORS_HPP
