#include "so32/generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>

#include "so32/errors.hpp"

namespace so32 {
namespace {

constexpr std::array<std::string_view, 12> kGeneratorNames = {
    "Jp", "Jm", "J3", "Kp", "Km", "K3", "Rp", "Rm", "R3", "Sp", "Sm", "S3"};

constexpr std::array<std::string_view, 5> kCasimirNames = {"so21_K", "so3_J", "so21_R", "so21_S",
                                                           "so32"};

// Above this degree the integer products are formed in long double.
constexpr int kIntegerProductLimit = 10000;

long double square_in_float(Generator g, long double l, long double m) {
  switch (g) {
    case Generator::Jp: return (l - m) * (l + m + 1);
    case Generator::Jm: return (l + m) * (l - m + 1);
    case Generator::Kp: return (l - m + 1) * (l + m + 1);
    case Generator::Km: return (l + m) * (l - m);
    case Generator::Rp: return (l + m + 2) * (l + m + 1);
    case Generator::Rm: return (l + m) * (l + m - 1);
    case Generator::Sp: return (l - m + 2) * (l - m + 1);
    case Generator::Sm: return (l - m) * (l - m - 1);
    default: return 0;
  }
}

}  // namespace

std::string_view name(Generator g) noexcept { return kGeneratorNames[static_cast<std::size_t>(g)]; }

std::optional<Generator> parse_generator(std::string_view text) noexcept {
  for (Generator g : kAllGenerators)
    if (name(g) == text) return g;
  return std::nullopt;
}

bool is_diagonal(Generator g) noexcept {
  return g == Generator::J3 || g == Generator::K3 || g == Generator::R3 || g == Generator::S3;
}

Shift shift_of(Generator g) noexcept {
  switch (g) {
    case Generator::Jp: return {0, 1};
    case Generator::Jm: return {0, -1};
    case Generator::Kp: return {1, 0};
    case Generator::Km: return {-1, 0};
    case Generator::Rp: return {1, 1};
    case Generator::Rm: return {-1, -1};
    case Generator::Sp: return {1, -1};
    case Generator::Sm: return {-1, 1};
    default: return {0, 0};
  }
}

std::optional<std::int64_t> matrix_element_square(Generator g, int l, int m) noexcept {
  if (is_diagonal(g)) return std::nullopt;
  const std::int64_t L = l;
  const std::int64_t M = m;
  switch (g) {
    case Generator::Jp: return (L - M) * (L + M + 1);
    case Generator::Jm: return (L + M) * (L - M + 1);
    case Generator::Kp: return (L - M + 1) * (L + M + 1);
    case Generator::Km: return (L + M) * (L - M);
    case Generator::Rp: return (L + M + 2) * (L + M + 1);
    case Generator::Rm: return (L + M) * (L + M - 1);
    case Generator::Sp: return (L - M + 2) * (L - M + 1);
    case Generator::Sm: return (L - M) * (L - M - 1);
    default: return std::nullopt;
  }
}

double matrix_element(Generator g, int l, int m) {
  if (!is_admissible(l, m)) throw DomainError("inadmissible (l,m) " + to_string({l, m}));
  switch (g) {
    case Generator::J3: return m;
    case Generator::K3: return l + 0.5;
    case Generator::R3: return l + m + 0.5;
    case Generator::S3: return l - m + 0.5;
    default: break;
  }
  if (l <= kIntegerProductLimit)
    return std::sqrt(static_cast<double>(*matrix_element_square(g, l, m)));
  return static_cast<double>(std::sqrt(square_in_float(g, l, m)));
}

// --- SparseOperator ----------------------------------------------------------

SparseOperator::SparseOperator(Truncation trunc)
    : trunc_(trunc), columns_(trunc.size()), leaks_(trunc.size(), 0), valid_l_max_(trunc.l_max()) {}

SparseOperator SparseOperator::zero(Truncation trunc) { return SparseOperator(trunc); }

SparseOperator SparseOperator::identity(Truncation trunc, double scale) {
  SparseOperator op(trunc);
  for (std::size_t j = 0; j < trunc.size(); ++j) op.push(j, j, scale);
  return op;
}

void SparseOperator::push(std::size_t column, std::size_t row, double value) {
  auto& col = columns_.at(column);
  for (Entry& e : col)
    if (e.row == row) {
      e.value += value;
      return;
    }
  col.push_back({row, value});
}

double SparseOperator::element(ModeIndex to, ModeIndex from) const {
  if (!trunc_.contains(to) || !trunc_.contains(from)) return 0.0;
  const std::size_t row = flat_index(to);
  for (const Entry& e : columns_[flat_index(from)])
    if (e.row == row) return e.value;
  return 0.0;
}

std::vector<double> SparseOperator::to_dense() const {
  const std::size_t n = trunc_.size();
  std::vector<double> dense(n * n, 0.0);
  for (std::size_t j = 0; j < n; ++j)
    for (const Entry& e : columns_[j]) dense[e.row * n + j] += e.value;
  return dense;
}

SparseOperator& SparseOperator::operator*=(double factor) {
  for (auto& col : columns_)
    for (Entry& e : col) e.value *= factor;
  return *this;
}

void SparseOperator::require_same_window(const SparseOperator& other) const {
  if (!(trunc_ == other.trunc_)) throw UsageError("operator truncations differ");
}

SparseOperator SparseOperator::combine(const SparseOperator& b, double sign) const {
  require_same_window(b);
  SparseOperator out(*this);
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    for (const Entry& e : b.columns_[j]) out.push(j, e.row, sign * e.value);
    out.leaks_[j] = static_cast<std::uint8_t>(leaks_[j] | b.leaks_[j]);
  }
  std::optional<Shift> shift;
  if (shift_ && b.shift_ && *shift_ == *b.shift_) shift = shift_;
  out.set_window(std::min(valid_l_max_, b.valid_l_max_), std::max(reach_, b.reach_), shift);
  return out;
}

SparseOperator operator+(const SparseOperator& a, const SparseOperator& b) { return a.combine(b, 1.0); }
SparseOperator operator-(const SparseOperator& a, const SparseOperator& b) { return a.combine(b, -1.0); }

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
  a.require_same_window(b);
  const std::size_t n = a.trunc_.size();
  SparseOperator out(a.trunc_);
  std::vector<double> acc(n, 0.0);
  std::vector<std::size_t> touched;
  for (std::size_t j = 0; j < n; ++j) {
    bool leak = b.leaks_[j] != 0;
    touched.clear();
    for (const auto& inner : b.columns_[j]) {
      if (inner.value == 0.0) continue;
      if (a.leaks_[inner.row]) leak = true;
      for (const auto& outer : a.columns_[inner.row]) {
        if (acc[outer.row] == 0.0) touched.push_back(outer.row);
        acc[outer.row] += outer.value * inner.value;
      }
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (std::size_t row : touched) {
      if (acc[row] != 0.0) out.columns_[j].push_back({row, acc[row]});
      acc[row] = 0.0;
    }
    out.leaks_[j] = leak ? 1 : 0;
  }
  std::optional<Shift> shift;
  if (a.shift_ && b.shift_) shift = Shift{a.shift_->dl + b.shift_->dl, a.shift_->dm + b.shift_->dm};
  out.set_window(std::min(b.valid_l_max_, a.valid_l_max_ - b.reach_), a.reach_ + b.reach_, shift);
  return out;
}

SparseOperator generator(Generator g, Truncation trunc) {
  SparseOperator op(trunc);
  const Shift s = shift_of(g);
  for (const ModeIndex mode : lattice(trunc)) {
    const std::size_t j = flat_index(mode);
    if (is_diagonal(g)) {
      op.push(j, j, matrix_element(g, mode.l, mode.m));
      continue;
    }
    const double value = matrix_element(g, mode.l, mode.m);
    if (value == 0.0) continue;
    const ModeIndex target{mode.l + s.dl, mode.m + s.dm};
    if (target.l > trunc.l_max()) {
      op.mark_leak(j);
      continue;
    }
    op.push(j, flat_index(target), value);
  }
  op.set_window(trunc.l_max() - std::abs(s.dl), std::abs(s.dl), s);
  return op;
}

SparseOperator commutator(const SparseOperator& a, const SparseOperator& b) { return a * b - b * a; }

SparseOperator anticommutator(const SparseOperator& a, const SparseOperator& b) { return a * b + b * a; }

std::string_view name(CasimirKind kind) noexcept { return kCasimirNames[static_cast<std::size_t>(kind)]; }

std::optional<CasimirKind> parse_casimir(std::string_view text) noexcept {
  for (std::size_t i = 0; i < kCasimirNames.size(); ++i)
    if (kCasimirNames[i] == text) return static_cast<CasimirKind>(i);
  return std::nullopt;
}

SparseOperator casimir(CasimirKind kind, Truncation trunc) {
  auto G = [&](Generator g) { return generator(g, trunc); };
  auto square = [&](Generator g) {
    const SparseOperator op = G(g);
    return op * op;
  };
  auto anti = [&](Generator a, Generator b) { return anticommutator(G(a), G(b)); };

  switch (kind) {
    case CasimirKind::so21_K: return square(Generator::K3) - 0.5 * anti(Generator::Kp, Generator::Km);
    case CasimirKind::so3_J: return square(Generator::J3) + 0.5 * anti(Generator::Jp, Generator::Jm);
    case CasimirKind::so21_R:
      return 0.25 * (square(Generator::R3) - 0.5 * anti(Generator::Rp, Generator::Rm));
    case CasimirKind::so21_S:
      return 0.25 * (square(Generator::S3) - 0.5 * anti(Generator::Sp, Generator::Sm));
    case CasimirKind::so32:
      return square(Generator::J3) + square(Generator::K3) + 0.5 * anti(Generator::Jp, Generator::Jm) -
             0.5 * anti(Generator::Kp, Generator::Km) - 0.25 * anti(Generator::Rp, Generator::Rm) -
             0.25 * anti(Generator::Sp, Generator::Sm);
  }
  return SparseOperator::zero(trunc);
}

double casimir_eigenvalue(CasimirKind kind, int l, int m) noexcept {
  switch (kind) {
    case CasimirKind::so21_K: return static_cast<double>(m) * m - 0.25;
    case CasimirKind::so3_J: return static_cast<double>(l) * (l + 1);
    case CasimirKind::so21_R:
    case CasimirKind::so21_S: return -3.0 / 16.0;
    case CasimirKind::so32: return -1.25;
  }
  return 0.0;
}

RealCoeffs generate_mode(int l, int m, Truncation trunc) {
  if (!is_admissible(l, m)) throw DomainError("inadmissible (l,m) " + to_string({l, m}));
  if (l > trunc.l_max()) throw DomainError("target mode lies outside the truncation");
  const int m_abs = std::abs(m);

  RealCoeffs v = RealCoeffs::unit(trunc, {0, 0});
  const SparseOperator raise_l = generator(Generator::Kp, trunc);
  for (int k = 0; k < l; ++k) v = raise_l.apply(v);
  const SparseOperator shift_m = generator(m >= 0 ? Generator::Jp : Generator::Jm, trunc);
  for (int k = 0; k < m_abs; ++k) v = shift_m.apply(v);

  const double log_prefactor =
      -std::lgamma(l + 1.0) + 0.5 * (std::lgamma(l - m_abs + 1.0) - std::lgamma(l + m_abs + 1.0));
  v *= std::exp(log_prefactor);
  return v;
}

std::vector<double> spectrum(Generator g, Truncation trunc, const SpectrumConstraint& constraint) {
  if (!is_diagonal(g)) throw UsageError("spectrum requires a diagonal generator (J3, K3, R3, S3)");
  std::set<double> values;
  for (const ModeIndex mode : lattice(trunc)) {
    if (constraint.fixed_l && mode.l != *constraint.fixed_l) continue;
    if (constraint.fixed_m && mode.m != *constraint.fixed_m) continue;
    if (constraint.parity && std::abs(mode.l + mode.m) % 2 != *constraint.parity) continue;
    values.insert(matrix_element(g, mode.l, mode.m));
  }
  return {values.begin(), values.end()};
}

}  // namespace so32
