#ifndef SO32_VERIFY_HPP
#define SO32_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace so32 {

struct CheckRecord {
  std::string id;
  /// The identity being checked, written out as a formula.
  std::string anchor;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  /// A representative measured value (e.g. a Casimir eigenvalue), if any.
  std::optional<double> observed;
  /// Largest l at which the identity was asserted; nullopt when the check
  /// is not windowed by degree.
  std::optional<int> validity_l_max;
  bool pass = false;
};

struct VerifyOptions {
  int l_max = 12;
  int nodes = 32;
  /// Overrides every per-check default tolerance when set.
  std::optional<double> tol;
  std::uint64_t seed = 20120101;
  int random_spectra = 100;
};

struct VerifyReport {
  std::string suite;
  VerifyOptions options;
  std::vector<CheckRecord> checks;

  bool pass() const noexcept;
};

/// Known suite names, in the order "all" runs them.
const std::vector<std::string>& suite_names();

bool is_suite(std::string_view suite) noexcept;

/// Runs one suite (or "all"); throws UsageError for an unknown name.
VerifyReport run_suite(std::string_view suite, const VerifyOptions& options);

}  // namespace so32

#endif  // SO32_VERIFY_HPP
