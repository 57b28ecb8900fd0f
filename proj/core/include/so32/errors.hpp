#ifndef SO32_ERRORS_HPP
#define SO32_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace so32 {

/// Argument outside the mathematical domain: inadmissible (l,m), |x| >= 1,
/// a pole of the sphere, a zero-point quadrature rule.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Inconsistent inputs: mismatched truncations, undersampled grids,
/// a non-diagonal generator where a diagonal one is required.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace so32

#endif  // SO32_ERRORS_HPP
