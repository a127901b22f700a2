#ifndef KOORNWINDER_ERRORS_HPP
#define KOORNWINDER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kw {

struct DivisionByZero : std::domain_error {
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

/// A specialization sent a denominator to zero; callers may re-draw the assignment.
struct UnluckySpecialization : std::runtime_error {
  explicit UnluckySpecialization(const std::string& what) : std::runtime_error(what) {}
};

/// Exact division left a remainder. Upstream this means a divisibility guarantee was violated.
struct NotDivisible : std::runtime_error {
  explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};

/// A coefficient that must be nonzero for generic parameters vanished.
struct NonGenericParameters : std::runtime_error {
  explicit NonGenericParameters(const std::string& what) : std::runtime_error(what) {}
};

struct RankTooLarge : std::invalid_argument {
  explicit RankTooLarge(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace kw

#endif
