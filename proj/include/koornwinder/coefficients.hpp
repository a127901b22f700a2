// Coefficient contexts: the symbolic parameter field, or exact rationals
// obtained by specializing the six square roots.

#ifndef KOORNWINDER_COEFFICIENTS_HPP
#define KOORNWINDER_COEFFICIENTS_HPP

#include <string>
#include <utility>

#include "koornwinder/param_field.hpp"

namespace kw {

template <class K>
class Coefficients;

template <>
class Coefficients<FieldElement> {
 public:
  using Scalar = FieldElement;
  static constexpr bool kSymbolic = true;

  FieldElement value(const SignedMonomial& m) const { return FieldElement::monomial(m); }
  FieldElement value(const HalfExponents& e) const { return FieldElement::monomial(e); }
  FieldElement integer(long v) const { return FieldElement(v); }
  /// Lifts an exact field element into this context.
  FieldElement lift(const FieldElement& x) const { return x; }

  /// Context in which computed values are the star images of values computed here.
  /// Symbolically the context is unchanged and star is applied to the values.
  Coefficients starred() const { return *this; }

  std::string describe() const { return "symbolic"; }
  friend bool operator==(const Coefficients&, const Coefficients&) { return true; }
};

template <>
class Coefficients<Rational> {
 public:
  using Scalar = Rational;
  static constexpr bool kSymbolic = false;

  explicit Coefficients(Assignment a = Assignment::primes()) : assignment_(std::move(a)) {}

  Rational value(const SignedMonomial& m) const { return assignment_.value(m); }
  Rational value(const HalfExponents& e) const { return assignment_.value(e); }
  Rational integer(long v) const { return Rational(v); }
  Rational lift(const FieldElement& x) const { return specialize(x, assignment_); }

  const Assignment& assignment() const { return assignment_; }
  Coefficients starred() const { return Coefficients(assignment_.starred()); }

  std::string describe() const { return "specialized(" + assignment_.to_string() + ")"; }
  friend bool operator==(const Coefficients& a, const Coefficients& b) {
    return a.assignment_ == b.assignment_;
  }

 private:
  Assignment assignment_;
};

using SymbolicContext = Coefficients<FieldElement>;
using SpecializedContext = Coefficients<Rational>;

template <class K>
K q_power(const Coefficients<K>& ctx, int k) {
  return ctx.value(constants::power_of(Param::q, k));
}

}  // namespace kw

#endif
