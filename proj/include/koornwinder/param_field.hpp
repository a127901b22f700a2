// Exact arithmetic in the field of rational functions in the square roots of
// the six parameters q, t, t0, tn, u0, un.
//
// Monomials carry doubled exponents, so the exponent vector (1,0,0,0,0,0) is
// q^{1/2}. Elements are stored as num/den with num, den in
// Z[q^{±1/2}, ..., un^{±1/2}]; see FieldElement for the canonical form.

#ifndef KOORNWINDER_PARAM_FIELD_HPP
#define KOORNWINDER_PARAM_FIELD_HPP

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kw {

enum class Param : int { q = 0, t = 1, t0 = 2, tn = 3, u0 = 4, un = 5 };

inline constexpr std::size_t kNumParams = 6;

const char* param_name(Param p);

/// Doubled exponents of (q, t, t0, tn, u0, un) in a monomial.
struct HalfExponents {
  std::array<int, kNumParams> e{};

  static HalfExponents of(Param p, int doubled) {
    HalfExponents h;
    h.e[static_cast<int>(p)] = doubled;
    return h;
  }

  int& operator[](Param p) { return e[static_cast<int>(p)]; }
  int operator[](Param p) const { return e[static_cast<int>(p)]; }
  int& operator[](std::size_t i) { return e[i]; }
  int operator[](std::size_t i) const { return e[i]; }

  bool is_zero() const {
    for (int x : e)
      if (x != 0) return false;
    return true;
  }

  HalfExponents operator-() const {
    HalfExponents r;
    for (std::size_t i = 0; i < kNumParams; ++i) r.e[i] = -e[i];
    return r;
  }
  HalfExponents& operator+=(const HalfExponents& o) {
    for (std::size_t i = 0; i < kNumParams; ++i) e[i] += o.e[i];
    return *this;
  }
  HalfExponents& operator-=(const HalfExponents& o) {
    for (std::size_t i = 0; i < kNumParams; ++i) e[i] -= o.e[i];
    return *this;
  }
  HalfExponents operator*(int k) const {
    HalfExponents r = *this;
    for (int& x : r.e) x *= k;
    return r;
  }
  friend HalfExponents operator+(HalfExponents a, const HalfExponents& b) { return a += b; }
  friend HalfExponents operator-(HalfExponents a, const HalfExponents& b) { return a -= b; }
  friend auto operator<=>(const HalfExponents&, const HalfExponents&) = default;
  friend bool operator==(const HalfExponents&, const HalfExponents&) = default;
};

/// The three involutions on monomials. Each maps a monomial to a monomial.
HalfExponents epsilon(const HalfExponents& m);
HalfExponents dagger(const HalfExponents& m);
HalfExponents star(const HalfExponents& m);

/// A monomial with a sign, e.g. b = -tn^{1/2} un^{-1/2}.
struct SignedMonomial {
  int sign = 1;
  HalfExponents exponents;

  SignedMonomial operator*(const SignedMonomial& o) const {
    return {sign * o.sign, exponents + o.exponents};
  }
  SignedMonomial inverse() const { return {sign, -exponents}; }
  SignedMonomial pow(int k) const {
    return {(k % 2 != 0) ? sign : 1, exponents * k};
  }
  friend bool operator==(const SignedMonomial&, const SignedMonomial&) = default;
};

SignedMonomial epsilon(const SignedMonomial& m);
SignedMonomial star(const SignedMonomial& m);

/// Named constants of the algebra.
namespace constants {
SignedMonomial sqrt_of(Param p);        // p^{1/2}
SignedMonomial power_of(Param p, int k);  // p^k
SignedMonomial a();                     // tn^{1/2} un^{1/2}
SignedMonomial b();                     // -tn^{1/2} un^{-1/2}
SignedMonomial c();                     // q^{1/2} t0^{1/2} u0^{1/2}
SignedMonomial d();                     // -q^{1/2} t0^{1/2} u0^{-1/2}
SignedMonomial s();                     // (t0 tn)^{1/2}
/// t_i^{1/2} for the Hecke generator T_i of rank n: t0, then t, ..., t, then tn.
SignedMonomial t_half(int i, int n);
}  // namespace constants

/// Sparse polynomial in the six square roots with big-integer coefficients.
/// Terms are kept sorted by exponent (lexicographic, ascending); no zero coefficients.
class ParamPolynomial {
 public:
  using Term = std::pair<HalfExponents, mpz_class>;

  ParamPolynomial() = default;
  explicit ParamPolynomial(long c);
  explicit ParamPolynomial(const mpz_class& c);
  static ParamPolynomial monomial(const HalfExponents& e, const mpz_class& c = 1);
  /// Builds from arbitrary terms; merges duplicates and drops zeros.
  static ParamPolynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const;
  /// Lexicographically greatest term.
  const Term& leading() const { return terms_.back(); }
  /// Positive gcd of the coefficients; 0 for the zero polynomial.
  mpz_class content() const;
  /// Componentwise minimum exponent (zero vector for the zero polynomial).
  HalfExponents min_exponents() const;
  HalfExponents max_exponents() const;
  mpz_class max_norm() const;

  ParamPolynomial shifted(const HalfExponents& by) const;
  ParamPolynomial scaled(const mpz_class& c) const;
  /// Exact division of every coefficient by c.
  ParamPolynomial divided(const mpz_class& c) const;
  template <class F>
  ParamPolynomial map_exponents(F&& f) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.emplace_back(f(e), c);
    return from_terms(std::move(out));
  }

  ParamPolynomial operator-() const;
  ParamPolynomial& operator+=(const ParamPolynomial& o);
  ParamPolynomial& operator-=(const ParamPolynomial& o);
  friend ParamPolynomial operator+(ParamPolynomial a, const ParamPolynomial& b) { return a += b; }
  friend ParamPolynomial operator-(ParamPolynomial a, const ParamPolynomial& b) { return a -= b; }
  friend ParamPolynomial operator*(const ParamPolynomial& a, const ParamPolynomial& b);
  friend bool operator==(const ParamPolynomial&, const ParamPolynomial&) = default;

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// Quotient a/b over Z if b divides a exactly; both must have nonnegative exponents.
std::optional<ParamPolynomial> divide_exact(const ParamPolynomial& a, const ParamPolynomial& b);

/// Heuristic multivariate gcd over Z (evaluation at large integers, interpolation,
/// and trial division). Returns the primitive gcd with positive leading coefficient,
/// or nullopt when the heuristic gives up. Inputs must have nonnegative exponents.
std::optional<ParamPolynomial> heuristic_gcd(const ParamPolynomial& a, const ParamPolynomial& b);

/// Exact rational number; the coefficient field of the specialized mode.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) : v_(num, den) { v_.canonicalize(); }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  /// Parses "p" or "p/q".
  static Rational parse(const std::string& s);

  const mpq_class& value() const { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational inverse() const;
  Rational pow(int k) const;
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }

  std::string to_string() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

/// Values assigned to the six square roots q^{1/2}, ..., un^{1/2}.
struct Assignment {
  std::array<Rational, kNumParams> roots;

  /// q^{1/2}=2, t^{1/2}=3, t0^{1/2}=5, tn^{1/2}=7, u0^{1/2}=11, un^{1/2}=13.
  static Assignment primes();
  /// Deterministic pseudo-random assignment of small distinct primes and their ratios.
  static Assignment from_seed(std::uint64_t seed);
  /// The assignment under which specialization computes star(x): t0 and un values swapped.
  Assignment starred() const;

  Rational value(const SignedMonomial& m) const;
  Rational value(const HalfExponents& m) const;

  friend bool operator==(const Assignment&, const Assignment&) = default;
  std::string to_string() const;
};

/// An element of the parameter field, kept as
///   coeff * x^mono * f_1^{m_1} * ... * f_k^{m_k}
/// with coeff rational, mono a monomial, and each f_j a primitive polynomial with
/// nonnegative exponents, no monomial factor and positive leading coefficient.
/// Multiplicities are nonzero integers; negative ones form the denominator.
/// Products and inverses only merge factor lists. A sum becomes one new numerator
/// factor after trial division by the common denominator factors; pairs with at most
/// gcd_threshold() terms additionally go through the heuristic gcd. Factors need not
/// be irreducible or coprime, so equality is decided by cross-multiplication.
class FieldElement {
 public:
  using Factor = std::pair<ParamPolynomial, int>;

  FieldElement();
  FieldElement(long v);  // NOLINT(google-explicit-constructor)
  explicit FieldElement(const mpz_class& v);
  static FieldElement monomial(const HalfExponents& e, long coeff = 1);
  static FieldElement monomial(const SignedMonomial& m);
  static FieldElement sqrt_param(Param p);
  static FieldElement param(Param p);
  static FieldElement polynomial(const ParamPolynomial& num);
  /// Throws DivisionByZero if den is zero.
  static FieldElement fraction(const ParamPolynomial& num, const ParamPolynomial& den);

  /// Expanded numerator and denominator: den has nonnegative exponents, no monomial
  /// factor and positive leading coefficient, and num, den have coprime contents.
  ParamPolynomial num() const;
  ParamPolynomial den() const;
  const mpq_class& coefficient() const { return coeff_; }
  const HalfExponents& monomial_part() const { return mono_; }
  const std::vector<Factor>& factors() const { return factors_; }

  bool is_zero() const { return sgn(coeff_) == 0; }
  bool is_one() const { return coeff_ == 1 && mono_.is_zero() && factors_.empty(); }
  bool is_polynomial() const;
  /// Total number of stored terms; a cost measure for pivoting.
  std::size_t size() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  FieldElement inverse() const;
  FieldElement pow(int k) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// num/den with the heuristic gcd removed, stored as one numerator and one
  /// denominator factor.
  FieldElement reduced() const;

  /// Applies a linear map on exponents to every monomial.
  template <class F>
  FieldElement map_exponents(F&& f) const {
    FieldElement r;
    r.coeff_ = coeff_;
    r.mono_ = f(mono_);
    for (const auto& [g, k] : factors_) r.absorb(g.map_exponents(f), k);
    return r;
  }

  std::string to_string() const;

  static std::size_t gcd_threshold();
  static void set_gcd_threshold(std::size_t terms);

 private:
  mpq_class coeff_;
  HalfExponents mono_;
  std::vector<Factor> factors_;  // sorted by polynomial

  /// Multiplies by p^mult without any cancellation beyond exact factor matches.
  void absorb(const ParamPolynomial& p, int mult);
  /// Multiplies by a new numerator polynomial, cancelling denominator factors.
  void attach_numerator(const ParamPolynomial& p);
  void add_factor(const ParamPolynomial& f, int mult);
  friend struct FieldCombination;
};

FieldElement epsilon(const FieldElement& x);
FieldElement dagger(const FieldElement& x);
FieldElement star(const FieldElement& x);

/// Evaluates num and den; throws UnluckySpecialization if den vanishes.
Rational specialize(const FieldElement& x, const Assignment& a);

}  // namespace kw

#endif
