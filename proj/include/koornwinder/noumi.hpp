// The Noumi representation of the double affine Hecke algebra on Laurent
// polynomials: Demazure-Lusztig type operators T_i, multiplication operators
// X_i, the commuting family Y_i, U_0, U_n, the finite Hecke elements T_w with
// the character chi, the symmetrizer C, and Koornwinder's q-difference
// operator D.
//
// Operators are functions on Laurent<K>; nothing here builds matrices.

#ifndef KOORNWINDER_NOUMI_HPP
#define KOORNWINDER_NOUMI_HPP

#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "koornwinder/coefficients.hpp"
#include "koornwinder/laurent.hpp"
#include "koornwinder/weyl.hpp"

namespace kw {

enum class OpTag { T, Tinv, X, Xinv, Y, Yinv, U0, U0inv, Un, Uninv, S };

struct OperatorAtom {
  OpTag tag;
  int index = 0;
  friend bool operator==(const OperatorAtom&, const OperatorAtom&) = default;
};

/// Product of atoms as written left to right; applied to a polynomial right to left.
using OperatorWord = std::vector<OperatorAtom>;

std::string to_string(const OperatorAtom& a);
std::string to_string(const OperatorWord& w);
/// Inverse word: reversed with every atom inverted. S has no inverse atom.
OperatorWord inverse_word(const OperatorWord& w);

/// Y_i = (T_i ... T_{n-1})(T_n ... T_0)(T_1^{-1} ... T_{i-1}^{-1}).
OperatorWord y_word(int i, int n);

template <class K>
class Noumi {
 public:
  using Poly = Laurent<K>;

  Noumi(int n, Coefficients<K> ctx);

  int rank() const { return n_; }
  const Coefficients<K>& context() const { return ctx_; }
  Poly one() const { return Poly::constant(n_, K(1)); }
  Poly monomial(const ExponentVector& e) const { return Poly::monomial(e, K(1)); }

  /// t_i^{1/2}: t0 for i = 0, tn for i = n, t otherwise.
  K t_half(int i) const;

  /// pi(T_i^{sign}), sign = +1 or -1.
  Poly T(int i, int sign, const Poly& f) const;
  Poly X(int i, int sign, const Poly& f) const;
  Poly Y(int i, int sign, const Poly& f) const;
  /// Y_i^{power} for any integer power.
  Poly Y_power(int i, int power, const Poly& f) const;
  /// U_0 = q^{-1/2} T_0^{-1} X_1.
  Poly U0(int sign, const Poly& f) const;
  /// U_n = X_1^{-1} T_0 Y_1^{-1}.
  Poly Un(int sign, const Poly& f) const;
  /// Intertwiner: [T_i, Y_i] for i >= 1, [Y_1, U_n] for i = 0.
  Poly S(int i, const Poly& f) const;
  Poly apply(const OperatorAtom& a, const Poly& f) const;
  Poly apply(const OperatorWord& w, const Poly& f) const;

  /// T_w = T_{i_1} ... T_{i_l} for a word over 1..n.
  Poly Tw(const GeneratorWord& word, const Poly& f) const;
  /// chi(T_w) = product of t_i^{1/2} over the word.
  K chi(const GeneratorWord& word) const;

  /// W0 with reduced words; computed once.
  const std::vector<std::pair<SignedPermutation, GeneratorWord>>& W0() const;
  /// pi(C) = (sum_w chi(T_w)^2)^{-1} sum_w chi(T_w) T_w.
  Poly C(const Poly& f) const;
  /// s_i f == f for i = 1..n.
  bool is_W0_invariant(const Poly& f) const;

  /// Koornwinder's operator. Throws NotDivisible("input not in the D-stable subspace")
  /// when the result is not a Laurent polynomial.
  Poly D(const Poly& f) const;
  /// d_lambda = sum_i [q^{-1}abcd t^{2n-i-1}(q^{lambda_i} - 1) + t^{i-1}(q^{-lambda_i} - 1)].
  K d_lambda(const ExponentVector& lambda) const;

 private:
  struct HeckePiece {
    Poly num;  // numerator of the rational factor multiplying (s_i - 1)
    Poly den;
    K half;      // t_i^{1/2}
    K half_inv;  // t_i^{-1/2}
  };
  struct DOperator {
    Poly common_den;
    std::vector<Poly> forward;   // L * Phi_i(x)
    std::vector<Poly> backward;  // L * Phi_i(x^{-1})
  };

  int n_;
  Coefficients<K> ctx_;
  std::vector<HeckePiece> hecke_;
  K q_half_;
  K q_half_inv_;

  mutable std::once_flag w0_once_;
  mutable std::vector<std::pair<SignedPermutation, GeneratorWord>> w0_;
  mutable std::once_flag d_once_;
  mutable std::unique_ptr<DOperator> d_op_;

  Poly linear(std::initializer_list<std::pair<ExponentVector, K>> terms) const;
  void build_D() const;
};

extern template class Noumi<FieldElement>;
extern template class Noumi<Rational>;

}  // namespace kw

#endif
