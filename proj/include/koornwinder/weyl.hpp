// The affine Weyl group of type C~n acting on Z^n and on affine functionals,
// the finite group W0 = (+-1)^n x S_n, and the combinatorics that index the
// Y-eigenspaces: w_alpha, the spectral vector q^{alpha bar}, and chains of
// simple reflections from 0.

#ifndef KOORNWINDER_WEYL_HPP
#define KOORNWINDER_WEYL_HPP

#include <string>
#include <utility>
#include <vector>

#include "koornwinder/laurent.hpp"
#include "koornwinder/param_field.hpp"

namespace kw {

/// Sequence of generator indices 0..n; the product s_{w[0]} s_{w[1]} ... as written.
using GeneratorWord = std::vector<int>;

/// w = sigma * pi in W0. perm holds pi(1), ..., pi(n) (1-based values).
/// Action on Z^n: (w.v)_i = sigma_i * v_{pi^{-1}(i)}.
struct SignedPermutation {
  std::vector<int> signs;
  std::vector<int> perm;

  static SignedPermutation identity(int n);
  /// The simple reflection s_i, 1 <= i <= n, as an element of W0.
  static SignedPermutation simple(int n, int i);

  int rank() const { return static_cast<int>(perm.size()); }
  ExponentVector act(const ExponentVector& v) const;
  SignedPermutation inverse() const;
  /// (a * b).v = a.(b.v)
  friend SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b);
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;
  std::string to_string() const;
};

/// s_i . v on Z^n: s_0 v = (-v_1 - 1, v_2, ...), s_n negates v_n, others swap.
ExponentVector affine_action(int i, const ExponentVector& v);

/// Replays a word: applies word[0] first.
ExponentVector replay(const GeneratorWord& word, const ExponentVector& start);

/// s_i on affine functionals: s_0(v + r delta) = (-v_1, v_2, ...) + (r - v_1) delta.
AffineExponent functional_action(int i, const AffineExponent& e);

bool is_partition(const ExponentVector& v);

/// w_alpha = sigma_alpha pi_alpha: sigma = signs of alpha (sgn 0 = +1); pi orders the
/// indices by decreasing |alpha_i|, ties broken left to right for alpha_i >= 0 and
/// then right to left for alpha_i < 0.
SignedPermutation w_alpha(const ExponentVector& alpha);

/// Monomials q^{alpha bar_i}, alpha bar = alpha + w_alpha . rho, with q^{rho_i} = s t^{n-i}.
std::vector<HalfExponents> spectral_monomials(const ExponentVector& alpha);

/// q^{lambda_i + rho_i} for a partition (or any vector) lambda.
std::vector<HalfExponents> shifted_rho_monomials(const ExponentVector& lambda);

/// q^{rho*_i} = (un tn)^{1/2} t^{n-i}, raised to the power sign (+1 or -1).
std::vector<HalfExponents> rho_star_monomials(int n, int sign);

/// q^{rho_i} = s t^{n-i}, raised to the power sign.
std::vector<HalfExponents> rho_monomials(int n, int sign);

/// Word i_1 ... i_m with (s_{i_m} ... s_{i_1}) . 0 = alpha, every step moving the
/// vector and s_0 used exactly |alpha| times.
GeneratorWord chain_to(const ExponentVector& alpha);

/// Guard for enumerate_W0.
inline constexpr int kMaxW0Rank = 6;

/// All 2^n n! elements of W0, each with a reduced word over 1..n found by
/// breadth-first search from the identity. Throws RankTooLarge for n > kMaxW0Rank.
std::vector<std::pair<SignedPermutation, GeneratorWord>> enumerate_W0(int n);

/// tau_i = (s_i ... s_{n-1})(s_n ... s_0)(s_1 ... s_{i-1}) as a word, written left to right.
GeneratorWord translation_word(int i, int n);

std::string word_to_string(const GeneratorWord& w);

}  // namespace kw

#endif
