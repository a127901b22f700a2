// Nonsymmetric Koornwinder polynomials E_alpha, built by applying intertwiners
// along a chain from the constant 1, and symmetric P_lambda obtained from
// E_lambda with the symmetrizer.

#ifndef KOORNWINDER_POLYNOMIALS_HPP
#define KOORNWINDER_POLYNOMIALS_HPP

#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <vector>

#include "koornwinder/intertwine.hpp"
#include "koornwinder/noumi.hpp"
#include "koornwinder/weyl.hpp"

namespace kw {

template <class K>
using SpectralVector = std::vector<K>;

/// q^{alpha bar} in the coefficient context.
template <class K>
SpectralVector<K> spectral_vector(const Coefficients<K>& ctx, const ExponentVector& alpha) {
  SpectralVector<K> out;
  for (const auto& m : spectral_monomials(alpha)) out.push_back(ctx.value(m));
  return out;
}

template <class K>
std::vector<K> point_from(const Coefficients<K>& ctx, const std::vector<HalfExponents>& ms) {
  std::vector<K> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(ctx.value(m));
  return out;
}

/// A polynomial together with its label (alpha or lambda) and its Y-spectrum.
/// The coefficient of x^label is 1.
template <class K>
struct LabeledPolynomial {
  ExponentVector label;
  Laurent<K> poly;
  SpectralVector<K> spectrum;
};

struct BasisReport {
  int degree = 0;
  std::size_t size = 0;
  std::size_t rank = 0;
  bool support_ok = true;
  bool ok() const { return support_ok && rank == size; }
};

template <class K>
class KoornwinderFamily {
 public:
  using Poly = Laurent<K>;

  KoornwinderFamily(int n, Coefficients<K> ctx);

  int rank() const { return pi_.rank(); }
  const Noumi<K>& noumi() const { return pi_; }
  const Coefficients<K>& context() const { return pi_.context(); }

  /// E_alpha, memoized. Throws NonGenericParameters if the x^alpha coefficient vanishes.
  LabeledPolynomial<K> E(const ExponentVector& alpha) const;
  /// S_{i_m} ... S_{i_1} 1 for a chain (i_1, ..., i_m), unnormalized and uncached.
  Poly along_chain(const GeneratorWord& chain) const;
  /// Divides by the coefficient of x^label.
  Poly normalized(const Poly& f, const ExponentVector& label) const;

  /// P_lambda = C(E_lambda) normalized at x^lambda; memoized.
  LabeledPolynomial<K> P(const ExponentVector& lambda) const;

  /// Y_i E = spec_i E for every i.
  bool eigen_check(const LabeledPolynomial<K>& e) const;
  /// W0-invariant, x^lambda coefficient 1, and D P = d_lambda P.
  bool check_P(const LabeledPolynomial<K>& p) const;

  /// Rank of the coefficient matrix of {E_alpha : |alpha| <= k} against monomials.
  BasisReport basis_check(int k) const;

 private:
  Noumi<K> pi_;
  mutable std::shared_mutex mutex_;
  mutable std::map<ExponentVector, Poly> raw_;  // unnormalized chain products
  mutable std::map<ExponentVector, LabeledPolynomial<K>> e_cache_;
  mutable std::map<ExponentVector, LabeledPolynomial<K>> p_cache_;
};

extern template class KoornwinderFamily<FieldElement>;
extern template class KoornwinderFamily<Rational>;

/// Monomial symmetric function: sum of x^beta over the W0-orbit of lambda.
template <class K>
Laurent<K> orbit_sum(int n, const ExponentVector& lambda) {
  std::map<ExponentVector, bool> seen;
  Laurent<K> f(n);
  for (const auto& [w, word] : enumerate_W0(n)) {
    ExponentVector e = w.act(lambda);
    if (seen.emplace(e, true).second) f.add_term(e, K(1));
  }
  return f;
}

/// Partitions of rank n with |lambda| <= k.
std::vector<ExponentVector> partitions_up_to(int n, int k);

}  // namespace kw

#endif
