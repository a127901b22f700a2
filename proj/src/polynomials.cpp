#include "koornwinder/polynomials.hpp"

#include <mutex>

#include "koornwinder/errors.hpp"
#include "koornwinder/linear_algebra.hpp"

namespace kw {

template <class K>
KoornwinderFamily<K>::KoornwinderFamily(int n, Coefficients<K> ctx) : pi_(n, std::move(ctx)) {}

template <class K>
Laurent<K> KoornwinderFamily<K>::along_chain(const GeneratorWord& chain) const {
  Poly f = pi_.one();
  for (int i : chain) f = pi_.S(i, f);
  return f;
}

template <class K>
Laurent<K> KoornwinderFamily<K>::normalized(const Poly& f, const ExponentVector& label) const {
  K lead = f.coefficient_of(label);
  if (lead.is_zero())
    throw NonGenericParameters("coefficient of x^" + label.to_string() +
                               " vanishes; non-generic parameters");
  return f * (K(1) / lead);
}

template <class K>
LabeledPolynomial<K> KoornwinderFamily<K>::E(const ExponentVector& alpha) const {
  if (alpha.size() != rank()) throw std::invalid_argument("E: label has wrong rank");
  {
    std::shared_lock lock(mutex_);
    if (auto it = e_cache_.find(alpha); it != e_cache_.end()) return it->second;
  }
  // Resume from the longest cached prefix of the chain; any nonzero element of the
  // one-dimensional eigenspace at that point is a valid start.
  const GeneratorWord chain = chain_to(alpha);
  std::vector<ExponentVector> stops{ExponentVector(rank())};
  for (int i : chain) stops.push_back(affine_action(i, stops.back()));
  std::size_t start = 0;
  Poly f = pi_.one();
  {
    std::shared_lock lock(mutex_);
    for (std::size_t k = chain.size(); k > 0; --k) {
      if (auto it = raw_.find(stops[k]); it != raw_.end()) {
        start = k;
        f = it->second;
        break;
      }
    }
  }
  std::vector<std::pair<ExponentVector, Poly>> fresh;
  for (std::size_t k = start; k < chain.size(); ++k) {
    f = pi_.S(chain[k], f);
    fresh.emplace_back(stops[k + 1], f);
  }
  LabeledPolynomial<K> result{alpha, normalized(f, alpha), spectral_vector(context(), alpha)};
  std::unique_lock lock(mutex_);
  for (auto& [label, poly] : fresh) raw_.try_emplace(label, std::move(poly));
  e_cache_.try_emplace(alpha, result);
  return result;
}

template <class K>
LabeledPolynomial<K> KoornwinderFamily<K>::P(const ExponentVector& lambda) const {
  if (!is_partition(lambda)) throw std::invalid_argument("P: label must be a partition");
  {
    std::shared_lock lock(mutex_);
    if (auto it = p_cache_.find(lambda); it != p_cache_.end()) return it->second;
  }
  Poly projected = pi_.C(E(lambda).poly);
  if (projected.coefficient_of(lambda).is_zero())
    throw NonGenericParameters("symmetrizer annihilates E_" + lambda.to_string());
  LabeledPolynomial<K> result{lambda, normalized(projected, lambda),
                              point_from(context(), shifted_rho_monomials(lambda))};
  std::unique_lock lock(mutex_);
  p_cache_.try_emplace(lambda, result);
  return result;
}

template <class K>
bool KoornwinderFamily<K>::eigen_check(const LabeledPolynomial<K>& e) const {
  for (int i = 1; i <= rank(); ++i)
    if (!(pi_.Y(i, 1, e.poly) == e.poly * e.spectrum[i - 1])) return false;
  return true;
}

template <class K>
bool KoornwinderFamily<K>::check_P(const LabeledPolynomial<K>& p) const {
  if (!pi_.is_W0_invariant(p.poly)) return false;
  if (!p.poly.coefficient_of(p.label).is_one()) return false;
  return pi_.D(p.poly) == p.poly * pi_.d_lambda(p.label);
}

template <class K>
BasisReport KoornwinderFamily<K>::basis_check(int k) const {
  const auto basis = monomials_up_to(rank(), k);
  std::map<ExponentVector, std::size_t> column;
  for (std::size_t j = 0; j < basis.size(); ++j) column.emplace(basis[j], j);
  BasisReport report;
  report.degree = k;
  report.size = basis.size();
  Matrix<K> m;
  for (const auto& alpha : basis) {
    auto e = E(alpha);
    std::vector<K> row(basis.size(), K(0));
    for (const auto& [beta, c] : e.poly.terms()) {
      auto it = column.find(beta);
      if (it == column.end() || beta.norm1() > alpha.norm1()) {
        report.support_ok = false;
        continue;
      }
      row[it->second] = c;
    }
    m.push_back(std::move(row));
  }
  report.rank = kw::rank(std::move(m));
  return report;
}

std::vector<ExponentVector> partitions_up_to(int n, int k) {
  std::vector<ExponentVector> out;
  for (const auto& e : monomials_up_to(n, k))
    if (is_partition(e)) out.push_back(e);
  return out;
}

template class KoornwinderFamily<FieldElement>;
template class KoornwinderFamily<Rational>;

}  // namespace kw
