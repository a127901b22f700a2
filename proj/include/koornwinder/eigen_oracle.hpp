// Brute-force construction of E_alpha independent of the intertwiners: build
// the matrices of Y_1, ..., Y_n on the monomial basis of the degree-k
// filtration piece and intersect the kernels of (Y_i - spec_i).

#ifndef KOORNWINDER_EIGEN_ORACLE_HPP
#define KOORNWINDER_EIGEN_ORACLE_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "koornwinder/linear_algebra.hpp"
#include "koornwinder/noumi.hpp"

namespace kw {

template <class K>
class EigenOracle {
 public:
  /// Columns of the Y_i matrices on {x^beta : |beta| <= k}.
  EigenOracle(const Noumi<K>& pi, int k) : pi_(pi), basis_(monomials_up_to(pi.rank(), k)) {
    for (std::size_t j = 0; j < basis_.size(); ++j) index_.emplace(basis_[j], j);
    const std::size_t dim = basis_.size();
    for (int i = 1; i <= pi.rank(); ++i) {
      Matrix<K> m(dim, std::vector<K>(dim, K(0)));
      for (std::size_t j = 0; j < dim; ++j) {
        auto image = pi.Y(i, 1, pi.monomial(basis_[j]));
        for (const auto& [beta, c] : image.terms()) {
          auto it = index_.find(beta);
          if (it == index_.end())
            throw std::logic_error("Y does not preserve the degree filtration");
          m[it->second][j] = c;
        }
      }
      y_.push_back(std::move(m));
    }
  }

  std::size_t dimension() const { return basis_.size(); }

  /// Joint kernel of (Y_i - spec_i). Returns all basis vectors as polynomials.
  std::vector<Laurent<K>> joint_eigenspace(const std::vector<K>& spec) const {
    const std::size_t dim = basis_.size();
    Matrix<K> stacked;
    for (std::size_t i = 0; i < y_.size(); ++i) {
      for (std::size_t r = 0; r < dim; ++r) {
        std::vector<K> row = y_[i][r];
        row[r] -= spec[i];
        stacked.push_back(std::move(row));
      }
    }
    std::vector<Laurent<K>> out;
    for (const auto& v : nullspace(std::move(stacked), dim)) {
      Laurent<K> f(pi_.rank());
      for (std::size_t j = 0; j < dim; ++j) f.add_term(basis_[j], v[j]);
      out.push_back(std::move(f));
    }
    return out;
  }

  /// The normalized joint eigenvector for alpha, or nullopt if the eigenspace is
  /// not one-dimensional or its x^alpha coefficient vanishes.
  std::optional<Laurent<K>> eigenvector(const ExponentVector& alpha,
                                        const std::vector<K>& spec) const {
    auto space = joint_eigenspace(spec);
    if (space.size() != 1) return std::nullopt;
    K lead = space[0].coefficient_of(alpha);
    if (lead.is_zero()) return std::nullopt;
    return space[0] * (K(1) / lead);
  }

 private:
  const Noumi<K>& pi_;
  std::vector<ExponentVector> basis_;
  std::map<ExponentVector, std::size_t> index_;
  std::vector<Matrix<K>> y_;
};

}  // namespace kw

#endif
