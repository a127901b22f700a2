// Duality: the involution * on polynomials, the points q^{rho*}, the pairings
// E_{alpha beta} and P_{lambda mu}, the functional S on PBW monomials, and the
// symmetry checks built from them.
//
// Every value has a "world". World 0 is the context the Duality was built
// with. World 1 holds the star images of world-0 values: symbolically it is
// reached by applying star, in specialized mode by recomputing under the
// assignment with the t0 and un values swapped.

#ifndef KOORNWINDER_DUALITY_HPP
#define KOORNWINDER_DUALITY_HPP

#include <memory>
#include <string>
#include <vector>

#include "koornwinder/polynomials.hpp"

namespace kw {

/// Star on coefficients, x_i -> x_i^{-1}.
Laurent<FieldElement> star_polynomial(const Laurent<FieldElement>& f);

/// x_i -> x_i^{-1} only.
template <class K>
Laurent<K> invert_variables(const Laurent<K>& f) {
  return f.map_terms([](const ExponentVector& e, const K& c) { return std::pair{-e, c}; });
}

/// q^{rho*} raised to sign, in the context.
template <class K>
std::vector<K> rho_star_point(const Coefficients<K>& ctx, int n, int sign) {
  return point_from(ctx, rho_star_monomials(n, sign));
}

/// q^{mu + rho*}.
std::vector<HalfExponents> shifted_rho_star_monomials(const ExponentVector& mu);

/// X^alpha T_w Y^beta.
struct PBWMonomial {
  ExponentVector alpha;
  GeneratorWord word;  // over 1..n
  ExponentVector beta;

  /// h* = X^{-beta} T_{reversed word} Y^{-alpha}.
  PBWMonomial starred() const;
  std::string to_string() const;
};

enum class FunctionalPath { ClosedForm, Operator };

struct DualityEntry {
  std::string kind;  // "E", "P", "ratio", "inversion"
  ExponentVector left;
  ExponentVector right;
  bool pass = true;
  std::string error;
};

struct DualityReport {
  int n = 0;
  int max_weight = 0;
  std::vector<DualityEntry> entries;
  bool ok() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }
};

template <class K>
class Duality {
 public:
  Duality(int n, Coefficients<K> ctx);

  int rank() const { return n_; }
  const KoornwinderFamily<K>& family(int world = 0) const;
  const Coefficients<K>& context(int world = 0) const { return family(world).context(); }

  /// E_alpha^* as a polynomial with world-`world` coefficients.
  Laurent<K> E_star(const ExponentVector& alpha, int world = 0) const;
  Laurent<K> P_star(const ExponentVector& lambda, int world = 0) const;

  /// E_alpha^*(q^{beta bar}) E_beta(q^{-rho*}).
  K pairing_E(const ExponentVector& alpha, const ExponentVector& beta, int world = 0) const;
  /// P_lambda^*(q^{mu + rho}) P_mu(q^{-rho*}).
  K pairing_P(const ExponentVector& lambda, const ExponentVector& mu, int world = 0) const;

  /// (E_{alpha beta})^* == E_{beta alpha}.
  bool check_E(const ExponentVector& alpha, const ExponentVector& beta) const;
  /// (P_{lambda mu})^* == P_{mu lambda}.
  bool check_P(const ExponentVector& lambda, const ExponentVector& mu) const;
  /// P_lambda(q^{mu+rho*}) P_mu^*(q^rho) == P_mu^*(q^{lambda+rho}) P_lambda(q^{rho*}),
  /// with both reference values nonzero.
  bool check_ratio(const ExponentVector& lambda, const ExponentVector& mu) const;
  /// P_lambda(q^{-rho*}) == P_lambda(q^{rho*}).
  bool check_inversion(const ExponentVector& lambda) const;

  /// S(h) = F_h(q^{-rho*}) with F_h = pi(h)(1).
  K functional_S(const PBWMonomial& h, FunctionalPath path, int world = 0) const;
  /// S(h*) == S(h)^* and the two paths agree on h and h*.
  bool check_functional(const PBWMonomial& h) const;

  /// All pairings with weights <= k: E over |alpha|, |beta| <= k, P, ratio and
  /// inversion over partitions |lambda|, |mu| <= k.
  DualityReport grid_serial(int k) const;
  /// Same report; pairs are spread over OpenMP threads after a parallel warm-up
  /// of the polynomial caches.
  DualityReport grid_parallel(int k) const;

 private:
  int n_;
  KoornwinderFamily<K> primary_;
  std::unique_ptr<KoornwinderFamily<K>> dual_;  // specialized mode only

  std::vector<DualityEntry> grid_tasks(int k) const;
  void run_task(DualityEntry& e) const;
};

extern template class Duality<FieldElement>;
extern template class Duality<Rational>;

}  // namespace kw

#endif
