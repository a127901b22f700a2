// Shared helpers for the unit tests and the acceptance suite.

#ifndef KOORNWINDER_TESTS_SUPPORT_HPP
#define KOORNWINDER_TESTS_SUPPORT_HPP

#include <random>

#include "koornwinder/duality.hpp"
#include "koornwinder/eigen_oracle.hpp"
#include "koornwinder/intertwine.hpp"
#include "koornwinder/polynomials.hpp"
#include "koornwinder/relations.hpp"

namespace kw::testing {

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline ExponentVector random_exponent(std::mt19937_64& rng, int n, int max_abs) {
  ExponentVector e(n);
  for (int i = 0; i < n; ++i) e[i] = uniform(rng, -max_abs, max_abs);
  return e;
}

/// Nonzero integer times a small monomial in q^{1/2} and t^{1/2}.
template <class K>
K random_scalar(std::mt19937_64& rng, const Coefficients<K>& ctx) {
  int c = 0;
  while (c == 0) c = uniform(rng, -5, 5);
  HalfExponents m;
  m[Param::q] = uniform(rng, -2, 2);
  m[Param::t] = uniform(rng, -2, 2);
  return ctx.integer(c) * ctx.value(m);
}

/// Up to `terms` terms with exponents in [-max_abs, max_abs]^n.
template <class K>
Laurent<K> random_laurent(std::mt19937_64& rng, int n, const Coefficients<K>& ctx, int terms = 4,
                          int max_abs = 2) {
  Laurent<K> f(n);
  for (int j = 0; j < terms; ++j) f.add_term(random_exponent(rng, n, max_abs), random_scalar(rng, ctx));
  if (f.is_zero()) f.add_term(ExponentVector(n), K(1));
  return f;
}

/// Random polynomial supported in {|beta| <= degree}.
template <class K>
Laurent<K> random_of_degree(std::mt19937_64& rng, int n, const Coefficients<K>& ctx, int degree,
                            int terms = 4) {
  const auto basis = monomials_up_to(n, degree);
  Laurent<K> f(n);
  for (int j = 0; j < terms; ++j)
    f.add_term(basis[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(basis.size()) - 1))],
               random_scalar(rng, ctx));
  if (f.is_zero()) f.add_term(ExponentVector(n), K(1));
  return f;
}

inline AffineExponent random_affine(std::mt19937_64& rng, int n, int max_norm, int max_k) {
  ExponentVector v(n);
  do {
    v = random_exponent(rng, n, max_norm);
  } while (v.norm1() > max_norm);
  return AffineExponent{v, uniform(rng, -max_k, max_k)};
}

inline PBWMonomial random_pbw(std::mt19937_64& rng, int n, int max_abs = 2, int max_length = 4) {
  PBWMonomial h{random_exponent(rng, n, max_abs), {}, random_exponent(rng, n, max_abs)};
  const int length = uniform(rng, 0, max_length);
  for (int j = 0; j < length; ++j) h.word.push_back(uniform(rng, 1, n));
  return h;
}

/// sum_i (z_i + z_i^{-1}).
template <class K>
K e_sum(const std::vector<K>& z) {
  K acc(0);
  for (const auto& x : z) acc += x + K(1) / x;
  return acc;
}

/// s t^{n-1}(sum_i Y_i + Y_i^{-1} - e(rho)) applied to f.
template <class K>
Laurent<K> y_combination(const Noumi<K>& pi, const Laurent<K>& f) {
  const int n = pi.rank();
  const auto& ctx = pi.context();
  Laurent<K> acc(n);
  for (int i = 1; i <= n; ++i) {
    acc += pi.Y(i, 1, f);
    acc += pi.Y(i, -1, f);
  }
  acc -= f * e_sum(point_from(ctx, rho_monomials(n, 1)));
  HalfExponents scale = constants::s().exponents;
  scale[Param::t] += 2 * (n - 1);
  return acc * ctx.value(scale);
}

}  // namespace kw::testing

#endif
