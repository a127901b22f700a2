// Intertwiners S_i and the scalars by which S_i^2 acts on Y-eigenspaces.

#ifndef KOORNWINDER_INTERTWINE_HPP
#define KOORNWINDER_INTERTWINE_HPP

#include <span>
#include <stdexcept>

#include "koornwinder/noumi.hpp"

namespace kw {

/// S_i = [T_i, Y_i] for i = 1..n and S_0 = [Y_1, U_n], computed as literal commutators.
template <class K>
Laurent<K> apply_S(const Noumi<K>& pi, int i, const Laurent<K>& f) {
  return pi.S(i, f);
}

/// Y^{v + k delta} = q^k Y_1^{v_1} ... Y_n^{v_n}.
template <class K>
Laurent<K> apply_Y_affine(const Noumi<K>& pi, const AffineExponent& e, const Laurent<K>& f) {
  Laurent<K> g = f;
  for (int i = 1; i <= pi.rank(); ++i) g = pi.Y_power(i, e.v[i - 1], g);
  if (e.k != 0) g *= q_power(pi.context(), e.k);
  return g;
}

/// The polynomial in Y defining S_i^2, evaluated at Y_j -> spec[j-1].
///   i = 0:    un q^{-1} (1 - c'/Y_1)(1 - d'/Y_1)(1 - q c' Y_1)(1 - q d' Y_1)
///   i = n:    tn (1 - a'Y_n)(1 - b'Y_n)(1 - a'/Y_n)(1 - b'/Y_n)
///   0<i<n:    t Y_i Y_{i+1} (1 - t^{-1} Y_i/Y_{i+1})(1 - t^{-1} Y_{i+1}/Y_i)
/// where a', b', c', d' are the epsilon images of a, b, c, d.
template <class K>
K S_squared_scalar(const Coefficients<K>& ctx, int i, std::span<const K> spec) {
  const int n = static_cast<int>(spec.size());
  if (i < 0 || i > n) throw std::invalid_argument("S_squared_scalar: index out of range");
  const K one(1);
  if (i == 0) {
    const K c1 = ctx.value(epsilon(constants::c()));
    const K d1 = ctx.value(epsilon(constants::d()));
    const K q = q_power(ctx, 1);
    const K y = spec[0];
    const K y_inv = one / y;
    return ctx.value(constants::power_of(Param::un, 1)) / q * (one - c1 * y_inv) *
           (one - d1 * y_inv) * (one - q * c1 * y) * (one - q * d1 * y);
  }
  if (i == n) {
    const K a1 = ctx.value(epsilon(constants::a()));
    const K b1 = ctx.value(epsilon(constants::b()));
    const K y = spec[n - 1];
    const K y_inv = one / y;
    return ctx.value(constants::power_of(Param::tn, 1)) * (one - a1 * y) * (one - b1 * y) *
           (one - a1 * y_inv) * (one - b1 * y_inv);
  }
  const K t = ctx.value(constants::power_of(Param::t, 1));
  const K t_inv = one / t;
  const K& yi = spec[i - 1];
  const K& yj = spec[i];
  return t * yi * yj * (one - t_inv * yi / yj) * (one - t_inv * yj / yi);
}

/// Applies both sides of Y^{v} S_i = S_i Y^{s_i(v)} to f.
template <class K>
bool check_intertwining(const Noumi<K>& pi, int i, const AffineExponent& v, const Laurent<K>& f) {
  Laurent<K> lhs = apply_Y_affine(pi, v, pi.S(i, f));
  Laurent<K> rhs = pi.S(i, apply_Y_affine(pi, functional_action(i, v), f));
  return lhs == rhs;
}

}  // namespace kw

#endif
