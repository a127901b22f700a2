#include "koornwinder/noumi.hpp"

#include <sstream>
#include <stdexcept>

namespace kw {

std::string to_string(const OperatorAtom& a) {
  switch (a.tag) {
    case OpTag::T: return "T" + std::to_string(a.index);
    case OpTag::Tinv: return "T" + std::to_string(a.index) + "^-1";
    case OpTag::X: return "X" + std::to_string(a.index);
    case OpTag::Xinv: return "X" + std::to_string(a.index) + "^-1";
    case OpTag::Y: return "Y" + std::to_string(a.index);
    case OpTag::Yinv: return "Y" + std::to_string(a.index) + "^-1";
    case OpTag::U0: return "U0";
    case OpTag::U0inv: return "U0^-1";
    case OpTag::Un: return "Un";
    case OpTag::Uninv: return "Un^-1";
    case OpTag::S: return "S" + std::to_string(a.index);
  }
  return "?";
}

std::string to_string(const OperatorWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) out += (k ? " " : "") + to_string(w[k]);
  return out;
}

namespace {

OperatorAtom inverted(const OperatorAtom& a) {
  switch (a.tag) {
    case OpTag::T: return {OpTag::Tinv, a.index};
    case OpTag::Tinv: return {OpTag::T, a.index};
    case OpTag::X: return {OpTag::Xinv, a.index};
    case OpTag::Xinv: return {OpTag::X, a.index};
    case OpTag::Y: return {OpTag::Yinv, a.index};
    case OpTag::Yinv: return {OpTag::Y, a.index};
    case OpTag::U0: return {OpTag::U0inv, a.index};
    case OpTag::U0inv: return {OpTag::U0, a.index};
    case OpTag::Un: return {OpTag::Uninv, a.index};
    case OpTag::Uninv: return {OpTag::Un, a.index};
    case OpTag::S: break;
  }
  throw std::invalid_argument("S_i has no inverse atom");
}

}  // namespace

OperatorWord inverse_word(const OperatorWord& w) {
  OperatorWord r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(inverted(*it));
  return r;
}

OperatorWord y_word(int i, int n) {
  OperatorWord w;
  for (int j = i; j <= n - 1; ++j) w.push_back({OpTag::T, j});
  for (int j = n; j >= 0; --j) w.push_back({OpTag::T, j});
  for (int j = 1; j <= i - 1; ++j) w.push_back({OpTag::Tinv, j});
  return w;
}

template <class K>
Laurent<K> Noumi<K>::linear(std::initializer_list<std::pair<ExponentVector, K>> terms) const {
  Poly p(n_);
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

template <class K>
Noumi<K>::Noumi(int n, Coefficients<K> ctx) : n_(n), ctx_(std::move(ctx)) {
  if (n < 1 || n > kMaxRank) throw std::invalid_argument("Noumi: rank out of range");
  q_half_ = ctx_.value(constants::sqrt_of(Param::q));
  q_half_inv_ = K(1) / q_half_;
  const ExponentVector zero(n);
  const K one(1);
  const K q = q_power(ctx_, 1);
  for (int i = 0; i <= n; ++i) {
    HeckePiece piece{Poly(n), Poly(n), ctx_.value(constants::t_half(i, n)), K(1)};
    piece.half_inv = one / piece.half;
    if (i == 0) {
      // (1 - c/x1)(1 - d/x1) / (1 - q/x1^2), times x1^2 above and below.
      const ExponentVector x1 = ExponentVector::unit(n, 0);
      const K c = ctx_.value(constants::c());
      const K d = ctx_.value(constants::d());
      piece.num = linear({{x1, one}, {zero, -c}}) * linear({{x1, one}, {zero, -d}});
      piece.den = linear({{x1 + x1, one}, {zero, -q}});
    } else if (i == n) {
      // (1 - a xn)(1 - b xn) / (1 - xn^2)
      const ExponentVector xn = ExponentVector::unit(n, n - 1);
      const K a = ctx_.value(constants::a());
      const K b = ctx_.value(constants::b());
      piece.num = linear({{zero, one}, {xn, -a}}) * linear({{zero, one}, {xn, -b}});
      piece.den = linear({{zero, one}, {xn + xn, -one}});
    } else {
      // (1 - t x_i/x_{i+1}) / (1 - x_i/x_{i+1}), times x_{i+1}.
      const ExponentVector xi = ExponentVector::unit(n, i - 1);
      const ExponentVector xj = ExponentVector::unit(n, i);
      const K t = ctx_.value(constants::power_of(Param::t, 1));
      piece.num = linear({{xj, one}, {xi, -t}});
      piece.den = linear({{xj, one}, {xi, -one}});
    }
    hecke_.push_back(std::move(piece));
  }
}

template <class K>
K Noumi<K>::t_half(int i) const {
  return hecke_.at(i).half;
}

template <class K>
Laurent<K> Noumi<K>::T(int i, int sign, const Poly& f) const {
  if (i < 0 || i > n_) throw std::invalid_argument("T: index out of range");
  const HeckePiece& h = hecke_[i];
  Poly result = f * (sign > 0 ? h.half : h.half_inv);
  Poly diff = apply_simple_reflection(i, f, ctx_) - f;
  if (diff.is_zero()) return result;
  // den divides s_i f - f for every f, so divide before multiplying by num.
  Poly g = h.num * exact_divide(diff, h.den);
  result += g * h.half_inv;
  return result;
}

template <class K>
Laurent<K> Noumi<K>::X(int i, int sign, const Poly& f) const {
  if (i < 1 || i > n_) throw std::invalid_argument("X: index out of range");
  ExponentVector e = ExponentVector::unit(n_, i - 1);
  return f.shifted(sign > 0 ? e : -e);
}

template <class K>
Laurent<K> Noumi<K>::Y(int i, int sign, const Poly& f) const {
  if (i < 1 || i > n_) throw std::invalid_argument("Y: index out of range");
  OperatorWord w = y_word(i, n_);
  return apply(sign > 0 ? w : inverse_word(w), f);
}

template <class K>
Laurent<K> Noumi<K>::Y_power(int i, int power, const Poly& f) const {
  Poly g = f;
  for (int k = 0; k < std::abs(power); ++k) g = Y(i, power > 0 ? 1 : -1, g);
  return g;
}

template <class K>
Laurent<K> Noumi<K>::U0(int sign, const Poly& f) const {
  if (sign > 0) return T(0, -1, X(1, 1, f)) * q_half_inv_;
  return X(1, -1, T(0, 1, f)) * q_half_;
}

template <class K>
Laurent<K> Noumi<K>::Un(int sign, const Poly& f) const {
  if (sign > 0) return X(1, -1, T(0, 1, Y(1, -1, f)));
  return Y(1, 1, T(0, -1, X(1, 1, f)));
}

template <class K>
Laurent<K> Noumi<K>::S(int i, const Poly& f) const {
  if (i < 0 || i > n_) throw std::invalid_argument("S: index out of range");
  if (i == 0) return Y(1, 1, Un(1, f)) - Un(1, Y(1, 1, f));
  return T(i, 1, Y(i, 1, f)) - Y(i, 1, T(i, 1, f));
}

template <class K>
Laurent<K> Noumi<K>::apply(const OperatorAtom& a, const Poly& f) const {
  switch (a.tag) {
    case OpTag::T: return T(a.index, 1, f);
    case OpTag::Tinv: return T(a.index, -1, f);
    case OpTag::X: return X(a.index, 1, f);
    case OpTag::Xinv: return X(a.index, -1, f);
    case OpTag::Y: return Y(a.index, 1, f);
    case OpTag::Yinv: return Y(a.index, -1, f);
    case OpTag::U0: return U0(1, f);
    case OpTag::U0inv: return U0(-1, f);
    case OpTag::Un: return Un(1, f);
    case OpTag::Uninv: return Un(-1, f);
    case OpTag::S: return S(a.index, f);
  }
  throw std::logic_error("unknown operator tag");
}

template <class K>
Laurent<K> Noumi<K>::apply(const OperatorWord& w, const Poly& f) const {
  Poly g = f;
  for (auto it = w.rbegin(); it != w.rend(); ++it) g = apply(*it, g);
  return g;
}

template <class K>
Laurent<K> Noumi<K>::Tw(const GeneratorWord& word, const Poly& f) const {
  Poly g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 1 || *it > n_) throw std::invalid_argument("Tw: word must use generators 1..n");
    g = T(*it, 1, g);
  }
  return g;
}

template <class K>
K Noumi<K>::chi(const GeneratorWord& word) const {
  K x(1);
  for (int i : word) x *= t_half(i);
  return x;
}

template <class K>
const std::vector<std::pair<SignedPermutation, GeneratorWord>>& Noumi<K>::W0() const {
  std::call_once(w0_once_, [this] { w0_ = enumerate_W0(n_); });
  return w0_;
}

template <class K>
Laurent<K> Noumi<K>::C(const Poly& f) const {
  Poly sum(n_);
  K norm(0);
  for (const auto& [w, word] : W0()) {
    K weight = chi(word);
    norm += weight * weight;
    sum += Tw(word, f) * weight;
  }
  return sum * (K(1) / norm);
}

template <class K>
bool Noumi<K>::is_W0_invariant(const Poly& f) const {
  for (int i = 1; i <= n_; ++i)
    if (!(apply_simple_reflection(i, f, ctx_) == f)) return false;
  return true;
}

template <class K>
void Noumi<K>::build_D() const {
  const int n = n_;
  const K one(1);
  const K q = q_power(ctx_, 1);
  const K t = ctx_.value(constants::power_of(Param::t, 1));
  const K a = ctx_.value(constants::a());
  const K b = ctx_.value(constants::b());
  const K c = ctx_.value(constants::c());
  const K d = ctx_.value(constants::d());
  const ExponentVector zero(n);
  auto binom = [&](const ExponentVector& e, const K& coeff) {
    // 1 - coeff * x^e
    return linear({{zero, one}, {e, -coeff}});
  };
  auto unit = [&](int i) { return ExponentVector::unit(n, i); };

  // Numerator and denominator of Phi_i(x^{dir}).
  auto phi = [&](int i, int dir) {
    ExponentVector xi = unit(i);
    if (dir < 0) xi = -xi;
    Poly num = binom(xi, a) * binom(xi, b) * binom(xi, c) * binom(xi, d);
    Poly den = binom(xi + xi, one) * binom(xi + xi, q);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      ExponentVector xj = unit(j);
      if (dir < 0) xj = -xj;
      num = num * binom(xi - xj, t) * binom(xi + xj, t);
      den = den * binom(xi - xj, one) * binom(xi + xj, one);
    }
    return std::pair{num, den};
  };

  auto op = std::make_unique<DOperator>();
  Poly common = Poly::constant(n, one);
  for (int i = 0; i < n; ++i) {
    ExponentVector xi = unit(i);
    common = common * binom(xi + xi, one) * binom(xi + xi, q) * binom(-(xi + xi), q);
    for (int j = i + 1; j < n; ++j) {
      ExponentVector xj = unit(j);
      common = common * binom(xi - xj, one) * binom(xi + xj, one);
    }
  }
  for (int i = 0; i < n; ++i) {
    auto [nf, df] = phi(i, 1);
    auto [nb, db] = phi(i, -1);
    op->forward.push_back(nf * exact_divide(common, df));
    op->backward.push_back(nb * exact_divide(common, db));
  }
  op->common_den = std::move(common);
  d_op_ = std::move(op);
}

template <class K>
Laurent<K> Noumi<K>::D(const Poly& f) const {
  std::call_once(d_once_, [this] { build_D(); });
  Poly numer(n_);
  for (int i = 1; i <= n_; ++i) {
    Poly up = apply_translation(i, f, ctx_, 1) - f;
    Poly down = apply_translation(i, f, ctx_, -1) - f;
    if (!up.is_zero()) numer += d_op_->forward[i - 1] * up;
    if (!down.is_zero()) numer += d_op_->backward[i - 1] * down;
  }
  try {
    return exact_divide(numer, d_op_->common_den);
  } catch (const NotDivisible&) {
    throw NotDivisible("D: input not in the D-stable subspace");
  }
}

template <class K>
K Noumi<K>::d_lambda(const ExponentVector& lambda) const {
  const K q_inv_abcd = ctx_.value(constants::power_of(Param::q, -1) * constants::a() *
                                  constants::b() * constants::c() * constants::d());
  K sum(0);
  for (int i = 1; i <= n_; ++i) {
    const int li = lambda[i - 1];
    sum += q_inv_abcd * ctx_.value(constants::power_of(Param::t, 2 * n_ - i - 1)) *
           (q_power(ctx_, li) - K(1));
    sum += ctx_.value(constants::power_of(Param::t, i - 1)) * (q_power(ctx_, -li) - K(1));
  }
  return sum;
}

template class Noumi<FieldElement>;
template class Noumi<Rational>;

}  // namespace kw
