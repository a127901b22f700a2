// Sparse Laurent polynomials in x_1, ..., x_n over a coefficient field K
// (FieldElement or Rational), with the affine Weyl group action on them.

#ifndef KOORNWINDER_LAURENT_HPP
#define KOORNWINDER_LAURENT_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstdlib>
#include <initializer_list>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "koornwinder/coefficients.hpp"
#include "koornwinder/errors.hpp"

namespace kw {

inline constexpr int kMaxRank = 8;

/// Exponent vector alpha in Z^n, n <= kMaxRank. Unused slots stay zero.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(int n) : n_(n) {
    if (n < 0 || n > kMaxRank) throw std::invalid_argument("rank out of range");
  }
  ExponentVector(std::initializer_list<int> xs) : ExponentVector(static_cast<int>(xs.size())) {
    std::copy(xs.begin(), xs.end(), v_.begin());
  }
  static ExponentVector from(std::span<const int> xs) {
    ExponentVector e(static_cast<int>(xs.size()));
    std::copy(xs.begin(), xs.end(), e.v_.begin());
    return e;
  }
  static ExponentVector unit(int n, int i) {
    ExponentVector e(n);
    e.v_[i] = 1;
    return e;
  }

  int size() const { return n_; }
  int operator[](int i) const { return v_[i]; }
  int& operator[](int i) { return v_[i]; }
  /// |alpha| = sum of |alpha_i|.
  int norm1() const {
    int s = 0;
    for (int i = 0; i < n_; ++i) s += std::abs(v_[i]);
    return s;
  }
  int total() const {
    int s = 0;
    for (int i = 0; i < n_; ++i) s += v_[i];
    return s;
  }
  bool is_zero() const {
    for (int i = 0; i < n_; ++i)
      if (v_[i] != 0) return false;
    return true;
  }
  std::vector<int> to_vector() const { return {v_.begin(), v_.begin() + n_}; }

  ExponentVector operator-() const {
    ExponentVector r(n_);
    for (int i = 0; i < n_; ++i) r.v_[i] = -v_[i];
    return r;
  }
  ExponentVector& operator+=(const ExponentVector& o) {
    for (int i = 0; i < n_; ++i) v_[i] += o.v_[i];
    return *this;
  }
  ExponentVector& operator-=(const ExponentVector& o) {
    for (int i = 0; i < n_; ++i) v_[i] -= o.v_[i];
    return *this;
  }
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
  friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) { return a -= b; }
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

  std::string to_string() const {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < n_; ++i) os << (i ? "," : "") << v_[i];
    os << ')';
    return os.str();
  }

 private:
  // n_ first so that vectors of different rank never compare equal.
  int n_ = 0;
  std::array<int, kMaxRank> v_{};
};

/// v + k*delta, an affine functional.
struct AffineExponent {
  ExponentVector v;
  int k = 0;

  friend AffineExponent operator+(const AffineExponent& a, const AffineExponent& b) {
    return {a.v + b.v, a.k + b.k};
  }
  friend bool operator==(const AffineExponent&, const AffineExponent&) = default;
};

/// Pairing <v + r delta, v'> = v.v' + r.
inline int pairing(const AffineExponent& a, const ExponentVector& w) {
  int s = a.k;
  for (int i = 0; i < a.v.size(); ++i) s += a.v[i] * w[i];
  return s;
}

/// All beta in Z^n with |beta| <= k, in lexicographic order.
std::vector<ExponentVector> monomials_up_to(int n, int k);

template <class K>
class Laurent {
 public:
  using Terms = std::map<ExponentVector, K>;

  explicit Laurent(int n = 1) : n_(n) {}
  static Laurent constant(int n, const K& c) { return monomial(ExponentVector(n), c); }
  static Laurent monomial(const ExponentVector& e, const K& c) {
    Laurent f(e.size());
    if (!c.is_zero()) f.terms_.emplace(e, c);
    return f;
  }

  int rank() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  K coefficient_of(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? K(0) : it->second;
  }

  void add_term(const ExponentVector& e, const K& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Largest |beta| in the support; -1 for zero.
  int max_norm1() const {
    int m = -1;
    for (const auto& [e, c] : terms_) m = std::max(m, e.norm1());
    return m;
  }

  ExponentVector min_exponents() const {
    ExponentVector m(n_);
    bool first = true;
    for (const auto& [e, c] : terms_) {
      for (int i = 0; i < n_; ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
      first = false;
    }
    return m;
  }

  /// Multiplication by x^v.
  Laurent shifted(const ExponentVector& v) const {
    Laurent r(n_);
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + v, c);
    return r;
  }

  Laurent operator-() const {
    Laurent r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Laurent& operator*=(const K& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(Laurent a, const K& s) { return a *= s; }
  friend Laurent operator*(const K& s, Laurent a) { return a *= s; }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r(a.n_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  friend bool operator==(const Laurent& a, const Laurent& b) {
    if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
    auto ib = b.terms_.begin();
    for (const auto& [e, c] : a.terms_) {
      if (e != ib->first || !(c == ib->second)) return false;
      ++ib;
    }
    return true;
  }

  /// Rebuilds from (exponent, coefficient) images of every term.
  template <class F>
  Laurent map_terms(F&& f) const {
    Laurent r(n_);
    for (const auto& [e, c] : terms_) {
      auto [e2, c2] = f(e, c);
      r.add_term(e2, c2);
    }
    return r;
  }

 private:
  int n_;
  Terms terms_;
};

/// x^{v + k delta} = q^{-k} x^v.
template <class K>
Laurent<K> exp_monomial(const AffineExponent& e, const Coefficients<K>& ctx) {
  return Laurent<K>::monomial(e.v, q_power(ctx, -e.k));
}

/// The algebra automorphism s_i of the Laurent ring:
/// s_0: x_1 -> q/x_1; s_i (0<i<n): x_i <-> x_{i+1}; s_n: x_n -> 1/x_n.
template <class K>
Laurent<K> apply_simple_reflection(int i, const Laurent<K>& f, const Coefficients<K>& ctx) {
  const int n = f.rank();
  if (i < 0 || i > n) throw std::invalid_argument("simple reflection index out of range");
  if (i == 0) {
    return f.map_terms([&](const ExponentVector& e, const K& c) {
      ExponentVector r = e;
      r[0] = -e[0];
      return std::pair{r, c * q_power(ctx, e[0])};
    });
  }
  return f.map_terms([&](const ExponentVector& e, const K& c) {
    ExponentVector r = e;
    if (i == n)
      r[n - 1] = -e[n - 1];
    else
      std::swap(r[i - 1], r[i]);
    return std::pair{r, c};
  });
}

/// tau_i^{power}: x_i -> q^{power} x_i (i is 1-based).
template <class K>
Laurent<K> apply_translation(int i, const Laurent<K>& f, const Coefficients<K>& ctx, int power = 1) {
  if (i < 1 || i > f.rank()) throw std::invalid_argument("translation index out of range");
  return f.map_terms([&](const ExponentVector& e, const K& c) {
    return std::pair{e, c * q_power(ctx, power * e[i - 1])};
  });
}

namespace detail {

struct GrlexGreater {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    int da = a.total();
    int db = b.total();
    if (da != db) return da > db;
    return a > b;
  }
};

}  // namespace detail

/// h with g*h = f. Throws NotDivisible on a nonzero remainder.
template <class K>
Laurent<K> exact_divide(const Laurent<K>& f, const Laurent<K>& g) {
  if (g.is_zero()) throw DivisionByZero("exact_divide: zero divisor");
  const int n = f.rank();
  if (f.is_zero()) return Laurent<K>(n);
  const ExponentVector mf = f.min_exponents();
  const ExponentVector mg = g.min_exponents();

  std::map<ExponentVector, K, detail::GrlexGreater> rem;
  for (const auto& [e, c] : f.terms()) rem.emplace(e - mf, c);
  std::vector<std::pair<ExponentVector, K>> divisor;
  divisor.reserve(g.size());
  for (const auto& [e, c] : g.terms()) divisor.emplace_back(e - mg, c);
  std::sort(divisor.begin(), divisor.end(), [](const auto& a, const auto& b) {
    return detail::GrlexGreater{}(a.first, b.first);
  });
  const ExponentVector lead = divisor.front().first;
  const K lead_inv = K(1) / divisor.front().second;

  Laurent<K> quotient(n);
  const ExponentVector back_shift = mf - mg;
  while (!rem.empty()) {
    auto top = rem.begin();
    ExponentVector diff = top->first - lead;
    for (int i = 0; i < n; ++i)
      if (diff[i] < 0) throw NotDivisible("exact_divide: nonzero remainder");
    K qc = top->second * lead_inv;
    rem.erase(top);
    for (std::size_t j = 1; j < divisor.size(); ++j) {
      ExponentVector e = divisor[j].first + diff;
      K term = qc * divisor[j].second;
      auto [it, inserted] = rem.try_emplace(e, -term);
      if (!inserted) {
        it->second -= term;
        if (it->second.is_zero()) rem.erase(it);
      }
    }
    quotient.add_term(diff + back_shift, qc);
  }
  return quotient;
}

/// Substitutes x_i -> point[i]. Every component must be nonzero.
template <class K>
K evaluate(const Laurent<K>& f, std::span<const K> point) {
  const int n = f.rank();
  if (static_cast<int>(point.size()) != n) throw std::invalid_argument("evaluate: wrong arity");
  for (const auto& p : point)
    if (p.is_zero()) throw DivisionByZero("evaluate: zero coordinate");
  if (f.is_zero()) return K(0);
  ExponentVector lo = f.min_exponents();
  ExponentVector hi = lo;
  for (const auto& [e, c] : f.terms())
    for (int i = 0; i < n; ++i) hi[i] = std::max(hi[i], e[i]);
  // powers[i][k - lo[i]] = point[i]^k
  std::vector<std::vector<K>> powers(n);
  for (int i = 0; i < n; ++i) {
    K inv = K(1) / point[i];
    K start(1);
    const K& step = lo[i] < 0 ? inv : point[i];
    for (int k = 0; k < std::abs(lo[i]); ++k) start *= step;
    powers[i].push_back(start);
    for (int k = lo[i] + 1; k <= hi[i]; ++k) powers[i].push_back(powers[i].back() * point[i]);
  }
  K sum(0);
  for (const auto& [e, c] : f.terms()) {
    K term = c;
    for (int i = 0; i < n; ++i)
      if (e[i] != 0) term *= powers[i][e[i] - lo[i]];
    sum += term;
  }
  return sum;
}

template <class K>
K evaluate(const Laurent<K>& f, const std::vector<K>& point) {
  return evaluate(f, std::span<const K>(point));
}

/// Human-readable rendering: "coeff*x1^e1*x2^e2 + ...".
template <class K>
std::string to_text(const Laurent<K>& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    if (!first) os << " + ";
    first = false;
    std::string cs = c.to_string();
    bool compound = cs.find_first_of("+-/ ", 1) != std::string::npos;
    bool unit = e.is_zero();
    if (unit) {
      os << (compound ? "(" + cs + ")" : cs);
      continue;
    }
    if (cs != "1") os << (compound ? "(" + cs + ")" : cs) << '*';
    bool first_var = true;
    for (int i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first_var) os << '*';
      first_var = false;
      os << 'x' << (i + 1);
      if (e[i] != 1) os << '^' << e[i];
    }
  }
  return os.str();
}

}  // namespace kw

#endif
