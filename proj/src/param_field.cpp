#include "koornwinder/param_field.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "koornwinder/errors.hpp"

namespace kw {

const char* param_name(Param p) {
  switch (p) {
    case Param::q: return "q";
    case Param::t: return "t";
    case Param::t0: return "t0";
    case Param::tn: return "tn";
    case Param::u0: return "u0";
    case Param::un: return "un";
  }
  return "?";
}

// q, t, tn, u0 -> inverses; t0 -> un^{-1}; un -> t0^{-1}.
HalfExponents epsilon(const HalfExponents& m) {
  HalfExponents r;
  r[Param::q] = -m[Param::q];
  r[Param::t] = -m[Param::t];
  r[Param::tn] = -m[Param::tn];
  r[Param::u0] = -m[Param::u0];
  r[Param::un] = -m[Param::t0];
  r[Param::t0] = -m[Param::un];
  return r;
}

HalfExponents dagger(const HalfExponents& m) { return -m; }

HalfExponents star(const HalfExponents& m) {
  HalfExponents r = m;
  std::swap(r[Param::t0], r[Param::un]);
  return r;
}

SignedMonomial epsilon(const SignedMonomial& m) { return {m.sign, epsilon(m.exponents)}; }
SignedMonomial star(const SignedMonomial& m) { return {m.sign, star(m.exponents)}; }

namespace constants {

SignedMonomial sqrt_of(Param p) { return {1, HalfExponents::of(p, 1)}; }
SignedMonomial power_of(Param p, int k) { return {1, HalfExponents::of(p, 2 * k)}; }

SignedMonomial a() { return sqrt_of(Param::tn) * sqrt_of(Param::un); }
SignedMonomial b() { return {-1, (sqrt_of(Param::tn) * sqrt_of(Param::un).inverse()).exponents}; }
SignedMonomial c() { return sqrt_of(Param::q) * sqrt_of(Param::t0) * sqrt_of(Param::u0); }
SignedMonomial d() {
  return {-1, (sqrt_of(Param::q) * sqrt_of(Param::t0) * sqrt_of(Param::u0).inverse()).exponents};
}
SignedMonomial s() { return sqrt_of(Param::t0) * sqrt_of(Param::tn); }

SignedMonomial t_half(int i, int n) {
  if (i == 0) return sqrt_of(Param::t0);
  if (i == n) return sqrt_of(Param::tn);
  return sqrt_of(Param::t);
}

}  // namespace constants

// ---------------------------------------------------------------------------
// ParamPolynomial

ParamPolynomial::ParamPolynomial(long c) {
  if (c != 0) terms_.emplace_back(HalfExponents{}, mpz_class(c));
}

ParamPolynomial::ParamPolynomial(const mpz_class& c) {
  if (sgn(c) != 0) terms_.emplace_back(HalfExponents{}, c);
}

ParamPolynomial ParamPolynomial::monomial(const HalfExponents& e, const mpz_class& c) {
  ParamPolynomial p;
  if (sgn(c) != 0) p.terms_.emplace_back(e, c);
  return p;
}

ParamPolynomial ParamPolynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.first < y.first; });
  ParamPolynomial p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
    } else {
      if (!p.terms_.empty() && sgn(p.terms_.back().second) == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && sgn(p.terms_.back().second) == 0) p.terms_.pop_back();
  return p;
}

bool ParamPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_zero());
}

bool ParamPolynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].first.is_zero() && terms_[0].second == 1;
}

mpz_class ParamPolynomial::content() const {
  mpz_class g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

HalfExponents ParamPolynomial::min_exponents() const {
  if (terms_.empty()) return {};
  HalfExponents m = terms_[0].first;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < kNumParams; ++i) m[i] = std::min(m[i], t.first[i]);
  return m;
}

HalfExponents ParamPolynomial::max_exponents() const {
  if (terms_.empty()) return {};
  HalfExponents m = terms_[0].first;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < kNumParams; ++i) m[i] = std::max(m[i], t.first[i]);
  return m;
}

mpz_class ParamPolynomial::max_norm() const {
  mpz_class m = 0;
  for (const auto& t : terms_) {
    mpz_class a = abs(t.second);
    if (a > m) m = a;
  }
  return m;
}

ParamPolynomial ParamPolynomial::shifted(const HalfExponents& by) const {
  ParamPolynomial p = *this;
  for (auto& t : p.terms_) t.first += by;
  return p;
}

ParamPolynomial ParamPolynomial::scaled(const mpz_class& c) const {
  if (sgn(c) == 0) return {};
  ParamPolynomial p = *this;
  for (auto& t : p.terms_) t.second *= c;
  return p;
}

ParamPolynomial ParamPolynomial::divided(const mpz_class& c) const {
  ParamPolynomial p = *this;
  for (auto& t : p.terms_) mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), c.get_mpz_t());
  return p;
}

ParamPolynomial ParamPolynomial::operator-() const {
  ParamPolynomial p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

namespace {

// out = x + sign * coeff * (y shifted by shift), both inputs sorted.
std::vector<ParamPolynomial::Term> merge_axpy(const std::vector<ParamPolynomial::Term>& x,
                                              const std::vector<ParamPolynomial::Term>& y,
                                              const mpz_class& coeff, const HalfExponents& shift) {
  std::vector<ParamPolynomial::Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size()) {
      out.push_back(x[i++]);
      continue;
    }
    HalfExponents ey = y[j].first + shift;
    if (i == x.size() || ey < x[i].first) {
      out.emplace_back(ey, y[j].second * coeff);
      ++j;
    } else if (x[i].first < ey) {
      out.push_back(x[i++]);
    } else {
      mpz_class c = x[i].second + y[j].second * coeff;
      if (sgn(c) != 0) out.emplace_back(ey, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

ParamPolynomial& ParamPolynomial::operator+=(const ParamPolynomial& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_axpy(terms_, o.terms_, mpz_class(1), HalfExponents{});
  return *this;
}

ParamPolynomial& ParamPolynomial::operator-=(const ParamPolynomial& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_axpy(terms_, o.terms_, mpz_class(-1), HalfExponents{});
  return *this;
}

ParamPolynomial operator*(const ParamPolynomial& a, const ParamPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) {
    ParamPolynomial p = b.shifted(a.terms_[0].first);
    for (auto& t : p.terms_) t.second *= a.terms_[0].second;
    return p;
  }
  if (b.size() == 1) return b * a;
  std::vector<ParamPolynomial::Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) prod.emplace_back(x.first + y.first, x.second * y.second);
  return ParamPolynomial::from_terms(std::move(prod));
}

namespace {

void append_power(std::ostringstream& os, const char* name, int doubled) {
  os << name;
  if (doubled == 2) return;
  if (doubled % 2 == 0)
    os << '^' << doubled / 2;
  else
    os << "^(" << doubled << "/2)";
}

std::string monomial_string(const HalfExponents& e) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < kNumParams; ++i) {
    if (e[i] == 0) continue;
    if (!first) os << '*';
    append_power(os, param_name(static_cast<Param>(i)), e[i]);
    first = false;
  }
  return os.str();
}

}  // namespace

std::string ParamPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    mpz_class mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (e.is_zero()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      os << monomial_string(e);
    }
  }
  return os.str();
}

namespace {

// Univariate image modulo a prime: all variables but one are replaced by fixed
// residues. b | a forces the image of b to divide the image of a whenever the
// leading coefficient of b survives, so a nonzero remainder refutes divisibility.
bool image_divides(const ParamPolynomial& a, const ParamPolynomial& b) {
  using u64 = std::uint64_t;
  constexpr u64 kPrime = 2305843009213693951ULL;  // 2^61 - 1
  const auto mul = [](u64 x, u64 y) {
    const unsigned __int128 p = static_cast<unsigned __int128>(x) * y;
    u64 r = static_cast<u64>(p & kPrime) + static_cast<u64>(p >> 61);
    return r >= kPrime ? r - kPrime : r;
  };
  const auto add = [](u64 x, u64 y) { u64 r = x + y; return r >= kPrime ? r - kPrime : r; };
  const HalfExponents bmax = b.max_exponents();
  std::size_t var = 0;
  for (std::size_t i = 1; i < kNumParams; ++i)
    if (bmax[i] > bmax[var]) var = i;
  if (bmax[var] == 0) return true;
  static constexpr std::array<u64, kNumParams> kPoints{1000003, 998244353, 1234567891, 987654323,
                                                       19260817, 1000000007};
  const auto image = [&](const ParamPolynomial& p) {
    std::vector<u64> out(static_cast<std::size_t>(p.max_exponents()[var]) + 1, 0);
    for (const auto& [e, c] : p.terms()) {
      u64 v = mpz_fdiv_ui(c.get_mpz_t(), kPrime);
      for (std::size_t i = 0; i < kNumParams; ++i) {
        if (i == var) continue;
        for (int k = 0; k < e[i]; ++k) v = mul(v, kPoints[i]);
      }
      auto& slot = out[static_cast<std::size_t>(e[var])];
      slot = add(slot, v);
    }
    return out;
  };
  std::vector<u64> fa = image(a);
  const std::vector<u64> fb = image(b);
  const u64 lead = fb.back();
  if (lead == 0) return true;
  // lead^{-1} by Fermat.
  u64 inv = 1;
  for (u64 base = lead, k = kPrime - 2; k; k >>= 1, base = mul(base, base))
    if (k & 1) inv = mul(inv, base);
  const std::size_t db = fb.size() - 1;
  for (std::size_t top = fa.size(); top-- > db;) {
    const u64 f = mul(fa[top], inv);
    if (f == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) fa[top - db + j] = add(fa[top - db + j], kPrime - mul(f, fb[j]));
  }
  for (std::size_t j = 0; j < db && j < fa.size(); ++j)
    if (fa[j] != 0) return false;
  return true;
}

}  // namespace

std::optional<ParamPolynomial> divide_exact(const ParamPolynomial& a, const ParamPolynomial& b) {
  if (b.is_zero()) throw DivisionByZero("divide_exact: zero divisor");
  if (a.is_zero()) return ParamPolynomial{};
  if (b.is_one()) return a;
  // Quotient exponents lie in [min a - min b, max a - max b]; trailing terms divide.
  const HalfExponents lo = a.min_exponents() - b.min_exponents();
  const HalfExponents hi = a.max_exponents() - b.max_exponents();
  for (std::size_t i = 0; i < kNumParams; ++i)
    if (lo[i] > hi[i] || lo[i] < 0) return std::nullopt;
  const HalfExponents tail = a.terms().front().first - b.terms().front().first;
  for (std::size_t i = 0; i < kNumParams; ++i)
    if (tail[i] < lo[i] || tail[i] > hi[i]) return std::nullopt;
  if (!mpz_divisible_p(a.terms().front().second.get_mpz_t(), b.terms().front().second.get_mpz_t()))
    return std::nullopt;
  if (!image_divides(a, b)) return std::nullopt;
  std::map<HalfExponents, mpz_class> rem;
  for (const auto& [e, c] : a.terms()) rem.emplace_hint(rem.end(), e, c);
  std::vector<ParamPolynomial::Term> quot;
  const auto& lb = b.leading();
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    HalfExponents diff = top->first - lb.first;
    for (std::size_t i = 0; i < kNumParams; ++i)
      if (diff[i] < lo[i] || diff[i] > hi[i]) return std::nullopt;
    if (!mpz_divisible_p(top->second.get_mpz_t(), lb.second.get_mpz_t())) return std::nullopt;
    mpz_class qc;
    mpz_divexact(qc.get_mpz_t(), top->second.get_mpz_t(), lb.second.get_mpz_t());
    rem.erase(top);
    for (std::size_t j = 0; j + 1 < b.size(); ++j) {
      const auto& [e, c] = b.terms()[j];
      auto [it, fresh] = rem.try_emplace(e + diff);
      it->second -= qc * c;
      if (sgn(it->second) == 0) rem.erase(it);
    }
    quot.emplace_back(diff, std::move(qc));
  }
  std::reverse(quot.begin(), quot.end());
  return ParamPolynomial::from_terms(std::move(quot));
}

// ---------------------------------------------------------------------------
// Heuristic gcd

namespace {

int top_variable(const ParamPolynomial& a, const ParamPolynomial& b) {
  HalfExponents ma = a.max_exponents();
  HalfExponents mb = b.max_exponents();
  for (int v = static_cast<int>(kNumParams) - 1; v >= 0; --v)
    if (ma[v] > 0 || mb[v] > 0) return v;
  return -1;
}

ParamPolynomial evaluate_variable(const ParamPolynomial& p, int var, const mpz_class& xi) {
  std::vector<ParamPolynomial::Term> out;
  out.reserve(p.size());
  std::vector<mpz_class> powers{1};
  for (const auto& [e, c] : p.terms()) {
    int k = e[var];
    while (static_cast<int>(powers.size()) <= k) powers.push_back(powers.back() * xi);
    HalfExponents f = e;
    f[var] = 0;
    out.emplace_back(f, c * powers[k]);
  }
  return ParamPolynomial::from_terms(std::move(out));
}

// Symmetric xi-adic expansion of every coefficient, digits become powers of var.
std::optional<ParamPolynomial> interpolate(const ParamPolynomial& gamma, int var,
                                           const mpz_class& xi, int max_degree) {
  std::vector<ParamPolynomial::Term> out;
  std::vector<ParamPolynomial::Term> h = gamma.terms();
  mpz_class half = xi / 2;
  for (int j = 0; !h.empty(); ++j) {
    if (j > max_degree) return std::nullopt;
    std::vector<ParamPolynomial::Term> next;
    for (auto& [e, c] : h) {
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      if (sgn(r) != 0) {
        HalfExponents f = e;
        f[var] = j;
        out.emplace_back(f, r);
      }
      mpz_class rest = c - r;
      if (sgn(rest) != 0) {
        mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), xi.get_mpz_t());
        next.emplace_back(e, std::move(rest));
      }
    }
    h = std::move(next);
  }
  return ParamPolynomial::from_terms(std::move(out));
}

ParamPolynomial primitive_part(const ParamPolynomial& p) {
  if (p.is_zero()) return p;
  ParamPolynomial r = p.divided(p.content());
  if (sgn(r.leading().second) < 0) r = -r;
  return r;
}

std::optional<ParamPolynomial> gcdheu(const ParamPolynomial& a, const ParamPolynomial& b) {
  if (a.is_zero()) return primitive_part(b).scaled(b.content());
  if (b.is_zero()) return primitive_part(a).scaled(a.content());
  mpz_class ca = a.content();
  mpz_class cb = b.content();
  mpz_class gc;
  mpz_gcd(gc.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (a.is_constant() || b.is_constant()) return ParamPolynomial(gc);
  int var = top_variable(a, b);
  if (var < 0) return ParamPolynomial(gc);
  ParamPolynomial pa = a.divided(ca);
  ParamPolynomial pb = b.divided(cb);
  int deg = std::max(pa.max_exponents()[var], pb.max_exponents()[var]);
  mpz_class xi = 2 * std::min(pa.max_norm(), pb.max_norm()) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * static_cast<std::size_t>(deg + 1) > 40000)
      return std::nullopt;
    auto gamma = gcdheu(evaluate_variable(pa, var, xi), evaluate_variable(pb, var, xi));
    if (gamma) {
      auto g = interpolate(*gamma, var, xi, deg);
      if (g && !g->is_zero()) {
        ParamPolynomial cand = primitive_part(*g);
        if (divide_exact(pa, cand) && divide_exact(pb, cand)) return cand.scaled(gc);
      }
    }
    xi = (xi * 73794) / 27011;
  }
  return std::nullopt;
}

}  // namespace

std::optional<ParamPolynomial> heuristic_gcd(const ParamPolynomial& a, const ParamPolynomial& b) {
  auto g = gcdheu(a, b);
  if (!g) return std::nullopt;
  return primitive_part(*g);
}

// ---------------------------------------------------------------------------
// Rational and Assignment

Rational Rational::parse(const std::string& s) {
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw std::invalid_argument("not a rational number: " + s);
  if (sgn(v.get_den()) == 0) throw DivisionByZero("rational with zero denominator: " + s);
  v.canonicalize();
  return Rational(v);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("Rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero("Rational inverse of zero");
  return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  mpz_class n;
  mpz_class d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(k));
  return Rational(mpq_class(n, d));
}

Assignment Assignment::primes() {
  return Assignment{{Rational(2), Rational(3), Rational(5), Rational(7), Rational(11), Rational(13)}};
}

Assignment Assignment::from_seed(std::uint64_t seed) {
  static constexpr std::array<long, 25> kPrimes{2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                                43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
  std::mt19937_64 rng(seed);
  std::vector<long> pool(kPrimes.begin(), kPrimes.end());
  std::shuffle(pool.begin(), pool.end(), rng);
  Assignment a;
  for (std::size_t i = 0; i < kNumParams; ++i) a.roots[i] = Rational(pool[i]);
  return a;
}

Assignment Assignment::starred() const {
  Assignment a = *this;
  std::swap(a.roots[static_cast<int>(Param::t0)], a.roots[static_cast<int>(Param::un)]);
  return a;
}

Rational Assignment::value(const HalfExponents& m) const {
  Rational r(1);
  for (std::size_t i = 0; i < kNumParams; ++i)
    if (m[i] != 0) r *= roots[i].pow(m[i]);
  return r;
}

Rational Assignment::value(const SignedMonomial& m) const {
  Rational r = value(m.exponents);
  return m.sign < 0 ? -r : r;
}

std::string Assignment::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < kNumParams; ++i) {
    if (i) os << ',';
    os << roots[i].to_string();
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// FieldElement

namespace {

std::atomic<std::size_t> g_gcd_threshold{24};

bool poly_less(const ParamPolynomial& a, const ParamPolynomial& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  if (x.size() != y.size()) return x.size() < y.size();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].first != y[i].first) return x[i].first < y[i].first;
    if (x[i].second != y[i].second) return x[i].second < y[i].second;
  }
  return false;
}

// p = c * x^m * f with f primitive, nonnegative exponents, no monomial factor and
// positive leading coefficient.
struct Split {
  mpz_class c;
  HalfExponents m;
  ParamPolynomial f;
};

Split split(const ParamPolynomial& p) {
  Split s;
  s.m = p.min_exponents();
  s.f = p.shifted(-s.m);
  s.c = s.f.content();
  if (sgn(s.f.leading().second) < 0) s.c = -s.c;
  s.f = s.f.divided(s.c);
  return s;
}

mpq_class mpq_pow(const mpq_class& x, int k) {
  if (k < 0) return mpq_pow(mpq_class(1) / x, -k);
  mpz_class n;
  mpz_class d;
  mpz_pow_ui(n.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(d.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(k));
  return mpq_class(n, d);
}

ParamPolynomial poly_pow(const ParamPolynomial& f, int k) {
  ParamPolynomial r(1);
  for (int j = 0; j < k; ++j) r = r * f;
  return r;
}

HalfExponents min_of(const HalfExponents& a, const HalfExponents& b) {
  HalfExponents m;
  for (std::size_t i = 0; i < kNumParams; ++i) m[i] = std::min(a[i], b[i]);
  return m;
}

}  // namespace

std::size_t FieldElement::gcd_threshold() { return g_gcd_threshold.load(); }
void FieldElement::set_gcd_threshold(std::size_t terms) { g_gcd_threshold.store(terms); }

FieldElement::FieldElement() : coeff_(0) {}
FieldElement::FieldElement(long v) : coeff_(v) {}
FieldElement::FieldElement(const mpz_class& v) : coeff_(v) {}

FieldElement FieldElement::monomial(const HalfExponents& e, long coeff) {
  FieldElement x(coeff);
  if (coeff != 0) x.mono_ = e;
  return x;
}

FieldElement FieldElement::monomial(const SignedMonomial& m) {
  return monomial(m.exponents, m.sign);
}

FieldElement FieldElement::sqrt_param(Param p) { return monomial(HalfExponents::of(p, 1)); }
FieldElement FieldElement::param(Param p) { return monomial(HalfExponents::of(p, 2)); }

FieldElement FieldElement::polynomial(const ParamPolynomial& num) {
  if (num.is_zero()) return FieldElement();
  FieldElement x(1);
  x.attach_numerator(num);
  return x;
}

FieldElement FieldElement::fraction(const ParamPolynomial& num, const ParamPolynomial& den) {
  if (den.is_zero()) throw DivisionByZero("FieldElement with zero denominator");
  if (num.is_zero()) return FieldElement();
  FieldElement x(1);
  x.absorb(den, -1);
  x.attach_numerator(num);
  return x;
}

void FieldElement::add_factor(const ParamPolynomial& f, int mult) {
  if (mult == 0) return;
  auto it = std::lower_bound(factors_.begin(), factors_.end(), f,
                             [](const Factor& a, const ParamPolynomial& b) { return poly_less(a.first, b); });
  if (it != factors_.end() && it->first == f) {
    it->second += mult;
    if (it->second == 0) factors_.erase(it);
  } else {
    factors_.insert(it, Factor{f, mult});
  }
}

void FieldElement::absorb(const ParamPolynomial& p, int mult) {
  if (p.is_zero()) {
    if (mult < 0) throw DivisionByZero("FieldElement inverse of zero");
    *this = FieldElement();
    return;
  }
  Split s = split(p);
  coeff_ *= mpq_pow(mpq_class(s.c), mult);
  mono_ += s.m * mult;
  if (!s.f.is_one()) add_factor(s.f, mult);
}

void FieldElement::attach_numerator(const ParamPolynomial& p) {
  if (p.is_zero()) {
    *this = FieldElement();
    return;
  }
  Split s = split(p);
  coeff_ *= s.c;
  mono_ += s.m;
  ParamPolynomial f = std::move(s.f);
  for (std::size_t j = 0; j < factors_.size() && !f.is_one(); ++j) {
    auto& [g, k] = factors_[j];
    while (k < 0) {
      auto quot = divide_exact(f, g);
      if (!quot) break;
      f = std::move(*quot);
      ++k;
    }
  }
  // Small pairs: cancel a shared factor that is not a whole stored factor.
  const std::size_t threshold = gcd_threshold();
  std::vector<Factor> extra;
  for (auto& [g, k] : factors_) {
    if (k >= 0 || f.is_one() || f.size() + g.size() > threshold) continue;
    auto h = heuristic_gcd(f, g);
    if (!h || h->is_constant()) continue;
    f = *divide_exact(f, *h);
    g = *divide_exact(g, *h);
    extra.emplace_back(std::move(*h), k + 1);
  }
  std::vector<Factor> old;
  old.swap(factors_);
  for (auto& [g, k] : old)
    if (k != 0 && !g.is_one()) add_factor(g, k);
  for (auto& [h, k] : extra) add_factor(h, k);
  if (!f.is_one()) add_factor(f, 1);
}

ParamPolynomial FieldElement::num() const {
  if (is_zero()) return {};
  ParamPolynomial r = ParamPolynomial::monomial(mono_, coeff_.get_num());
  for (const auto& [g, k] : factors_)
    if (k > 0) r = r * poly_pow(g, k);
  return r;
}

ParamPolynomial FieldElement::den() const {
  ParamPolynomial r(is_zero() ? mpz_class(1) : mpz_class(coeff_.get_den()));
  for (const auto& [g, k] : factors_)
    if (k < 0) r = r * poly_pow(g, -k);
  return r;
}

bool FieldElement::is_polynomial() const {
  if (coeff_.get_den() != 1) return false;
  for (const auto& [g, k] : factors_)
    if (k < 0) return false;
  return true;
}

std::size_t FieldElement::size() const {
  std::size_t n = 1;
  for (const auto& [g, k] : factors_) n += g.size();
  return n;
}

FieldElement FieldElement::operator-() const {
  FieldElement x = *this;
  x.coeff_ = -x.coeff_;
  return x;
}

// a + sign*b = coeff * x^mono * (common factors) * sum, with sum a polynomial.
struct FieldCombination {
  mpq_class coeff;
  HalfExponents mono;
  std::vector<FieldElement::Factor> common;
  ParamPolynomial sum;

  FieldCombination(const FieldElement& a, const FieldElement& b, int sign) {
    mpz_class g;
    mpz_class l;
    mpz_gcd(g.get_mpz_t(), a.coeff_.get_num_mpz_t(), b.coeff_.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), a.coeff_.get_den_mpz_t(), b.coeff_.get_den_mpz_t());
    coeff = mpq_class(g, l);
    coeff.canonicalize();
    mono = min_of(a.mono_, b.mono_);
    mpq_class ca = a.coeff_ / coeff;
    mpq_class cb = b.coeff_ / coeff;
    if (sign < 0) cb = -cb;
    ParamPolynomial pa = ParamPolynomial::monomial(a.mono_ - mono, ca.get_num());
    ParamPolynomial pb = ParamPolynomial::monomial(b.mono_ - mono, cb.get_num());
    const auto& fa = a.factors_;
    const auto& fb = b.factors_;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < fa.size() || j < fb.size()) {
      int ka = 0;
      int kb = 0;
      const ParamPolynomial* f;
      if (j == fb.size() || (i < fa.size() && poly_less(fa[i].first, fb[j].first))) {
        f = &fa[i].first;
        ka = fa[i++].second;
      } else if (i == fa.size() || poly_less(fb[j].first, fa[i].first)) {
        f = &fb[j].first;
        kb = fb[j++].second;
      } else {
        f = &fa[i].first;
        ka = fa[i++].second;
        kb = fb[j++].second;
      }
      const int c = std::min(ka, kb);
      if (c != 0) common.emplace_back(*f, c);
      if (ka > c) pa = pa * poly_pow(*f, ka - c);
      if (kb > c) pb = pb * poly_pow(*f, kb - c);
    }
    sum = pa + pb;
  }
};

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  FieldCombination c(*this, o, 1);
  if (c.sum.is_zero()) return *this = FieldElement();
  coeff_ = c.coeff;
  mono_ = c.mono;
  factors_ = std::move(c.common);
  attach_numerator(c.sum);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) { return *this += -o; }

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  if (is_zero() || o.is_zero()) return *this = FieldElement();
  coeff_ *= o.coeff_;
  mono_ += o.mono_;
  for (const auto& [g, k] : o.factors_) add_factor(g, k);
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero("FieldElement inverse of zero");
  FieldElement x = *this;
  x.coeff_ = mpq_class(1) / coeff_;
  x.mono_ = -mono_;
  for (auto& f : x.factors_) f.second = -f.second;
  return x;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inverse(); }

FieldElement FieldElement::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  if (k == 0) return FieldElement(1);
  FieldElement x = *this;
  x.coeff_ = mpq_pow(coeff_, k);
  x.mono_ = mono_ * k;
  for (auto& f : x.factors_) f.second *= k;
  return x;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.coeff_ == b.coeff_ && a.mono_ == b.mono_ && a.factors_ == b.factors_) return true;
  return FieldCombination(a, b, -1).sum.is_zero();
}

FieldElement FieldElement::reduced() const {
  if (is_zero()) return *this;
  ParamPolynomial n = num();
  ParamPolynomial d = den();
  const HalfExponents shift = n.min_exponents();
  n = n.shifted(-shift);
  if (auto g = heuristic_gcd(n, d); g && !g->is_constant()) {
    n = *divide_exact(n, *g);
    d = *divide_exact(d, *g);
  }
  FieldElement x(1);
  x.mono_ = shift;
  x.absorb(d, -1);
  x.absorb(n, 1);
  return x;
}

std::string FieldElement::to_string() const {
  const ParamPolynomial n = num();
  const ParamPolynomial d = den();
  if (d.is_one()) return n.to_string();
  std::string ns = n.size() > 1 ? "(" + n.to_string() + ")" : n.to_string();
  std::string ds = d.size() > 1 ? "(" + d.to_string() + ")" : d.to_string();
  return ns + "/" + ds;
}

FieldElement epsilon(const FieldElement& x) {
  return x.map_exponents([](const HalfExponents& e) { return epsilon(e); });
}

FieldElement dagger(const FieldElement& x) {
  return x.map_exponents([](const HalfExponents& e) { return dagger(e); });
}

FieldElement star(const FieldElement& x) {
  return x.map_exponents([](const HalfExponents& e) { return star(e); });
}

namespace {

Rational evaluate(const ParamPolynomial& p, const Assignment& a) {
  Rational sum(0);
  for (const auto& [e, c] : p.terms()) sum += Rational(mpq_class(c)) * a.value(e);
  return sum;
}

}  // namespace

Rational specialize(const FieldElement& x, const Assignment& a) {
  for (const auto& r : a.roots)
    if (r.is_zero()) throw std::invalid_argument("specialize: assignment values must be nonzero");
  if (x.is_zero()) return Rational(0);
  Rational value = Rational(x.coefficient()) * a.value(x.monomial_part());
  for (const auto& [g, k] : x.factors()) {
    const Rational v = evaluate(g, a);
    if (v.is_zero()) {
      if (k < 0) throw UnluckySpecialization("specialize: denominator vanishes at " + a.to_string());
      return Rational(0);
    }
    value *= v.pow(k);
  }
  return value;
}

}  // namespace kw
