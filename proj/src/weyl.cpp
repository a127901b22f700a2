#include "koornwinder/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "koornwinder/errors.hpp"

namespace kw {

SignedPermutation SignedPermutation::identity(int n) {
  SignedPermutation w;
  w.signs.assign(n, 1);
  w.perm.resize(n);
  std::iota(w.perm.begin(), w.perm.end(), 1);
  return w;
}

SignedPermutation SignedPermutation::simple(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("W0 generator index out of range");
  SignedPermutation w = identity(n);
  if (i == n)
    w.signs[n - 1] = -1;
  else
    std::swap(w.perm[i - 1], w.perm[i]);
  return w;
}

ExponentVector SignedPermutation::act(const ExponentVector& v) const {
  const int n = rank();
  ExponentVector r(n);
  for (int j = 0; j < n; ++j) {
    int target = perm[j] - 1;
    r[target] = signs[target] * v[j];
  }
  return r;
}

SignedPermutation SignedPermutation::inverse() const {
  const int n = rank();
  SignedPermutation w;
  w.signs.resize(n);
  w.perm.resize(n);
  for (int j = 0; j < n; ++j) {
    w.perm[perm[j] - 1] = j + 1;
    w.signs[j] = signs[perm[j] - 1];
  }
  return w;
}

SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) {
  const int n = a.rank();
  SignedPermutation inv_a = a.inverse();
  SignedPermutation w;
  w.signs.resize(n);
  w.perm.resize(n);
  for (int j = 0; j < n; ++j) w.perm[j] = a.perm[b.perm[j] - 1];
  for (int i = 0; i < n; ++i) w.signs[i] = a.signs[i] * b.signs[inv_a.perm[i] - 1];
  return w;
}

std::string SignedPermutation::to_string() const {
  std::ostringstream os;
  os << "sigma=(";
  for (std::size_t i = 0; i < signs.size(); ++i) os << (i ? "," : "") << signs[i];
  os << ") pi=(";
  for (std::size_t i = 0; i < perm.size(); ++i) os << (i ? "," : "") << perm[i];
  os << ')';
  return os.str();
}

ExponentVector affine_action(int i, const ExponentVector& v) {
  const int n = v.size();
  if (i < 0 || i > n) throw std::invalid_argument("affine_action: generator out of range");
  ExponentVector r = v;
  if (i == 0)
    r[0] = -v[0] - 1;
  else if (i == n)
    r[n - 1] = -v[n - 1];
  else
    std::swap(r[i - 1], r[i]);
  return r;
}

ExponentVector replay(const GeneratorWord& word, const ExponentVector& start) {
  ExponentVector v = start;
  for (int i : word) v = affine_action(i, v);
  return v;
}

AffineExponent functional_action(int i, const AffineExponent& e) {
  const int n = e.v.size();
  if (i < 0 || i > n) throw std::invalid_argument("functional_action: generator out of range");
  AffineExponent r = e;
  if (i == 0) {
    r.v[0] = -e.v[0];
    r.k = e.k - e.v[0];
  } else if (i == n) {
    r.v[n - 1] = -e.v[n - 1];
  } else {
    std::swap(r.v[i - 1], r.v[i]);
  }
  return r;
}

bool is_partition(const ExponentVector& v) {
  for (int i = 0; i < v.size(); ++i) {
    if (v[i] < 0) return false;
    if (i > 0 && v[i] > v[i - 1]) return false;
  }
  return true;
}

SignedPermutation w_alpha(const ExponentVector& alpha) {
  const int n = alpha.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    int ax = std::abs(alpha[x]);
    int ay = std::abs(alpha[y]);
    if (ax != ay) return ax > ay;
    bool nx = alpha[x] < 0;
    bool ny = alpha[y] < 0;
    if (nx != ny) return !nx;  // nonnegative entries first
    return nx ? x > y : x < y;
  });
  SignedPermutation w;
  w.signs.resize(n);
  w.perm.resize(n);
  for (int i = 0; i < n; ++i) w.signs[i] = alpha[i] < 0 ? -1 : 1;
  for (int k = 0; k < n; ++k) w.perm[k] = order[k] + 1;
  return w;
}

namespace {

// (s t^{n-p})^{sign} with p 1-based.
HalfExponents rho_component(int n, int p, int sign) {
  HalfExponents h;
  h[Param::t0] = sign;
  h[Param::tn] = sign;
  h[Param::t] = 2 * sign * (n - p);
  return h;
}

}  // namespace

std::vector<HalfExponents> spectral_monomials(const ExponentVector& alpha) {
  const int n = alpha.size();
  SignedPermutation w = w_alpha(alpha);
  SignedPermutation inv = w.inverse();
  std::vector<HalfExponents> out(n);
  for (int i = 0; i < n; ++i) {
    int position = inv.perm[i];
    out[i] = rho_component(n, position, w.signs[i]) + HalfExponents::of(Param::q, 2 * alpha[i]);
  }
  return out;
}

std::vector<HalfExponents> shifted_rho_monomials(const ExponentVector& lambda) {
  const int n = lambda.size();
  std::vector<HalfExponents> out(n);
  for (int i = 0; i < n; ++i)
    out[i] = rho_component(n, i + 1, 1) + HalfExponents::of(Param::q, 2 * lambda[i]);
  return out;
}

std::vector<HalfExponents> rho_monomials(int n, int sign) {
  std::vector<HalfExponents> out(n);
  for (int i = 0; i < n; ++i) out[i] = rho_component(n, i + 1, sign);
  return out;
}

std::vector<HalfExponents> rho_star_monomials(int n, int sign) {
  std::vector<HalfExponents> out(n);
  for (int i = 0; i < n; ++i) out[i] = star(rho_component(n, i + 1, sign));
  return out;
}

GeneratorWord chain_to(const ExponentVector& alpha) {
  const int n = alpha.size();
  ExponentVector v = alpha;
  GeneratorWord reduction;
  auto step = [&](int i) {
    v = affine_action(i, v);
    reduction.push_back(i);
  };
  while (!v.is_zero()) {
    int neg = -1;
    for (int j = 0; j < n; ++j)
      if (v[j] < 0) {
        neg = j;
        break;
      }
    if (neg >= 0) {
      // generator s_j swaps slots j and j+1 (1-based)
      for (int j = neg; j >= 1; --j) step(j);
      step(0);
    } else {
      int pos = -1;
      for (int j = n - 1; j >= 0; --j)
        if (v[j] > 0) {
          pos = j;
          break;
        }
      for (int j = pos + 1; j <= n - 1; ++j) step(j);
      step(n);
    }
  }
  std::reverse(reduction.begin(), reduction.end());
  return reduction;
}

std::vector<std::pair<SignedPermutation, GeneratorWord>> enumerate_W0(int n) {
  if (n < 1 || n > kMaxW0Rank)
    throw RankTooLarge("enumerate_W0: rank " + std::to_string(n) + " outside 1.." +
                       std::to_string(kMaxW0Rank));
  std::vector<SignedPermutation> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(SignedPermutation::simple(n, i));
  std::vector<std::pair<SignedPermutation, GeneratorWord>> out;
  std::map<SignedPermutation, std::size_t> seen;
  std::deque<std::size_t> queue;
  out.emplace_back(SignedPermutation::identity(n), GeneratorWord{});
  seen.emplace(out.back().first, 0);
  queue.push_back(0);
  while (!queue.empty()) {
    std::size_t idx = queue.front();
    queue.pop_front();
    for (int i = 1; i <= n; ++i) {
      SignedPermutation next = out[idx].first * gens[i - 1];
      if (seen.count(next)) continue;
      GeneratorWord word = out[idx].second;
      word.push_back(i);
      seen.emplace(next, out.size());
      out.emplace_back(std::move(next), std::move(word));
      queue.push_back(out.size() - 1);
    }
  }
  return out;
}

GeneratorWord translation_word(int i, int n) {
  GeneratorWord w;
  for (int j = i; j <= n - 1; ++j) w.push_back(j);
  for (int j = n; j >= 0; --j) w.push_back(j);
  for (int j = 1; j <= i - 1; ++j) w.push_back(j);
  return w;
}

std::string word_to_string(const GeneratorWord& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < w.size(); ++k) os << (k ? "," : "") << w[k];
  os << ')';
  return os.str();
}

}  // namespace kw
