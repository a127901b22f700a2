#include "koornwinder/laurent.hpp"

namespace kw {

namespace {

void fill(int n, int pos, int budget, ExponentVector& cur, std::vector<ExponentVector>& out) {
  if (pos == n) {
    out.push_back(cur);
    return;
  }
  for (int x = -budget; x <= budget; ++x) {
    cur[pos] = x;
    fill(n, pos + 1, budget - std::abs(x), cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<ExponentVector> monomials_up_to(int n, int k) {
  std::vector<ExponentVector> out;
  ExponentVector cur(n);
  fill(n, 0, k, cur, out);
  return out;
}

}  // namespace kw
