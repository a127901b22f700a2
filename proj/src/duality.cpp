#include "koornwinder/duality.hpp"

#include <algorithm>
#include <exception>

namespace kw {

Laurent<FieldElement> star_polynomial(const Laurent<FieldElement>& f) {
  return f.map_terms(
      [](const ExponentVector& e, const FieldElement& c) { return std::pair{-e, star(c)}; });
}

std::vector<HalfExponents> shifted_rho_star_monomials(const ExponentVector& mu) {
  auto out = shifted_rho_monomials(mu);
  for (auto& m : out) m = star(m);
  return out;
}

PBWMonomial PBWMonomial::starred() const {
  return PBWMonomial{-beta, GeneratorWord(word.rbegin(), word.rend()), -alpha};
}

std::string PBWMonomial::to_string() const {
  return "X^" + alpha.to_string() + " T[" + word_to_string(word) + "] Y^" + beta.to_string();
}

namespace {

/// The star image of a world-0 value, given the computation per world.
template <class K, class F>
K starred_value(F&& compute) {
  if constexpr (Coefficients<K>::kSymbolic) {
    return star(compute(0));
  } else {
    return compute(1);
  }
}

}  // namespace

template <class K>
Duality<K>::Duality(int n, Coefficients<K> ctx) : n_(n), primary_(n, ctx) {
  if constexpr (!Coefficients<K>::kSymbolic) {
    dual_ = std::make_unique<KoornwinderFamily<K>>(n, ctx.starred());
  }
}

template <class K>
const KoornwinderFamily<K>& Duality<K>::family(int world) const {
  return world == 1 && dual_ ? *dual_ : primary_;
}

template <class K>
Laurent<K> Duality<K>::E_star(const ExponentVector& alpha, int world) const {
  if constexpr (Coefficients<K>::kSymbolic) {
    return star_polynomial(primary_.E(alpha).poly);
  } else {
    return invert_variables(family(1 - world).E(alpha).poly);
  }
}

template <class K>
Laurent<K> Duality<K>::P_star(const ExponentVector& lambda, int world) const {
  if constexpr (Coefficients<K>::kSymbolic) {
    return star_polynomial(primary_.P(lambda).poly);
  } else {
    return invert_variables(family(1 - world).P(lambda).poly);
  }
}

template <class K>
K Duality<K>::pairing_E(const ExponentVector& alpha, const ExponentVector& beta, int world) const {
  const auto& ctx = context(world);
  return evaluate(E_star(alpha, world), spectral_vector(ctx, beta)) *
         evaluate(family(world).E(beta).poly, rho_star_point(ctx, n_, -1));
}

template <class K>
K Duality<K>::pairing_P(const ExponentVector& lambda, const ExponentVector& mu, int world) const {
  const auto& ctx = context(world);
  return evaluate(P_star(lambda, world), point_from(ctx, shifted_rho_monomials(mu))) *
         evaluate(family(world).P(mu).poly, rho_star_point(ctx, n_, -1));
}

template <class K>
bool Duality<K>::check_E(const ExponentVector& alpha, const ExponentVector& beta) const {
  K lhs = starred_value<K>([&](int w) { return pairing_E(alpha, beta, w); });
  return lhs == pairing_E(beta, alpha, 0);
}

template <class K>
bool Duality<K>::check_P(const ExponentVector& lambda, const ExponentVector& mu) const {
  K lhs = starred_value<K>([&](int w) { return pairing_P(lambda, mu, w); });
  return lhs == pairing_P(mu, lambda, 0);
}

template <class K>
bool Duality<K>::check_ratio(const ExponentVector& lambda, const ExponentVector& mu) const {
  const auto& ctx = context(0);
  const auto p_lambda = primary_.P(lambda).poly;
  const auto p_mu_star = P_star(mu, 0);
  const K a = evaluate(p_lambda, point_from(ctx, shifted_rho_star_monomials(mu)));
  const K a0 = evaluate(p_lambda, rho_star_point(ctx, n_, 1));
  const K b = evaluate(p_mu_star, point_from(ctx, shifted_rho_monomials(lambda)));
  const K b0 = evaluate(p_mu_star, point_from(ctx, rho_monomials(n_, 1)));
  if (a0.is_zero() || b0.is_zero()) return false;
  return a * b0 == b * a0;
}

template <class K>
bool Duality<K>::check_inversion(const ExponentVector& lambda) const {
  const auto& ctx = context(0);
  const auto p = primary_.P(lambda).poly;
  return evaluate(p, rho_star_point(ctx, n_, -1)) == evaluate(p, rho_star_point(ctx, n_, 1));
}

template <class K>
K Duality<K>::functional_S(const PBWMonomial& h, FunctionalPath path, int world) const {
  const auto& fam = family(world);
  const auto& ctx = fam.context();
  if (path == FunctionalPath::ClosedForm) {
    // q^{<beta, rho>} chi(T_w) q^{-<alpha, rho*>}
    HalfExponents e{};
    const auto rho = rho_monomials(n_, 1);
    const auto rho_star = rho_star_monomials(n_, 1);
    for (int i = 0; i < n_; ++i) {
      e += rho[i] * h.beta[i];
      e -= rho_star[i] * h.alpha[i];
    }
    return ctx.value(e) * fam.noumi().chi(h.word);
  }
  const auto& pi = fam.noumi();
  Laurent<K> f = pi.one();
  for (int i = 1; i <= n_; ++i)
    if (h.beta[i - 1] != 0) f = pi.Y_power(i, h.beta[i - 1], f);
  f = pi.Tw(h.word, f);
  f = f.shifted(h.alpha);
  return evaluate(f, rho_star_point(ctx, n_, -1));
}

template <class K>
bool Duality<K>::check_functional(const PBWMonomial& h) const {
  const PBWMonomial hs = h.starred();
  bool ok = true;
  for (auto path : {FunctionalPath::ClosedForm, FunctionalPath::Operator}) {
    const K s_h = functional_S(h, path, 0);
    const K s_hs = functional_S(hs, path, 0);
    const K s_h_star = starred_value<K>([&](int w) { return functional_S(h, path, w); });
    ok = ok && s_hs == s_h_star;
    if (path == FunctionalPath::Operator) {
      ok = ok && s_h == functional_S(h, FunctionalPath::ClosedForm, 0) &&
           s_hs == functional_S(hs, FunctionalPath::ClosedForm, 0);
    }
  }
  return ok;
}

template <class K>
std::vector<DualityEntry> Duality<K>::grid_tasks(int k) const {
  std::vector<DualityEntry> tasks;
  const auto labels = monomials_up_to(n_, k);
  const auto parts = partitions_up_to(n_, k);
  for (const auto& a : labels)
    for (const auto& b : labels) tasks.push_back({"E", a, b, true, {}});
  for (const auto& l : parts)
    for (const auto& m : parts) tasks.push_back({"P", l, m, true, {}});
  for (const auto& l : parts)
    for (const auto& m : parts) tasks.push_back({"ratio", l, m, true, {}});
  for (const auto& l : parts) tasks.push_back({"inversion", l, l, true, {}});
  return tasks;
}

template <class K>
void Duality<K>::run_task(DualityEntry& e) const {
  try {
    if (e.kind == "E") e.pass = check_E(e.left, e.right);
    else if (e.kind == "P") e.pass = check_P(e.left, e.right);
    else if (e.kind == "ratio") e.pass = check_ratio(e.left, e.right);
    else e.pass = check_inversion(e.left);
  } catch (const std::exception& ex) {
    e.pass = false;
    e.error = ex.what();
  }
}

template <class K>
DualityReport Duality<K>::grid_serial(int k) const {
  DualityReport report{n_, k, grid_tasks(k)};
  for (auto& e : report.entries) run_task(e);
  return report;
}

template <class K>
DualityReport Duality<K>::grid_parallel(int k) const {
  DualityReport report{n_, k, grid_tasks(k)};
  // Warm the caches so that pair tasks only evaluate.
  const auto labels = monomials_up_to(n_, k);
  const auto parts = partitions_up_to(n_, k);
  const int worlds = dual_ ? 2 : 1;
  const long warm = static_cast<long>((labels.size() + parts.size()) * worlds);
#pragma omp parallel for schedule(dynamic)
  for (long j = 0; j < warm; ++j) {
    const auto idx = static_cast<std::size_t>(j) / worlds;
    const int world = static_cast<int>(j % worlds);
    try {
      if (idx < labels.size()) family(world).E(labels[idx]);
      else family(world).P(parts[idx - labels.size()]);
    } catch (const std::exception&) {
      // reported by the pair tasks
    }
  }
  const long total = static_cast<long>(report.entries.size());
#pragma omp parallel for schedule(dynamic)
  for (long j = 0; j < total; ++j) run_task(report.entries[static_cast<std::size_t>(j)]);
  return report;
}

template class Duality<FieldElement>;
template class Duality<Rational>;

}  // namespace kw
