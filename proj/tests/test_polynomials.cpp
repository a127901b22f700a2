#include <doctest.h>

#include <functional>

#include "support.hpp"

using namespace kw;
using namespace kw::testing;

namespace {

/// Words of the given length that move 0 to alpha through distinct points at every step.
std::vector<GeneratorWord> moving_chains(const ExponentVector& alpha, std::size_t length, std::size_t cap) {
  const int n = alpha.size();
  std::vector<GeneratorWord> out;
  GeneratorWord word;
  std::function<void(const ExponentVector&)> walk = [&](const ExponentVector& v) {
    if (out.size() >= cap) return;
    if (word.size() == length) {
      if (v == alpha) out.push_back(word);
      return;
    }
    for (int i = 0; i <= n; ++i) {
      const auto next = affine_action(i, v);
      if (next == v) continue;
      word.push_back(i);
      walk(next);
      word.pop_back();
    }
  };
  walk(ExponentVector(n));
  return out;
}

}  // namespace

TEST_CASE("E for small labels") {
  const SymbolicContext sym;
  KoornwinderFamily<FieldElement> fam(1, sym);
  CHECK(fam.E(ExponentVector{0}).poly == fam.noumi().one());
  const auto e = fam.E(ExponentVector{-1});
  CHECK(e.poly.coefficient_of(ExponentVector{-1}).is_one());
  CHECK(e.poly.max_norm1() == 1);
  EigenOracle<FieldElement> oracle(fam.noumi(), 1);
  const auto brute = oracle.eigenvector(ExponentVector{-1}, e.spectrum);
  REQUIRE(brute.has_value());
  CHECK(*brute == e.poly);
  CHECK(fam.eigen_check(e));
}

TEST_CASE("E: spectra, support and oracle for n = 2") {
  const SpecializedContext spec;
  KoornwinderFamily<Rational> fam(2, spec);
  EigenOracle<Rational> oracle(fam.noumi(), 2);
  for (const auto& alpha : monomials_up_to(2, 2)) {
    const auto e = fam.E(alpha);
    CHECK(e.label == alpha);
    CHECK(e.spectrum == spectral_vector(spec, alpha));
    CHECK(e.poly.max_norm1() <= alpha.norm1());
    CHECK(e.poly.coefficient_of(alpha).is_one());
    CHECK(fam.eigen_check(e));
    CHECK(oracle.joint_eigenspace(e.spectrum).size() == 1);
    CHECK(oracle.eigenvector(alpha, e.spectrum) == std::optional(e.poly));
  }
}

TEST_CASE("E does not depend on the creation chain") {
  const SpecializedContext spec;
  for (int n : {1, 2}) {
    KoornwinderFamily<Rational> fam(n, spec);
    for (const auto& alpha : monomials_up_to(n, 2)) {
      const auto shortest = chain_to(alpha);
      const auto chains = moving_chains(alpha, shortest.size(), 12);
      CHECK_FALSE(chains.empty());
      for (const auto& chain : chains) CHECK(fam.normalized(fam.along_chain(chain), alpha) == fam.E(alpha).poly);
    }
  }
}

TEST_CASE("P for small partitions") {
  const SymbolicContext sym;
  KoornwinderFamily<FieldElement> fam(1, sym);
  CHECK(fam.P(ExponentVector{0}).poly == fam.noumi().one());
  // P_1 = m_1 + kappa with kappa d_1 equal to the constant term of D m_1.
  const auto m1 = orbit_sum<FieldElement>(1, ExponentVector{1});
  const auto dm1 = fam.noumi().D(m1);
  const FieldElement kappa = dm1.coefficient_of(ExponentVector{0}) / fam.noumi().d_lambda(ExponentVector{1});
  CHECK(fam.P(ExponentVector{1}).poly == m1 + fam.noumi().one() * kappa);

  const SpecializedContext spec;
  KoornwinderFamily<Rational> fam2(2, spec);
  const auto m10 = orbit_sum<Rational>(2, ExponentVector{1, 0});
  const auto dm10 = fam2.noumi().D(m10);
  const Rational k2 = dm10.coefficient_of(ExponentVector(2)) / fam2.noumi().d_lambda(ExponentVector{1, 0});
  CHECK(fam2.P(ExponentVector{1, 0}).poly == m10 + fam2.noumi().one() * k2);
  for (const auto& lambda : partitions_up_to(2, 3)) CHECK(fam2.check_P(fam2.P(lambda)));
}

TEST_CASE("symmetrizing any E in the orbit gives P") {
  const SpecializedContext spec;
  KoornwinderFamily<Rational> fam(2, spec);
  for (const auto& lambda : partitions_up_to(2, 2)) {
    const auto p = fam.P(lambda);
    const auto orbit = orbit_sum<Rational>(2, lambda);
    for (const auto& [mu, c] : orbit.terms()) {
      const auto cm = fam.noumi().C(fam.E(mu).poly);
      if (cm.is_zero()) continue;
      CHECK(fam.normalized(cm, lambda) == p.poly);
    }
    CHECK(fam.normalized(fam.noumi().C(fam.E(lambda).poly), lambda) == p.poly);
  }
}

TEST_CASE("basis check") {
  const SymbolicContext sym;
  KoornwinderFamily<FieldElement> fam(1, sym);
  for (int k : {0, 1}) {
    const auto r = fam.basis_check(k);
    CHECK(r.ok());
    CHECK(r.size == static_cast<std::size_t>(2 * k + 1));
  }
  const SpecializedContext spec;
  KoornwinderFamily<Rational> fam2(2, spec);
  const auto r = fam2.basis_check(1);
  CHECK(r.ok());
  CHECK(r.rank == 5);
}

TEST_CASE("parallel construction fills the cache consistently") {
  const SpecializedContext spec;
  KoornwinderFamily<Rational> shared(2, spec);
  const auto labels = monomials_up_to(2, 3);
  std::vector<Laurent<Rational>> got(labels.size(), Laurent<Rational>(2));
#pragma omp parallel for schedule(dynamic)
  for (std::size_t j = 0; j < labels.size(); ++j) got[j] = shared.E(labels[j]).poly;
  KoornwinderFamily<Rational> fresh(2, spec);
  for (std::size_t j = 0; j < labels.size(); ++j) CHECK(got[j] == fresh.E(labels[j]).poly);
}

TEST_CASE("q = 1 collapses eigenspaces") {
  Assignment a = Assignment::primes();
  a.roots[static_cast<int>(Param::q)] = Rational(1);
  const SpecializedContext ctx(a);
  KoornwinderFamily<Rational> fam(1, ctx);
  EigenOracle<Rational> oracle(fam.noumi(), 2);
  for (const auto& alpha : monomials_up_to(1, 2)) {
    const auto e = fam.E(alpha);
    CHECK(fam.eigen_check(e));
    CHECK(oracle.joint_eigenspace(e.spectrum).size() > 1);
    CHECK_FALSE(oracle.eigenvector(alpha, e.spectrum).has_value());
  }
}
