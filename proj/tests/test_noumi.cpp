#include <doctest.h>

#include "koornwinder/errors.hpp"
#include "support.hpp"

using namespace kw;
using namespace kw::testing;

namespace {

template <class K>
Laurent<K> mono(std::initializer_list<int> e, const K& c = K(1)) {
  return Laurent<K>::monomial(ExponentVector(e), c);
}

}  // namespace

TEST_CASE("T_i on constants and invariant inputs") {
  const SymbolicContext sym;
  for (int n : {1, 2, 3}) {
    Noumi<FieldElement> pi(n, sym);
    for (int i = 0; i <= n; ++i) CHECK(pi.T(i, 1, pi.one()) == pi.one() * sym.value(constants::t_half(i, n)));
  }
  Noumi<FieldElement> pi(2, sym);
  const auto f = mono<FieldElement>({0, 1}) + mono<FieldElement>({0, -1});
  CHECK(pi.T(2, 1, f) == f * sym.value(constants::t_half(2, 2)));
}

TEST_CASE("T_1 on linear monomials for n = 2") {
  const SymbolicContext sym;
  Noumi<FieldElement> pi(2, sym);
  const FieldElement th = FieldElement::sqrt_param(Param::t);
  const auto x1 = mono<FieldElement>({1, 0}), x2 = mono<FieldElement>({0, 1});
  CHECK(pi.T(1, 1, x1) == x2 * th.inverse());
  CHECK(pi.T(1, 1, x2) == x1 * th + x2 * (th - th.inverse()));
  CHECK(pi.T(1, -1, pi.T(1, 1, x2)) == x2);
  // Relation (iv) on 1.
  CHECK(pi.apply(OperatorWord{{OpTag::T, 1}, {OpTag::X, 1}}, pi.one()) ==
        pi.apply(OperatorWord{{OpTag::X, 2}, {OpTag::Tinv, 1}}, pi.one()));
}

TEST_CASE("X and Y basics") {
  const SpecializedContext spec;
  Noumi<Rational> pi(3, spec);
  CHECK(pi.X(1, 1, pi.one()) == mono<Rational>({1, 0, 0}));
  std::mt19937_64 rng(11);
  const auto rho = spectral_vector(spec, ExponentVector(3));
  for (int i = 1; i <= 3; ++i) CHECK(pi.Y(i, 1, pi.one()) == pi.one() * rho[static_cast<std::size_t>(i - 1)]);
  for (int j = 0; j < 5; ++j) {
    const auto f = random_laurent(rng, 3, spec);
    for (int i = 1; i <= 3; ++i) {
      CHECK(pi.X(i, 1, pi.X(i, -1, f)) == f);
      CHECK(pi.Y(i, -1, pi.Y(i, 1, f)) == f);
      for (int k = i + 1; k <= 3; ++k) {
        CHECK(pi.X(i, 1, pi.X(k, 1, f)) == pi.X(k, 1, pi.X(i, 1, f)));
        CHECK(pi.Y(i, 1, pi.Y(k, 1, f)) == pi.Y(k, 1, pi.Y(i, 1, f)));
      }
    }
  }
}

TEST_CASE("U_0 and U_n") {
  const SpecializedContext spec;
  std::mt19937_64 rng(12);
  for (int n : {1, 2, 3}) {
    Noumi<Rational> pi(n, spec);
    const auto rels = daha_relations(n, spec);
    const auto u0 = select_relations(rels, {"(vi)"});
    const auto un = un_relation(n, spec);
    REQUIRE(u0.size() == 1);
    for (int j = 0; j < 30; ++j) {
      const auto f = random_laurent(rng, n, spec);
      CHECK(relation_holds(pi, u0.front(), f));
      CHECK(relation_holds(pi, un, f));
    }
    CHECK(pi.Un(1, pi.one()) == pi.apply(OperatorWord{{OpTag::Xinv, 1}, {OpTag::T, 0}, {OpTag::Yinv, 1}}, pi.one()));
    const auto f = random_laurent(rng, n, spec);
    CHECK(pi.U0(-1, pi.U0(1, f)) == f);
    CHECK(pi.Un(-1, pi.Un(1, f)) == f);
  }
}

TEST_CASE("T_w and chi") {
  const SymbolicContext sym;
  Noumi<FieldElement> pi(2, sym);
  std::mt19937_64 rng(13);
  const auto f = random_laurent(rng, 2, sym);
  CHECK(pi.Tw({}, f) == f);
  CHECK(pi.Tw({1}, pi.one()) == pi.one() * FieldElement::sqrt_param(Param::t));
  CHECK(pi.chi({}).is_one());
  CHECK(pi.chi({2}) == FieldElement::sqrt_param(Param::tn));
  Noumi<FieldElement> pi3(3, sym);
  CHECK(pi3.chi({1, 2, 1}) == FieldElement::sqrt_param(Param::t).pow(3));
  // Two reduced words of the longest element of W0(C2).
  CHECK(pi.Tw({1, 2, 1, 2}, f) == pi.Tw({2, 1, 2, 1}, f));
}

TEST_CASE("symmetrizer") {
  const SpecializedContext spec;
  Noumi<Rational> pi(2, spec);
  CHECK(pi.C(pi.one()) == pi.one());
  const auto m = orbit_sum<Rational>(2, ExponentVector{1, 0});
  CHECK(pi.C(m) == m);
  std::mt19937_64 rng(14);
  for (int j = 0; j < 5; ++j) {
    const auto f = random_laurent(rng, 2, spec);
    const auto cf = pi.C(f);
    CHECK(pi.is_W0_invariant(cf));
    CHECK(pi.C(cf) == cf);
    CHECK_NOTHROW(pi.D(cf));
  }
}

TEST_CASE("Koornwinder operator D") {
  const SymbolicContext sym;
  Noumi<FieldElement> pi(1, sym);
  CHECK(pi.D(pi.one()).is_zero());
  CHECK(pi.d_lambda(ExponentVector{0}).is_zero());
  const auto m1 = orbit_sum<FieldElement>(1, ExponentVector{1});
  const auto dm1 = pi.D(m1);
  CHECK(dm1.coefficient_of(ExponentVector{1}) == pi.d_lambda(ExponentVector{1}));
  CHECK(dm1.coefficient_of(ExponentVector{-1}) == pi.d_lambda(ExponentVector{1}));
  CHECK_THROWS_AS(pi.D(mono<FieldElement>({1})), NotDivisible);

  // On span{m_(1,0), 1} for n = 2, D is triangular with eigenvalue d_(1,0) on the top vector.
  const SpecializedContext spec;
  Noumi<Rational> pi2(2, spec);
  const auto m = orbit_sum<Rational>(2, ExponentVector{1, 0});
  const auto dm = pi2.D(m);
  const Rational top = dm.coefficient_of(ExponentVector{1, 0});
  CHECK(top == pi2.d_lambda(ExponentVector{1, 0}));
  CHECK(dm - m * top == pi2.one() * dm.coefficient_of(ExponentVector(2)));
}

TEST_CASE("relation suite: serial and parallel drivers agree") {
  const SpecializedContext spec;
  Noumi<Rational> pi(2, spec);
  const auto rels = daha_relations(2, spec);
  const auto space = monomial_test_space<Rational>(2, 2);
  const auto a = check_relations_serial(pi, rels, space);
  const auto b = check_relations_parallel(pi, rels, space);
  REQUIRE(a.size() == b.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    CHECK(a[j].relation == b[j].relation);
    CHECK(a[j].pass == b[j].pass);
    CHECK(a[j].pass);
  }
  CHECK(select_relations(rels, {"(ii)"}).size() == 3);
  CHECK(select_relations(daha_relations(1, spec), {"(ii)"}).empty());
}

TEST_CASE("relation (v) on 1") {
  const SymbolicContext sym;
  Noumi<FieldElement> pi(2, sym);
  const FieldElement uh = FieldElement::sqrt_param(Param::un);
  const auto lhs = pi.apply(OperatorWord{{OpTag::Xinv, 2}, {OpTag::Tinv, 2}}, pi.one()) -
                   pi.apply(OperatorWord{{OpTag::T, 2}, {OpTag::X, 2}}, pi.one());
  CHECK(lhs == pi.one() * (uh - uh.inverse()));
}

TEST_CASE("three-parameter degeneration") {
  Assignment a = Assignment::primes();
  a.roots[static_cast<int>(Param::u0)] = Rational(1);
  a.roots[static_cast<int>(Param::un)] = Rational(1);
  a.roots[static_cast<int>(Param::t0)] = a.roots[static_cast<int>(Param::tn)];
  const SpecializedContext ctx(a);
  Noumi<Rational> pi(2, ctx);
  for (const auto& r : check_relations_serial(pi, daha_relations(2, ctx), monomial_test_space<Rational>(2, 1)))
    CHECK(r.pass);
}

TEST_CASE("symbolic quadratic relations for n = 2") {
  const SymbolicContext sym;
  Noumi<FieldElement> pi(2, sym);
  const auto rels = select_relations(daha_relations(2, sym), {"(i)", "(iv)", "(v)"});
  for (const auto& r : check_relations_serial(pi, rels, monomial_test_space<FieldElement>(2, 1))) CHECK(r.pass);
}

TEST_CASE("filtration") {
  const SpecializedContext spec;
  Noumi<Rational> pi(2, spec);
  for (int k = 0; k <= 2; ++k) {
    for (const auto& e : monomials_up_to(2, k)) {
      const auto f = pi.monomial(e);
      for (int i = 0; i <= 2; ++i) CHECK(pi.T(i, 1, f).max_norm1() <= k);
      for (int i = 1; i <= 2; ++i) CHECK(pi.Y(i, 1, f).max_norm1() <= k);
    }
  }
}
