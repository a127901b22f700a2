#include <doctest.h>

#include "support.hpp"

using namespace kw;
using namespace kw::testing;

namespace {

FieldElement P(Param p) { return FieldElement::param(p); }
FieldElement R(Param p) { return FieldElement::sqrt_param(p); }

}  // namespace

TEST_CASE("star on polynomials") {
  using L = Laurent<FieldElement>;
  L f(1);
  f.add_term(ExponentVector{1}, P(Param::t0));
  f.add_term(ExponentVector{-1}, P(Param::q));
  L g(1);
  g.add_term(ExponentVector{-1}, P(Param::un));
  g.add_term(ExponentVector{1}, P(Param::q));
  CHECK(star_polynomial(f) == g);
  const SymbolicContext sym;
  std::mt19937_64 rng(31);
  for (int j = 0; j < 20; ++j) {
    const L h = random_laurent(rng, 2, sym);
    CHECK(star_polynomial(star_polynomial(h)) == h);
    CHECK(invert_variables(invert_variables(h)) == h);
  }
}

TEST_CASE("rho star points") {
  const SymbolicContext sym;
  const auto up = rho_star_point(sym, 2, 1);
  const auto down = rho_star_point(sym, 2, -1);
  CHECK(up[0] == R(Param::un) * R(Param::tn) * P(Param::t));
  CHECK(up[1] == R(Param::un) * R(Param::tn));
  for (std::size_t i = 0; i < 2; ++i) CHECK((up[i] * down[i]).is_one());
  const auto rho = point_from(sym, rho_monomials(3, 1));
  const auto rho_star = rho_star_point(sym, 3, 1);
  for (std::size_t i = 0; i < 3; ++i) CHECK(star(rho[i]) == rho_star[i]);
  const auto shifted = shifted_rho_star_monomials(ExponentVector{2, 0});
  CHECK(FieldElement::monomial(shifted[0]) == P(Param::q).pow(2) * rho_star[0] / P(Param::t));
}

TEST_CASE("PBW monomials") {
  const PBWMonomial h{ExponentVector{1, -2}, GeneratorWord{1, 2}, ExponentVector{0, 3}};
  const PBWMonomial s = h.starred();
  CHECK(s.alpha == ExponentVector{0, -3});
  CHECK(s.word == GeneratorWord{2, 1});
  CHECK(s.beta == ExponentVector{-1, 2});
  const PBWMonomial back = s.starred();
  CHECK(back.alpha == h.alpha);
  CHECK(back.word == h.word);
  CHECK(back.beta == h.beta);
}

TEST_CASE("symbolic pairings for n = 1") {
  const SymbolicContext sym;
  Duality<FieldElement> d(1, sym);
  CHECK(d.pairing_E(ExponentVector{0}, ExponentVector{0}).is_one());
  CHECK(d.pairing_P(ExponentVector{0}, ExponentVector{0}).is_one());
  for (const auto& alpha : monomials_up_to(1, 2))
    CHECK(d.E_star(alpha) == star_polynomial(d.family().E(alpha).poly));
  for (const auto& alpha : monomials_up_to(1, 1))
    for (const auto& beta : monomials_up_to(1, 1)) CHECK(d.check_E(alpha, beta));
  for (const auto& lambda : partitions_up_to(1, 2)) {
    CHECK(d.check_inversion(lambda));
    for (const auto& mu : partitions_up_to(1, 2)) {
      CHECK(d.check_P(lambda, mu));
      CHECK(d.check_ratio(lambda, mu));
    }
  }
}

TEST_CASE("functional S") {
  const SymbolicContext sym;
  Duality<FieldElement> d(1, sym);
  const PBWMonomial trivial{ExponentVector{0}, {}, ExponentVector{0}};
  for (auto path : {FunctionalPath::ClosedForm, FunctionalPath::Operator})
    CHECK(d.functional_S(trivial, path).is_one());
  // S(X^alpha) is x^alpha at q^{-rho*}.
  const PBWMonomial x2{ExponentVector{2}, {}, ExponentVector{0}};
  const FieldElement expected = rho_star_point(sym, 1, -1)[0].pow(2);
  CHECK(d.functional_S(x2, FunctionalPath::Operator) == expected);
  CHECK(d.functional_S(x2, FunctionalPath::ClosedForm) == expected);
  std::mt19937_64 rng(32);
  for (int j = 0; j < 10; ++j) CHECK(d.check_functional(random_pbw(rng, 1)));

  const SpecializedContext spec;
  Duality<Rational> d2(2, spec);
  for (int j = 0; j < 10; ++j) CHECK(d2.check_functional(random_pbw(rng, 2)));
}

TEST_CASE("serial and parallel grids agree") {
  const SpecializedContext spec;
  Duality<Rational> a(2, spec);
  Duality<Rational> b(2, spec);
  const auto serial = a.grid_serial(2);
  const auto parallel = b.grid_parallel(2);
  REQUIRE(serial.entries.size() == parallel.entries.size());
  for (std::size_t j = 0; j < serial.entries.size(); ++j) {
    CHECK(serial.entries[j].kind == parallel.entries[j].kind);
    CHECK(serial.entries[j].left == parallel.entries[j].left);
    CHECK(serial.entries[j].right == parallel.entries[j].right);
    CHECK(serial.entries[j].pass == parallel.entries[j].pass);
  }
  CHECK(serial.ok());
  CHECK(a.context(1).assignment() == spec.assignment().starred());
}
