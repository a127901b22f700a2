#include "koornwinder/relations.hpp"

#include <algorithm>
#include <exception>

namespace kw {

namespace {

OperatorWord alternating(int i, int j, int length) {
  OperatorWord w;
  for (int k = 0; k < length; ++k) w.push_back({OpTag::T, k % 2 == 0 ? i : j});
  return w;
}

std::string idx(int i) { return std::to_string(i); }

}  // namespace

template <class K>
std::vector<Relation<K>> daha_relations(int n, const Coefficients<K>& ctx) {
  const K one(1);
  std::vector<Relation<K>> rels;

  // (i)
  for (int i = 0; i <= n; ++i) {
    rels.push_back(sim_relation<K>("(i) T" + idx(i) + " ~ t" + idx(i), one, {{OpTag::T, i}},
                                   ctx.value(constants::t_half(i, n))));
  }

  // (ii) braid relations; none for n = 1.
  if (n >= 2) {
    for (int i = 0; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        int order = 2;
        if (j == i + 1) order = (i == 0 || j == n) ? 4 : 3;
        rels.push_back(Relation<K>{
            "(ii) braid T" + idx(i) + ",T" + idx(j) + " (m=" + idx(order) + ")",
            {{one, alternating(i, j, order)}},
            {{one, alternating(j, i, order)}}});
      }
    }
  }

  // (iii)
  for (int i = 0; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (std::abs(i - j) > 1 || (i == n && j == n - 1)) {
        rels.push_back(Relation<K>{"(iii) T" + idx(i) + " X" + idx(j) + " = X" + idx(j) + " T" + idx(i),
                                   {{one, {{OpTag::T, i}, {OpTag::X, j}}}},
                                   {{one, {{OpTag::X, j}, {OpTag::T, i}}}}});
      }
    }
  }

  // (iv)
  for (int i = 1; i <= n - 1; ++i) {
    rels.push_back(Relation<K>{"(iv) T" + idx(i) + " X" + idx(i) + " = X" + idx(i + 1) + " T" + idx(i) + "^-1",
                               {{one, {{OpTag::T, i}, {OpTag::X, i}}}},
                               {{one, {{OpTag::X, i + 1}, {OpTag::Tinv, i}}}}});
  }

  // (v)
  rels.push_back(sim_relation<K>("(v) X" + idx(n) + "^-1 T" + idx(n) + "^-1 ~ un", one,
                                 {{OpTag::Xinv, n}, {OpTag::Tinv, n}},
                                 ctx.value(constants::sqrt_of(Param::un))));

  // (vi)
  rels.push_back(sim_relation<K>("(vi) U0 = q^-1/2 T0^-1 X1 ~ u0",
                                 one / ctx.value(constants::sqrt_of(Param::q)),
                                 {{OpTag::Tinv, 0}, {OpTag::X, 1}},
                                 ctx.value(constants::sqrt_of(Param::u0))));
  return rels;
}

template <class K>
Relation<K> un_relation(int /*n*/, const Coefficients<K>& ctx) {
  return sim_relation<K>("U_n = X1^-1 T0 Y1^-1 ~ un", K(1),
                         {{OpTag::Xinv, 1}, {OpTag::T, 0}, {OpTag::Yinv, 1}},
                         ctx.value(constants::sqrt_of(Param::un)));
}

template <class K>
std::vector<Relation<K>> select_relations(const std::vector<Relation<K>>& all,
                                          const std::vector<std::string>& prefixes) {
  std::vector<Relation<K>> out;
  for (const auto& r : all)
    for (const auto& p : prefixes)
      if (r.name.rfind(p, 0) == 0) {
        out.push_back(r);
        break;
      }
  return out;
}

template <class K>
bool relation_holds(const Noumi<K>& pi, const Relation<K>& rel, const Laurent<K>& f) {
  auto side = [&](const std::vector<OperatorTerm<K>>& terms) {
    Laurent<K> acc(pi.rank());
    for (const auto& t : terms) acc += pi.apply(t.word, f) * t.coeff;
    return acc;
  };
  return side(rel.lhs) == side(rel.rhs);
}

namespace {

struct Outcome {
  bool pass = true;
  std::string error;
};

template <class K>
Outcome run_one(const Noumi<K>& pi, const Relation<K>& rel, const Laurent<K>& f) {
  try {
    return {relation_holds(pi, rel, f), {}};
  } catch (const std::exception& e) {
    return {false, e.what()};
  }
}

template <class K>
std::vector<RelationResult> summarize(const std::vector<Relation<K>>& rels, std::size_t tests,
                                      const std::vector<Outcome>& outcomes) {
  std::vector<RelationResult> out;
  for (std::size_t r = 0; r < rels.size(); ++r) {
    RelationResult res{rels[r].name, true, std::nullopt, {}};
    for (std::size_t t = 0; t < tests; ++t) {
      const Outcome& o = outcomes[r * tests + t];
      if (!o.pass) {
        res.pass = false;
        res.witness = t;
        res.error = o.error;
        break;
      }
    }
    out.push_back(std::move(res));
  }
  return out;
}

}  // namespace

template <class K>
std::vector<RelationResult> check_relations_serial(const Noumi<K>& pi,
                                                   const std::vector<Relation<K>>& rels,
                                                   const std::vector<Laurent<K>>& test_space) {
  const std::size_t tests = test_space.size();
  std::vector<Outcome> outcomes(rels.size() * tests);
  for (std::size_t r = 0; r < rels.size(); ++r)
    for (std::size_t t = 0; t < tests; ++t)
      outcomes[r * tests + t] = run_one(pi, rels[r], test_space[t]);
  return summarize(rels, tests, outcomes);
}

template <class K>
std::vector<RelationResult> check_relations_parallel(const Noumi<K>& pi,
                                                     const std::vector<Relation<K>>& rels,
                                                     const std::vector<Laurent<K>>& test_space) {
  const std::size_t tests = test_space.size();
  const long total = static_cast<long>(rels.size() * tests);
  std::vector<Outcome> outcomes(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < total; ++k) {
    const std::size_t r = static_cast<std::size_t>(k) / tests;
    const std::size_t t = static_cast<std::size_t>(k) % tests;
    outcomes[static_cast<std::size_t>(k)] = run_one(pi, rels[r], test_space[t]);
  }
  return summarize(rels, tests, outcomes);
}

#define KW_INSTANTIATE(K)                                                                        \
  template std::vector<Relation<K>> daha_relations<K>(int, const Coefficients<K>&);              \
  template Relation<K> un_relation<K>(int, const Coefficients<K>&);                              \
  template std::vector<Relation<K>> select_relations<K>(const std::vector<Relation<K>>&,         \
                                                        const std::vector<std::string>&);        \
  template bool relation_holds<K>(const Noumi<K>&, const Relation<K>&, const Laurent<K>&);       \
  template std::vector<RelationResult> check_relations_serial<K>(                                \
      const Noumi<K>&, const std::vector<Relation<K>>&, const std::vector<Laurent<K>>&);         \
  template std::vector<RelationResult> check_relations_parallel<K>(                              \
      const Noumi<K>&, const std::vector<Relation<K>>&, const std::vector<Laurent<K>>&);

KW_INSTANTIATE(FieldElement)
KW_INSTANTIATE(Rational)

#undef KW_INSTANTIATE

}  // namespace kw
