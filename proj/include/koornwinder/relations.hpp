// Defining relations of the double affine Hecke algebra as operator identities
// checked on a finite test space inside the Noumi representation.
//
// Two drivers share one kernel: check_relations_serial is the reference, and
// check_relations_parallel spreads (relation, test polynomial) pairs over
// OpenMP threads. Both return identical reports.

#ifndef KOORNWINDER_RELATIONS_HPP
#define KOORNWINDER_RELATIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "koornwinder/noumi.hpp"

namespace kw {

template <class K>
struct OperatorTerm {
  K coeff;
  OperatorWord word;
};

/// sum(lhs) == sum(rhs) as operators.
template <class K>
struct Relation {
  std::string name;
  std::vector<OperatorTerm<K>> lhs;
  std::vector<OperatorTerm<K>> rhs;
};

/// Z ~ z, i.e. Z - Z^{-1} = z^{1/2} - z^{-1/2}, for Z = coeff * word.
template <class K>
Relation<K> sim_relation(std::string name, const K& coeff, const OperatorWord& word,
                         const K& z_half) {
  const K one(1);
  return Relation<K>{std::move(name),
                     {{coeff, word}, {-(one / coeff), inverse_word(word)}},
                     {{z_half - one / z_half, {}}}};
}

/// Relations (i)-(vi) together with every braid relation of the C~n Coxeter graph.
template <class K>
std::vector<Relation<K>> daha_relations(int n, const Coefficients<K>& ctx);

/// U_n = X_1^{-1} T_0 Y_1^{-1} ~ un.
template <class K>
Relation<K> un_relation(int n, const Coefficients<K>& ctx);

/// Only the relations whose name starts with one of the given prefixes, e.g. "(v)".
template <class K>
std::vector<Relation<K>> select_relations(const std::vector<Relation<K>>& all,
                                          const std::vector<std::string>& prefixes);

struct RelationResult {
  std::string relation;
  bool pass = true;
  /// Index into the test space of the first failing polynomial.
  std::optional<std::size_t> witness;
  std::string error;
};

/// Applies both sides of one relation to f.
template <class K>
bool relation_holds(const Noumi<K>& pi, const Relation<K>& rel, const Laurent<K>& f);

template <class K>
std::vector<RelationResult> check_relations_serial(const Noumi<K>& pi,
                                                   const std::vector<Relation<K>>& rels,
                                                   const std::vector<Laurent<K>>& test_space);

template <class K>
std::vector<RelationResult> check_relations_parallel(const Noumi<K>& pi,
                                                     const std::vector<Relation<K>>& rels,
                                                     const std::vector<Laurent<K>>& test_space);

/// Monomials x^alpha with |alpha| <= k.
template <class K>
std::vector<Laurent<K>> monomial_test_space(int n, int k) {
  std::vector<Laurent<K>> out;
  for (const auto& e : monomials_up_to(n, k)) out.push_back(Laurent<K>::monomial(e, K(1)));
  return out;
}

}  // namespace kw

#endif
