// JSON and plain-text serialization of field elements, Laurent polynomials and
// labeled polynomials. Text output is always rendered from the JSON model.

#ifndef KOORNWINDER_JSON_IO_HPP
#define KOORNWINDER_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "koornwinder/polynomials.hpp"

namespace kw {

using Json = nlohmann::json;

/// {"num": [[coeff, [e1..e6]], ...], "den": [...]}, doubled exponents, decimal-string coefficients.
Json to_json(const FieldElement& x);
/// A rational p/r is written as the constant fraction p/r in the same schema.
Json to_json(const Rational& x);

FieldElement field_from_json(const Json& j);
/// Throws std::invalid_argument unless the element is a rational constant.
Rational rational_from_json(const Json& j);

template <class K>
K scalar_from_json(const Json& j);
template <>
inline FieldElement scalar_from_json<FieldElement>(const Json& j) {
  return field_from_json(j);
}
template <>
inline Rational scalar_from_json<Rational>(const Json& j) {
  return rational_from_json(j);
}

inline Json to_json(const ExponentVector& e) { return Json(e.to_vector()); }
ExponentVector exponent_from_json(const Json& j);

/// {"n": n, "terms": [{"exp": [...], "coeff": <field>}, ...]}, terms in lex order.
template <class K>
Json polynomial_to_json(const Laurent<K>& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"exp", to_json(e)}, {"coeff", to_json(c)}});
  return {{"n", f.rank()}, {"terms", std::move(terms)}};
}

template <class K>
Laurent<K> polynomial_from_json(const Json& j) {
  Laurent<K> f(j.at("n").get<int>());
  for (const auto& t : j.at("terms")) f.add_term(exponent_from_json(t.at("exp")), scalar_from_json<K>(t.at("coeff")));
  return f;
}

/// Polynomial schema plus "label" and "spectrum".
template <class K>
Json labeled_to_json(const LabeledPolynomial<K>& p) {
  Json j = polynomial_to_json(p.poly);
  j["label"] = to_json(p.label);
  Json spec = Json::array();
  for (const auto& s : p.spectrum) spec.push_back(to_json(s));
  j["spectrum"] = std::move(spec);
  return j;
}

template <class K>
LabeledPolynomial<K> labeled_from_json(const Json& j) {
  LabeledPolynomial<K> p{exponent_from_json(j.at("label")), polynomial_from_json<K>(j), {}};
  for (const auto& s : j.at("spectrum")) p.spectrum.push_back(scalar_from_json<K>(s));
  return p;
}

/// "num/den" rendering of a field element in JSON form.
std::string field_json_to_text(const Json& j);
/// "c*x1^e1*x2^e2 + ..." rendering of a polynomial in JSON form.
std::string polynomial_json_to_text(const Json& j);
/// Indented key: value rendering of a report. Field elements and polynomials
/// are recognized by their keys and rendered with the functions above.
std::string render_text(const Json& j);

}  // namespace kw

#endif
