#include "koornwinder/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace kw {

namespace {

Json poly_to_json(const ParamPolynomial& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({c.get_str(), Json(e.e)});
  return out;
}

ParamPolynomial poly_from_json(const Json& j) {
  std::vector<ParamPolynomial::Term> terms;
  for (const auto& t : j) {
    HalfExponents e;
    const auto& ex = t.at(1);
    if (ex.size() != kNumParams) throw std::invalid_argument("field JSON: exponent vector must have 6 entries");
    for (std::size_t i = 0; i < kNumParams; ++i) e.e[i] = ex.at(i).get<int>();
    terms.emplace_back(e, mpz_class(t.at(0).get<std::string>()));
  }
  return ParamPolynomial::from_terms(std::move(terms));
}

Json constant_term(const mpz_class& c) {
  return Json::array({Json::array({c.get_str(), Json(HalfExponents{}.e)})});
}

bool is_field_json(const Json& j) {
  return j.is_object() && j.size() == 2 && j.contains("num") && j.contains("den");
}

bool is_polynomial_json(const Json& j) {
  return j.is_object() && j.contains("n") && j.contains("terms") && j.at("terms").is_array();
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void render(const Json& j, int indent, std::ostringstream& os);

void render_value(const Json& v, int indent, std::ostringstream& os) {
  if (is_field_json(v)) {
    os << ' ' << field_json_to_text(v) << '\n';
  } else if (v.is_object()) {
    os << '\n';
    render(v, indent + 2, os);
  } else if (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array())) {
    os << '\n';
    for (const auto& item : v) {
      os << std::string(indent + 2, ' ') << '-';
      if (is_field_json(item)) {
        os << ' ' << field_json_to_text(item) << '\n';
      } else if (item.is_object()) {
        os << '\n';
        render(item, indent + 4, os);
      } else {
        os << ' ' << item.dump() << '\n';
      }
    }
  } else {
    os << ' ' << scalar_text(v) << '\n';
  }
}

void render(const Json& j, int indent, std::ostringstream& os) {
  const std::string pad(indent, ' ');
  if (is_polynomial_json(j)) {
    for (const auto& [key, v] : j.items()) {
      if (key == "terms") continue;
      os << pad << key << ':';
      render_value(v, indent, os);
    }
    os << pad << "poly: " << polynomial_json_to_text(j) << '\n';
    return;
  }
  for (const auto& [key, v] : j.items()) {
    os << pad << key << ':';
    render_value(v, indent, os);
  }
}

}  // namespace

Json to_json(const FieldElement& x) {
  return {{"num", poly_to_json(x.num())}, {"den", poly_to_json(x.den())}};
}

Json to_json(const Rational& x) {
  const mpq_class& v = x.value();
  Json num = sgn(v) == 0 ? Json::array() : constant_term(v.get_num());
  return {{"num", std::move(num)}, {"den", constant_term(v.get_den())}};
}

FieldElement field_from_json(const Json& j) {
  return FieldElement::fraction(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

Rational rational_from_json(const Json& j) {
  const FieldElement x = field_from_json(j);
  if (!x.num().is_zero() && !x.num().is_constant())
    throw std::invalid_argument("field JSON: expected a rational constant");
  if (!x.den().is_constant()) throw std::invalid_argument("field JSON: expected a rational constant");
  mpz_class num = x.num().is_zero() ? mpz_class(0) : x.num().terms().front().second;
  mpz_class den = x.den().terms().front().second;
  return Rational(mpq_class(num, den));
}

ExponentVector exponent_from_json(const Json& j) {
  const auto xs = j.get<std::vector<int>>();
  return ExponentVector::from(xs);
}

std::string field_json_to_text(const Json& j) { return field_from_json(j).to_string(); }

std::string polynomial_json_to_text(const Json& j) {
  const auto& terms = j.at("terms");
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    if (!first) os << " + ";
    first = false;
    os << '(' << field_json_to_text(t.at("coeff")) << ')';
    const auto exp = t.at("exp").get<std::vector<int>>();
    for (std::size_t i = 0; i < exp.size(); ++i) {
      if (exp[i] == 0) continue;
      os << "*x" << i + 1;
      if (exp[i] != 1) os << '^' << exp[i];
    }
  }
  return os.str();
}

std::string render_text(const Json& j) {
  std::ostringstream os;
  render(j, 0, os);
  return os.str();
}

}  // namespace kw
