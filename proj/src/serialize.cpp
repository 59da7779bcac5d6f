#include "bwm/serialize.hpp"

#include <stdexcept>

namespace bwm {

Json poly_to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& t : p.terms()) out.push_back(Json::array({t.coeff.get_str(), t.q_exp(), t.r_exp()}));
  return out;
}

LaurentPoly poly_from_json(const Json& j) {
  LaurentPoly out;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw std::invalid_argument("polynomial term must be [c, a, b]");
    const Integer c(t[0].is_string() ? t[0].get<std::string>() : std::to_string(t[0].get<long long>()));
    out += LaurentPoly::monomial(c, t[1].get<int>(), t[2].get<int>());
  }
  return out;
}

Json scalar_to_json(const Scalar& s) {
  LaurentPoly num = s.numerator();
  LaurentPoly den = s.denominator();
  const int dq = den.min_q(), dr = den.min_r();
  num = num.shifted(-dq, -dr);
  den = den.shifted(-dq, -dr);
  Integer g = den.content();
  if (!num.is_zero()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.content().get_mpz_t());
  if (sgn(den.leading().coeff) < 0) g = -g;
  if (g != 1) {
    num = num.divided_by_integer(g);
    den = den.divided_by_integer(g);
  }
  if (num.is_zero()) den = LaurentPoly(1L);
  Json out;
  out["num"] = poly_to_json(num);
  out["den"] = poly_to_json(den);
  return out;
}

Scalar scalar_from_json(const Json& j) {
  const LaurentPoly den = poly_from_json(j.at("den"));
  if (den.is_zero()) throw std::invalid_argument("zero denominator");
  return Scalar::fraction(poly_from_json(j.at("num")), den);
}

Json scalar_to_json(const ModScalar& s) {
  Json out;
  out["num"] = s.value() == 0 ? Json::array() : Json::array({Json::array({std::to_string(s.value()), 0, 0})});
  out["den"] = Json::array({Json::array({"1", 0, 0})});
  return out;
}

Element<Scalar> element_from_json(const Json& j) {
  Element<Scalar> out(j.at("rank").get<int>());
  for (const auto& t : j.at("terms")) {
    Word w;
    for (const auto& tok : t.at("word")) w.append(GenTok::parse(tok.get<std::string>()));
    out.add_term(w, scalar_from_json(t.at("coeff")));
  }
  return out;
}

std::string element_to_expr(const Element<Scalar>& x) { return x.to_string(); }

}  // namespace bwm
