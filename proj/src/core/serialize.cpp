#include "serialize.hpp"

#include <limits>

#include "errors.hpp"

namespace dks {

json bigint_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw ParseError("expected an integer");
}

json cyclo_to_json(const Cyclotomic& v) {
  json coeffs = json::array();
  for (const auto& c : v.coeffs()) coeffs.push_back(c.str());
  return json{{"order", v.order()}, {"coeffs", std::move(coeffs)}};
}

Cyclotomic cyclo_from_json(const json& j) {
  try {
    const auto order = j.at("order").get<std::int64_t>();
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(Rational::parse(c.get<std::string>()));
    if (order < 1 || static_cast<int>(coeffs.size()) != cyclotomic_field(order).degree)
      throw ParseError("cyclotomic element needs exactly phi(order) coefficients");
    return Cyclotomic::from_poly(order, coeffs);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed cyclotomic element: ") + e.what());
  }
}

json matrix_to_json(const SL2Matrix& m) {
  return json::array({json::array({m.a(), m.b()}), json::array({m.c(), m.d()})});
}

SL2Matrix matrix_from_string(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception&) {
    throw ParseError("matrix must look like [[a,b],[c,d]]");
  }
  auto entry = [&](int r, int c) -> std::int64_t {
    if (!j.is_array() || j.size() != 2 || !j[r].is_array() || j[r].size() != 2 ||
        !j[r][c].is_number_integer())
      throw ParseError("matrix must look like [[a,b],[c,d]] with integer entries");
    return j[r][c].get<std::int64_t>();
  };
  return SL2Matrix(entry(0, 0), entry(0, 1), entry(1, 0), entry(1, 1));
}

json int_matrix_to_json(const IntMatrix& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    json r = json::array();
    for (const auto& x : row) r.push_back(bigint_to_json(x));
    out.push_back(std::move(r));
  }
  return out;
}

json lattice_to_json(const Lattice& l) {
  return json{{"field_order", l.field_order()},
              {"degree", l.degree()},
              {"denominator", bigint_to_json(l.denominator())},
              {"basis", int_matrix_to_json(l.basis())}};
}

json character_to_json(const DirichletCharacter& chi) {
  return json{{"label", chi.label()},
              {"modulus", chi.modulus()},
              {"conductor", chi.conductor()},
              {"order", chi.order()},
              {"parity", chi.parity()},
              {"primitive", chi.is_primitive()}};
}

json knopp_to_json(const ClassicalKnoppReport& r) {
  return json{{"h", r.h}, {"k", r.k}, {"n", r.n},
              {"lhs", r.lhs.str()}, {"rhs", r.rhs.str()}, {"equal", r.equal}};
}

json knopp_to_json(const NewformKnoppReport& r) {
  return json{{"h", r.h}, {"k", r.k}, {"n", r.n},
              {"lhs", cyclo_to_json(r.lhs)}, {"rhs", cyclo_to_json(r.rhs)}, {"equal", r.equal}};
}

json value_to_json(const Cyclotomic& v) {
  json out{{"value", cyclo_to_json(v)}};
  if (v.is_rational()) out["rational"] = v.as_rational().str();
  return out;
}

} // namespace dks
