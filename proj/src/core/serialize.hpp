#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "characters.hpp"
#include "hecke.hpp"
#include "lattice.hpp"

namespace dks {

using json = nlohmann::ordered_json;

/// Integers as JSON numbers while they fit in int64, decimal strings beyond.
json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const json& j);

json cyclo_to_json(const Cyclotomic& v);
Cyclotomic cyclo_from_json(const json& j);

json matrix_to_json(const SL2Matrix& m);
/// Parses "[[a,b],[c,d]]"; ParseError when malformed, DomainError when det != 1.
SL2Matrix matrix_from_string(std::string_view text);

json int_matrix_to_json(const IntMatrix& rows);
json lattice_to_json(const Lattice& l);

/// label, modulus, conductor, order, parity, primitive
json character_to_json(const DirichletCharacter& chi);

json knopp_to_json(const ClassicalKnoppReport& r);
json knopp_to_json(const NewformKnoppReport& r);

/// Value plus its rational form when it has one.
json value_to_json(const Cyclotomic& v);

} // namespace dks
