#pragma once

#include "modquot/catalog.hpp"
#include "modquot/certify.hpp"
#include "modquot/divisor.hpp"
#include "modquot/profile.hpp"

#include <json.hpp>

namespace modquot {

using Json = nlohmann::json;

// Rationals serialize as strings "p/q" (never floats); interval endpoints use
// "-inf" / "+inf".

Json to_json(const Rational& q);
Json to_json(const CoefInterval& c);
Json to_json(const FullDivisorClass& x);
Json to_json(const ProfileDivisorClass& x);
Json to_json(const SlopeEntry& s);
Json to_json(const CatalogEntry& e);
Json to_json(const Certificate& c);
Json to_json(const Verdict& v);

Rational rational_from_json(const Json& j);
FullDivisorClass full_class_from_json(const Json& j);

}  // namespace modquot
