#pragma once

#include <json.hpp>

#include "newred/criteria.hpp"
#include "newred/factor.hpp"
#include "newred/families.hpp"
#include "newred/field.hpp"

namespace newred {

// Shared JSON shapes:
//   Rational       "p/q" (or "p" when the denominator is 1)
//   Poly over Q    array of coefficient strings, index = degree
//   Poly over F_q  array of element codes, index = degree
//   Factorization  {"unit": .., "factors": [{"poly": .., "mult": ..}]}
//   Witness        {"n": .., "chain": [..], "factors": ..}

nlohmann::json rational_json(const Rational& x);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json poly_json(const QPoly& f);
nlohmann::json poly_json(const FPoly& f);
QPoly qpoly_from_json(const nlohmann::json& j);

nlohmann::json factorization_json(const Factorization<QQ>& fac);
nlohmann::json factorization_json(const Factorization<GF>& fac);

nlohmann::json witness_json(const NewlyReducibleWitness<QQ>& w);
nlohmann::json witness_json(const NewlyReducibleWitness<GF>& w);

nlohmann::json family_member_json(const FamilyMember& fm);

}  // namespace newred
