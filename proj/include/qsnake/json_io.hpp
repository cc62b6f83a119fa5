#pragma once

#include <json.hpp>

#include "qsnake/b2.hpp"
#include "qsnake/sl2.hpp"

namespace qsnake {

using json = nlohmann::ordered_json;

json to_json(const Algebra& alg);
json to_json(Lp p);
json to_json(const YMonomial& m);
json to_json(const Character& c);
json to_json(const Path& p);
json to_json(const Snake& s);
json to_json(const QCharReport& r, const Algebra& alg, const Snake& s);
json to_json(const VerificationReport& r, const RelationInstance& rel);
json to_json(const NonPrimeReport& r);
json to_json(const ThmACertificate& c);
json to_json(const ExclusionCertificate& c);
json to_json(const QSystemReport& r);
json gweight_map_to_json(const std::map<GWeight, long long>& m);

Algebra algebra_from_json(const json& j);
YMonomial monomial_from_json(const json& j);
Character character_from_json(const json& j);
std::vector<Lp> points_from_json(const json& j);
Path path_from_json(const json& j, Lp origin);

} // namespace qsnake
