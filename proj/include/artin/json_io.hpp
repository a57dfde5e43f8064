#pragma once

#include <json.hpp>

#include "artin/decomposer.hpp"
#include "artin/detector.hpp"
#include "artin/garside.hpp"
#include "artin/oracle.hpp"
#include "artin/witness.hpp"

namespace artin {

using Json = nlohmann::ordered_json;

Json to_json(const ForbiddenPattern& p);
Json to_json(const DecompositionTree& t);
Json to_json(const Verdict& v);
Json to_json(const WitnessReport& r);
Json to_json(const GarsideNF& nf);
Json to_json(const MembershipResult& r);

/// Inverse of to_json(ForbiddenPattern); throws ParseError on bad input.
ForbiddenPattern pattern_from_json(const Json& j);

}  // namespace artin
