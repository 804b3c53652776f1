#pragma once

#include <json.hpp>

#include "seaweed/configuration.hpp"
#include "seaweed/functionals.hpp"
#include "seaweed/kernel.hpp"
#include "seaweed/meander.hpp"
#include "seaweed/spec.hpp"
#include "seaweed/winding.hpp"

namespace seaweed {

using Json = nlohmann::ordered_json;

Json to_json(const SeaweedSpec& spec);
SeaweedSpec spec_from_json(const Json& j);

Json to_json(const Meander& m);
Json to_json(const TailData& t);
// Meander verb payload: GL/A meander, or the shortened B/C meander with its
// tail data and the full meander.
Json meander_json(const SeaweedSpec& spec);

Json to_json(const HomotopyType& h, Family family);
Json signature_json(const SeaweedSpec& spec);
Json to_json(const ComponentMeander& cm);
Json to_json(const CoreData& core);

Json to_json(const Functional& f);
Functional functional_from_json(const Json& j);

Json to_json(const LinearForm& f);
Json to_json(const RelationsMatrix& rel);

}  // namespace seaweed
