#pragma once

#include <nlohmann/json.hpp>

#include "cobalt/anomaly.hpp"
#include "cobalt/character.hpp"
#include "cobalt/evaluate.hpp"
#include "cobalt/frobenius.hpp"
#include "cobalt/modular.hpp"
#include "cobalt/projrep.hpp"

namespace cobalt {

using Json = nlohmann::ordered_json;

// Scalars travel as literal strings in the grammar of parse_scalar.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

Json crossed_module_to_json(const CrossedModule& x);
CrossedModule crossed_module_from_json(const Json& j);

Json cocycle_to_json(const Cocycle& a);
Cocycle cocycle_from_json(const Json& j);

Json character_to_json(const TwoCharacter& c);
TwoCharacter character_from_json(const Json& j);

Json projrep_to_json(const ProjRep& r);
ProjRep projrep_from_json(const Json& j);

Json fixed_point_to_json(const HomotopyFixedPoint& p);
HomotopyFixedPoint fixed_point_from_json(const Json& j);

Json frobenius_to_json(const FrobeniusAlgebra& a);
FrobeniusAlgebra frobenius_from_json(const Json& j);

Json module_to_json(const AlgModule& m);
AlgModule module_from_json(const Json& j);

Json modular_to_json(const ModularData& m);
ModularData modular_from_json(const Json& j);

Json boundary_condition_to_json(const BoundaryCondition& bc);
BoundaryCondition boundary_condition_from_json(const Json& j);

Json anomaly_to_json(const SemitrivializedAnomaly& w);
SemitrivializedAnomaly anomaly_from_json(const Json& j);

Json theory_to_json(const AnomalousTheory& z);
AnomalousTheory theory_from_json(const Json& j);

Json load_json_file(const std::string& path);  // throws FormatError
void save_json_file(const std::string& path, const Json& j);

}  // namespace cobalt
