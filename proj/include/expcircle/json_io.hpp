#pragma once

#include <json.hpp>

#include "expcircle/complexes.hpp"
#include "expcircle/groups.hpp"
#include "expcircle/subsets.hpp"

namespace expcircle {

using Json = nlohmann::json;

// All converters are explicit functions: values travel as exact rational or
// integer strings where they may exceed int64 range, plain numbers otherwise.

Json int_to_json(const Int& v);  // int64 when it fits, throws otherwise
Int int_from_json(const Json& j);

Json subset_to_json(const FiniteSubset& s);  // sorted array of "p/q" angles
FiniteSubset subset_from_json(const Json& j, long capacity);

Json chain_to_json(const ChainComplex& c);  // {"ranks": [...], "boundaries": [row-major]}
ChainComplex chain_from_json(const Json& j);

Json homology_to_json(const HomologyGroup& h);  // {"rank": r, "torsion": [...]}
HomologyGroup homology_from_json(const Json& j);

Json presentation_to_json(const GroupPresentation& G);
GroupPresentation presentation_from_json(const Json& j);

Json laurent_to_json(const LaurentPolynomial& p);  // {"exp": coeff} with string keys
LaurentPolynomial laurent_from_json(const Json& j);

Json seifert_to_json(const SeifertData& m);
SeifertData seifert_from_json(const Json& j);

Json rat_vector_to_json(const std::vector<Rat>& v);
std::vector<Rat> rat_vector_from_json(const Json& j);

}  // namespace expcircle
