#pragma once

// JSON views of the library types.  Complex numbers serialize as [re, im];
// key order is fixed, payloads carry no timestamps, so identical inputs give
// byte-identical output.

#include <json.hpp>

#include "oddwedge/character_table.hpp"
#include "oddwedge/class_function.hpp"
#include "oddwedge/dynamics.hpp"
#include "oddwedge/group.hpp"
#include "oddwedge/hurwitz.hpp"
#include "oddwedge/lambert.hpp"
#include "oddwedge/wedge.hpp"

namespace oddwedge {

using json = nlohmann::ordered_json;

json to_json(const cplx& z);
json to_json(const std::vector<cplx>& v);
json to_json(const ClassStructure& cs);
json to_json(const FiniteGroup& g, const ClassStructure& cs);
json to_json(const ClassFunction& f);
json to_json(const CharacterTable& t);
json to_json(const WedgeCoefficients& wc);
json to_json(const TOperator& t);
json to_json(const TSpectrum& sp);
json to_json(const AdamsVerification& v);
json to_json(const IterationTrace& tr);
json to_json(const PsiFixedPoints7& fp);
json to_json(const FixedPointReport& rep);
json to_json(const BasinGrid& grid);

}  // namespace oddwedge
