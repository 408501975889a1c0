#pragma once

#include "degflag/bijections.hpp"
#include "degflag/dellac.hpp"
#include "degflag/finite_field.hpp"
#include "degflag/flag_variety.hpp"
#include "degflag/genocchi.hpp"
#include "degflag/pluecker.hpp"

#include <json.hpp>

namespace degflag {

using Json = nlohmann::ordered_json;

// Big integers are always written as decimal strings.
Json to_json(const BigInt& x);
Json to_json(const Triangle& t);
Json to_json(const QPolynomial& p);
Json to_json(const DellacConfig& d);
Json to_json(const FixedPointTuple& t);
Json to_json(const DumontPermutation& p);
Json to_json(const Subspace& v);
Json to_json(const std::vector<CellCount>& cells);
Json to_json(const PlueckerRelation& r);
Json to_json(const CutoutReport& r);
Json to_json(const ValidationReport& r);

// Readers throw StructuralError on a malformed document; the constructed
// objects go through the usual validation.
DellacConfig dellac_from_json(const Json& j);
FixedPointTuple tuple_from_json(const Json& j);
DumontPermutation dumont_from_json(int n, const Json& j);

}  // namespace degflag
