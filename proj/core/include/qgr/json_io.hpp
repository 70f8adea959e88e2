#pragma once

#include <json.hpp>

#include "qgr/lattice_jantzen.hpp"
#include "qgr/mixed.hpp"
#include "qgr/unipotent.hpp"
#include "qgr/zseries.hpp"

namespace qgr {

using json = nlohmann::ordered_json;

// {"2k": "coefficient"} with doubled-exponent keys sorted numerically
json laurent_to_json(const LaurentHalf& p);

json zseries_to_json(const ZSeries& s);

// sorted by (total degree, lexicographic on the variable keys)
json qtelement_to_json(const QTElement& x);

json jclass_to_json(const CartanDatum& d, const JClass& c, bool conjectural = false);

json filtration_to_json(const FiltrationReport& r);

json mixed_dual_to_json(const std::map<MultiIndex, LaurentHalf>& exp, bool adapted);

// sl2 pretty name: L(Y_{1,j-1}) -> "S_j", products spelled out
std::string sl2_pretty(const CartanDatum& d, const IMonomial& m);

}  // namespace qgr
