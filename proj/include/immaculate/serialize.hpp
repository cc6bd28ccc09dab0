#pragma once

#include <string>

#include <json.hpp>

#include "immaculate/analysis.hpp"
#include "immaculate/expansion.hpp"
#include "immaculate/hecke.hpp"
#include "immaculate/tableau.hpp"

namespace immaculate {

using Json = nlohmann::ordered_json;

// {"algebra":"QSym","basis":"M","degree":3,"coeffs":{"[2,1]":"5",...}} with
// keys in graded-lex order and coefficients as exact decimal strings.
Json expansion_json(const BasisExpansion& x);

// Compact form used by the `char` subcommand: {"F":{"[3]":"1"}}.
Json expansion_json_compact(const BasisExpansion& x);

Json tableau_json(const ImmaculateTableau& t);  // array of rows

// {"label":"V","alpha":"[2,2,3]","dim":24,"generators":{"1":[...],...}} with
// images {"fixed":true} | {"zero":true} | {"to":k} (0-based indices).
Json module_json(const HeckeModule& m);

Json certificate_json(const IndecomposabilityCertificate& cert);

// Action graph: one vertex per basis element named by its word, an edge
// T -> S labelled i when pi_i moves T to S, self-loops omitted, and a shared
// "0" sink present exactly when some image is zero.
std::string module_dot(const HeckeModule& m);

}  // namespace immaculate
