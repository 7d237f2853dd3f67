#pragma once

#include "udca/dc_classes.hpp"
#include "udca/decompose.hpp"
#include "udca/lattice_set.hpp"
#include "udca/matrix.hpp"
#include "udca/polytope.hpp"

#include <json.hpp>

#include <string>

namespace udca {

using Json = nlohmann::ordered_json;

/// Integers are emitted as JSON numbers while they fit 53 bits exactly and
/// as decimal strings beyond that; both forms parse.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

Json rat_to_json(const Rat& v);  // "p/q" string, or plain "p"
Rat rat_from_json(const Json& j);

Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

Json lattice_set_to_json(const LatticeSet& s);
LatticeSet lattice_set_from_json(const Json& j);

/// V-representation in; V- and H-representation out.
Json polytope_to_json(const Polytope& p);
Polytope polytope_from_json(const Json& j, const Budget& budget = Budget::current());

Json system_to_json(const UnimodularSystem& sys);
UnimodularSystem system_from_json(const Json& j, bool checked = true);

Json set_function_to_json(const SetFunction& f);
SetFunction set_function_from_json(const Json& j, const std::string& key);

Json subspace_to_json(const Subspace& s);
Json face_to_json(const Polytope& p, const Face& f);
Json decomposition_to_json(const Decomposition& d);
Json dcp2_report_to_json(const Dcp2Report& r);

Json load_json_file(const std::string& path);  // ParseError on trouble

}  // namespace udca
