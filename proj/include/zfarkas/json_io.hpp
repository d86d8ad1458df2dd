#pragma once

// JSON encodings. Integers and rationals travel as strings ("p" or "p/q");
// coordinate indices are 1-based.

#include <json.hpp>

#include "zfarkas/certgen.hpp"
#include "zfarkas/eclass.hpp"
#include "zfarkas/exactnum.hpp"
#include "zfarkas/lattice.hpp"
#include "zfarkas/modlin.hpp"
#include "zfarkas/qpsolve.hpp"
#include "zfarkas/relations.hpp"

namespace zfarkas::json_io {

using Json = nlohmann::json;

/// Raised for any schema violation; the CLI maps it to exit code 1.
class SchemaError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Accepts a JSON integer or a decimal string.
Int int_from_json(const Json& j);
/// Accepts a JSON integer or a string "p" / "p/q".
Rat rat_from_json(const Json& j);
IntVector int_vector_from_json(const Json& j);
RatVector rat_vector_from_json(const Json& j);

Json to_json(const Int& x);
Json to_json(const Rat& x);
Json to_json(const IntVector& v);
Json to_json(const RatVector& v);
Json to_json(const PrimeSet& p);

/// {"ambient_dim": n, "generators": [[...], ...]}
Lattice lattice_from_json(const Json& j);
Json to_json(const Lattice& l);

/// Box from "lower" / "upper" fields of an instance object.
Box box_from_json(const Json& j);

/// Nested {"v", "pair_coords", "zero_coords", "child"} plus the level's
/// ambient dimension and basis.
Json to_json(const EClassCertificate& cert);

/// {"op": "a"|"b", "i": k}, {"op": "neg", "arg"}, {"op": "floordiv"|"ceildiv",
/// "m", "arg"}, {"op": "diff", "lhs", "rhs"}.
Json to_json(const ModLinExpr& e);
ModLinExpr modlin_from_json(const Json& j);

Json to_json(const CertificateSet& set);
CertificateSet certificate_set_from_json(const Json& j);

/// {"vectors": [[...] per vector]}; each inner list is one vector v_i.
VectorFamily family_from_json(const Json& j);
Json to_json(const Circuit& c);

/// {"vectors", "target", "lower", "upper", "prime_set"?}
QpBoxInstance qp_instance_from_json(const Json& j);
Json to_json(const RefinementTrace& trace);

}  // namespace zfarkas::json_io
