#ifndef OPRADIUS_SERIALIZATION_HPP
#define OPRADIUS_SERIALIZATION_HPP

#include "opradius/ensembles.hpp"
#include "opradius/radius.hpp"
#include "opradius/types.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace opradius {

// All documents use key-order-preserving JSON so serialized output is stable
// byte-for-byte across runs.
using Json = nlohmann::ordered_json;

// Matrix document: {"dim": n, "entries": [[[re, im], ...], ...]} row-major.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

// Tuple document: {"dim": n, "operators": [<matrix>, ...]}.
Json tuple_to_json(const OperatorTuple& t);
OperatorTuple tuple_from_json(const Json& j);

// {"value":..., "upper": <number|null>, "witness": [[re, im], ...],
//  "restarts_used":..., "converged":...}
Json estimate_to_json(const RadiusEstimate& e);

Json vector_to_json(const ComplexVector& x);
ComplexVector vector_from_json(const Json& j);

Json ensemble_to_json(const EnsembleSpec& spec);
EnsembleSpec ensemble_from_json(const Json& j);

// Parses text; throws ParseError on syntax errors or schema mismatches.
Json parse_json(const std::string& text, const std::string& context);
Json load_json_file(const std::string& path);

}  // namespace opradius

#endif
