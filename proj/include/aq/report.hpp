#pragma once

#include <string>

#include "json.hpp"

#include "aq/classify.hpp"

namespace aq {

using Json = nlohmann::json;

Json scalar_json(const Field& k, const Scalar& c);
Json point_json(const RationalPoint& p, const Field& k);
Json matrix_json(const PolyMatrix& M);
// presentation, with zero/free flags after pruning
Json module_json(const FPModule& M);
Json complex_json(const FreeComplex& C);
Json homology_json(const HomologyReport& r);
Json classification_json(const ClassificationReport& r, const Field& k);
// levels with variables, faces and degeneracies written out
Json simplicial_json(const SimplicialAlgebra& A);
Json violations_json(const std::vector<IdentityViolation>& v);

// sorted keys, two-space indent, trailing newline
std::string canonical_dump(const Json& j);

}  // namespace aq
