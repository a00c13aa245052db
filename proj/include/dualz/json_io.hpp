#pragma once

#include <json.hpp>

#include "dualz/complex.hpp"
#include "dualz/normal_form.hpp"

namespace dualz {

using Json = nlohmann::ordered_json;

// Integers are written as decimal strings; JSON numbers are accepted on input.
// Matrices with both dimensions positive are arrays of rows, all other shapes
// are {"rows": r, "cols": c}. Parsers throw ParseError on malformed input and
// propagate the validating constructors' errors.

Json to_json(const Int& x);
Int int_from_json(const Json& j);
std::size_t count_from_json(const Json& j, const char* what);

Json to_json(const IntMatrix& m);
/// `rows`/`cols` give the shape an empty array [] stands for.
IntMatrix matrix_from_json(const Json& j, std::optional<std::size_t> rows = std::nullopt,
                           std::optional<std::size_t> cols = std::nullopt);

Json to_json(const SubgroupEmbedding& e);
SubgroupEmbedding embedding_from_json(const Json& j);

Json to_json(const DiffStructure& d);
DiffStructure diff_from_json(const Json& j);

Json to_json(const DiffMorphism& f);
DiffMorphism diff_morphism_from_json(const Json& j);

Json to_json(const BoundedComplex& x);
BoundedComplex complex_from_json(const Json& j);
/// A complex, or an embedding placed in degrees 0, 1.
BoundedComplex object_from_json(const Json& j);

Json to_json(const ChainMap& f);
ChainMap chain_map_from_json(const Json& j);

Json to_json(const OrbitMorphism& f);
OrbitMorphism orbit_morphism_from_json(const Json& j);

Json to_json(const FiniteAbGroupInv& g);
FiniteAbGroupInv ab_group_from_json(const Json& j);
Json to_json(const GroupInvariants& g);
Json to_json(const Decomposition& d);
Json to_json(const SmithDecomposition& s);
Json to_json(const NormalForm& nf);

}  // namespace dualz
