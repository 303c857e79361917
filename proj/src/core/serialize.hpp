#pragma once

#include <string>

#include <json.hpp>

#include "branching.hpp"
#include "characters.hpp"
#include "polyhedra.hpp"
#include "quasipoly.hpp"

namespace lierep {

using Json = nlohmann::ordered_json;

Json weight_json(const Weight& w);
Weight weight_from_json(const Json& j);
Json rational_vector_json(const RationalVector& v);
RationalVector rational_vector_from_json(const Json& j);

// {"rs": "A1", "support": [[[2], 1], [[0], 1], ...]} sorted by weight.
Json character_json(const FormalCharacter& ch);
FormalCharacter character_from_json(const Json& j);

// {"[0]": 1, "[2]": 1}
Json decomposition_json(const DecompositionMap& d);

Json embedding_json(const Embedding& emb);
// {"big": "A1xA1", "small": "A1", "matrix": [[1, 1]], "label": "..."}
Embedding embedding_from_json(const Json& j);
// Builtin name ("diagonal:A2") or path to an embedding JSON file.
Embedding load_embedding(const std::string& name_or_path);

Json table_json(const BranchingTable& t);
std::string table_csv(const BranchingTable& t);

Json cone_json(const Cone& c);
Json quasi_polynomial_json(const QuasiPolynomial& qp);

// Canonical text: compact for scalars and short arrays, one entry per line otherwise.
std::string dump(const Json& j);

}  // namespace lierep
