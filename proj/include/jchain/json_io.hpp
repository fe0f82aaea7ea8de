#pragma once

#include <nlohmann/json.hpp>

#include "jchain/instances.hpp"

namespace jchain {

using Json = nlohmann::json;

// Matrix wire format: {"rows": n, "cols": m, "entries": [[scalar string...]...]}.
// A subspace serializes as the matrix of its canonical basis rows.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j);

// {"ambient": n, "vectors": [[scalar...]...]} in chain order.
Json tuple_to_json(const GeneratorTuple& u);
GeneratorTuple tuple_from_json(const Json& j);

Json report_to_json(const TheoremReport& r);

// {"F": matrix, "D": matrix, "Q": matrix}
Json problem_to_json(const RiccatiProblem& p);
RiccatiProblem problem_from_json(const Json& j);

Json solution_to_json(const RiccatiSolution& s, const std::vector<size_t>& segre);

/// Parses a JSON document; throws ParseError with context on bad input.
Json parse_json(const std::string& text);
Json load_json_file(const std::string& path);

} // namespace jchain
