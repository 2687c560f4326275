#pragma once

// JSON forms of the library's exchange types. Rationals travel as "p/q"
// strings and factored integers as "2^23 * 5" strings, since JSON numbers
// cannot carry big integers.
//
//   GramMatrix:  {"size": n, "rows": [["1", "1/2"], ...]}
//   Embedding:   {"target_gram": <GramMatrix>, "basis_rows": [[1, 0], ...]}
//   MultiPoly:   {"vars": d+1, "terms": [{"exp": [2, 0], "coef": "1/3"}, ...]}

#include <json.hpp>

#include "symlat/hyperkahler.hpp"
#include "symlat/lattices.hpp"
#include "symlat/multipoly.hpp"
#include "symlat/symform.hpp"

namespace symlat {

using Json = nlohmann::json;

Json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const Json& j);  // symmetric not required

Json gram_to_json(const GramMatrix& g);
GramMatrix gram_from_json(const Json& j);  // validates symmetry

Json embedding_to_json(const Embedding& e);
Embedding embedding_from_json(const Json& j);

Json multipoly_to_json(const MultiPoly& p);
MultiPoly multipoly_from_json(const Json& j);

Json primes_to_json(const std::vector<Integer>& primes);
Json hk_report_to_json(const HKReport& r);

Json read_json_file(const std::string& path);

}  // namespace symlat
