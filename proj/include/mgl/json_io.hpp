#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mgl/complexes.hpp"
#include "mgl/operad.hpp"

namespace mgl::io {

using nlohmann::json;

/// Malformed or schema-violating input (as opposed to a well-formed object
/// that fails a mathematical condition).
class InputError : public Error {
 public:
  using Error::Error;
};

json read_json_file(const std::string& path);
void write_json(const json& j, const std::string& path);  // "-" or "" for stdout

/// {"n": 4}, {"labels": [...]} or {"elements": [0, 2, 5]}.
GroundSet ground_from_json(const json& j);
/// Adds the ground keys of `ground` to the object `j`.
void put_ground(json& j, const GroundSet& ground);
int rank_from_json(const json& j);

/// "p/q", an integer, "inf", or "v-log2(c)".
TropicalValue tropical_value_from_json(const json& j);
json tropical_value_to_json(const TropicalValue& v);

/// {"d", ground, "support": [[...], ...]}
MatroidCandidate matroid_from_json(const json& j);
json matroid_to_json(const Matroid& m);

/// {"d", ground, "values": [...]} aligned with the lexicographic basis
/// order, or "entries": [{"basis": [...], "val": ...}].
TropicalVector tropical_from_json(const json& j);
json tropical_to_json(const TropicalVector& phi);

/// {"d", ground, "signs": [...]} aligned, or "entries": [{"basis", "sign"}].
SignMap chirotope_from_json(const json& j);
json chirotope_to_json(const SignMap& chi);

/// Coordinates {"sign": 1, "val": "3/2"} or {"q": "-7/4"}; the vector is
/// {"d", ground, "entries": [{"basis": [...], <coordinate>}]} or "values"
/// aligned with the basis order (0 for a zero coordinate).
SignedTropical orval_coordinate_from_json(const json& j);
OrientedTropicalVector orval_from_json(const json& j);
json orval_to_json(const OrientedTropicalVector& Phi);

json initial_datum_to_json(const InitialDatum& I);
json cell_to_json(const CertifiedCell& cell);
json oriented_cell_to_json(const OrientedCellId& cell);

/// {"size": n, "leq": [[i, j], ...] (i < j strictly), "labels": [...]}.
FinitePoset poset_from_json(const json& j);
json poset_to_json(const FinitePoset& P);
json macp_to_json(const MacPPoset& macp, int d, std::size_t n);

/// {"num_vertices", "facets", "f_vector", "euler_characteristic"}; reading
/// accepts "facets" or "faces".
SimplicialComplex complex_from_json(const json& j);
json complex_to_json(const SimplicialComplex& K);

/// [{"map": {"0": 5, "1": 7}}, ...]
std::vector<Injection> family_from_json(const json& j);

/// {"unit": true} or {"arity", "window", "terms": [{"weight": "1/2",
/// "vertex": [[images of (0, m)], [images of (1, m)], ...]}]}.  Points are
/// checked as simplices unless "consistent": true (composites).
OperadPoint operad_point_from_json(const json& j);
json operad_point_to_json(const OperadPoint& p);

}  // namespace mgl::io
