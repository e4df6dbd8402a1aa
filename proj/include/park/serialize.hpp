#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "park/dyck.hpp"
#include "park/ncposet.hpp"
#include "park/polytope.hpp"

namespace park {

using json = nlohmann::json;

// "3,2,1,3" -> {3,2,1,3}; throws std::invalid_argument on anything that is
// not a comma-separated integer list.
Prefs parse_prefs_csv(const std::string& text);

// {"n": 3, "blocks": [[1,3],[2]]}
json partition_to_json(const SetPartition& p);
SetPartition partition_from_json(const json& j);

// {"ground": 5, "labels": [2,2,1,1], "partitions": [[[1],[2],...], ...]}
// Parsing also accepts a bare array of partitions (each a list of blocks).
json chain_to_json(const MaximalChain& chain);
MaximalChain chain_from_json(const json& j);

// {"labels": [1,3,4,5,2], "word": "NNENNEENEE"}
json labeled_path_to_json(const LabeledDyckPath& lp);
LabeledDyckPath labeled_path_from_json(const json& j);

// "{1,3}{2}" -- block notation used for graph labels.
std::string block_notation(const SetPartition& p);

std::string hasse_to_dot(const HasseDiagram& h);
json hasse_to_json(const HasseDiagram& h);

std::string permutahedron_to_dot(const PermutahedronGraph& g);
json permutahedron_to_json(const PermutahedronGraph& g);

// One point per line, comma-separated; optional x1..xn header row.
std::string points_to_csv(const std::vector<LatticePoint>& points, bool header);

} // namespace park
