#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "zeb/capacity.hpp"
#include "zeb/closed_form.hpp"
#include "zeb/entropy_region.hpp"
#include "zeb/graph.hpp"
#include "zeb/random_coder.hpp"
#include "zeb/scheme_oracle.hpp"

namespace zeb {

// A parsed graph plus the letter-naming convention of its source: base 1
// means the file called the first letter "1", base 0 means it started at
// "0".  Reports echo the convention they were given.
struct GraphDocument {
    ConfusionGraph graph;
    int base = 1;
};

// Text format:
//   k
//   a b        (one edge per line)
// with optional comment lines starting with '#' and an optional "base 0" or
// "base 1" directive before the edges.  An explicit endpoint 0 also flips
// the file to base 0.  A leading '{' switches to the JSON form
//   {"k": 3, "edges": [[1,2]], "base": 1}.
GraphDocument parse_graph(std::istream& in);
GraphDocument parse_graph(const std::string& text);
GraphDocument load_graph(const std::string& path);

nlohmann::json graph_to_json(const ConfusionGraph& g, int base = 1);

nlohmann::json capacity_to_json(const CapacityBound& bound);
nlohmann::json certificate_to_json(const RegionCertificate& cert);
nlohmann::json scheme_to_json(const EncodingScheme& scheme, int base = 1);
EncodingScheme scheme_from_json(const nlohmann::json& j, int base = 1);
nlohmann::json families_to_json(const std::vector<FamilyPartition>& families);
nlohmann::json frontier_to_json(const std::vector<MessageVector>& points);
nlohmann::json counterexample_to_json(const CollapseCounterexample& ce);

} // namespace zeb
