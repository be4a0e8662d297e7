#pragma once

#include "json.hpp"

#include "orderdim/geometry.hpp"
#include "orderdim/homogeneity.hpp"
#include "orderdim/poset.hpp"
#include "orderdim/realizer_flow.hpp"

namespace orderdim {

using Json = nlohmann::ordered_json;

// {"elements": [...], "lt": [[bool, ...], ...]}
Json poset_to_json(const FinitePoset& p);
FinitePoset poset_from_json(const Json& j);

// Orders are written as label sequences, least first.
Json order_to_json(const FinitePoset& p, const LinearOrder& o);
LinearOrder order_from_json(const FinitePoset& p, const Json& j);

// Poset fields plus "realizers". Without "lt" the order is the intersection
// of the realizers.
Json structure_to_json(const OrderedStructure& s);
OrderedStructure structure_from_json(const Json& j);

// {"dim": n, "points": [["p/q", ...], ...]}
Json point_to_json(const Point& p);
Point point_from_json(const Json& j);
Json cloud_to_json(const PointCloud& c);
PointCloud cloud_from_json(const Json& j);

Json region_to_json(const Region& r);
Json report_to_json(const AxiomReport& r);

Json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

Json decomposition_to_json(const DecompositionReport& r);

// Parses text; kParseError on malformed JSON.
Json parse_json(const std::string& text);

}  // namespace orderdim
