#pragma once

#include "pbundle/classify.hpp"
#include "pbundle/cw_complex.hpp"
#include "pbundle/oracle.hpp"

#include <json.hpp> // vendored single header (nlohmann)

#include <string>
#include <vector>

namespace pbundle {

// ordered_json keeps insertion order, so identical inputs serialize
// byte-identically (the CLI's stability contract).
using Json = nlohmann::ordered_json;

/* Complex file format: {"name": str, "vertices": [str], "edges":
 * [{"name","src","dst"}], "faces": [{"name","word": [[edge, +1|-1],...]}],
 * "basepoint": str}. Unknown fields are rejected; fields that would declare
 * 3-dimensional cells (solids, tetrahedra, cells3, three_cells, threeCells,
 * volumes) are rejected as DimensionError, since no 2-complex can hold them. */
CwComplex2 complexFromJson(const Json& j);
CwComplex2 loadComplexFile(const std::string& path);

Json groupToJson(const FgAbelianGroup& g);     // {"free_rank": n, "factors": [...]}
FgAbelianGroup groupFromJson(const Json& j);

GroupDescriptor descriptorFromJson(const Json& j); // explicit descriptor form

// {"complex","group","verdict","kernel","quotient","classified_group",
//  "cardinality","citations"}; classified_group null only when undetermined,
// cardinality a number, "infinite", or "unknown".
Json resultToJson(const ClassificationResult& r);

Json oracleReportToJson(const OracleReport& r);

} // namespace pbundle
