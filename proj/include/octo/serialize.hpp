#pragma once

#include <string>

#include <json.hpp>

#include "octo/eisenstein.hpp"
#include "octo/fano.hpp"
#include "octo/graph.hpp"
#include "octo/octonion.hpp"
#include "octo/orientation_search.hpp"
#include "octo/triangulation.hpp"

namespace octo {

using Json = nlohmann::ordered_json;

/// {"lines": [[a,b,c], ...], "oriented": bool}
Json to_json(const FanoPlane& plane);
Json to_json(const OrientedFanoPlane& plane);
/// Accepts the form above; "oriented" selects the plane type.
FanoPlane fano_plane_from_json(const Json& j);
OrientedFanoPlane oriented_fano_plane_from_json(const Json& j);

enum class TableFormat { Text, Csv, Json };

/// 8x8 product grid, row = left factor. Entries are "1", "-1", "e0".."e6",
/// "-e0".."-e6". Output ends with a newline.
std::string render_table(const StructureConstants& sc, TableFormat format);

/// {"representatives": [{"value": [a,b], "label": ..., "residue": r}, ...],
///  "squares": [1,2,4], "edges": [[from,to], ...]}
Json residue_table_json(Chirality chirality = Chirality::Standard);

/// {"total", "survivors", "classes": [{"representative","size"}], "paley_mask"}
Json to_json(const SearchReport& report);

/// Sorted list of sorted triples.
Json to_json(const Triangulation& tri);

/// {"vertices": [{"id", "tag"}], "adjacency": [[...], ...]}
Json to_json(const SimpleGraph& g);

Json to_json(const CheckResult& r);
Json to_json(const CheckReport& r);

}  // namespace octo
