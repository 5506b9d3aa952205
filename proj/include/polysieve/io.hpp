#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "polysieve/families.hpp"
#include "polysieve/graph.hpp"

namespace polysieve {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Graph format: header "n m", then m lines "u v" with 0 <= u < v < n.
/// Diagnostics carry 1-based line numbers.
Graph parse_graph(const std::string& text);

/// Family format: header "n q" for a plain family or "q r partite" for a
/// q-partite one, then one member per line (q indices). Partite members use
/// global indices, one from each range [j*r, (j+1)*r).
std::variant<SetFamily, PartiteFamily> parse_family(const std::string& text);

std::string format_family(const SetFamily& family);

enum class PackingEncoding { vertex_triangle, edge_triangle, vertex_p3 };

/// Graph-derived set-packing instances: triangles as vertex 3-sets,
/// triangles as edge 3-sets, or 3-vertex paths as vertex 3-sets.
SetFamily encode_graph_packing(const Graph& g, PackingEncoding mode);

}  // namespace polysieve
