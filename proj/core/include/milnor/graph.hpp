#pragma once

#include <string>
#include <utility>
#include <vector>

#include "milnor/lattice.hpp"

namespace milnor {

/// The arrangement graph: one vertex per hyperplane, an edge {i, j} exactly
/// when the flat of the pair has multiplicity 2 (the two hyperplanes meet in
/// a point lying on no third hyperplane).
struct ArrGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
  /// Per-vertex component label: the smallest vertex index in the component.
  std::vector<int> component_label;
  /// Components sorted by label; vertices sorted inside each component.
  std::vector<std::vector<int>> components;

  int component_count() const { return static_cast<int>(components.size()); }
};

ArrGraph build_graph(const FlatList& flats);
bool is_connected(const ArrGraph& graph);

/// DOT export, one edge per line; isolated vertices listed as bare nodes.
std::string to_dot(const ArrGraph& graph,
                   const std::vector<std::string>& labels);

}  // namespace milnor
