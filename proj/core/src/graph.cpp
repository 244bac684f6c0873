#include "milnor/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace milnor {

namespace {

// Union-find with path compression; representative = smallest member index.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int v) {
    while (parent_[static_cast<size_t>(v)] != v) {
      parent_[static_cast<size_t>(v)] =
          parent_[static_cast<size_t>(parent_[static_cast<size_t>(v)])];
      v = parent_[static_cast<size_t>(v)];
    }
    return v;
  }

  void unite(int a, int b) {
    int ra = find(a);
    int rb = find(b);
    if (ra == rb) return;
    // Keep the smaller index as the root so labels are deterministic.
    if (ra > rb) std::swap(ra, rb);
    parent_[static_cast<size_t>(rb)] = ra;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

ArrGraph build_graph(const FlatList& flats) {
  ArrGraph graph;
  graph.vertex_count = flats.d();
  for (const Rank2Flat& flat : flats.flats()) {
    if (flat.multiplicity == 2) {
      graph.edges.emplace_back(flat.members[0], flat.members[1]);
    }
  }
  UnionFind uf(graph.vertex_count);
  for (const auto& [a, b] : graph.edges) uf.unite(a, b);
  graph.component_label.resize(static_cast<size_t>(graph.vertex_count));
  std::map<int, std::vector<int>> by_label;
  for (int v = 0; v < graph.vertex_count; ++v) {
    int label = uf.find(v);
    graph.component_label[static_cast<size_t>(v)] = label;
    by_label[label].push_back(v);
  }
  for (auto& [label, vertices] : by_label) {
    graph.components.push_back(std::move(vertices));
  }
  return graph;
}

bool is_connected(const ArrGraph& graph) {
  return graph.component_count() == 1;
}

std::string to_dot(const ArrGraph& graph,
                   const std::vector<std::string>& labels) {
  std::ostringstream os;
  os << "graph G {\n";
  std::vector<bool> touched(static_cast<size_t>(graph.vertex_count), false);
  for (const auto& [a, b] : graph.edges) {
    os << "  \"" << labels[static_cast<size_t>(a)] << "\" -- \""
       << labels[static_cast<size_t>(b)] << "\";\n";
    touched[static_cast<size_t>(a)] = true;
    touched[static_cast<size_t>(b)] = true;
  }
  for (int v = 0; v < graph.vertex_count; ++v) {
    if (!touched[static_cast<size_t>(v)]) {
      os << "  \"" << labels[static_cast<size_t>(v)] << "\";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace milnor
