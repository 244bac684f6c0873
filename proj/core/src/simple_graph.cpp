#include "milnor/simple_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "milnor/errors.hpp"

namespace milnor {

SimpleGraph::SimpleGraph(int vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count < 1) {
    throw InputError("bad-graph", "graph needs at least one vertex");
  }
}

void SimpleGraph::add_edge(int a, int b) {
  if (a == b) {
    throw InputError("graph-loop", "loop at vertex " + std::to_string(a));
  }
  if (a < 1 || b < 1 || a > vertex_count_ || b > vertex_count_) {
    throw InputError("graph-range", "edge endpoint out of range");
  }
  std::pair<int, int> edge{std::min(a, b), std::max(a, b)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), edge);
  if (it != edges_.end() && *it == edge) {
    throw InputError("graph-multi-edge",
                     "duplicate edge " + std::to_string(edge.first) + "-" +
                         std::to_string(edge.second));
  }
  edges_.insert(it, edge);
}

bool SimpleGraph::has_edge(int a, int b) const {
  std::pair<int, int> edge{std::min(a, b), std::max(a, b)};
  return std::binary_search(edges_.begin(), edges_.end(), edge);
}

bool SimpleGraph::connected() const {
  std::vector<int> parent(static_cast<size_t>(vertex_count_));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<size_t>(v)] != v) {
      parent[static_cast<size_t>(v)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
      v = parent[static_cast<size_t>(v)];
    }
    return v;
  };
  for (const auto& [a, b] : edges_) {
    parent[static_cast<size_t>(find(a - 1))] = find(b - 1);
  }
  int root = find(0);
  for (int v = 1; v < vertex_count_; ++v) {
    if (find(v) != root) return false;
  }
  return true;
}

SimpleGraph SimpleGraph::complete(int n) {
  SimpleGraph g(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
  }
  return g;
}

SimpleGraph SimpleGraph::path(int n) {
  SimpleGraph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
  return g;
}

SimpleGraph SimpleGraph::from_edge_list(const std::string& text) {
  std::string normalized = text;
  for (char& c : normalized) {
    if (c == ',' || c == '-') c = ' ';
  }
  std::istringstream in(normalized);
  std::vector<std::pair<int, int>> pairs;
  int a = 0, b = 0;
  while (in >> a) {
    if (!(in >> b)) {
      throw InputError("bad-edge-list", "odd number of vertex tokens");
    }
    pairs.emplace_back(a, b);
  }
  if (pairs.empty()) {
    throw InputError("bad-edge-list", "no edges given");
  }
  int max_vertex = 0;
  for (const auto& [x, y] : pairs) max_vertex = std::max({max_vertex, x, y});
  SimpleGraph g(max_vertex);
  for (const auto& [x, y] : pairs) g.add_edge(x, y);
  return g;
}

}  // namespace milnor
