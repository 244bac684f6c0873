#pragma once

#include <string>
#include <utility>
#include <vector>

namespace milnor {

/// Simple undirected graph on vertices 1..vertex_count. No loops, no
/// duplicate edges; both are rejected at insertion.
class SimpleGraph {
 public:
  explicit SimpleGraph(int vertex_count);

  void add_edge(int a, int b);

  int vertex_count() const { return vertex_count_; }
  /// Edges as (i, j) with i < j, sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_edge(int a, int b) const;
  bool connected() const;

  static SimpleGraph complete(int n);
  static SimpleGraph path(int n);
  /// Accepts "1-2,1-3" as well as whitespace-separated pairs ("1 2\n1 3").
  static SimpleGraph from_edge_list(const std::string& text);

 private:
  int vertex_count_;
  std::vector<std::pair<int, int>> edges_;
};

}  // namespace milnor
