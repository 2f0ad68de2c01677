#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "onerel/words.hpp"

namespace onerel {

// Undirected multigraph on the 2n vertices x1, x1^-1, ..., xn, xn^-1.
// Vertices are identified by Letter::key().  Each adjacent pair a b of the
// source word contributes the edge {a, b^-1}.
class WhiteheadGraph {
 public:
  using Edge = std::pair<int, int>;  // normalized: first <= second

  explicit WhiteheadGraph(int rank) : rank_(rank) {}

  void add_edge(Letter a, Letter b);

  int rank() const noexcept { return rank_; }
  int vertex_count() const noexcept { return 2 * rank_; }
  // Sorted edge multiset.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t multiplicity(Letter a, Letter b) const;
  std::vector<int> degrees() const;
  // Vertices of degree >= 1, ascending.
  std::vector<int> support() const;

  friend bool operator==(const WhiteheadGraph&, const WhiteheadGraph&) = default;

 private:
  int rank_;
  std::vector<Edge> edges_;
};

// Internal edges only: no edge between the last letter and the first.
WhiteheadGraph wh_graph(const Word& w);

// All cyclic adjacencies, including the wrap-around (external) edge.
WhiteheadGraph wh_graph_cyclic(const CyclicWord& c);

// Articulation points of the support, loops and multiplicities ignored.
std::vector<Letter> cut_vertices(const WhiteheadGraph& g);

// Number of connected components of the support.
std::size_t support_components(const WhiteheadGraph& g);

// Support nonempty, connected, no cut vertex.  A single edge counts.
bool is_two_connected(const WhiteheadGraph& g);

// Vertex label used by to_dot: "x1" for x1, "x1'" for its inverse.
std::string vertex_label(Letter l);

// Deterministic DOT text: all 2n vertices declared in key order, then one
// line per edge (parallel edges repeated) in sorted order.
std::string to_dot(const WhiteheadGraph& g, const std::string& name = "Wh");

}  // namespace onerel
