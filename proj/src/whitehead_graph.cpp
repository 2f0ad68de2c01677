#include "onerel/whitehead_graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "onerel/errors.hpp"

namespace onerel {

namespace {

// Simple adjacency over the support: parallel edges merged, loops dropped.
std::vector<std::vector<int>> simple_adjacency(const WhiteheadGraph& g) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertex_count()));
  for (auto [u, v] : g.edges()) {
    if (u == v) continue;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& nbrs : adj) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  return adj;
}

}  // namespace

void WhiteheadGraph::add_edge(Letter a, Letter b) {
  if (a.index > rank_ || b.index > rank_) throw RankError("Whitehead graph vertex outside rank");
  Edge e = std::minmax(a.key(), b.key());
  edges_.insert(std::upper_bound(edges_.begin(), edges_.end(), e), e);
}

std::size_t WhiteheadGraph::multiplicity(Letter a, Letter b) const {
  Edge e = std::minmax(a.key(), b.key());
  auto [lo, hi] = std::equal_range(edges_.begin(), edges_.end(), e);
  return static_cast<std::size_t>(hi - lo);
}

std::vector<int> WhiteheadGraph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(vertex_count()), 0);
  for (auto [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

std::vector<int> WhiteheadGraph::support() const {
  std::vector<int> out;
  const auto deg = degrees();
  for (int v = 0; v < vertex_count(); ++v) {
    if (deg[v] > 0) out.push_back(v);
  }
  return out;
}

WhiteheadGraph wh_graph(const Word& w) {
  WhiteheadGraph g(w.rank());
  for (std::size_t i = 0; i + 1 < w.size(); ++i) g.add_edge(w[i], w[i + 1].inverse());
  return g;
}

WhiteheadGraph wh_graph_cyclic(const CyclicWord& c) {
  const Word& w = c.word();
  WhiteheadGraph g = wh_graph(w);
  if (!w.empty()) g.add_edge(w.back(), w.front().inverse());
  return g;
}

std::vector<Letter> cut_vertices(const WhiteheadGraph& g) {
  const auto adj = simple_adjacency(g);
  const int n = g.vertex_count();
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<bool> is_cut(static_cast<std::size_t>(n), false);
  int timer = 0;

  // Recursion depth is bounded by 2n.
  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (int u : adj[v]) {
      if (u == parent) continue;
      if (disc[u] >= 0) {
        low[v] = std::min(low[v], disc[u]);
        continue;
      }
      ++children;
      dfs(u, v);
      low[v] = std::min(low[v], low[u]);
      if (parent >= 0 && low[u] >= disc[v]) is_cut[v] = true;
    }
    if (parent < 0 && children > 1) is_cut[v] = true;
  };

  for (int v = 0; v < n; ++v) {
    if (disc[v] < 0 && !adj[v].empty()) dfs(v, -1);
  }
  std::vector<Letter> out;
  for (int v = 0; v < n; ++v) {
    if (is_cut[v]) out.push_back(Letter::from_key(v));
  }
  return out;
}

std::size_t support_components(const WhiteheadGraph& g) {
  const auto adj = simple_adjacency(g);
  const auto sup = g.support();
  std::vector<bool> seen(adj.size(), false);
  std::size_t components = 0;
  for (int start : sup) {
    if (seen[start]) continue;
    ++components;
    std::vector<int> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : adj[v]) {
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
  }
  return components;
}

bool is_two_connected(const WhiteheadGraph& g) {
  // A support consisting only of loops has one vertex and no proper edge;
  // simple_adjacency drops it, so it is reported as not 2-connected.
  const auto adj = simple_adjacency(g);
  bool has_proper_edge = std::any_of(adj.begin(), adj.end(),
                                     [](const auto& nbrs) { return !nbrs.empty(); });
  if (!has_proper_edge) return false;
  return support_components(g) == 1 && cut_vertices(g).empty();
}

std::string vertex_label(Letter l) {
  return "x" + std::to_string(l.index) + (l.sign < 0 ? "'" : "");
}

std::string to_dot(const WhiteheadGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    os << "  \"" << vertex_label(Letter::from_key(v)) << "\";\n";
  }
  for (auto [u, v] : g.edges()) {
    os << "  \"" << vertex_label(Letter::from_key(u)) << "\" -- \""
       << vertex_label(Letter::from_key(v)) << "\";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace onerel
