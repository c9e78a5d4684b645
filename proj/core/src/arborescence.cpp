#include "dgi/arborescence.hpp"

#include <algorithm>
#include <functional>

#include "internal.hpp"

namespace dgi {

using internal::IndexedGraph;

std::vector<VertexId> arborescence_roots(const Digraph& g) {
  IndexedGraph ig(g);
  std::vector<VertexId> roots;
  for (int r = 0; r < ig.n(); ++r) {
    std::vector<int> dist = internal::bfs_distances(ig, r);
    if (std::all_of(dist.begin(), dist.end(), [](int d) { return d >= 0; })) {
      roots.push_back(ig.label(r));
    }
  }
  return roots;
}

Arborescence extract_arborescence(const Digraph& g, const VertexId& root) {
  IndexedGraph ig(g);
  int r = ig.at(root);
  std::vector<int> dist = internal::bfs_distances(ig, r);
  for (int v = 0; v < ig.n(); ++v) {
    if (dist[v] < 0) {
      throw Error(ErrorCode::kNoArborescence,
                  "vertex '" + ig.label(v) + "' is not reachable from root '" +
                      root + "'");
    }
  }
  Arborescence tree;
  tree.root = root;
  for (int v = 0; v < ig.n(); ++v) {
    if (v == r) continue;
    int parent = -1;
    for (int u : ig.in[v]) {
      if (dist[u] != dist[v] - 1) continue;
      if (parent < 0 || ig.label(u) < ig.label(parent)) parent = u;
    }
    tree.parents.emplace_back(ig.label(v), ig.label(parent));
  }
  return tree;
}

std::uint64_t count_arborescences(const Digraph& g, const VertexId& root) {
  IndexedGraph ig(g);
  const int r = ig.at(root);
  const int n = ig.n();
  if (n == 1) return 1;  // the empty tree on the root alone

  std::vector<int> others;
  for (int v = 0; v < n; ++v) {
    if (v != r) others.push_back(v);
  }
  // Assign parents one vertex at a time; a partial assignment stays valid as
  // long as no parent chain loops back. Complete loop-free assignments are
  // exactly the arborescences (the unique parentless vertex is the root).
  std::vector<int> parent(n, -1);
  std::uint64_t count = 0;
  std::function<void(std::size_t)> assign = [&](std::size_t pos) {
    if (pos == others.size()) {
      ++count;
      return;
    }
    int v = others[pos];
    for (int u : ig.in[v]) {
      int w = u;
      while (w >= 0 && w != v) w = parent[w];
      if (w == v) continue;  // would close a cycle
      parent[v] = u;
      assign(pos + 1);
      parent[v] = -1;
    }
  };
  assign(0);
  return count;
}

}  // namespace dgi
