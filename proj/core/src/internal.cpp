#include "internal.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace dgi::internal {

IndexedGraph::IndexedGraph(const Digraph& g) : graph(&g) {
  const auto& vs = g.vertices();
  const int n = static_cast<int>(vs.size());
  index.reserve(vs.size());
  for (int i = 0; i < n; ++i) {
    index.emplace(vs[i], i);
  }
  out.resize(n);
  in.resize(n);
  for (const Arc& a : g.arcs()) {
    out[index.at(a.tail)].push_back(index.at(a.head));
    in[index.at(a.head)].push_back(index.at(a.tail));
  }
  by_label.resize(n);
  std::iota(by_label.begin(), by_label.end(), 0);
  std::sort(by_label.begin(), by_label.end(),
            [&](int a, int b) { return vs[a] < vs[b]; });
}

int IndexedGraph::at(const VertexId& v) const {
  auto it = index.find(v);
  if (it == index.end()) {
    throw Error(ErrorCode::kUnknownVertex, "unknown vertex '" + v + "'");
  }
  return it->second;
}

std::vector<VertexId> IndexedGraph::labels(const std::vector<int>& ids) const {
  std::vector<VertexId> result;
  result.reserve(ids.size());
  for (int i : ids) result.push_back(label(i));
  return result;
}

std::vector<int> bfs_distances(const IndexedGraph& g, int source) {
  std::vector<int> dist(g.n(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : g.out[v]) {
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

}  // namespace dgi::internal
