#include "dgi/connectivity.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "internal.hpp"

namespace dgi {

using internal::IndexedGraph;

std::string to_string(ConnectivityClass c) {
  switch (c) {
    case ConnectivityClass::kStrong: return "strong";
    case ConnectivityClass::kWeaklyConnected: return "weakly_connected";
    case ConnectivityClass::kDisconnected: return "disconnected";
  }
  return "unknown";
}

DistanceMatrix::DistanceMatrix(std::vector<VertexId> vertices,
                               std::vector<std::vector<int>> dist)
    : vertices_(std::move(vertices)), dist_(std::move(dist)) {}

std::optional<std::size_t> DistanceMatrix::distance(const VertexId& from,
                                                    const VertexId& to) const {
  auto find = [&](const VertexId& v) {
    auto it = std::find(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end()) {
      throw Error(ErrorCode::kUnknownVertex, "unknown vertex '" + v + "'");
    }
    return static_cast<std::size_t>(it - vertices_.begin());
  };
  int d = dist_[find(from)][find(to)];
  if (d < 0) return std::nullopt;
  return static_cast<std::size_t>(d);
}

DistanceMatrix all_pairs_distances(const Digraph& g) {
  IndexedGraph ig(g);
  std::vector<std::vector<int>> dist;
  dist.reserve(ig.n());
  for (int v = 0; v < ig.n(); ++v) {
    dist.push_back(internal::bfs_distances(ig, v));
  }
  return DistanceMatrix(g.vertices(), std::move(dist));
}

EccentricityReport eccentricity_report(const Digraph& g) {
  IndexedGraph ig(g);
  EccentricityReport report;
  for (int v = 0; v < ig.n(); ++v) {
    if (ig.out[v].empty()) continue;  // reaches nothing but itself
    std::vector<int> dist = internal::bfs_distances(ig, v);
    int e = 0;
    for (int d : dist) e = std::max(e, d);
    report.eccentricity.emplace_back(ig.label(v), static_cast<std::size_t>(e));
  }
  if (report.eccentricity.empty()) {
    throw Error(ErrorCode::kNoEligibleVertex,
                "no vertex reaches another vertex; eccentricity undefined");
  }
  report.radius = report.eccentricity.front().second;
  report.diameter = report.radius;
  for (const auto& [v, e] : report.eccentricity) {
    report.radius = std::min(report.radius, e);
    report.diameter = std::max(report.diameter, e);
  }
  for (const auto& [v, e] : report.eccentricity) {
    if (e == report.radius) report.center.push_back(v);
    if (e == report.diameter) report.periphery.push_back(v);
  }
  return report;
}

std::size_t StrongComponentPartition::max_component_order() const {
  std::size_t m = 0;
  for (const auto& c : components) m = std::max(m, c.size());
  return m;
}

StrongComponentPartition strong_components(const Digraph& g) {
  IndexedGraph ig(g);
  const int n = ig.n();

  // Tarjan. Components pop in reverse topological order of the condensation,
  // so reversing at the end yields sources-first order.
  std::vector<int> number(n, -1), lowlink(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  std::vector<std::vector<int>> components;
  int next_number = 0;

  std::function<void(int)> visit = [&](int v) {
    number[v] = lowlink[v] = next_number++;
    stack.push_back(v);
    on_stack[v] = true;
    for (int u : ig.out[v]) {
      if (number[u] < 0) {
        visit(u);
        lowlink[v] = std::min(lowlink[v], lowlink[u]);
      } else if (on_stack[u]) {
        lowlink[v] = std::min(lowlink[v], number[u]);
      }
    }
    if (lowlink[v] == number[v]) {
      std::vector<int> component;
      int u;
      do {
        u = stack.back();
        stack.pop_back();
        on_stack[u] = false;
        component.push_back(u);
      } while (u != v);
      std::sort(component.begin(), component.end());  // insertion order
      components.push_back(std::move(component));
    }
  };
  for (int v = 0; v < n; ++v) {
    if (number[v] < 0) visit(v);
  }
  std::reverse(components.begin(), components.end());

  StrongComponentPartition partition;
  for (const auto& c : components) {
    partition.components.push_back(ig.labels(c));
  }
  return partition;
}

ConnectivityClass connectivity_class(const Digraph& g) {
  if (strong_components(g).components.size() <= 1) {
    return ConnectivityClass::kStrong;
  }
  Digraph undirected = underlying_graph(g);
  IndexedGraph ig(undirected);
  std::vector<int> dist = internal::bfs_distances(ig, 0);
  bool connected = std::all_of(dist.begin(), dist.end(), [](int d) { return d >= 0; });
  return connected ? ConnectivityClass::kWeaklyConnected
                   : ConnectivityClass::kDisconnected;
}

std::vector<Arc> transitive_closure_additions(const Digraph& g) {
  IndexedGraph ig(g);
  std::vector<Arc> additions;
  for (int v = 0; v < ig.n(); ++v) {
    std::vector<int> dist = internal::bfs_distances(ig, v);
    for (int u = 0; u < ig.n(); ++u) {
      if (u != v && dist[u] >= 2) {  // dist 1 arcs already exist
        additions.push_back({ig.label(v), ig.label(u)});
      }
    }
  }
  return additions;  // already ordered by (tail position, head position)
}

Digraph transitive_closure(const Digraph& g) {
  std::vector<Arc> arcs = g.arcs();
  for (Arc& a : transitive_closure_additions(g)) {
    arcs.push_back(std::move(a));
  }
  return Digraph::build(g.vertices(), arcs);
}

bool reachable(const Digraph& g, const VertexId& from, const VertexId& to) {
  IndexedGraph ig(g);
  int target = ig.at(to);
  return internal::bfs_distances(ig, ig.at(from))[target] >= 0;
}

namespace {

// Kahn's algorithm; returns the processed prefix (complete iff acyclic).
std::vector<int> kahn_order(const IndexedGraph& ig, TopoTieBreak tie_break) {
  const int n = ig.n();
  std::vector<int> in_degree(n);
  for (int v = 0; v < n; ++v) {
    in_degree[v] = static_cast<int>(ig.in[v].size());
  }
  std::vector<bool> placed(n, false);
  std::vector<int> order;
  for (;;) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (placed[v] || in_degree[v] != 0) continue;
      if (pick < 0) {
        pick = v;
      } else if (tie_break == TopoTieBreak::kHighestLabelFirst &&
                 ig.label(v) > ig.label(pick)) {
        pick = v;
      }
    }
    if (pick < 0) break;
    placed[pick] = true;
    order.push_back(pick);
    for (int u : ig.out[pick]) --in_degree[u];
  }
  return order;
}

// In the residual graph of an incomplete Kahn run every vertex has an
// in-neighbor, so walking backwards must revisit some vertex: that loop,
// reversed into arc direction, is a witness cycle.
std::vector<VertexId> find_cycle(const IndexedGraph& ig,
                                 const std::vector<int>& topo_prefix) {
  const int n = ig.n();
  std::vector<bool> residual(n, true);
  for (int v : topo_prefix) residual[v] = false;
  int start = -1;
  for (int v = 0; v < n && start < 0; ++v) {
    if (residual[v]) start = v;
  }
  std::vector<int> trail;
  std::vector<int> seen_at(n, -1);
  int v = start;
  while (seen_at[v] < 0) {
    seen_at[v] = static_cast<int>(trail.size());
    trail.push_back(v);
    for (int u : ig.in[v]) {
      if (residual[u]) {
        v = u;
        break;
      }
    }
  }
  std::vector<int> loop(trail.begin() + seen_at[v], trail.end());
  std::reverse(loop.begin(), loop.end());  // backward walk -> arc direction
  loop.push_back(loop.front());
  std::vector<VertexId> cycle;
  for (int u : loop) cycle.push_back(ig.label(u));
  return cycle;
}

}  // namespace

bool is_acyclic(const Digraph& g) {
  IndexedGraph ig(g);
  return kahn_order(ig, TopoTieBreak::kInsertionOrder).size() ==
         static_cast<std::size_t>(ig.n());
}

std::vector<VertexId> topological_sort(const Digraph& g, TopoTieBreak tie_break) {
  IndexedGraph ig(g);
  std::vector<int> order = kahn_order(ig, tie_break);
  if (order.size() != static_cast<std::size_t>(ig.n())) {
    std::vector<VertexId> cycle = find_cycle(ig, order);
    std::string text = "graph contains a cycle:";
    for (const VertexId& v : cycle) text += " " + v;
    throw CyclicGraphError(text, std::move(cycle));
  }
  return ig.labels(order);
}

bool is_topological_order(const Digraph& g, std::span<const VertexId> order) {
  if (order.size() != g.vertex_count()) return false;
  std::unordered_map<VertexId, std::size_t> position;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!g.has_vertex(order[i])) return false;
    if (!position.emplace(order[i], i).second) return false;
  }
  for (const Arc& a : g.arcs()) {
    if (position.at(a.tail) >= position.at(a.head)) return false;
  }
  return true;
}

namespace {

Walk longest_path_dag(const IndexedGraph& ig) {
  std::vector<int> order = kahn_order(ig, TopoTieBreak::kInsertionOrder);
  const int n = ig.n();
  // best_to[v]: longest path ending at v; ties prefer the predecessor and the
  // end vertex with the smallest insertion index, keeping the result unique.
  std::vector<int> best_to(n, 0), pred(n, -1);
  for (int v : order) {
    for (int u : ig.in[v]) {
      int candidate = best_to[u] + 1;
      if (candidate > best_to[v] || (candidate == best_to[v] && u < pred[v])) {
        best_to[v] = candidate;
        pred[v] = u;
      }
    }
  }
  int end = 0;
  for (int v = 1; v < n; ++v) {
    if (best_to[v] > best_to[end]) end = v;
  }
  std::vector<int> path;
  for (int v = end; v >= 0; v = pred[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return Walk(ig.labels(path));
}

}  // namespace

Walk longest_path(const Digraph& g, std::size_t exhaustive_limit) {
  if (g.empty()) return Walk();
  IndexedGraph ig(g);
  if (is_acyclic(g)) {
    return longest_path_dag(ig);
  }
  if (g.vertex_count() > exhaustive_limit) {
    throw Error(ErrorCode::kTooLargeForExhaustive,
                "cyclic graph with " + std::to_string(g.vertex_count()) +
                    " vertices exceeds the exhaustive limit of " +
                    std::to_string(exhaustive_limit));
  }
  const int n = ig.n();
  std::vector<bool> used(n, false);
  std::vector<int> current, best;
  std::function<void(int)> extend = [&](int v) {
    used[v] = true;
    current.push_back(v);
    if (current.size() > best.size()) best = current;
    for (int u : ig.out[v]) {
      if (!used[u]) extend(u);
    }
    current.pop_back();
    used[v] = false;
  };
  for (int v = 0; v < n; ++v) extend(v);
  return Walk(ig.labels(best));
}

}  // namespace dgi
