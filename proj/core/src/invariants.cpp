#include "dgi/invariants.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>

#include "dgi/connectivity.hpp"
#include "internal.hpp"

namespace dgi {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }
int popcount(Mask m) { return std::popcount(m); }

// Bitmask view used by all solvers in this file. `order` lists vertex
// indices sorted by label; canonical certificates walk that order.
struct SolverGraph {
  explicit SolverGraph(const Digraph& g) : ig(g) {
    n = ig.n();
    if (n > static_cast<int>(kExactSolverVertexCap)) {
      throw Error(ErrorCode::kTooLargeForExhaustive,
                  "exact solvers support up to " +
                      std::to_string(kExactSolverVertexCap) + " vertices, got " +
                      std::to_string(n));
    }
    all = n == 64 ? ~Mask{0} : bit(n) - 1;
    adj.assign(n, 0);
    in_adj.assign(n, 0);
    for (const Arc& a : g.arcs()) {
      int t = ig.at(a.tail), h = ig.at(a.head);
      adj[t] |= bit(h);
      adj[h] |= bit(t);
      in_adj[h] |= bit(t);
    }
  }

  internal::IndexedGraph ig;
  int n = 0;
  Mask all = 0;
  std::vector<Mask> adj;     // either direction
  std::vector<Mask> in_adj;  // tails of in-arcs

  std::vector<VertexId> labels_of(Mask m) const {
    std::vector<VertexId> result;
    for (int v : ig.by_label) {
      if (m & bit(v)) result.push_back(ig.label(v));
    }
    return result;  // sorted by label
  }
};

// ---------------------------------------------------------------- matching

struct MatchingSolver {
  explicit MatchingSolver(const SolverGraph& sg) : sg(sg) {
    // One candidate edge per adjacent unordered pair, carried by its
    // lexicographically least realizing arc; candidates sorted by that arc.
    std::set<std::pair<int, int>> pairs;
    for (const Arc& a : sg.ig.graph->arcs()) {
      int t = sg.ig.at(a.tail), h = sg.ig.at(a.head);
      pairs.insert({std::min(t, h), std::max(t, h)});
    }
    for (auto [a, b] : pairs) {
      Arc lo{sg.ig.label(a), sg.ig.label(b)};
      Arc hi{sg.ig.label(b), sg.ig.label(a)};
      bool lo_ok = sg.ig.graph->has_arc(lo.tail, lo.head);
      bool hi_ok = sg.ig.graph->has_arc(hi.tail, hi.head);
      Arc pick = !lo_ok ? hi : (!hi_ok ? lo : std::min(lo, hi));
      edges.push_back({a, b, pick});
    }
    std::sort(edges.begin(), edges.end(),
              [](const Edge& x, const Edge& y) { return x.arc < y.arc; });
  }

  struct Edge {
    int a, b;
    Arc arc;
  };

  // Branch on the first free vertex that still has a free partner: either it
  // stays unmatched or it pairs with one of them.
  int max_size(Mask free) {
    best = 0;
    search(free, 0);
    return best;
  }

  // Max matching using only edges[from..]; stops early at `enough`.
  int max_size_from(std::size_t from, Mask free, int enough) {
    if (enough <= 0) return 0;
    if (from >= edges.size()) return 0;
    const Edge& e = edges[from];
    int result = 0;
    if ((free & (bit(e.a) | bit(e.b))) == (bit(e.a) | bit(e.b))) {
      result = 1 + max_size_from(from + 1, free & ~bit(e.a) & ~bit(e.b), enough - 1);
      if (result >= enough) return result;
    }
    return std::max(result, max_size_from(from + 1, free, enough));
  }

  const SolverGraph& sg;
  std::vector<Edge> edges;
  int best = 0;

 private:
  void search(Mask free, int size) {
    if (size + popcount(free) / 2 <= best) return;
    int v = -1;
    for (int u = 0; u < sg.n; ++u) {
      if ((free & bit(u)) && (sg.adj[u] & free)) {
        v = u;
        break;
      }
    }
    if (v < 0) {
      best = std::max(best, size);
      return;
    }
    Mask partners = sg.adj[v] & free;
    for (int u = 0; u < sg.n; ++u) {
      if (partners & bit(u)) {
        search(free & ~bit(v) & ~bit(u), size + 1);
      }
    }
    search(free & ~bit(v), size);
  }
};

// ---------------------------------------------------------- independent set

struct IndependentSetSolver {
  explicit IndependentSetSolver(const SolverGraph& sg) : sg(sg) {}

  int alpha(Mask candidates) {
    best = 0;
    search(candidates, 0);
    return best;
  }

  const SolverGraph& sg;
  int best = 0;

 private:
  void search(Mask candidates, int size) {
    if (size + popcount(candidates) <= best) return;
    if (!candidates) {
      best = std::max(best, size);
      return;
    }
    int v = std::countr_zero(candidates);
    search(candidates & ~bit(v) & ~sg.adj[v], size + 1);
    search(candidates & ~bit(v), size);
  }
};

// ------------------------------------------------------------------ coloring

struct ColoringSolver {
  explicit ColoringSolver(const SolverGraph& sg) : sg(sg) {}

  // Can the label-ordered suffix starting at `pos` be completed with at most
  // k colors, given the colors already fixed before `pos`?
  bool completable(int k, std::vector<int>& colors, std::size_t pos, int used) {
    if (pos == sg.ig.by_label.size()) return true;
    int v = sg.ig.by_label[pos];
    // Symmetry breaking: a fresh color may only be the next unused one.
    int limit = std::min(k - 1, used);
    for (int c = 0; c <= limit; ++c) {
      bool clash = false;
      for (std::size_t i = 0; i < pos && !clash; ++i) {
        clash = (sg.adj[v] & bit(sg.ig.by_label[i])) && colors[i] == c;
      }
      if (clash) continue;
      colors[pos] = c;
      if (completable(k, colors, pos + 1, std::max(used, c + 1))) return true;
    }
    colors[pos] = -1;
    return false;
  }

  const SolverGraph& sg;
};

// ---------------------------------------------------------------- domination

struct DominationSolver {
  explicit DominationSolver(const SolverGraph& sg) : sg(sg) {
    coverers.resize(sg.n);
    for (int v = 0; v < sg.n; ++v) {
      coverers[v] = bit(v) | sg.in_adj[v];
    }
  }

  static constexpr int kInfeasible = 1 << 20;

  int gamma(Mask forced, Mask allowed) {
    if ((forced & allowed) != forced) return kInfeasible;
    best = kInfeasible;
    search(forced, allowed);
    return best;
  }

  const SolverGraph& sg;
  std::vector<Mask> coverers;
  int best = kInfeasible;

 private:
  Mask covered_by(Mask chosen) const {
    Mask covered = chosen;
    for (int v = 0; v < sg.n; ++v) {
      if (sg.in_adj[v] & chosen) covered |= bit(v);
    }
    return covered;
  }

  void search(Mask chosen, Mask allowed) {
    Mask covered = covered_by(chosen);
    int u = -1;
    for (int v = 0; v < sg.n; ++v) {
      if (!(covered & bit(v))) {
        u = v;
        break;
      }
    }
    if (u < 0) {
      best = std::min(best, popcount(chosen));
      return;
    }
    if (popcount(chosen) + 1 >= best) return;
    Mask options = coverers[u] & allowed & ~chosen;
    for (int w = 0; w < sg.n; ++w) {
      if (options & bit(w)) search(chosen | bit(w), allowed);
    }
  }
};

Mask suffix_mask(const SolverGraph& sg, std::size_t from) {
  Mask m = 0;
  for (std::size_t i = from; i < sg.ig.by_label.size(); ++i) {
    m |= bit(sg.ig.by_label[i]);
  }
  return m;
}

}  // namespace

MatchingCertificate maximum_matching(const Digraph& g) {
  SolverGraph sg(g);
  MatchingSolver solver(sg);
  int target = solver.max_size(sg.all);

  // Lexicographically least maximum matching: take each candidate edge (in
  // canonical arc order) iff a maximum matching through the picks so far can
  // still be completed from the remaining candidates.
  MatchingCertificate cert;
  Mask free = sg.all;
  int have = 0;
  for (std::size_t i = 0; i < solver.edges.size() && have < target; ++i) {
    const auto& e = solver.edges[i];
    Mask ends = bit(e.a) | bit(e.b);
    if ((free & ends) != ends) continue;
    int rest = solver.max_size_from(i + 1, free & ~ends, target - have - 1);
    if (have + 1 + rest == target) {
      cert.arcs.push_back(e.arc);
      free &= ~ends;
      ++have;
    }
  }
  std::sort(cert.arcs.begin(), cert.arcs.end());
  cert.is_maximum = true;
  cert.is_perfect = 2 * cert.arcs.size() == g.vertex_count();
  return cert;
}

IndependentSetCertificate max_independent_set(const Digraph& g) {
  SolverGraph sg(g);
  IndependentSetSolver solver(sg);
  int target = solver.alpha(sg.all);

  IndependentSetCertificate cert;
  Mask chosen = 0;
  Mask banned = 0;  // neighbors of chosen vertices
  int have = 0;
  for (std::size_t i = 0; i < sg.ig.by_label.size() && have < target; ++i) {
    int v = sg.ig.by_label[i];
    if ((banned | chosen) & bit(v)) continue;
    Mask rest = suffix_mask(sg, i + 1) & ~banned & ~sg.adj[v];
    if (have + 1 + solver.alpha(rest) == target) {
      chosen |= bit(v);
      banned |= sg.adj[v];
      ++have;
    }
  }
  cert.vertices = sg.labels_of(chosen);
  return cert;
}

ColoringCertificate chromatic_partition(const Digraph& g) {
  SolverGraph sg(g);
  ColoringCertificate cert;
  if (sg.n == 0) return cert;

  ColoringSolver solver(sg);
  std::vector<int> colors(sg.n, -1);
  int chi = 0;
  for (int k = 1; k <= sg.n; ++k) {
    std::fill(colors.begin(), colors.end(), -1);
    if (solver.completable(k, colors, 0, 0)) {
      chi = k;
      break;
    }
  }

  // Greedy canonical assignment: scanning by label, give each vertex the
  // least color that still allows a chi-coloring of the rest.
  std::vector<int> fixed(sg.n, -1);
  int used = 0;
  for (std::size_t pos = 0; pos < sg.ig.by_label.size(); ++pos) {
    int v = sg.ig.by_label[pos];
    int limit = std::min(chi - 1, used);
    for (int c = 0; c <= limit; ++c) {
      bool clash = false;
      for (std::size_t i = 0; i < pos && !clash; ++i) {
        clash = (sg.adj[v] & bit(sg.ig.by_label[i])) && fixed[i] == c;
      }
      if (clash) continue;
      std::vector<int> attempt(fixed);
      attempt[pos] = c;
      if (solver.completable(chi, attempt, pos + 1, std::max(used, c + 1))) {
        fixed[pos] = c;
        break;
      }
    }
    used = std::max(used, fixed[pos] + 1);
  }

  cert.classes.assign(chi, {});
  for (std::size_t pos = 0; pos < sg.ig.by_label.size(); ++pos) {
    cert.classes[fixed[pos]].push_back(sg.ig.label(sg.ig.by_label[pos]));
  }
  return cert;
}

DominatingSetCertificate min_dominating_set(const Digraph& g) {
  SolverGraph sg(g);
  DominationSolver solver(sg);
  int target = solver.gamma(0, sg.all);

  DominatingSetCertificate cert;
  Mask chosen = 0;
  int have = 0;
  for (std::size_t i = 0; i < sg.ig.by_label.size() && have < target; ++i) {
    int v = sg.ig.by_label[i];
    if (chosen & bit(v)) continue;
    Mask allowed = chosen | bit(v) | suffix_mask(sg, i + 1);
    if (solver.gamma(chosen | bit(v), allowed) == target) {
      chosen |= bit(v);
      ++have;
    }
  }
  cert.vertices = sg.labels_of(chosen);
  return cert;
}

namespace {

// ----------------------------------------------------------------- integrity

std::size_t strong_max(const Digraph& g) {
  return strong_components(g).max_component_order();
}

struct IntegritySearch {
  const Digraph& g;
  IntegrityKind kind;
  std::size_t best;

  explicit IntegritySearch(const Digraph& g, IntegrityKind kind)
      : g(g), kind(kind), best(strong_max(g)) {}

  std::size_t element_count() const {
    return kind == IntegrityKind::kVertex ? g.vertex_count() : g.arc_count();
  }

  Digraph remove(const Digraph& from, std::size_t element) const {
    if (kind == IntegrityKind::kVertex) {
      std::vector<VertexId> one{g.vertices()[element]};
      return delete_vertices(from, one);
    }
    std::vector<Arc> one{g.arcs()[element]};
    return delete_arcs(from, one);
  }

  // Is candidate `element` inside a strong component of order >= 2 of
  // `current`? Removing anything else can never shrink any component.
  bool useful(const Digraph& current, std::size_t element,
              const StrongComponentPartition& parts) const {
    if (kind == IntegrityKind::kVertex) {
      const VertexId& v = g.vertices()[element];
      if (!current.has_vertex(v)) return false;
      for (const auto& c : parts.components) {
        if (c.size() >= 2 &&
            std::find(c.begin(), c.end(), v) != c.end()) {
          return true;
        }
      }
      return false;
    }
    const Arc& a = g.arcs()[element];
    if (!current.has_arc(a.tail, a.head)) return false;
    for (const auto& c : parts.components) {
      if (c.size() >= 2 &&
          std::find(c.begin(), c.end(), a.tail) != c.end() &&
          std::find(c.begin(), c.end(), a.head) != c.end()) {
        return true;
      }
    }
    return false;
  }

  void search(const Digraph& current, std::size_t removed, std::size_t from) {
    StrongComponentPartition parts = strong_components(current);
    std::size_t m = parts.max_component_order();
    best = std::min(best, removed + m);
    if (m <= 1) return;               // removals can only tie from here
    if (removed + 2 >= best) return;  // one more removal plus m >= 1
    for (std::size_t e = from; e < element_count(); ++e) {
      if (!useful(current, e, parts)) continue;
      search(remove(current, e), removed + 1, e + 1);
    }
  }
};

// First removal set achieving `value`, scanning sizes ascending and each
// size's combinations in lexicographic order over label-sorted elements.
template <typename Element>
std::vector<Element> canonical_removal(
    const std::vector<Element>& sorted_elements, std::size_t value,
    const std::function<std::size_t(const std::vector<Element>&)>& score) {
  std::vector<Element> chosen;
  for (std::size_t k = 0;; ++k) {
    std::vector<std::size_t> pick(k);
    std::function<bool(std::size_t, std::size_t)> combos =
        [&](std::size_t slot, std::size_t from) {
          if (slot == k) {
            chosen.clear();
            for (std::size_t i : pick) chosen.push_back(sorted_elements[i]);
            return k + score(chosen) == value;
          }
          for (std::size_t i = from; i + (k - slot) <= sorted_elements.size();
               ++i) {
            pick[slot] = i;
            if (combos(slot + 1, i + 1)) return true;
          }
          return false;
        };
    if (combos(0, 0)) return chosen;
  }
}

IntegrityCertificate integrity(const Digraph& g, IntegrityKind kind) {
  IntegritySearch searcher(g, kind);
  searcher.search(g, 0, 0);
  std::size_t value = searcher.best;

  IntegrityCertificate cert;
  cert.kind = kind;
  cert.value = value;
  if (kind == IntegrityKind::kVertex) {
    std::vector<VertexId> sorted = g.vertices();
    std::sort(sorted.begin(), sorted.end());
    cert.removed_vertices = canonical_removal<VertexId>(
        sorted, value, [&](const std::vector<VertexId>& f) {
          return strong_max(delete_vertices(g, f));
        });
    cert.strong_component_max =
        strong_max(delete_vertices(g, cert.removed_vertices));
  } else {
    std::vector<Arc> sorted = g.arcs();
    std::sort(sorted.begin(), sorted.end());
    cert.removed_arcs = canonical_removal<Arc>(
        sorted, value, [&](const std::vector<Arc>& f) {
          return strong_max(delete_arcs(g, f));
        });
    cert.strong_component_max = strong_max(delete_arcs(g, cert.removed_arcs));
  }
  return cert;
}

}  // namespace

IntegrityCertificate vertex_integrity(const Digraph& g) {
  return integrity(g, IntegrityKind::kVertex);
}

IntegrityCertificate arc_integrity(const Digraph& g) {
  return integrity(g, IntegrityKind::kArc);
}

PartitionCheck check_partition(const Digraph& g,
                               const std::vector<std::vector<VertexId>>& parts) {
  PartitionCheck result;
  result.parts = parts;

  std::set<VertexId> seen;
  for (const auto& part : parts) {
    if (part.empty()) {
      throw Error(ErrorCode::kNotAPartition, "partition contains an empty part");
    }
    for (const VertexId& v : part) {
      if (!g.has_vertex(v)) {
        throw Error(ErrorCode::kNotAPartition, "unknown vertex '" + v + "'");
      }
      if (!seen.insert(v).second) {
        throw Error(ErrorCode::kNotAPartition,
                    "vertex '" + v + "' appears in two parts");
      }
    }
  }
  if (seen.size() != g.vertex_count()) {
    throw Error(ErrorCode::kNotAPartition, "parts do not cover every vertex");
  }

  std::unordered_map<VertexId, std::size_t> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const VertexId& v : parts[i]) part_of[v] = i;
  }
  result.is_p_partite = true;
  for (const Arc& a : g.arcs()) {
    if (part_of.at(a.tail) == part_of.at(a.head)) {
      result.is_p_partite = false;
      break;
    }
  }
  bool cross_complete = true;
  for (const VertexId& u : g.vertices()) {
    for (const VertexId& v : g.vertices()) {
      if (u < v && part_of.at(u) != part_of.at(v) && !g.has_arc(u, v) &&
          !g.has_arc(v, u)) {
        cross_complete = false;
      }
    }
  }
  result.is_complete_p_partite = result.is_p_partite && cross_complete;
  return result;
}

}  // namespace dgi
