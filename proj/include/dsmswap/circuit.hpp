#pragma once

#include <algorithm>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "dsmswap/errors.hpp"
#include "dsmswap/matrix.hpp"

namespace dsmswap {

/// Two-qubit gate on logical qubits a, b. The coupling model is undirected
/// (control/target orientation costs nothing), so the label is the only
/// payload routing carries through.
struct Gate {
  int a = 0;
  int b = 0;
  std::string label;

  bool operator==(const Gate&) const = default;
};

inline std::pair<int, int> ordered_pair(int a, int b) {
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

/// Circuit as an ordered sequence of matching layers: within a layer all
/// gates act on pairwise-disjoint qubits, hence commute.
struct LayeredCircuit {
  int m = 0;
  std::vector<std::vector<Gate>> layers;

  int layer_count() const { return static_cast<int>(layers.size()); }

  int gate_count() const {
    int n = 0;
    for (const auto& l : layers) n += static_cast<int>(l.size());
    return n;
  }

  /// Gates in program order (layer by layer).
  std::vector<Gate> flatten() const {
    std::vector<Gate> out;
    out.reserve(static_cast<std::size_t>(gate_count()));
    for (const auto& l : layers) out.insert(out.end(), l.begin(), l.end());
    return out;
  }

  /// 0/1 adjacency of one layer's gate pairs.
  Matrix layer_adjacency(int t) const {
    Matrix g(m, m);
    for (const Gate& e : layers[static_cast<std::size_t>(t)]) {
      g(e.a, e.b) = 1.0;
      g(e.b, e.a) = 1.0;
    }
    return g;
  }

  bool operator==(const LayeredCircuit&) const = default;
};

/// Greedy as-soon-as-possible packing: each gate lands in the earliest layer
/// after every earlier gate that shares one of its qubits. Output layers are
/// matchings and preserve the relative order of gates sharing a qubit.
inline LayeredCircuit layerize(int m, const std::vector<Gate>& gates) {
  if (m < 1) throw ArgumentError("qubit count must be positive");
  LayeredCircuit c;
  c.m = m;
  std::vector<int> last(static_cast<std::size_t>(m), -1);
  for (const Gate& g : gates) {
    if (g.a < 0 || g.b < 0 || g.a >= m || g.b >= m)
      throw ArgumentError("gate qubit index out of range");
    if (g.a == g.b) throw ArgumentError("gate qubits must be distinct");
    const int layer = std::max(last[g.a], last[g.b]) + 1;
    if (layer == c.layer_count()) c.layers.emplace_back();
    c.layers[static_cast<std::size_t>(layer)].push_back(g);
    last[g.a] = layer;
    last[g.b] = layer;
  }
  return c;
}

/// Hardware coupling graph: connected, undirected, not complete. Holds the
/// 0/1 adjacency M and its off-diagonal complement M_c = J - M - I, with the
/// diagonal forced to zero so self-pairs never count as violations.
class Topology {
 public:
  static Topology from_edges(int m, std::vector<std::pair<int, int>> edges) {
    if (m < 2) throw ArgumentError("topology needs at least 2 qubits");
    Topology t;
    t.m_ = m;
    for (auto& [a, b] : edges) {
      if (a < 0 || b < 0 || a >= m || b >= m) throw ArgumentError("edge endpoint out of range");
      if (a == b) throw ArgumentError("self-loop edge");
      if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    t.edges_ = std::move(edges);

    t.adj_.assign(static_cast<std::size_t>(m) * m, 0);
    for (auto [a, b] : t.edges_) {
      t.adj_[static_cast<std::size_t>(a) * m + b] = 1;
      t.adj_[static_cast<std::size_t>(b) * m + a] = 1;
    }

    // Connectivity (every qubit reachable) and non-completeness.
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w = 0; w < m; ++w)
        if (t.adj_[static_cast<std::size_t>(v) * m + w] && !seen[w]) {
          seen[w] = 1;
          ++reached;
          q.push(w);
        }
    }
    if (reached != m) throw TopologyError("coupling graph is disconnected");
    if (static_cast<long long>(t.edges_.size()) * 2 == static_cast<long long>(m) * (m - 1))
      throw TopologyError("coupling graph is complete; swap mapping is vacuous");

    t.m_mat_ = Matrix(m, m);
    t.mc_mat_ = Matrix(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        if (i == j) continue;
        const double a = t.adj_[static_cast<std::size_t>(i) * m + j] ? 1.0 : 0.0;
        t.m_mat_(i, j) = a;
        t.mc_mat_(i, j) = 1.0 - a;
      }
    return t;
  }

  int qubit_count() const { return m_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool has_edge(int i, int j) const {
    return i != j && adj_[static_cast<std::size_t>(i) * m_ + j] != 0;
  }

  int degree(int v) const {
    int d = 0;
    for (int w = 0; w < m_; ++w) d += adj_[static_cast<std::size_t>(v) * m_ + w];
    return d;
  }

  int max_degree() const {
    int d = 0;
    for (int v = 0; v < m_; ++v) d = std::max(d, degree(v));
    return d;
  }

  const Matrix& adjacency() const { return m_mat_; }
  const Matrix& complement() const { return mc_mat_; }

 private:
  int m_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<char> adj_;
  Matrix m_mat_, mc_mat_;
};

inline Topology topology_from_edges(int m, const std::vector<std::pair<int, int>>& edges) {
  return Topology::from_edges(m, edges);
}

/// Chain of m qubits: edges (k, k+1).
inline Topology topology_line(int m) {
  if (m < 3) throw ArgumentError("line topology needs m >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int k = 0; k + 1 < m; ++k) edges.emplace_back(k, k + 1);
  return Topology::from_edges(m, edges);
}

/// Line plus the closing edge (m-1, 0).
inline Topology topology_ring(int m) {
  if (m < 3) throw ArgumentError("ring topology needs m >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int k = 0; k + 1 < m; ++k) edges.emplace_back(k, k + 1);
  edges.emplace_back(m - 1, 0);
  return Topology::from_edges(m, edges);  // ring(3) is complete and rejected there
}

/// Row of `cells` hexagons with every edge subdivided once (the heavy-hex
/// pattern): planar, max degree 3, 9*cells + 3 qubits.
///
/// Base honeycomb row: top path t_0..t_{2c}, bottom path b_0..b_{2c} and
/// vertical rungs t_{2k} - b_{2k}; each base edge then gets a midpoint qubit.
inline Topology topology_heavy_hex(int cells) {
  if (cells < 1) throw ArgumentError("heavy-hex needs at least one cell");
  const int c = cells;
  const int row = 2 * c + 1;
  const int top0 = 0, bot0 = row;
  std::vector<std::pair<int, int>> base;
  for (int j = 0; j + 1 < row; ++j) base.emplace_back(top0 + j, top0 + j + 1);
  for (int j = 0; j + 1 < row; ++j) base.emplace_back(bot0 + j, bot0 + j + 1);
  for (int k = 0; k <= c; ++k) base.emplace_back(top0 + 2 * k, bot0 + 2 * k);

  std::sort(base.begin(), base.end());
  int next = 2 * row;  // midpoints appended after the honeycomb vertices
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : base) {
    edges.emplace_back(u, next);
    edges.emplace_back(next, v);
    ++next;
  }
  return Topology::from_edges(next, edges);
}

/// Logical -> physical qubit assignment.
using QubitMap = PermutationMatrix;

/// Relabel every gate (a, b) to (p(a), p(b)); layer structure and labels are
/// untouched. This is the permutation action used to pre-permute rolling
/// windows with the swaps accumulated so far.
inline LayeredCircuit apply_permutation(const LayeredCircuit& c, const QubitMap& p) {
  if (p.size() != c.m) throw ArgumentError("permutation size does not match qubit count");
  LayeredCircuit out = c;
  for (auto& layer : out.layers)
    for (Gate& g : layer) {
      g.a = p(g.a);
      g.b = p(g.b);
    }
  return out;
}

}  // namespace dsmswap
