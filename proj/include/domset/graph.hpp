#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace domset {

/// Raised when a proven invariant fails at runtime. Indicates a bug in this
/// library, not bad input; the CLI maps it to exit code 2.
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Fixed-width bit membership over vertices 0..n-1.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), words_((n + 63) / 64, 0) {}

  static Bitset of(int n, std::initializer_list<int> members) {
    Bitset b(n);
    for (int v : members) b.set(v);
    return b;
  }

  int size() const { return n_; }

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += __builtin_popcountll(w);
    return c;
  }
  bool any() const {
    for (uint64_t w : words_) if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  Bitset& operator|=(const Bitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  /// |this ∩ other|
  int intersect_count(const Bitset& o) const {
    int c = 0;
    for (size_t i = 0; i < words_.size(); ++i)
      c += __builtin_popcountll(words_[i] & o.words_[i]);
    return c;
  }
  /// |this ∖ other|
  int count_and_not(const Bitset& o) const {
    int c = 0;
    for (size_t i = 0; i < words_.size(); ++i)
      c += __builtin_popcountll(words_[i] & ~o.words_[i]);
    return c;
  }
  bool intersects(const Bitset& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const Bitset& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool operator==(const Bitset& o) const {
    return n_ == o.n_ && words_ == o.words_;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for (size_t i = 0; i < words_.size(); ++i) {
      uint64_t w = words_[i];
      while (w) {
        out.push_back(int(i) * 64 + __builtin_ctzll(w));
        w &= w - 1;
      }
    }
    return out;
  }

 private:
  int n_ = 0;
  std::vector<uint64_t> words_;
};

using VertexSet = Bitset;

/// Immutable simple undirected graph. Vertices are 0..n-1. Adjacency is kept
/// both as sorted neighbor lists and as per-vertex bit rows.
class Graph {
 public:
  /// Builds a graph from an edge list; duplicate pairs (in either direction)
  /// are merged. Rejects self-loops and out-of-range endpoints.
  static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  const Bitset& neighbor_bits(int v) const { return adj_bits_[v]; }
  int degree(int v) const { return int(adj_[v].size()); }
  bool has_edge(int u, int v) const { return adj_bits_[u].test(v); }

  /// All edges as (u,v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<Bitset> adj_bits_;
};

struct DegreeStats {
  int max_degree;
  int min_degree;
  int diameter;
};

/// True iff every vertex outside S has a neighbor in S.
bool is_dominating(const Graph& g, const VertexSet& s);

/// True iff S is dominating and no single member can be removed.
bool is_minimal_dominating(const Graph& g, const VertexSet& s);

/// True iff no edge joins two members of S.
bool is_independent(const Graph& g, const VertexSet& s);

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Max/min degree plus diameter (BFS from every vertex).
/// Throws std::invalid_argument on a disconnected graph.
DegreeStats degree_stats(const Graph& g);

/// Subgraph induced by `vertices` with dense relabeling; `vertices[i]`
/// becomes vertex i of the result.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

}  // namespace domset
