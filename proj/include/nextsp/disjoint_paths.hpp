#pragma once

#include <optional>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "nextsp/structure.hpp"

namespace nsp {

struct TerminalPair {
  Vertex from = 0;
  Vertex to = 0;
};

struct DisjointPaths {
  PathSeq first;
  PathSeq second;

  friend bool operator==(const DisjointPaths&, const DisjointPaths&) = default;
};

/// Two vertex-disjoint paths in a DAG.
///
/// Search runs over pairs of token positions (a, b). The token with the lower
/// topological rank is always the one advanced (the other one when the lower
/// token already sits on its target); since every edge raises the rank, a
/// token can never step onto a vertex the other token has already left, so
/// only a != b has to be checked. Any disjoint pair is reachable by that
/// schedule, which makes the search complete. O(n*m) per query.
class DagDisjointPaths {
 public:
  /// Throws ContractViolation if `dag` has a cycle. Edge weights are ignored.
  explicit DagDisjointPaths(const WeightedDigraph& dag);

  /// Terminals may coincide within a pair (yielding a one-vertex path) but not
  /// across pairs; that is a ContractViolation.
  std::optional<DisjointPaths> find(TerminalPair first, TerminalPair second) const;

  const WeightedDigraph& dag() const noexcept { return dag_; }
  int rank(Vertex v) const { return rank_[static_cast<std::size_t>(v)]; }

 private:
  std::vector<char> reaching(Vertex target) const;

  WeightedDigraph dag_;
  std::vector<int> rank_;
};

std::optional<DisjointPaths> two_disjoint_paths(const WeightedDigraph& dag, TerminalPair first,
                                                TerminalPair second);

/// Subgraph of g holding only forward edges (with respect to d).
WeightedDigraph forward_subgraph(const WeightedDigraph& g, const DistanceTable& d);

/// The 6-tuple (A, B, X', X, Y', Y) enumerated by the layered solver.
struct TupleCandidate {
  Vertex a = 0;
  Vertex b = 0;
  Edge x_edge;  // (X', X)
  Edge y_edge;  // (Y', Y)
};

/// A layered graph with its distances, layers and forward DAG prepared once.
class LayeredView {
 public:
  /// Throws ContractViolation unless g is (s,t)-layered.
  explicit LayeredView(const WeightedDigraph& g);

  const WeightedDigraph& graph() const noexcept { return graph_; }
  const DistanceTable& distances() const noexcept { return dist_; }
  const LayerAssignment& layers() const noexcept { return layers_; }
  const DagDisjointPaths& forward() const noexcept { return forward_; }
  Weight d(Vertex v) const { return *dist_.from_s(v); }

 private:
  WeightedDigraph graph_;
  DistanceTable dist_;
  LayerAssignment layers_;
  DagDisjointPaths forward_;
};

/// Memo for the two independent halves of constrained_pdfp, keyed by their terminals.
class PdfpCache {
 public:
  using Key = std::tuple<Vertex, Vertex, Vertex>;

  std::optional<std::optional<DisjointPaths>> get(bool prefix, const Key& key) const;
  void put(bool prefix, const Key& key, std::optional<DisjointPaths> value);

 private:
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };
  std::unordered_map<Key, std::optional<DisjointPaths>, KeyHash> prefix_;
  std::unordered_map<Key, std::optional<DisjointPaths>, KeyHash> suffix_;
};

/// Forward paths P1 = s -> X' -> X -> A and P2 = B -> Y' -> Y -> t, vertex-disjoint.
///
/// Solved as two independent queries, (s->X', B->Y') below the waypoint layer
/// and (X->A, Y->t) above it; the halves occupy disjoint layer ranges so their
/// union is disjoint as well. Tuples whose halves share a terminal are
/// infeasible. Throws ContractViolation when the waypoint edges are not forward
/// edges between the same pair of consecutive layers, or when
/// layer(B) <= layer(Y'), layer(X) <= layer(A), layer(B) < layer(A) fail.
std::optional<DisjointPaths> constrained_pdfp(const LayeredView& view, const TupleCandidate& tuple,
                                              PdfpCache* cache = nullptr);

}  // namespace nsp
