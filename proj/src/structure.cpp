#include "nextsp/structure.hpp"

#include <algorithm>
#include <string>

namespace nsp {

namespace {

std::string edge_name(const Edge& e) {
  return "(" + std::to_string(e.tail) + "," + std::to_string(e.head) + ")";
}

// A distance value lies strictly inside (lo, hi).
bool spans_value(const std::vector<Weight>& values, Weight lo, Weight hi) {
  auto it = std::upper_bound(values.begin(), values.end(), lo);
  return it != values.end() && *it < hi;
}

}  // namespace

EdgeKind edge_kind(const DistanceTable& d, const Edge& e) {
  const Distance du = d.from_s(e.tail);
  const Distance dv = d.from_s(e.head);
  if (!du) throw ContractViolation("edge " + edge_name(e) + " has a tail unreachable from s");
  if (!dv || *du + e.weight < *dv) throw InternalError("distance table inconsistent at " + edge_name(e));
  return *du + e.weight > *dv ? EdgeKind::Back : EdgeKind::Forward;
}

EdgeClassification classify_edges(const WeightedDigraph& g, const DistanceTable& d) {
  EdgeClassification out;
  std::vector<char> in_vb(static_cast<std::size_t>(g.id_bound()), 0);
  for (const auto& e : g.edges()) {
    if (edge_kind(d, e) == EdgeKind::Back) {
      out.back.push_back(e);
      in_vb[static_cast<std::size_t>(e.tail)] = 1;
      in_vb[static_cast<std::size_t>(e.head)] = 1;
    } else {
      out.forward.push_back(e);
    }
  }
  for (Vertex v = 0; v < g.id_bound(); ++v) {
    if (in_vb[static_cast<std::size_t>(v)]) out.back_vertices.push_back(v);
  }
  return out;
}

PathCheck validate_path(const WeightedDigraph& g, const DistanceTable& d, const PathSeq& p) {
  if (p.empty()) throw ContractViolation("validate_path needs a nonempty path");
  for (Vertex v : p) {
    if (!g.contains(v)) throw InvalidPath(v, v);
  }
  PathCheck check;
  std::vector<char> seen(static_cast<std::size_t>(g.id_bound()), 0);
  check.simple = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto& mark = seen[static_cast<std::size_t>(p[i])];
    if (mark) check.simple = false;
    mark = 1;
    if (i + 1 == p.size()) break;
    const auto w = g.weight(p[i], p[i + 1]);
    if (!w) throw InvalidPath(p[i], p[i + 1]);
    check.weight += *w;
    if (d.from_s(p[i]) && edge_kind(d, {p[i], p[i + 1], *w}) == EdgeKind::Back) {
      check.uses_back_edge = true;
    }
  }
  return check;
}

PathCheck validate_path(const WeightedDigraph& g, const PathSeq& p) {
  return validate_path(g, shortest_distances(g), p);
}

bool is_not_shortest_path(const WeightedDigraph& g, const DistanceTable& d, const PathSeq& p) {
  if (p.empty() || p.front() != g.source() || p.back() != g.sink()) return false;
  const auto check = validate_path(g, d, p);
  const Distance st = d.source_to_sink();
  return check.simple && st && check.weight > *st;
}

bool is_straight(const WeightedDigraph& g, const DistanceTable& d) {
  const Distance st = d.source_to_sink();
  if (!st) return false;
  for (Vertex v : g.vertices()) {
    const Distance a = d.from_s(v);
    const Distance b = d.to_t(v);
    if (!a || !b || *a + *b != *st) return false;
  }
  return true;
}

std::vector<Weight> distinct_distances(const WeightedDigraph& g, const DistanceTable& d) {
  std::vector<Weight> values;
  for (Vertex v : g.vertices()) {
    if (auto dv = d.from_s(v)) values.push_back(*dv);
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

bool is_layered(const WeightedDigraph& g, const DistanceTable& d) {
  if (!is_straight(g, d)) return false;
  const auto values = distinct_distances(g, d);
  for (const auto& e : g.edges()) {
    const Weight du = *d.from_s(e.tail);
    const Weight dv = *d.from_s(e.head);
    if (du == dv) return false;
    if (du < dv && spans_value(values, du, du + e.weight)) return false;
  }
  return true;
}

LayerAssignment::LayerAssignment(const WeightedDigraph& g, const DistanceTable& d)
    : layer_(static_cast<std::size_t>(g.id_bound()), 0), values_(distinct_distances(g, d)) {
  members_.resize(values_.size());
  forward_.resize(values_.size());
  for (Vertex v : g.vertices()) {
    const auto it = std::lower_bound(values_.begin(), values_.end(), *d.from_s(v));
    const int layer = static_cast<int>(it - values_.begin()) + 1;
    layer_[static_cast<std::size_t>(v)] = layer;
    members_[static_cast<std::size_t>(layer - 1)].push_back(v);
  }
  for (const auto& e : g.edges()) {
    if (edge_kind(d, e) == EdgeKind::Forward) forward_[static_cast<std::size_t>((*this)(e.tail) - 1)].push_back(e);
  }
}

LayerAssignment layer_function(const WeightedDigraph& g, const DistanceTable& d) {
  if (!is_layered(g, d)) throw ContractViolation("layer_function requires an (s,t)-layered graph");
  return LayerAssignment(g, d);
}

}  // namespace nsp
