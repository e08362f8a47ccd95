#include "nextsp/graph.hpp"

#include <string>

namespace nsp {

namespace {

std::string edge_name(Vertex tail, Vertex head) {
  return "(" + std::to_string(tail) + "," + std::to_string(head) + ")";
}

}  // namespace

WeightedDigraph::WeightedDigraph(Vertex vertex_count, Vertex source, Vertex sink)
    : source_(source),
      sink_(sink),
      alive_(static_cast<std::size_t>(vertex_count < 0 ? 0 : vertex_count), true),
      out_(alive_.size()),
      in_(alive_.size()),
      vertex_count_(alive_.size()) {
  if (vertex_count < 2) throw GraphError("a graph needs at least two vertices");
  if (!contains(source) || !contains(sink)) throw GraphError("source or sink id out of range");
  if (source == sink) throw GraphError("source and sink must differ");
}

std::vector<Vertex> WeightedDigraph::vertices() const {
  std::vector<Vertex> out;
  out.reserve(vertex_count_);
  for (Vertex v = 0; v < id_bound(); ++v) {
    if (alive_[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

void WeightedDigraph::require_vertex(Vertex v) const {
  if (!contains(v)) throw GraphError("no vertex " + std::to_string(v));
}

const WeightedDigraph::Adjacency& WeightedDigraph::out_edges(Vertex v) const {
  require_vertex(v);
  return out_[static_cast<std::size_t>(v)];
}

const WeightedDigraph::Adjacency& WeightedDigraph::in_edges(Vertex v) const {
  require_vertex(v);
  return in_[static_cast<std::size_t>(v)];
}

std::optional<Weight> WeightedDigraph::weight(Vertex tail, Vertex head) const {
  if (!contains(tail) || !contains(head)) return std::nullopt;
  const auto& adj = out_[static_cast<std::size_t>(tail)];
  if (auto it = adj.find(head); it != adj.end()) return it->second;
  return std::nullopt;
}

std::vector<Edge> WeightedDigraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < id_bound(); ++u) {
    for (const auto& [v, w] : out_[static_cast<std::size_t>(u)]) out.push_back({u, v, w});
  }
  return out;
}

void WeightedDigraph::add_edge(Vertex tail, Vertex head, Weight w) {
  require_vertex(tail);
  require_vertex(head);
  if (tail == head) throw GraphError("self-loop at vertex " + std::to_string(tail));
  if (w <= 0) throw GraphError("non-positive weight on edge " + edge_name(tail, head));
  auto [it, inserted] = out_[static_cast<std::size_t>(tail)].emplace(head, w);
  if (!inserted) throw GraphError("duplicate edge " + edge_name(tail, head));
  in_[static_cast<std::size_t>(head)].emplace(tail, w);
  ++edge_count_;
}

void WeightedDigraph::set_weight(Vertex tail, Vertex head, Weight w) {
  if (w <= 0) throw GraphError("non-positive weight on edge " + edge_name(tail, head));
  if (!has_edge(tail, head)) throw GraphError("no edge " + edge_name(tail, head));
  out_[static_cast<std::size_t>(tail)][head] = w;
  in_[static_cast<std::size_t>(head)][tail] = w;
}

void WeightedDigraph::remove_edge(Vertex tail, Vertex head) {
  if (!has_edge(tail, head)) throw GraphError("no edge " + edge_name(tail, head));
  out_[static_cast<std::size_t>(tail)].erase(head);
  in_[static_cast<std::size_t>(head)].erase(tail);
  --edge_count_;
}

void WeightedDigraph::remove_vertex(Vertex v) {
  require_vertex(v);
  if (v == source_ || v == sink_) throw GraphError("cannot remove the source or sink");
  const auto idx = static_cast<std::size_t>(v);
  for (const auto& [head, w] : out_[idx]) in_[static_cast<std::size_t>(head)].erase(v);
  for (const auto& [tail, w] : in_[idx]) out_[static_cast<std::size_t>(tail)].erase(v);
  edge_count_ -= out_[idx].size() + in_[idx].size();
  out_[idx].clear();
  in_[idx].clear();
  alive_[idx] = false;
  --vertex_count_;
}

Vertex WeightedDigraph::add_vertex() {
  const Vertex id = id_bound();
  alive_.push_back(true);
  out_.emplace_back();
  in_.emplace_back();
  ++vertex_count_;
  return id;
}

void WeightedDigraph::set_decimals(int decimals) {
  if (decimals < 0 || decimals > 9) throw GraphError("decimal scale must be within [0, 9]");
  decimals_ = decimals;
}

}  // namespace nsp
