#include "nextsp/reduction.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <unordered_set>

#include "nextsp/io.hpp"

namespace nsp {

namespace {

std::pair<WeightedDigraph, EliminationRecord> eliminate_unchecked(const WeightedDigraph& g, Vertex u) {
  EliminationRecord rec;
  rec.removed = u;
  for (const auto& [x, w] : g.in_edges(u)) rec.in_neighbors.push_back(x);
  for (const auto& [y, w] : g.out_edges(u)) rec.out_neighbors.push_back(y);

  WeightedDigraph out = g;
  for (const auto& [x, wxu] : g.in_edges(u)) {
    for (const auto& [y, wuy] : g.out_edges(u)) {
      if (x == y) continue;
      const Weight through = wxu + wuy;
      const auto existing = g.weight(x, y);
      if (!existing) {
        out.add_edge(x, y, through);
        rec.shortcut_edges.emplace_back(x, y);
      } else if (through < *existing) {
        out.set_weight(x, y, through);
        rec.shortcut_edges.emplace_back(x, y);
        rec.replaced_weights.emplace(VertexPair{x, y}, *existing);
      }
    }
  }
  out.remove_vertex(u);
  return {std::move(out), std::move(rec)};
}

bool violates_layering(const std::vector<Weight>& values, const DistanceTable& d, const Edge& e) {
  const Distance du = d.from_s(e.tail);
  const Distance dv = d.from_s(e.head);
  if (!du || !dv) throw ContractViolation("potential requires an (s,t)-straight graph");
  if (*du == *dv) return true;
  if (*du > *dv) return false;
  auto it = std::upper_bound(values.begin(), values.end(), *du);
  return it != values.end() && *it < *du + e.weight;
}

// Forward s->v path following the smallest-id forward predecessor.
PathSeq forward_path_from_source(const WeightedDigraph& g, const DistanceTable& d, Vertex v) {
  PathSeq path{v};
  while (v != g.source()) {
    Vertex next = -1;
    for (const auto& [x, w] : g.in_edges(v)) {
      if (d.from_s(x) && *d.from_s(x) + w == *d.from_s(v)) {
        next = x;
        break;
      }
    }
    if (next < 0) throw InternalError("no forward predecessor for vertex " + std::to_string(v));
    path.push_back(v = next);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

// Forward v->t path following the smallest-id forward successor.
PathSeq forward_path_to_sink(const WeightedDigraph& g, const DistanceTable& d, Vertex v) {
  PathSeq path{v};
  while (v != g.sink()) {
    Vertex next = -1;
    for (const auto& [y, w] : g.out_edges(v)) {
      if (*d.from_s(v) + w == *d.from_s(y) && d.to_t(y) && *d.to_t(y) + w == *d.to_t(v)) {
        next = y;
        break;
      }
    }
    if (next < 0) throw InternalError("no forward successor for vertex " + std::to_string(v));
    path.push_back(v = next);
  }
  return path;
}

void record_candidate(Reduced& r, PathSeq generated, Weight weight) {
  Candidate c;
  c.step = r.trace.steps.size();
  c.lifted = lift_through(r.trace, c.step, generated).path;
  c.generated = std::move(generated);
  c.generated_weight = weight;
  r.trace.candidates.push_back(std::move(c));
}

std::string pair_name(Vertex a, Vertex b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void write_path(std::ostream& out, const PathSeq& p) {
  for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i];
}

}  // namespace

bool EliminationRecord::is_shortcut(Vertex tail, Vertex head) const {
  return std::binary_search(shortcut_edges.begin(), shortcut_edges.end(), VertexPair{tail, head});
}

std::pair<WeightedDigraph, EliminationRecord> eliminate_vertex(const WeightedDigraph& g, Vertex u) {
  if (!g.contains(u)) throw ContractViolation("no vertex " + std::to_string(u));
  if (u == g.source() || u == g.sink()) throw ContractViolation("cannot eliminate the source or sink");
  const auto d = shortest_distances(g);
  const Distance st = d.source_to_sink();
  if (!st || !d.from_s(u) || !d.to_t(u)) {
    throw ContractViolation("eliminated vertex must have finite distances from s and to t");
  }
  if (*d.from_s(u) + *d.to_t(u) <= *st) {
    throw ContractViolation("eliminated vertex must not lie on a shortest s->t path");
  }
  return eliminate_unchecked(g, u);
}

PathSeq lift_pi_prime(const EliminationRecord& rec, const PathSeq& path) {
  if (std::find(path.begin(), path.end(), rec.removed) != path.end()) {
    throw ContractViolation("path already contains the eliminated vertex");
  }
  std::optional<std::size_t> first, last;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (rec.is_shortcut(path[i], path[i + 1])) {
      if (!first) first = i;
      last = i;
    }
  }
  if (!first) return path;
  PathSeq out(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(*first) + 1);
  out.push_back(rec.removed);
  out.insert(out.end(), path.begin() + static_cast<std::ptrdiff_t>(*last) + 1, path.end());
  return out;
}

Reduced straighten(const WeightedDigraph& g) {
  Reduced r{g, {}};
  if (!shortest_distances(g).source_to_sink()) throw ContractViolation("straighten requires an s->t path");

  for (;;) {
    WeightedDigraph& cur = r.graph;
    const auto d = shortest_distances(cur);
    const Weight st = *d.source_to_sink();

    std::optional<Vertex> pick;
    for (Vertex v : cur.vertices()) {
      const Distance a = d.from_s(v);
      const Distance b = d.to_t(v);
      if (!a || !b || *a + *b != st) {
        pick = v;
        break;
      }
    }
    if (!pick) break;
    const Vertex u = *pick;

    if (!d.from_s(u) || !d.to_t(u)) {
      cur.remove_vertex(u);
      r.trace.steps.emplace_back(VertexDeletion{u});
      continue;
    }

    // Paths through u that elimination would shadow behind a cheaper direct edge.
    const auto from_s = shortest_path_tree(cur, cur.source(), Direction::Forward);
    const auto to_t = shortest_path_tree(cur, cur.sink(), Direction::Reverse);
    for (const auto& [x, wxu] : cur.in_edges(u)) {
      for (const auto& [y, wuy] : cur.out_edges(u)) {
        if (x == y) continue;
        const auto wxy = cur.weight(x, y);
        if (!wxy || *wxy >= wxu + wuy) continue;
        if (!d.from_s(x) || !d.to_t(y) || *d.from_s(x) + *wxy + *d.to_t(y) != st) continue;
        PathSeq q = from_s.path(x);
        q.push_back(u);
        const PathSeq tail = to_t.path(y);
        q.insert(q.end(), tail.begin(), tail.end());
        record_candidate(r, std::move(q), st - *wxy + wxu + wuy);
      }
    }

    auto [next, rec] = eliminate_unchecked(cur, u);
    r.graph = std::move(next);
    r.trace.steps.emplace_back(std::move(rec));
  }
  return r;
}

std::size_t potential_phi(const WeightedDigraph& g, const DistanceTable& d) {
  const auto values = distinct_distances(g, d);
  std::size_t count = 0;
  for (const auto& e : g.edges()) {
    if (violates_layering(values, d, e)) ++count;
  }
  return count;
}

std::optional<Edge> select_violating_edge(const WeightedDigraph& g, const DistanceTable& d) {
  const auto values = distinct_distances(g, d);
  const auto edges = g.edges();
  for (const auto& e : edges) {
    if (edge_kind(d, e) == EdgeKind::Back && violates_layering(values, d, e)) return e;
  }
  for (const auto& e : edges) {
    if (edge_kind(d, e) == EdgeKind::Forward && violates_layering(values, d, e)) return e;
  }
  return std::nullopt;
}

Reduced layerize(Reduced r) {
  if (!is_straight(r.graph, shortest_distances(r.graph))) {
    throw ContractViolation("layerize requires an (s,t)-straight graph");
  }
  for (;;) {
    WeightedDigraph& cur = r.graph;
    const auto d = shortest_distances(cur);
    const auto pick = select_violating_edge(cur, d);
    if (!pick) break;
    const Edge e = *pick;
    const Weight du = *d.from_s(e.tail);
    const Weight dv = *d.from_s(e.head);

    if (edge_kind(d, e) == EdgeKind::Back) {
      PathSeq q = forward_path_from_source(cur, d, e.tail);
      const PathSeq tail = forward_path_to_sink(cur, d, e.head);
      q.insert(q.end(), tail.begin(), tail.end());
      record_candidate(r, std::move(q), du + e.weight + (*d.source_to_sink() - dv));
      cur.remove_edge(e.tail, e.head);
      r.trace.steps.emplace_back(BackEdgeRemoval{e});
      continue;
    }

    SubdivisionRecord sub;
    sub.original = e;
    sub.layer_values.push_back(du);
    for (Weight q : distinct_distances(cur, d)) {
      if (q > du && q < dv) sub.layer_values.push_back(q);
    }
    sub.layer_values.push_back(dv);
    for (std::size_t i = 1; i + 1 < sub.layer_values.size(); ++i) sub.chain.push_back(cur.id_bound() + static_cast<Vertex>(i - 1));
    apply_step(cur, sub);
    r.trace.steps.emplace_back(std::move(sub));
  }
  return r;
}

Reduced layerize(const WeightedDigraph& straight) { return layerize(Reduced{straight, {}}); }

LiftedPath lift_through(const ReductionTrace& trace, std::size_t step_count, const PathSeq& path) {
  if (step_count > trace.steps.size()) throw ContractViolation("step count exceeds trace length");
  LiftedPath out{path, false};
  for (std::size_t k = step_count; k-- > 0;) {
    std::visit(
        [&](const auto& step) {
          using T = std::decay_t<decltype(step)>;
          PathSeq& p = out.path;
          if constexpr (std::is_same_v<T, VertexDeletion>) {
            if (std::find(p.begin(), p.end(), step.removed) != p.end()) {
              throw InternalError("path uses deleted vertex " + std::to_string(step.removed));
            }
          } else if constexpr (std::is_same_v<T, EliminationRecord>) {
            PathSeq lifted = lift_pi_prime(step, p);
            if (lifted != p) out.crossed_shortcut = true;
            p = std::move(lifted);
          } else if constexpr (std::is_same_v<T, BackEdgeRemoval>) {
            // The earlier graph is a supergraph; nothing to undo.
          } else {
            std::unordered_set<Vertex> chain(step.chain.begin(), step.chain.end());
            if (!p.empty() && (chain.count(p.front()) || chain.count(p.back()))) {
              throw ContractViolation("path starts or ends inside a subdivision chain");
            }
            PathSeq contracted;
            contracted.reserve(p.size());
            for (Vertex v : p) {
              if (!chain.count(v)) contracted.push_back(v);
            }
            p = std::move(contracted);
          }
        },
        trace.steps[k]);
  }
  return out;
}

PathSeq lift_layered_path(const ReductionTrace& trace, const PathSeq& path) {
  return lift_through(trace, trace.steps.size(), path).path;
}

void apply_step(WeightedDigraph& g, const ReductionStep& step) {
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, VertexDeletion>) {
          g.remove_vertex(s.removed);
        } else if constexpr (std::is_same_v<T, EliminationRecord>) {
          auto [next, rec] = eliminate_unchecked(g, s.removed);
          if (!(rec == s)) throw InternalError("elimination replay diverged at vertex " + std::to_string(s.removed));
          g = std::move(next);
        } else if constexpr (std::is_same_v<T, BackEdgeRemoval>) {
          g.remove_edge(s.edge.tail, s.edge.head);
        } else {
          const auto& q = s.layer_values;
          if (q.size() != s.chain.size() + 2 || !g.has_edge(s.original.tail, s.original.head)) {
            throw InternalError("malformed subdivision record");
          }
          g.remove_edge(s.original.tail, s.original.head);
          PathSeq route{s.original.tail};
          for (Vertex v : s.chain) {
            if (g.add_vertex() != v) throw InternalError("subdivision ids out of sequence");
            route.push_back(v);
          }
          route.push_back(s.original.head);
          for (std::size_t i = 0; i + 1 < route.size(); ++i) g.add_edge(route[i], route[i + 1], q[i + 1] - q[i]);
        }
      },
      step);
}

WeightedDigraph replay(const WeightedDigraph& original, const ReductionTrace& trace) {
  WeightedDigraph g = original;
  for (const auto& step : trace.steps) apply_step(g, step);
  return g;
}

void dump_trace(std::ostream& out, const ReductionTrace& trace, int decimals) {
  const auto fmt = [&](Weight w) { return format_weight(w, decimals); };
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    out << "step " << k << ": ";
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, VertexDeletion>) {
            out << "delete vertex " << s.removed;
          } else if constexpr (std::is_same_v<T, EliminationRecord>) {
            out << "eliminate vertex " << s.removed << " shortcuts";
            if (s.shortcut_edges.empty()) out << " none";
            for (const auto& [x, y] : s.shortcut_edges) out << ' ' << pair_name(x, y);
          } else if constexpr (std::is_same_v<T, BackEdgeRemoval>) {
            out << "remove back-edge " << pair_name(s.edge.tail, s.edge.head) << " w=" << fmt(s.edge.weight);
          } else {
            out << "subdivide " << pair_name(s.original.tail, s.original.head) << " w=" << fmt(s.original.weight)
                << " via";
            for (Vertex v : s.chain) out << ' ' << v;
          }
        },
        trace.steps[k]);
    out << '\n';
  }
  for (std::size_t i = 0; i < trace.candidates.size(); ++i) {
    const auto& c = trace.candidates[i];
    out << "candidate " << i << " after step " << c.step << ": weight " << fmt(c.generated_weight) << " path ";
    write_path(out, c.generated);
    out << " lifted ";
    write_path(out, c.lifted);
    out << '\n';
  }
}

}  // namespace nsp
