#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace nsp {

using Vertex = std::int32_t;

// Scaled exact weight. Input decimals are multiplied by one global 10^k.
using Weight = std::int64_t;

struct Edge {
  Vertex tail = 0;
  Vertex head = 0;
  Weight weight = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using PathSeq = std::vector<Vertex>;

// A next-to-shortest path with its weight, or nothing (no not-shortest path exists).
class SolveOutcome {
 public:
  static SolveOutcome none() { return {}; }
  static SolveOutcome of(PathSeq path, Weight weight) {
    SolveOutcome out;
    out.path_ = std::move(path);
    out.weight_ = weight;
    return out;
  }

  bool found() const noexcept { return path_.has_value(); }
  const PathSeq& path() const { return path_.value(); }
  Weight weight() const {
    (void)path_.value();
    return weight_;
  }

  friend bool operator==(const SolveOutcome&, const SolveOutcome&) = default;

 private:
  std::optional<PathSeq> path_;
  Weight weight_ = 0;
};

}  // namespace nsp
