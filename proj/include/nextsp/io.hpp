#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "nextsp/graph.hpp"

namespace nsp {

/// Reads the edge-list format:
///
///   n m s t
///   u v w      (m lines, w a positive decimal with at most 9 fractional digits)
///
/// Blank lines and lines starting with '#' are ignored. All weights are scaled
/// by 10^k where k is the largest number of fractional digits in the file.
/// Throws ParseError carrying the offending line number.
WeightedDigraph parse_graph(std::istream& in);
WeightedDigraph parse_graph(std::string_view text);

/// Exact inverse of parse_graph (weights keep the graph's decimal scale).
void write_graph(std::ostream& out, const WeightedDigraph& g);
std::string serialize_graph(const WeightedDigraph& g);

/// Renders a scaled weight as a decimal with exactly `decimals` fractional digits.
std::string format_weight(Weight w, int decimals);

/// One line of whitespace-separated vertex ids.
PathSeq parse_path(std::istream& in);

}  // namespace nsp
