#include "nextsp/io.hpp"

#include <charconv>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

namespace nsp {

namespace {

constexpr int kMaxDecimals = 9;

struct RawEdge {
  std::size_t line;
  Vertex tail;
  Vertex head;
  std::string integral;
  std::string fraction;
};

std::vector<std::string> split(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(std::move(tok));
  return tokens;
}

template <typename Int>
Int parse_int(const std::string& tok, std::size_t line, const char* what) {
  Int value{};
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(line, std::string("malformed ") + what + " '" + tok + "'");
  }
  return value;
}

bool all_digits(std::string_view s) {
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

Weight pow10(int k) {
  Weight p = 1;
  for (int i = 0; i < k; ++i) p *= 10;
  return p;
}

Weight scale_weight(const RawEdge& e, int decimals) {
  Weight integral = 0;
  for (char c : e.integral) {
    if (__builtin_mul_overflow(integral, Weight{10}, &integral) ||
        __builtin_add_overflow(integral, Weight{c - '0'}, &integral)) {
      throw ParseError(e.line, "weight overflow");
    }
  }
  std::string frac = e.fraction;
  frac.resize(static_cast<std::size_t>(decimals), '0');
  Weight fractional = frac.empty() ? 0 : std::stoll(frac);
  Weight scaled = 0;
  if (__builtin_mul_overflow(integral, pow10(decimals), &scaled) ||
      __builtin_add_overflow(scaled, fractional, &scaled)) {
    throw ParseError(e.line, "weight overflow after scaling");
  }
  return scaled;
}

}  // namespace

WeightedDigraph parse_graph(std::istream& in) {
  std::size_t line_no = 0;
  bool have_header = false;
  std::int64_t n = 0, m = 0;
  Vertex s = 0, t = 0;
  std::vector<RawEdge> raw;

  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto tokens = split(line);

    if (!have_header) {
      if (tokens.size() != 4) throw ParseError(line_no, "header must be 'n m s t'");
      n = parse_int<std::int64_t>(tokens[0], line_no, "vertex count");
      m = parse_int<std::int64_t>(tokens[1], line_no, "edge count");
      s = parse_int<Vertex>(tokens[2], line_no, "source id");
      t = parse_int<Vertex>(tokens[3], line_no, "sink id");
      if (n < 2 || n > std::numeric_limits<Vertex>::max() / 2) {
        throw ParseError(line_no, "vertex count out of range");
      }
      if (m < 0) throw ParseError(line_no, "negative edge count");
      if (s < 0 || s >= n || t < 0 || t >= n) throw ParseError(line_no, "source or sink out of range");
      if (s == t) throw ParseError(line_no, "source and sink must differ");
      have_header = true;
      continue;
    }

    if (tokens.size() != 3) throw ParseError(line_no, "edge line must be 'u v w'");
    if (static_cast<std::int64_t>(raw.size()) == m) throw ParseError(line_no, "more edges than declared");
    RawEdge e{line_no, parse_int<Vertex>(tokens[0], line_no, "vertex id"),
              parse_int<Vertex>(tokens[1], line_no, "vertex id"), {}, {}};
    if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n) {
      throw ParseError(line_no, "vertex id out of range");
    }
    const std::string& w = tokens[2];
    const auto dot = w.find('.');
    e.integral = w.substr(0, dot);
    e.fraction = dot == std::string::npos ? "" : w.substr(dot + 1);
    if ((e.integral.empty() && e.fraction.empty()) || !all_digits(e.integral) || !all_digits(e.fraction) ||
        (dot != std::string::npos && e.fraction.empty())) {
      if (!w.empty() && w[0] == '-') throw ParseError(line_no, "non-positive weight '" + w + "'");
      throw ParseError(line_no, "malformed weight '" + w + "'");
    }
    if (e.fraction.size() > kMaxDecimals) {
      throw ParseError(line_no, "weight has more than 9 fractional digits");
    }
    raw.push_back(std::move(e));
  }

  if (!have_header) throw ParseError(line_no, "missing header line");
  if (static_cast<std::int64_t>(raw.size()) != m) {
    throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " + std::to_string(raw.size()));
  }

  int decimals = 0;
  for (const auto& e : raw) decimals = std::max(decimals, static_cast<int>(e.fraction.size()));

  WeightedDigraph g(static_cast<Vertex>(n), s, t);
  g.set_decimals(decimals);
  // Every path sum stays below n * max_weight; keep headroom for the solver's bounds.
  const Weight path_limit = std::numeric_limits<Weight>::max() / 4;
  for (const auto& e : raw) {
    const Weight w = scale_weight(e, decimals);
    if (w <= 0) throw ParseError(e.line, "non-positive weight");
    if (w > path_limit / n) throw ParseError(e.line, "weight overflow: path sums could exceed 64 bits");
    if (e.tail == e.head) throw ParseError(e.line, "self-loop at vertex " + std::to_string(e.tail));
    if (g.has_edge(e.tail, e.head)) {
      throw ParseError(e.line, "duplicate edge (" + std::to_string(e.tail) + "," + std::to_string(e.head) + ")");
    }
    g.add_edge(e.tail, e.head, w);
  }
  return g;
}

WeightedDigraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

std::string format_weight(Weight w, int decimals) {
  std::string digits = std::to_string(w < 0 ? -w : w);
  if (decimals > 0) {
    if (digits.size() <= static_cast<std::size_t>(decimals)) {
      digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(decimals), ".");
  }
  return w < 0 ? "-" + digits : digits;
}

void write_graph(std::ostream& out, const WeightedDigraph& g) {
  // Holes in the id space cannot be expressed in the text format.
  if (static_cast<std::size_t>(g.id_bound()) != g.vertex_count()) {
    throw ContractViolation("cannot serialize a graph with removed vertices");
  }
  out << g.id_bound() << ' ' << g.edge_count() << ' ' << g.source() << ' ' << g.sink() << '\n';
  for (const auto& e : g.edges()) {
    out << e.tail << ' ' << e.head << ' ' << format_weight(e.weight, g.decimals()) << '\n';
  }
}

std::string serialize_graph(const WeightedDigraph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

PathSeq parse_path(std::istream& in) {
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto tokens = split(line);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    PathSeq path;
    for (const auto& tok : tokens) path.push_back(parse_int<Vertex>(tok, line_no, "vertex id"));
    return path;
  }
  throw ParseError(line_no, "empty path file");
}

}  // namespace nsp
