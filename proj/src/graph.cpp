#include "ihara/graph.hpp"

#include "ihara/error.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace ihara {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_vertex(std::string_view token, Vertex& out) {
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end;
}

Edge normalized(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

struct DegreeSummary {
  std::size_t min = 0;
  std::size_t max = 0;
};

bool connected(std::size_t n, const std::vector<std::vector<Vertex>>& adjacency) {
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adjacency[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

// Checks shared by the Graph and raw edge-list entry points. `adjacency`
// holds distinct non-loop neighbours.
void structural_checks(std::size_t n, std::size_t simple_edges, const std::vector<std::vector<Vertex>>& adjacency,
                       AdmissibilityReport& report) {
  const bool is_connected = connected(n, adjacency);
  if (!is_connected) report.violations.push_back(Violation::NotConnected);

  DegreeSummary deg{adjacency.empty() ? 0 : adjacency[0].size(), 0};
  for (const auto& nb : adjacency) {
    deg.min = std::min(deg.min, nb.size());
    deg.max = std::max(deg.max, nb.size());
  }
  if (deg.min < 2) report.violations.push_back(Violation::MinDegreeBelowTwo);

  if (is_connected && n >= 3 && deg.min == 2 && deg.max == 2) report.violations.push_back(Violation::IsCycleGraph);
  // A connected graph with n - 1 edges and maximum degree <= 2 is a path.
  if (is_connected && simple_edges + 1 == n && deg.max <= 2) report.violations.push_back(Violation::IsPathGraph);
}

}  // namespace

Graph::Graph(std::size_t vertex_count, std::span<const std::pair<Vertex, Vertex>> edges)
    : n_(vertex_count), adjacency_(vertex_count) {
  if (n_ == 0) throw Error(ErrorKind::EmptyGraph, "graph needs at least one vertex");
  std::set<Edge> unique;
  for (const auto& [a, b] : edges) {
    if (a >= n_ || b >= n_) {
      throw Error(ErrorKind::VertexOutOfRange,
                  "edge (" + std::to_string(a) + ", " + std::to_string(b) + ") with n = " + std::to_string(n_));
    }
    if (a == b) throw Error(ErrorKind::LoopEdge, "loop at vertex " + std::to_string(a));
    unique.insert(normalized(a, b));
  }
  edges_.assign(unique.begin(), unique.end());
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::size_t line_number = 0;
  Vertex max_id = 0;
  while (!text.empty()) {
    const auto newline = text.find('\n');
    const std::string_view raw = text.substr(0, newline);
    text = newline == std::string_view::npos ? std::string_view{} : text.substr(newline + 1);
    ++line_number;

    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
      const auto start = line.find_first_not_of(" \t", pos);
      if (start == std::string_view::npos) break;
      const auto stop = line.find_first_of(" \t", start);
      tokens.push_back(line.substr(start, stop == std::string_view::npos ? std::string_view::npos : stop - start));
      pos = stop == std::string_view::npos ? line.size() : stop;
    }
    const std::string where = "line " + std::to_string(line_number);
    if (tokens.size() != 2) throw Error(ErrorKind::MalformedLine, where + ": expected two vertex ids");
    Vertex a = 0, b = 0;
    if (!parse_vertex(tokens[0], a) || !parse_vertex(tokens[1], b)) {
      throw Error(ErrorKind::MalformedLine, where + ": vertex ids must be nonnegative integers");
    }
    if (a == b) throw Error(ErrorKind::LoopEdge, where + ": loop at vertex " + std::to_string(a));
    max_id = std::max({max_id, a, b});
    edges.emplace_back(a, b);
  }
  if (edges.empty()) throw Error(ErrorKind::EmptyGraph, "no edges in input");
  return Graph(max_id + 1, edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str());
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

std::string_view to_string(Violation v) noexcept {
  switch (v) {
    case Violation::NotConnected: return "NotConnected";
    case Violation::MinDegreeBelowTwo: return "MinDegreeBelowTwo";
    case Violation::IsCycleGraph: return "IsCycleGraph";
    case Violation::IsPathGraph: return "IsPathGraph";
    case Violation::HasLoop: return "HasLoop";
    case Violation::HasMultiEdge: return "HasMultiEdge";
  }
  return "Unknown";
}

bool AdmissibilityReport::has(Violation v) const noexcept {
  return std::find(violations.begin(), violations.end(), v) != violations.end();
}

AdmissibilityReport validate_admissible(const Graph& g) {
  std::vector<std::vector<Vertex>> adjacency(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) adjacency[v] = g.neighbors(v);
  AdmissibilityReport report;
  structural_checks(g.vertex_count(), g.edge_count(), adjacency, report);
  return report;
}

AdmissibilityReport validate_edge_list(std::size_t vertex_count, std::span<const std::pair<Vertex, Vertex>> edges) {
  AdmissibilityReport report;
  bool loop = false, multi = false;
  std::set<Edge> unique;
  for (const auto& [a, b] : edges) {
    if (a >= vertex_count || b >= vertex_count) {
      throw Error(ErrorKind::VertexOutOfRange, "edge endpoint outside [0, n)");
    }
    if (a == b) {
      loop = true;
      continue;
    }
    if (!unique.insert(normalized(a, b)).second) multi = true;
  }
  if (loop) report.violations.push_back(Violation::HasLoop);
  if (multi) report.violations.push_back(Violation::HasMultiEdge);

  std::vector<std::vector<Vertex>> adjacency(vertex_count);
  for (const Edge& e : unique) {
    adjacency[e.u].push_back(e.v);
    adjacency[e.v].push_back(e.u);
  }
  structural_checks(vertex_count, unique.size(), adjacency, report);
  return report;
}

DirectedEdgeSet::DirectedEdgeSet(const Graph& g) : outgoing_(g.vertex_count()) {
  const auto& undirected = g.edges();
  const std::size_t m = undirected.size();
  edges_.resize(2 * m);
  for (std::size_t k = 0; k < m; ++k) {
    edges_[k] = {undirected[k].u, undirected[k].v};
    edges_[k + m] = {undirected[k].v, undirected[k].u};
  }
  for (std::size_t k = 0; k < edges_.size(); ++k) outgoing_[edges_[k].tail].push_back(k);
}

DirectedEdgeSet orientations(const Graph& g) {
  const AdmissibilityReport report = validate_admissible(g);
  if (!report.admissible()) {
    std::string what;
    for (Violation v : report.violations) {
      if (!what.empty()) what += ", ";
      what += to_string(v);
    }
    throw Error(ErrorKind::NotAdmissible, what);
  }
  return DirectedEdgeSet(g);
}

namespace catalog {

namespace {
Graph from_pairs(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs) { return Graph(n, pairs); }
}  // namespace

Graph complete(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return from_pairs(n, pairs);
}

Graph cycle(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u) pairs.emplace_back(u, (u + 1) % n);
  return from_pairs(n, pairs);
}

Graph path(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u + 1 < n; ++u) pairs.emplace_back(u, u + 1);
  return from_pairs(n, pairs);
}

Graph diamond() { return from_pairs(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }

Graph wheel5() {
  // Reflectors 1..5 relabelled 0..4; 4 is the centre.
  return from_pairs(5, {{0, 2}, {2, 3}, {3, 1}, {1, 0}, {0, 4}, {4, 3}, {1, 4}, {4, 2}});
}

Graph petersen() {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i < 5; ++i) {
    pairs.emplace_back(i, (i + 1) % 5);       // outer cycle
    pairs.emplace_back(i, i + 5);             // spokes
    pairs.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return from_pairs(10, pairs);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) pairs.emplace_back(u, a + v);
  return from_pairs(a + b, pairs);
}

}  // namespace catalog

}  // namespace ihara
