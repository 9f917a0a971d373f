#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ihara {

using Vertex = std::size_t;

/// Undirected edge, stored with `u < v`.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Loops are rejected and
/// repeated edges collapse, so the edge list is always sorted and unique.
class Graph {
 public:
  Graph(std::size_t vertex_count, std::span<const std::pair<Vertex, Vertex>> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Edge-list text: one "u v" pair per line, '#' starts a comment line,
/// blank lines are ignored. n is one more than the largest id seen.
Graph parse_edge_list(std::string_view text);

Graph read_edge_list_file(const std::string& path);

std::string to_edge_list(const Graph& g);

enum class Violation {
  NotConnected,
  MinDegreeBelowTwo,
  IsCycleGraph,
  IsPathGraph,
  HasLoop,
  HasMultiEdge,
};

std::string_view to_string(Violation v) noexcept;

struct AdmissibilityReport {
  std::vector<Violation> violations;

  bool admissible() const noexcept { return violations.empty(); }
  bool has(Violation v) const noexcept;
};

AdmissibilityReport validate_admissible(const Graph& g);

/// Same checks on an unvalidated edge list, which may still carry loops or
/// repeated edges.
AdmissibilityReport validate_edge_list(std::size_t vertex_count,
                                       std::span<const std::pair<Vertex, Vertex>> edges);

struct DirectedEdge {
  Vertex tail = 0;  ///< initial vertex
  Vertex head = 0;  ///< terminal vertex
};

/// The 2m orientations of an admissible graph. Index k < m is the k-th
/// undirected edge (u, v) with u < v in sorted order; index k + m is its
/// reverse.
class DirectedEdgeSet {
 public:
  explicit DirectedEdgeSet(const Graph& g);

  std::size_t size() const noexcept { return edges_.size(); }
  std::size_t undirected_count() const noexcept { return edges_.size() / 2; }
  const DirectedEdge& operator[](std::size_t k) const { return edges_[k]; }
  const std::vector<DirectedEdge>& edges() const noexcept { return edges_; }

  std::size_t inverse(std::size_t k) const noexcept {
    const std::size_t m = undirected_count();
    return k < m ? k + m : k - m;
  }

  /// Edges leaving vertex v, in index order.
  const std::vector<std::size_t>& outgoing(Vertex v) const { return outgoing_.at(v); }
  std::size_t vertex_count() const noexcept { return outgoing_.size(); }

 private:
  std::vector<DirectedEdge> edges_;
  std::vector<std::vector<std::size_t>> outgoing_;
};

/// Throws NotAdmissible when `g` fails validation.
DirectedEdgeSet orientations(const Graph& g);

/// Small named graphs used in tests, benchmarks, and the CLI's bundled data.
namespace catalog {

Graph complete(std::size_t n);
Graph cycle(std::size_t n);
Graph path(std::size_t n);
/// K4 with one edge removed.
Graph diamond();
/// Hub 4 joined to the rim cycle 0-2-3-1-0 (a five-reflector arrangement).
Graph wheel5();
Graph petersen();
Graph complete_bipartite(std::size_t a, std::size_t b);

}  // namespace catalog

}  // namespace ihara
