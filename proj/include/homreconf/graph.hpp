#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "homreconf/bitset.hpp"

namespace homreconf {

// Finite graph: symmetric adjacency, loops allowed, no multi-edges.
// Vertices are named by non-whitespace tokens and iterate in declaration
// order; that order is the determinism anchor for everything downstream.
class Graph {
 public:
  Graph() = default;

  int add_vertex(std::string name);             // throws on duplicate name
  int ensure_vertex(std::string_view name);     // add if missing
  void add_edge(int u, int v);                  // u == v declares a loop
  void add_edge(std::string_view u, std::string_view v);

  int vertex_count() const { return (int)names_.size(); }
  const std::string& vertex_name(int v) const { return names_[v]; }
  const std::vector<std::string>& vertex_names() const { return names_; }
  std::optional<int> find_vertex(std::string_view name) const;
  int vertex(std::string_view name) const;      // throws on unknown name

  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  const Bitset& neighbors(int v) const { return adj_[v]; }
  bool has_loop(int v) const { return adj_[v].test(v); }
  int degree(int v) const { return adj_[v].count(); }

  // Undirected edges as (u, v) with u <= v, loops included once, ordered by
  // (u, v).
  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const { return (int)edges().size(); }

  bool is_connected() const;     // loops ignored; empty graph counts as connected
  bool is_reflexive() const;     // every vertex looped
  bool is_irreflexive() const;   // no vertex looped

  // Vertex indices sorted by name. Dismantling tie-breaks use this order.
  std::vector<int> vertices_by_name() const;

  // Round-trips through parse_graph: one line per vertex in declaration
  // order, then one line per edge.
  std::string to_text() const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<Bitset> adj_;
};

// Edge-list text: '#' starts a comment, a one-token line declares an isolated
// vertex, a two-token line an edge (equal tokens a loop). Duplicates are
// idempotent; three or more tokens is a ParseError carrying the line number.
Graph parse_graph(std::string_view text);
Graph parse_graph_file(const std::string& path);

// All-pairs BFS distances. Unreachable pairs get the sentinel, never a large
// finite value.
struct DistanceMatrix {
  static constexpr int kUnreachable = -1;

  int n = 0;
  std::vector<int> d;

  int at(int u, int v) const { return d[(size_t)u * n + v]; }
  bool reachable(int u, int v) const { return at(u, v) != kUnreachable; }
};

DistanceMatrix distance_matrix(const Graph& g);

// side[v] is 0 (black) or 1 (white). In every component the black side is the
// one containing the lexicographically least vertex name.
struct Bipartition {
  std::vector<int> side;
};

std::optional<Bipartition> bipartite_classify(const Graph& g);

// Categorical product. Pair vertices are named "a|b" and laid out row-major
// by the left factor, so pair_index is pure arithmetic.
struct ProductGraph {
  Graph graph;
  int left_size = 0;
  int right_size = 0;

  int pair_index(int a, int b) const { return a * right_size + b; }
  int left_of(int v) const { return v / right_size; }
  int right_of(int v) const { return v % right_size; }
};

ProductGraph categorical_product(const Graph& a, const Graph& b);

// K2 x H, the bipartite resolution. The K2 factor is on the left with
// vertices "0" and "1".
ProductGraph bipartite_resolution(const Graph& h);

// H^2 together with its diagonal structure: the component of the square
// containing the diagonal, induced as its own graph (names preserved), plus
// BFS distances to the diagonal. Built once per H and shared by the
// dismantling and reconfiguration routines.
struct DiagonalSquare {
  ProductGraph square;
  Graph component;                      // induced on the diagonal's component
  std::vector<int> comp_to_square;      // component index -> square index
  std::vector<int> square_to_comp;      // square index -> component index or -1
  std::vector<std::pair<int, int>> coords;  // per component vertex, (a, b) in H
  std::vector<int> diagonal;            // component indices of (x, x), by x
  std::vector<int> dist_to_diagonal;    // per component vertex
  int h_size = 0;

  // -1 when (a, b) lies outside the diagonal's component.
  int pair_component_index(int a, int b) const {
    return square_to_comp[(size_t)a * h_size + b];
  }
};

// Requires connected H.
DiagonalSquare square_with_diagonal(const Graph& h);

}  // namespace homreconf
