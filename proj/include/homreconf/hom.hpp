#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "homreconf/bitset.hpp"
#include "homreconf/graph.hpp"

namespace homreconf {

// Total map V(G) -> V(H), indexed by G vertex id.
using Assignment = std::vector<int>;

// Partial map V(G) -> V(H); -1 marks an unpinned vertex.
struct PartialColouring {
  std::vector<int> image;

  static PartialColouring empty(int n_g) {
    PartialColouring p;
    p.image.assign(n_g, -1);
    return p;
  }
  bool pinned(int v) const { return image[v] >= 0; }
  int pinned_count() const {
    int c = 0;
    for (int x : image) c += x >= 0;
    return c;
  }
};

bool is_homomorphism(const Graph& g, const Graph& h, const Assignment& a);
bool extends_pins(const Assignment& a, const PartialColouring& p);

enum class HomEdgeMode { kWalk, kReconfig };

// All homomorphisms G -> H extending p, in lexicographic order over G's
// vertex order. The guard rejects instances whose raw search space
// |V(H)|^#unpinned exceeds cap; an inconsistent p just yields an empty list.
std::vector<Assignment> enumerate_extensions(const Graph& g, const Graph& h,
                                             const PartialColouring& p,
                                             int64_t cap = 1'000'000);

// WALK: for every ordered u ~ v (loops included), phi(u) ~ psi(v).
// RECONFIG: WALK-adjacent and differing on exactly one vertex.
// Validates both inputs; throws InvalidEndpoints on a non-homomorphism.
bool hom_adjacent(const Graph& g, const Graph& h, const Assignment& phi,
                  const Assignment& psi, HomEdgeMode mode);

// Explicit graph on the extensions of p. WALK mode keeps the self-loops.
struct HomGraph {
  std::vector<Assignment> nodes;   // lex order
  HomEdgeMode mode = HomEdgeMode::kWalk;
  bool black_restricted_applied = false;
  std::string warning;             // set when a requested restriction was ignored

  std::vector<Bitset> adj;
  std::vector<int> component;      // component id per node, 0-based
  int component_count = 0;
  std::vector<int> comp_diameter;  // per component, hop diameter
  int diameter = 0;                // max over components; 0 when empty

  int find_node(const Assignment& a) const;        // -1 when absent
  std::vector<int> distances_from(int i) const;    // -1 across components
  int distance(int i, int j) const;
  std::vector<int> shortest_path(int i, int j) const;  // node ids, empty if none
};

// black_restricted keeps only maps sending black G-vertices to black
// H-vertices; it applies only when both graphs are bipartite and the pins
// already preserve sides, and is otherwise ignored with a warning.
HomGraph hom_graph(const Graph& g, const Graph& h, const PartialColouring& p,
                   HomEdgeMode mode, bool black_restricted = false,
                   int64_t cap = 1'000'000);

// DOT text, nodes labelled by their image tuples. Refuses graphs over
// max_nodes (CapExceeded).
std::string hom_graph_dot(const HomGraph& hg, const Graph& g, const Graph& h,
                          int max_nodes = 2000);

// Mapping file: one "g_vertex h_vertex" pair per line, '#' comments.
// Partial maps leave vertices out; duplicate pins must agree.
PartialColouring parse_mapping(std::string_view text, const Graph& g, const Graph& h);
Assignment parse_total_mapping(std::string_view text, const Graph& g, const Graph& h);
std::string mapping_to_text(const Graph& g, const Graph& h, const PartialColouring& p);
std::string mapping_to_text(const Graph& g, const Graph& h, const Assignment& a);

}  // namespace homreconf
