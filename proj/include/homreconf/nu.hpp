#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homreconf/dismantle.hpp"
#include "homreconf/graph.hpp"
#include "homreconf/hom.hpp"

namespace homreconf {

// Ternary operation on V(H) as a flat table, meant to satisfy the majority
// identities f(x,x,y) = f(x,y,x) = f(y,x,x) = x and be a homomorphism
// H^3 -> H.
struct MajorityTable {
  int n = 0;
  std::vector<int> table;  // n^3 entries, index (x n + y) n + z

  int at(int x, int y, int z) const { return table[((size_t)x * n + y) * n + z]; }
  int& at(int x, int y, int z) { return table[((size_t)x * n + y) * n + z]; }
};

// Checks both requirements exactly, by enumeration.
bool validate_majority(const Graph& h, const MajorityTable& f);

// Lines "x y z -> w". Serialization covers every triple; the parser accepts
// any order but requires completeness.
std::string serialize_majority(const Graph& h, const MajorityTable& f);
MajorityTable parse_majority(const Graph& h, const std::string& text);

struct NuVerdict {
  bool nu = false;
  // Dismantling of the diagonal component onto the diagonal when nu, the
  // stuck retract (component vertex ids) when not.
  DismantlingSequence certificate;
  std::vector<int> stuck;
};

// H admits a near-unanimity polymorphism of some arity iff the diagonal
// component of H^2 dismantles to the diagonal. Requires connected H.
NuVerdict is_nu(const Graph& h);
NuVerdict is_nu(const Graph& h, const DiagonalSquare& ds);

// Exhaustive search for a 3-ary table via the extension solver on H^3 with
// the near-unanimous cells pinned; first table in lexicographic cell order.
// Graphs over max_n vertices are refused (CapExceeded).
std::optional<MajorityTable> find_majority(const Graph& h, int max_n = 8);

// Exact decision for acyclic connected T by leaf-to-root domain propagation.
bool tree_extension_solvable(const Graph& t, const PartialColouring& pins,
                             const Graph& h);

struct TreeObstruction {
  Graph tree;
  PartialColouring pins;  // on the leaves
};

// Searches spiders with three branches of lengths 1..depth_bound (leaves
// pinned over all vertex triples of H) for a critical obstruction: no
// extension exists, yet dropping any single edge admits one. none is only a
// bounded-search result, not a proof of absence.
std::optional<TreeObstruction> find_3leaf_obstruction(const Graph& h, int depth_bound);

}  // namespace homreconf
