#pragma once

#include <optional>
#include <vector>

#include "homreconf/graph.hpp"
#include "homreconf/hom.hpp"
#include "homreconf/paths.hpp"

namespace homreconf {

// Per-G-vertex candidate sets.
struct DomainTable {
  std::vector<Bitset> dom;

  bool any_empty() const {
    for (const auto& d : dom)
      if (d.none()) return true;
    return false;
  }
};

// Full domains, pins restricted to singletons, looped G-vertices restricted
// to looped H-vertices.
DomainTable initial_domains(const Graph& g, const Graph& h, const PartialColouring& p);

// AC-3 to the largest fixpoint: every kept value has a neighbour in the
// domain of every G-neighbour. Returns false iff some domain emptied
// (definitely unsatisfiable); true means consistent, not satisfiable.
bool arc_consistency(const Graph& g, const Graph& h, DomainTable& domains);

enum class VarOrder { kSmallestDomain, kDeclaration };

struct SolveOptions {
  VarOrder var_order = VarOrder::kSmallestDomain;
};

// Backtracking with arc-consistency maintained at every node; values are
// tried in H declaration order, so the result is deterministic. none only
// after exhausting the search space.
std::optional<Assignment> solve_extension(const Graph& g, const Graph& h,
                                          const PartialColouring& p,
                                          const SolveOptions& opts = {});

// I_ell x G (reflexive path times G) with endpoint copies pinned to phi/psi
// and interior copies pinned wherever p pins.
struct LadderInstance {
  Graph graph;
  PartialColouring pins;
  int ell = 0;
  int g_size = 0;
  bool inconsistent = false;  // conflicting endpoint pins (ell = 0, phi != psi)

  int index(int i, int gv) const { return i * g_size + gv; }
};

LadderInstance ladder_instance(const Graph& g, int ell, const PartialColouring& p,
                               const Assignment& phi, const Assignment& psi);

// Minimum-length walk phi -> psi in Hom(G,H;p) with length <= max_len, found
// by solving ladder instances for increasing ell. A parity/distance precheck
// discards infeasible lengths before any search. none = no walk within the
// budget.
std::optional<Walk> shortest_hom_walk(const Graph& g, const Graph& h,
                                      const PartialColouring& p,
                                      const Assignment& phi, const Assignment& psi,
                                      int max_len);

// 2 n_H with a majority table in hand, else 2 n_H^2: a walk exists within
// this budget whenever the endpoints are connected at all (NU targets).
int default_walk_budget(const Graph& h, bool has_majority);

}  // namespace homreconf
