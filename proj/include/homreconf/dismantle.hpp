#pragma once

#include <string>
#include <vector>

#include "homreconf/graph.hpp"

namespace homreconf {

// One removal: every neighbour of `removed` still alive at application time
// must be a neighbour of `into` (loops included, so a looped `removed` forces
// `into` adjacent to it and looped).
struct DismantlingStep {
  int removed = -1;
  int into = -1;
};

// Steps apply in order to `base`; `target` is the surviving vertex set in
// ascending id order. base itself is passed alongside, not stored.
struct DismantlingSequence {
  std::vector<DismantlingStep> steps;
  std::vector<int> target;
};

struct DismantleOutcome {
  bool success = false;
  DismantlingSequence seq;    // meaningful on success
  std::vector<int> stuck;     // alive set at failure, ascending; empty on success
};

// All u != v with N(v) subseteq N(u), in the full graph.
std::vector<int> dominating_vertices(const Graph& g, int v);

// Removes currently-dominated non-target vertices until only `target`
// remains. Greedy is complete for this problem, so failure means no
// dismantling to the target exists. Tie-breaks: lexicographically least
// (by name) dominated vertex, then lexicographically least dominator.
DismantleOutcome greedy_dismantle(const Graph& g, const std::vector<int>& target);

// Step-by-step replay of the domination invariant; also checks no target
// vertex is removed and the survivors are exactly `target`.
bool validate_dismantling(const Graph& base, const DismantlingSequence& seq);

// Image of every base vertex under the composed removals: idempotent,
// edge-preserving, fixes survivors pointwise.
std::vector<int> composed_retraction(const Graph& base, const DismantlingSequence& seq);

// Lifts a dismantling of h to one of K2 x h: step v -> v' becomes
// (0,v) -> (0,v') followed by (1,v) -> (1,v'). `bres` must come from
// bipartite_resolution(h).
DismantlingSequence resolve_bipartite(const Graph& h, const ProductGraph& bres,
                                      const DismantlingSequence& seq);

// Inverse direction: project the coordinate-0 steps of a dismantling of
// K2 x h onto h. Requires the input to end at a full two-sided target
// ({0,1} x W) and every step to stay inside its coordinate; the projection
// is replay-validated and an invalid projection throws. (Validity is not
// automatic for arbitrary removal orders, only for orders like the ones
// greedy search or resolve_bipartite produce.)
DismantlingSequence symmetric_shadow(const Graph& h, const ProductGraph& bres,
                                     const DismantlingSequence& seq_on_b);

struct EfficientOutcome {
  bool success = false;
  DismantlingSequence seq;    // on ds.component, target = diagonal
  int stuck_vertex = -1;      // component vertex with no strictly-closer dominator
};

// Dismantles the diagonal component of H^2 onto the diagonal, requiring every
// dominator to sit strictly closer to the diagonal. Each round removes the
// name-least removable vertex from the deepest distance class that has one
// (so the order is farthest-first whenever possible, dipping into shallower
// classes only while the deep ones are stalled); the winning dominator is the
// name-least over classes d-1, d-2, ..., 0 in that order. Eager removal is
// complete for this problem — a vertex that is removable once stays removable,
// because a removed dominator is always replaceable by the strictly closer
// dominator recorded at its own removal — so failure proves that NO
// strictly-descending removal order exists, in which case stuck_vertex is the
// name-least survivor of the deepest surviving class. Some hosts genuinely
// admit no such sequence (the reflexive 4-vertex path is the smallest: the
// pairs (a,c) and (b,d) of its square block each other's only candidate
// dominators forever), so failure here is not a bug in itself; callers fall
// back to greedy_dismantle.
//
// force_last defers one distance-1 vertex to the very end of the order; the
// walk builder uses this to control which pair is removed last.
EfficientOutcome efficient_dismantle_diagonal(const DiagonalSquare& ds,
                                              int force_last = -1);
EfficientOutcome efficient_dismantle_diagonal(const Graph& h);

// Text form: "base: <n> vertices", "target: <names>", then one
// "removed -> into" line per step. parse_dismantling resolves names against
// `base` and throws ParseError on unknown vertices or malformed lines.
std::string serialize_dismantling(const Graph& base, const DismantlingSequence& seq);
DismantlingSequence parse_dismantling(const Graph& base, const std::string& text);

}  // namespace homreconf
