#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homreconf/dismantle.hpp"
#include "homreconf/graph.hpp"
#include "homreconf/hom.hpp"
#include "homreconf/nu.hpp"
#include "homreconf/paths.hpp"

namespace homreconf {

// Coordinatewise image-distance data for a pair of maps G -> H.
struct DeltaStats {
  int total = 0;      // sum over G vertices of d_H(phi(v), psi(v))
  int odd_count = 0;  // how many of those distances are odd
};

// Throws std::invalid_argument if some phi(v), psi(v) are in different
// components of H.
DeltaStats delta_stats(const Graph& g, const Graph& h, const Assignment& phi,
                       const Assignment& psi);

// Both halves of the dismantling walk before dedup. Row i is the image of
// phi x psi after the first i steps of seq, split into coordinates:
// a[i] = first coordinate, b[i] = second. a.back() == b.back() (all pairs
// have been retracted onto the diagonal).
struct DiagonalWalkParts {
  std::vector<Assignment> a, b;
};

// Throws std::invalid_argument if some (phi(v), psi(v)) lies outside the
// diagonal component.
DiagonalWalkParts diagonal_walk_parts(const Graph& g, const DiagonalSquare& ds,
                                      const DismantlingSequence& seq,
                                      const Assignment& phi,
                                      const Assignment& psi);

// The walk a_0 ... a_d b_{d-1} ... b_0 from phi to psi, consecutive equal
// maps merged. Pinned vertices never move (their pair sits on the diagonal,
// which every retraction fixes). Length <= 2 * seq.steps.size().
Walk walk_from_diagonal_dismantling(const Graph& g, const DiagonalSquare& ds,
                                    const DismantlingSequence& seq,
                                    const PartialColouring& p,
                                    const Assignment& phi,
                                    const Assignment& psi);

// Refines each WALK edge into single-vertex updates, applied in G's vertex
// order; no-op transitions dropped. Any update order stays valid on a WALK
// edge, so the output always replays; a replay failure means a broken input
// walk and throws std::logic_error.
ReconfigPath resolve_walk(const Graph& g, const Graph& h, const Walk& w,
                          const PartialColouring& p);

// Pointwise majority lift f(psi(v), w_i(v), phi(v)) of an unpinned walk
// between two extensions of p. Same length as w; every step extends p;
// first map collapses to phi and last to psi by the near-unanimity
// identities. Throws std::invalid_argument if f is not a valid majority
// table for h or w's endpoints do not extend p.
Walk nu_lift_walk(const Graph& g, const Graph& h, const Walk& w,
                  const MajorityTable& f, const PartialColouring& p);

// Unpinned walk phi -> psi through a greedy dismantling of H itself onto a
// single looped vertex (if any) or onto one edge (bipartite H): phi, r1.phi,
// ..., rbar.phi, rbar.psi, ..., psi. Length <= 2 n_H - 1. Combined with
// nu_lift_walk this witnesses the 2 n_H WALK-diameter bound for hosts with a
// majority. Throws std::invalid_argument when H has no anchor (no loop, not
// bipartite) or does not dismantle to it, std::runtime_error when the two
// halves fail to meet compatibly (endpoints in different components).
Walk retraction_walk(const Graph& g, const Graph& h, const Assignment& phi,
                     const Assignment& psi);

enum class ReconfigStatus {
  kPath,          // path emitted
  kDisconnected,  // endpoints provably in different components
  kUndecided,     // dismantling failed and the oracle was not enabled
};

struct BoundCertificate {
  std::string name;  // "|psi-phi|-1", "|psi-phi|+O-1", "|psi-phi|+O",
                     // "2*nG*nH^2", "oracle"
  long long value = 0;
  bool skip_fired = false;  // final-step skip shortened the walk
  bool efficient = false;   // strictly-decreasing dismantling was used
};

struct ReconfigureOptions {
  bool with_oracle = false;    // brute-force fallback / optimum comparison
  long long cap = 1'000'000;   // oracle state cap
};

struct ReconfigureResult {
  ReconfigStatus status = ReconfigStatus::kUndecided;
  ReconfigPath path;        // meaningful when status == kPath
  Walk walk;                // pre-resolution walk (same endpoints)
  DeltaStats delta;
  BoundCertificate certificate;
  DismantlingSequence dismantling;  // diagonal sequence used; empty if none
  bool used_greedy = false;         // greedy fallback instead of efficient
  std::optional<long long> oracle_distance;
  std::string note;
};

// Top-level pipeline: dismantle the diagonal component of H^2 (strictly
// decreasing first, greedy fallback), reorder so the last removed pair sits
// at distance 1, build the two-sided walk, skip its apex when the flanking
// maps are WALK-adjacent, resolve into single-vertex steps, and certify the
// tightest applicable length bound. Vertices of G with no edges at all are
// routed as one direct transition each after the walk. The oracle is only
// consulted when opts.with_oracle is set. Throws InvalidEndpoints when phi
// or psi is not a homomorphism extending p.
ReconfigureResult reconfigure(const Graph& g, const Graph& h,
                              const PartialColouring& p, const Assignment& phi,
                              const Assignment& psi,
                              const ReconfigureOptions& opts = {});

}  // namespace homreconf
