#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homreconf/graph.hpp"
#include "homreconf/hom.hpp"
#include "homreconf/reconfig.hpp"

namespace homreconf {

// Shortest-path reconfiguration as a pinned-extension problem: vertices of an
// irreflexive path P_d play position indices, pins fix the two ends to u and
// v, and the extensions are exactly the shortest u-v paths in host.
struct SprInstance {
  Graph host;   // loops stripped
  bool stripped_loops = false;
  int u = -1, v = -1;
  int d = 0;                 // d_host(u, v)
  Graph path;                // irreflexive path "0".."d"
  PartialColouring pins;     // "0" -> u, "d" -> v
};

// Throws std::invalid_argument when u, v are out of range or not connected
// in host (after loop stripping).
SprInstance spr_instance(const Graph& h, int u, int v);

struct SprOptions {
  // Loop sets to try for the dismantlable-host route, in order. Empty means
  // the default: all vertices looped, then none.
  std::vector<std::vector<int>> loop_sets;
  long long cap = 1'000'000;  // oracle state cap
  int k = 0;                  // caller-claimed NU arity (0 = unknown); only
                              // reported, never asserted, except k = 3
};

struct SprResult {
  ReconfigureResult inner;
  std::string route;           // "trivial", "nu", "oracle"
  std::vector<int> loops_used; // loop set that made the host dismantlable
  bool k3_verified = false;    // majority table found for the routed host
  double bound = 0.0;          // d*d/2.0 - 1.0 for d >= 2
  bool bound_asserted = false; // d >= 2 and k3_verified
  std::optional<long long> general_bound;  // (k-2) * (d+1)d/2 when k > 2 given
};

// Endpoints are assignments over inst.path (positions 0..d). Route: try the
// loop-augmented hosts; the first one whose diagonal square dismantles gets
// the constructive pipeline, otherwise fall back to breadth-first search over
// the explicit graph. Throws InvalidEndpoints when phi or psi is not a
// shortest u-v path.
SprResult spr_reconfigure(const SprInstance& inst, const Assignment& phi,
                          const Assignment& psi, const SprOptions& opts = {});

struct SpTrivialVerdict {
  bool nu_sufficient = false;  // host + loops dismantles diagonally
  bool exact_ran = false;
  bool exact_trivial = false;  // every pair's instance graph is connected
  std::optional<std::pair<int, int>> witness;  // first disconnected pair
};

// Sufficient test: is_nu(h + loops). Exact test (run when run_exact, capped):
// breadth-first search over Hom(P_d, h; pins) for every unordered pair.
// Throws std::invalid_argument when h has a loop or is disconnected.
SpTrivialVerdict sp_trivial_check(const Graph& h, const std::vector<int>& loops,
                                  long long cap, bool run_exact = true);

// h with loops added at the given vertices (all of them when the set is
// empty and add_all is true).
Graph with_loops(const Graph& h, const std::vector<int>& loops);
Graph with_all_loops(const Graph& h);

}  // namespace homreconf
