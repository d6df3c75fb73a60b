#pragma once

#include <vector>

#include "homreconf/hom.hpp"

namespace homreconf {

// Sequence of homomorphisms, consecutive ones WALK-adjacent. length() counts
// edges, not maps.
struct Walk {
  std::vector<Assignment> maps;

  int length() const { return maps.empty() ? 0 : (int)maps.size() - 1; }
};

struct PathTransition {
  int vertex = -1;  // G vertex that changes
  int from = -1;    // H vertex before
  int to = -1;      // H vertex after
};

// Walk refined so consecutive maps differ on exactly one vertex; stored as a
// start map plus transitions.
struct ReconfigPath {
  Assignment start;
  std::vector<PathTransition> transitions;

  int length() const { return (int)transitions.size(); }
  Assignment end() const;
  std::vector<Assignment> maps() const;  // start included
};

// Every map a homomorphism extending p, consecutive maps WALK-adjacent.
bool validate_walk(const Graph& g, const Graph& h, const PartialColouring& p,
                   const Walk& w);

// Walk validity plus: each transition changes exactly its named vertex with
// the recorded values.
bool validate_reconfig_path(const Graph& g, const Graph& h,
                            const PartialColouring& p, const ReconfigPath& path);

}  // namespace homreconf
