#pragma once

#include <string>
#include <vector>

#include "homreconf/builders.hpp"
#include "homreconf/graph.hpp"

namespace corpus {

struct NamedGraph {
  std::string name;
  homreconf::Graph g;
};

// Hand-picked hosts with stable names: a mix of dismantlable/NU targets and
// known hard ones, loops and bipartite cases included.
std::vector<NamedGraph> named_hosts();

// Every connected graph on <= max_n vertices, all loop patterns. max_n = 4
// gives 646 graphs.
std::vector<NamedGraph> exhaustive_small(int max_n = 4);

// `count` seeded random connected graphs on 5..6 vertices, loops allowed.
std::vector<NamedGraph> random_five_six(int count, unsigned long long seed);

// exhaustive_small(4) + random_five_six(count, seed): the sweep used by the
// property suites.
std::vector<NamedGraph> property_corpus(int random_count = 200,
                                        unsigned long long seed = 20250816ULL);

}  // namespace corpus
