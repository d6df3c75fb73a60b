#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "homreconf/graph.hpp"

namespace homreconf {

// Standard test-bench families. Vertex naming is fixed so that fixtures,
// documents and test expectations stay stable.

Graph path_graph(int n, bool reflexive = false);      // vertices "0".."n-1"
Graph cycle_graph(int n, bool reflexive = false);     // n >= 3
Graph complete_graph(int n);                          // irreflexive K_n
Graph hypercube(int d);                               // bitstring names, "000".."111" for d=3
Graph king_graph(int rows, int cols);                 // names "r,c"; reflexive, 8-neighbour moves
Graph diamond_graph();                                // K4 minus one edge, vertices "a".."d"
Graph looped_vertex();                                // single vertex "0" with a loop

// Uniformly samples a connected graph on n vertices ("0".."n-1") by
// rejection: each non-loop pair independently with edge_prob, each vertex
// looped with loop_prob, resample until connected.
Graph random_connected_graph(std::mt19937_64& rng, int n, double edge_prob,
                             double loop_prob);

// Every connected graph on at most max_n vertices, loops included, up to
// nothing: one graph per labelled adjacency pattern. Intended for exhaustive
// desk-scale sweeps (max_n = 4 gives 646 graphs).
std::vector<Graph> all_connected_graphs(int max_n);

}  // namespace homreconf
