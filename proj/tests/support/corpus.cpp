#include "support/corpus.hpp"

#include <random>

namespace corpus {

using homreconf::Graph;

static Graph star_1_3() {
  Graph g;
  for (int i = 0; i < 4; ++i) g.add_vertex(std::to_string(i));
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(0, 3);
  return g;
}

std::vector<NamedGraph> named_hosts() {
  using namespace homreconf;
  std::vector<NamedGraph> out;
  out.push_back({"k2", path_graph(2)});
  out.push_back({"p3", path_graph(3)});
  out.push_back({"p4", path_graph(4)});
  out.push_back({"p5", path_graph(5)});
  out.push_back({"star_1_3", star_1_3()});
  out.push_back({"c4", cycle_graph(4)});
  out.push_back({"c5", cycle_graph(5)});
  out.push_back({"c6", cycle_graph(6)});
  out.push_back({"k3", complete_graph(3)});
  out.push_back({"k4", complete_graph(4)});
  out.push_back({"refl_edge", path_graph(2, true)});
  out.push_back({"refl_p3", path_graph(3, true)});
  out.push_back({"refl_c4", cycle_graph(4, true)});
  out.push_back({"single_loop", looped_vertex()});
  out.push_back({"diamond", diamond_graph()});
  out.push_back({"q3", hypercube(3)});
  out.push_back({"king3", king_graph(3, 3)});
  return out;
}

std::vector<NamedGraph> exhaustive_small(int max_n) {
  std::vector<NamedGraph> out;
  auto all = homreconf::all_connected_graphs(max_n);
  out.reserve(all.size());
  int i = 0;
  for (auto& g : all)
    out.push_back({"small_" + std::to_string(i++), std::move(g)});
  return out;
}

std::vector<NamedGraph> random_five_six(int count, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::vector<NamedGraph> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    int n = 5 + (int)(rng() % 2);
    double edge_prob = 0.3 + 0.4 * std::uniform_real_distribution<double>(0, 1)(rng);
    double loop_prob = (i % 3 == 0) ? 0.0 : (i % 3 == 1) ? 0.3 : 1.0;
    out.push_back({"rand_" + std::to_string(i),
                   homreconf::random_connected_graph(rng, n, edge_prob, loop_prob)});
  }
  return out;
}

std::vector<NamedGraph> property_corpus(int random_count, unsigned long long seed) {
  auto out = exhaustive_small(4);
  auto rnd = random_five_six(random_count, seed);
  for (auto& ng : rnd) out.push_back(std::move(ng));
  return out;
}

}  // namespace corpus
