#include "homreconf/builders.hpp"

#include <stdexcept>
#include <string>

namespace homreconf {

Graph path_graph(int n, bool reflexive) {
  if (n < 1) throw std::invalid_argument("path_graph needs n >= 1");
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  if (reflexive)
    for (int i = 0; i < n; ++i) g.add_edge(i, i);
  return g;
}

Graph cycle_graph(int n, bool reflexive) {
  if (n < 3) throw std::invalid_argument("cycle_graph needs n >= 3");
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(std::to_string(i));
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  if (reflexive)
    for (int i = 0; i < n; ++i) g.add_edge(i, i);
  return g;
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete_graph needs n >= 1");
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph hypercube(int d) {
  if (d < 1 || d > 20) throw std::invalid_argument("hypercube needs 1 <= d <= 20");
  Graph g;
  int n = 1 << d;
  for (int i = 0; i < n; ++i) {
    std::string name(d, '0');
    for (int b = 0; b < d; ++b)
      if (i & (1 << (d - 1 - b))) name[b] = '1';
    g.add_vertex(std::move(name));
  }
  for (int i = 0; i < n; ++i)
    for (int b = 0; b < d; ++b) {
      int j = i ^ (1 << b);
      if (i < j) g.add_edge(i, j);
    }
  return g;
}

Graph king_graph(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("king_graph needs positive dims");
  Graph g;
  auto id = [&](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      g.add_vertex(std::to_string(r) + "," + std::to_string(c));
  // Same adjacency as the categorical product of two reflexive paths:
  // |dr| <= 1 and |dc| <= 1, so every vertex is looped.
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      for (int dr = -1; dr <= 1; ++dr)
        for (int dc = -1; dc <= 1; ++dc) {
          int r2 = r + dr, c2 = c + dc;
          if (r2 < 0 || r2 >= rows || c2 < 0 || c2 >= cols) continue;
          if (id(r, c) <= id(r2, c2)) g.add_edge(id(r, c), id(r2, c2));
        }
  return g;
}

Graph diamond_graph() {
  Graph g;
  g.add_vertex("a");
  g.add_vertex("b");
  g.add_vertex("c");
  g.add_vertex("d");
  g.add_edge("a", "b");
  g.add_edge("b", "c");
  g.add_edge("c", "d");
  g.add_edge("d", "a");
  g.add_edge("b", "d");
  return g;
}

Graph looped_vertex() {
  Graph g;
  g.add_vertex("0");
  g.add_edge(0, 0);
  return g;
}

Graph random_connected_graph(std::mt19937_64& rng, int n, double edge_prob,
                             double loop_prob) {
  if (n < 1) throw std::invalid_argument("random_connected_graph needs n >= 1");
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex(std::to_string(i));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng) < edge_prob) g.add_edge(i, j);
    for (int i = 0; i < n; ++i)
      if (coin(rng) < loop_prob) g.add_edge(i, i);
    if (g.is_connected()) return g;
  }
  throw std::runtime_error("random_connected_graph: rejection sampling stalled");
}

std::vector<Graph> all_connected_graphs(int max_n) {
  if (max_n < 1 || max_n > 5)
    throw std::invalid_argument("all_connected_graphs supports 1 <= max_n <= 5");
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    int pairs = n * (n - 1) / 2;
    // Bits: first `pairs` choose the proper edges in (i, j) i<j order, the
    // top n choose the loops.
    for (uint32_t mask = 0; mask < (1u << (pairs + n)); ++mask) {
      Graph g;
      for (int i = 0; i < n; ++i) g.add_vertex(std::to_string(i));
      int bit = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
          if (mask & (1u << bit)) g.add_edge(i, j);
      for (int i = 0; i < n; ++i)
        if (mask & (1u << (pairs + i))) g.add_edge(i, i);
      if (g.is_connected()) out.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace homreconf
