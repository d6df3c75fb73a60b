#include "homreconf/nu.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "homreconf/errors.hpp"
#include "homreconf/extsolver.hpp"

namespace homreconf {
namespace {

// Ordered adjacent pairs of h, loops once as (v,v).
std::vector<std::pair<int, int>> ordered_adjacent(const Graph& h) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < h.vertex_count(); ++a)
    h.neighbors(a).for_each([&](int b) { out.emplace_back(a, b); });
  return out;
}

// Leaf-to-root propagation on one tree component; exact for trees.
bool tree_component_solvable(const Graph& f, const std::vector<int>& comp,
                             const PartialColouring& pins, const Graph& h) {
  int nh = h.vertex_count();
  int root = comp.front();

  // BFS order within the component.
  std::vector<int> order, parent(f.vertex_count(), -2);
  parent[root] = -1;
  order.push_back(root);
  for (size_t i = 0; i < order.size(); ++i) {
    int u = order[i];
    f.neighbors(u).for_each([&](int w) {
      if (parent[w] == -2) {
        parent[w] = u;
        order.push_back(w);
      }
    });
  }

  std::vector<Bitset> allowed(f.vertex_count());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    Bitset dom(nh);
    if (pins.pinned(v))
      dom.set(pins.image[v]);
    else
      dom.set_all();
    f.neighbors(v).for_each([&](int c) {
      if (parent[c] != v) return;  // children only
      Bitset keep(nh);
      dom.for_each([&](int x) {
        if (h.neighbors(x).intersects(allowed[c])) keep.set(x);
      });
      dom = keep;
    });
    allowed[v] = std::move(dom);
    if (allowed[v].none()) return false;
  }
  return allowed[root].any();
}

bool forest_solvable(const Graph& f, const PartialColouring& pins, const Graph& h) {
  int n = f.vertex_count();
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (size_t i = 0; i < comp.size(); ++i)
      f.neighbors(comp[i]).for_each([&](int w) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      });
    if (!tree_component_solvable(f, comp, pins, h)) return false;
  }
  return true;
}

void require_tree(const Graph& t) {
  int n = t.vertex_count();
  int proper = 0;
  for (auto [u, v] : t.edges()) {
    if (u == v) throw std::invalid_argument("tree_extension_solvable: graph has a loop");
    ++proper;
  }
  if (n > 0 && (proper != n - 1 || !t.is_connected()))
    throw std::invalid_argument("tree_extension_solvable: graph is not a tree");
}

}  // namespace

bool validate_majority(const Graph& h, const MajorityTable& f) {
  int n = h.vertex_count();
  if (f.n != n || (int)f.table.size() != n * n * n) return false;
  for (int w : f.table)
    if (w < 0 || w >= n) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (f.at(x, x, y) != x || f.at(x, y, x) != x || f.at(y, x, x) != x)
        return false;
  auto pairs = ordered_adjacent(h);
  for (auto [a, a2] : pairs)
    for (auto [b, b2] : pairs)
      for (auto [c, c2] : pairs)
        if (!h.adjacent(f.at(a, b, c), f.at(a2, b2, c2))) return false;
  return true;
}

std::string serialize_majority(const Graph& h, const MajorityTable& f) {
  std::ostringstream out;
  int n = h.vertex_count();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        out << h.vertex_name(x) << ' ' << h.vertex_name(y) << ' ' << h.vertex_name(z)
            << " -> " << h.vertex_name(f.at(x, y, z)) << '\n';
  return out.str();
}

MajorityTable parse_majority(const Graph& h, const std::string& text) {
  int n = h.vertex_count();
  MajorityTable f;
  f.n = n;
  f.table.assign((size_t)n * n * n, -1);

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (size_t hash = line.find('#'); hash != std::string::npos)
      line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string xs, ys, zs, arrow, ws, extra;
    if (!(ls >> xs)) continue;
    if (!(ls >> ys >> zs >> arrow >> ws) || arrow != "->" || (ls >> extra))
      throw ParseError("expected 'x y z -> w'", line_no);
    auto resolve = [&](const std::string& name) {
      auto v = h.find_vertex(name);
      if (!v) throw ParseError("unknown vertex '" + name + "'", line_no);
      return *v;
    };
    int x = resolve(xs), y = resolve(ys), z = resolve(zs), w = resolve(ws);
    int& cell = f.at(x, y, z);
    if (cell != -1 && cell != w)
      throw ParseError("conflicting entries for a triple", line_no);
    cell = w;
  }
  for (int v : f.table)
    if (v == -1) throw ParseError("table incomplete", line_no);
  return f;
}

NuVerdict is_nu(const Graph& h) { return is_nu(h, square_with_diagonal(h)); }

NuVerdict is_nu(const Graph& h, const DiagonalSquare& ds) {
  (void)h;
  NuVerdict v;
  auto out = greedy_dismantle(ds.component, ds.diagonal);
  v.nu = out.success;
  if (out.success)
    v.certificate = std::move(out.seq);
  else
    v.stuck = std::move(out.stuck);
  return v;
}

std::optional<MajorityTable> find_majority(const Graph& h, int max_n) {
  int n = h.vertex_count();
  if (n > max_n)
    throw CapExceeded("find_majority: " + std::to_string(n) +
                      " vertices exceed the cap of " + std::to_string(max_n));
  MajorityTable f;
  f.n = n;
  if (n == 0) return f;

  auto h2 = categorical_product(h, h);
  auto h3 = categorical_product(h2.graph, h);

  auto pins = PartialColouring::empty(n * n * n);
  auto idx = [&](int x, int y, int z) { return (x * n + y) * n + z; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      pins.image[idx(x, x, y)] = x;
      pins.image[idx(x, y, x)] = x;
      pins.image[idx(y, x, x)] = x;
    }

  SolveOptions opts;
  opts.var_order = VarOrder::kDeclaration;  // lexicographically first table
  auto sol = solve_extension(h3.graph, h, pins, opts);
  if (!sol) return std::nullopt;
  f.table = std::move(*sol);
  return f;
}

bool tree_extension_solvable(const Graph& t, const PartialColouring& pins,
                             const Graph& h) {
  require_tree(t);
  if ((int)pins.image.size() != t.vertex_count())
    throw std::invalid_argument("tree_extension_solvable: pin vector size mismatch");
  if (t.vertex_count() == 0) return true;
  return forest_solvable(t, pins, h);
}

std::optional<TreeObstruction> find_3leaf_obstruction(const Graph& h, int depth_bound) {
  if (depth_bound < 1)
    throw std::invalid_argument("find_3leaf_obstruction: depth_bound must be >= 1");
  int nh = h.vertex_count();

  for (int total = 3; total <= 3 * depth_bound; ++total) {
    for (int l1 = 1; l1 <= depth_bound; ++l1) {
      for (int l2 = l1; l2 <= depth_bound; ++l2) {
        int l3 = total - l1 - l2;
        if (l3 < l2 || l3 > depth_bound) continue;

        // Spider: centre r, branches a/b/c of lengths l1/l2/l3.
        Graph spider;
        spider.add_vertex("r");
        std::vector<int> leaves;
        const char* prefix[3] = {"a", "b", "c"};
        int lens[3] = {l1, l2, l3};
        for (int br = 0; br < 3; ++br) {
          int prev = 0;
          for (int j = 1; j <= lens[br]; ++j) {
            int v = spider.add_vertex(std::string(prefix[br]) + std::to_string(j));
            spider.add_edge(prev, v);
            prev = v;
          }
          leaves.push_back(prev);
        }

        auto edges = spider.edges();
        for (int p1 = 0; p1 < nh; ++p1)
          for (int p2 = 0; p2 < nh; ++p2)
            for (int p3 = 0; p3 < nh; ++p3) {
              auto pins = PartialColouring::empty(spider.vertex_count());
              pins.image[leaves[0]] = p1;
              pins.image[leaves[1]] = p2;
              pins.image[leaves[2]] = p3;
              if (forest_solvable(spider, pins, h)) continue;

              // Drop one edge at a time; every maximal proper subgraph must
              // become solvable for the obstruction to be critical.
              bool critical = true;
              for (auto [eu, ev] : edges) {
                Graph cut;
                for (int v = 0; v < spider.vertex_count(); ++v)
                  cut.add_vertex(spider.vertex_name(v));
                for (auto [u, v] : edges)
                  if (!(u == eu && v == ev)) cut.add_edge(u, v);
                if (!forest_solvable(cut, pins, h)) {
                  critical = false;
                  break;
                }
              }
              if (critical) return TreeObstruction{std::move(spider), std::move(pins)};
            }
      }
    }
  }
  return std::nullopt;
}

}  // namespace homreconf
