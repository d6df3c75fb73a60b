#include "homreconf/hom.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "homreconf/errors.hpp"

namespace homreconf {
namespace {

// Homomorphism check without the validation wrapper; callers guarantee sizes.
bool walk_adjacent_raw(const std::vector<std::pair<int, int>>& g_edges,
                       const Graph& h, const Assignment& phi, const Assignment& psi) {
  for (auto [u, v] : g_edges) {
    if (!h.adjacent(phi[u], psi[v])) return false;
    if (u != v && !h.adjacent(phi[v], psi[u])) return false;
  }
  return true;
}

int hamming(const Assignment& a, const Assignment& b) {
  int d = 0;
  for (size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

}  // namespace

bool is_homomorphism(const Graph& g, const Graph& h, const Assignment& a) {
  if ((int)a.size() != g.vertex_count()) return false;
  for (int x : a)
    if (x < 0 || x >= h.vertex_count()) return false;
  for (auto [u, v] : g.edges())
    if (!h.adjacent(a[u], a[v])) return false;
  return true;
}

bool extends_pins(const Assignment& a, const PartialColouring& p) {
  if (a.size() != p.image.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (p.image[i] >= 0 && a[i] != p.image[i]) return false;
  return true;
}

std::vector<Assignment> enumerate_extensions(const Graph& g, const Graph& h,
                                             const PartialColouring& p,
                                             int64_t cap) {
  int ng = g.vertex_count(), nh = h.vertex_count();
  if ((int)p.image.size() != ng)
    throw std::invalid_argument("enumerate_extensions: pin vector size mismatch");
  for (int x : p.image)
    if (x < -1 || x >= nh)
      throw std::invalid_argument("enumerate_extensions: pin image out of range");

  int unpinned = ng - p.pinned_count();
  int64_t pot = 1;
  for (int i = 0; i < unpinned; ++i) {
    if (nh == 0) {
      pot = 0;
      break;
    }
    if (pot > cap / nh) {
      throw CapExceeded("enumerate_extensions: |V(H)|^unpinned exceeds cap " +
                        std::to_string(cap));
    }
    pot *= nh;
  }
  if (pot > cap)
    throw CapExceeded("enumerate_extensions: |V(H)|^unpinned exceeds cap " +
                      std::to_string(cap));

  std::vector<Assignment> out;
  if (ng == 0) {
    out.push_back({});
    return out;
  }
  if (nh == 0) return out;

  Assignment cur(ng, -1);
  // Earlier-or-equal neighbours per vertex, fixed once.
  std::vector<std::vector<int>> back(ng);
  for (int v = 0; v < ng; ++v)
    g.neighbors(v).for_each([&](int u) {
      if (u <= v) back[v].push_back(u);
    });

  auto consistent = [&](int v, int x) {
    for (int u : back[v]) {
      int y = u == v ? x : cur[u];
      if (!h.adjacent(y, x)) return false;
    }
    return true;
  };

  // Iterative backtracking in declaration order; values ascend, so the
  // output comes out lexicographically sorted.
  int v = 0;
  std::vector<int> choice(ng, -1);
  while (v >= 0) {
    if (v == ng) {
      out.push_back(cur);
      --v;
      continue;
    }
    bool advanced = false;
    int from = choice[v] + 1;
    if (p.pinned(v)) {
      if (choice[v] == -1 && consistent(v, p.image[v])) {
        choice[v] = p.image[v];
        cur[v] = p.image[v];
        ++v;
        advanced = true;
      } else if (choice[v] == -1) {
        choice[v] = nh;  // pinned value inconsistent: dead end
      }
      if (!advanced && choice[v] == p.image[v]) choice[v] = nh;
    } else {
      for (int x = from; x < nh; ++x) {
        if (consistent(v, x)) {
          choice[v] = x;
          cur[v] = x;
          ++v;
          advanced = true;
          break;
        }
      }
      if (!advanced) choice[v] = nh;
    }
    if (!advanced) {
      choice[v] = -1;
      cur[v] = -1;
      --v;
    }
  }
  return out;
}

bool hom_adjacent(const Graph& g, const Graph& h, const Assignment& phi,
                  const Assignment& psi, HomEdgeMode mode) {
  if (!is_homomorphism(g, h, phi) || !is_homomorphism(g, h, psi))
    throw InvalidEndpoints("hom_adjacent: input is not a homomorphism");
  auto edges = g.edges();
  bool walk = walk_adjacent_raw(edges, h, phi, psi);
  if (mode == HomEdgeMode::kWalk) return walk;
  return walk && hamming(phi, psi) == 1;
}

int HomGraph::find_node(const Assignment& a) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), a);
  if (it == nodes.end() || *it != a) return -1;
  return (int)(it - nodes.begin());
}

std::vector<int> HomGraph::distances_from(int i) const {
  int m = (int)nodes.size();
  std::vector<int> dist(m, -1);
  if (i < 0 || i >= m) return dist;
  Bitset visited(m), frontier(m);
  visited.set(i);
  frontier.set(i);
  dist[i] = 0;
  int depth = 0;
  while (frontier.any()) {
    Bitset next(m);
    frontier.for_each([&](int u) { next |= adj[u]; });
    next.subtract(visited);
    ++depth;
    next.for_each([&](int u) { dist[u] = depth; });
    visited |= next;
    frontier = next;
  }
  return dist;
}

int HomGraph::distance(int i, int j) const {
  auto d = distances_from(i);
  return j >= 0 && j < (int)d.size() ? d[j] : -1;
}

std::vector<int> HomGraph::shortest_path(int i, int j) const {
  int m = (int)nodes.size();
  if (i < 0 || i >= m || j < 0 || j >= m) return {};
  std::vector<int> parent(m, -2);
  parent[i] = -1;
  std::deque<int> q{i};
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    if (u == j) break;
    adj[u].for_each([&](int w) {
      if (parent[w] == -2) {
        parent[w] = u;
        q.push_back(w);
      }
    });
  }
  if (parent[j] == -2) return {};
  std::vector<int> path;
  for (int u = j; u != -1; u = parent[u]) path.push_back(u);
  std::reverse(path.begin(), path.end());
  return path;
}

HomGraph hom_graph(const Graph& g, const Graph& h, const PartialColouring& p,
                   HomEdgeMode mode, bool black_restricted, int64_t cap) {
  HomGraph hg;
  hg.mode = mode;
  hg.nodes = enumerate_extensions(g, h, p, cap);

  if (black_restricted) {
    auto hb = bipartite_classify(h);
    auto gb = bipartite_classify(g);
    bool ok = true;
    if (!hb) {
      hg.warning = "black restriction ignored: target graph is not bipartite";
      ok = false;
    } else if (!gb) {
      hg.warning = "black restriction ignored: source graph is not bipartite";
      ok = false;
    } else {
      for (int v = 0; v < g.vertex_count() && ok; ++v)
        if (p.pinned(v) && gb->side[v] == 0 && hb->side[p.image[v]] != 0) {
          hg.warning = "black restriction ignored: pins do not preserve sides";
          ok = false;
        }
    }
    if (ok) {
      hg.black_restricted_applied = true;
      std::vector<Assignment> kept;
      for (auto& a : hg.nodes) {
        bool good = true;
        for (int v = 0; v < g.vertex_count() && good; ++v)
          if (gb->side[v] == 0 && hb->side[a[v]] != 0) good = false;
        if (good) kept.push_back(std::move(a));
      }
      hg.nodes = std::move(kept);
    }
  }

  int m = (int)hg.nodes.size();
  auto g_edges = g.edges();
  hg.adj.assign(m, Bitset(m));
  for (int i = 0; i < m; ++i) {
    if (mode == HomEdgeMode::kWalk) hg.adj[i].set(i);
    for (int j = i + 1; j < m; ++j) {
      if (mode == HomEdgeMode::kReconfig && hamming(hg.nodes[i], hg.nodes[j]) != 1)
        continue;
      if (walk_adjacent_raw(g_edges, h, hg.nodes[i], hg.nodes[j])) {
        hg.adj[i].set(j);
        hg.adj[j].set(i);
      }
    }
  }

  hg.component.assign(m, -1);
  for (int s = 0; s < m; ++s) {
    if (hg.component[s] != -1) continue;
    int c = hg.component_count++;
    std::deque<int> q{s};
    hg.component[s] = c;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      hg.adj[u].for_each([&](int w) {
        if (hg.component[w] == -1) {
          hg.component[w] = c;
          q.push_back(w);
        }
      });
    }
  }

  hg.comp_diameter.assign(hg.component_count, 0);
  for (int i = 0; i < m; ++i) {
    auto dist = hg.distances_from(i);
    int& d = hg.comp_diameter[hg.component[i]];
    for (int j = 0; j < m; ++j)
      if (dist[j] > d) d = dist[j];
  }
  for (int d : hg.comp_diameter) hg.diameter = std::max(hg.diameter, d);
  return hg;
}

std::string hom_graph_dot(const HomGraph& hg, const Graph& g, const Graph& h,
                          int max_nodes) {
  int m = (int)hg.nodes.size();
  if (m > max_nodes)
    throw CapExceeded("hom_graph_dot: " + std::to_string(m) + " nodes exceed limit " +
                      std::to_string(max_nodes));
  std::ostringstream out;
  out << "graph hom {\n";
  for (int i = 0; i < m; ++i) {
    out << "  n" << i << " [label=\"";
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (v) out << ',';
      out << h.vertex_name(hg.nodes[i][v]);
    }
    out << "\"];\n";
  }
  for (int i = 0; i < m; ++i)
    hg.adj[i].for_each([&](int j) {
      if (i < j) out << "  n" << i << " -- n" << j << ";\n";
    });
  out << "}\n";
  return out.str();
}

PartialColouring parse_mapping(std::string_view text, const Graph& g, const Graph& h) {
  auto p = PartialColouring::empty(g.vertex_count());
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++line_no;
    if (size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);

    std::istringstream in{std::string(line)};
    std::string gt, ht, extra;
    if (in >> gt) {
      if (!(in >> ht) || (in >> extra))
        throw ParseError("expected 'g_vertex h_vertex'", line_no);
      auto gv = g.find_vertex(gt);
      if (!gv) throw ParseError("unknown source vertex '" + gt + "'", line_no);
      auto hv = h.find_vertex(ht);
      if (!hv) throw ParseError("unknown target vertex '" + ht + "'", line_no);
      if (p.image[*gv] >= 0 && p.image[*gv] != *hv)
        throw ParseError("conflicting images for '" + gt + "'", line_no);
      p.image[*gv] = *hv;
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return p;
}

Assignment parse_total_mapping(std::string_view text, const Graph& g, const Graph& h) {
  auto p = parse_mapping(text, g, h);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!p.pinned(v))
      throw ParseError("mapping is not total: vertex '" + g.vertex_name(v) +
                       "' has no image");
  return p.image;
}

std::string mapping_to_text(const Graph& g, const Graph& h, const PartialColouring& p) {
  std::ostringstream out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (p.pinned(v))
      out << g.vertex_name(v) << ' ' << h.vertex_name(p.image[v]) << '\n';
  return out.str();
}

std::string mapping_to_text(const Graph& g, const Graph& h, const Assignment& a) {
  std::ostringstream out;
  for (int v = 0; v < g.vertex_count(); ++v)
    out << g.vertex_name(v) << ' ' << h.vertex_name(a[v]) << '\n';
  return out.str();
}

}  // namespace homreconf
