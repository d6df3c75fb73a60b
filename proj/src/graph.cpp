#include "homreconf/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "homreconf/errors.hpp"

namespace homreconf {

int Graph::add_vertex(std::string name) {
  if (index_.count(name))
    throw std::invalid_argument("duplicate vertex name: " + name);
  int id = (int)names_.size();
  index_.emplace(name, id);
  names_.push_back(std::move(name));
  for (auto& row : adj_) row.resize((int)names_.size());
  adj_.emplace_back((int)names_.size());
  return id;
}

int Graph::ensure_vertex(std::string_view name) {
  auto it = index_.find(std::string(name));
  if (it != index_.end()) return it->second;
  return add_vertex(std::string(name));
}

void Graph::add_edge(int u, int v) {
  adj_[u].set(v);
  adj_[v].set(u);
}

void Graph::add_edge(std::string_view u, std::string_view v) {
  int a = ensure_vertex(u);
  int b = ensure_vertex(v);
  add_edge(a, b);
}

std::optional<int> Graph::find_vertex(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Graph::vertex(std::string_view name) const {
  auto v = find_vertex(name);
  if (!v) throw std::invalid_argument("unknown vertex name: " + std::string(name));
  return *v;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < vertex_count(); ++u)
    adj_[u].for_each([&](int v) {
      if (u <= v) out.emplace_back(u, v);
    });
  return out;
}

bool Graph::is_connected() const {
  int n = vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::deque<int> q{0};
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    adj_[u].for_each([&](int v) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        q.push_back(v);
      }
    });
  }
  return reached == n;
}

bool Graph::is_reflexive() const {
  for (int v = 0; v < vertex_count(); ++v)
    if (!has_loop(v)) return false;
  return true;
}

bool Graph::is_irreflexive() const {
  for (int v = 0; v < vertex_count(); ++v)
    if (has_loop(v)) return false;
  return true;
}

std::vector<int> Graph::vertices_by_name() const {
  std::vector<int> order(vertex_count());
  for (int i = 0; i < vertex_count(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return names_[a] < names_[b]; });
  return order;
}

std::string Graph::to_text() const {
  std::ostringstream out;
  for (const auto& name : names_) out << name << '\n';
  for (auto [u, v] : edges()) out << names_[u] << ' ' << names_[v] << '\n';
  return out.str();
}

Graph parse_graph(std::string_view text) {
  Graph g;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++line_no;
    if (size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);

    std::vector<std::string> tokens;
    std::istringstream in{std::string(line)};
    for (std::string tok; in >> tok;) tokens.push_back(std::move(tok));

    if (tokens.size() == 1) {
      g.ensure_vertex(tokens[0]);
    } else if (tokens.size() == 2) {
      g.add_edge(tokens[0], tokens[1]);
    } else if (tokens.size() > 2) {
      throw ParseError("expected at most 2 tokens, got " +
                           std::to_string(tokens.size()),
                       line_no);
    }

    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return g;
}

Graph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

DistanceMatrix distance_matrix(const Graph& g) {
  int n = g.vertex_count();
  DistanceMatrix m;
  m.n = n;
  m.d.assign((size_t)n * n, DistanceMatrix::kUnreachable);
  std::deque<int> q;
  for (int s = 0; s < n; ++s) {
    int* row = m.d.data() + (size_t)s * n;
    row[s] = 0;
    q.clear();
    q.push_back(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      g.neighbors(u).for_each([&](int v) {
        if (row[v] == DistanceMatrix::kUnreachable) {
          row[v] = row[u] + 1;
          q.push_back(v);
        }
      });
    }
  }
  return m;
}

std::optional<Bipartition> bipartite_classify(const Graph& g) {
  int n = g.vertex_count();
  for (int v = 0; v < n; ++v)
    if (g.has_loop(v)) return std::nullopt;

  Bipartition bp;
  bp.side.assign(n, -1);
  auto by_name = g.vertices_by_name();
  std::deque<int> q;
  for (int root : by_name) {
    if (bp.side[root] != -1) continue;
    // Lex-least name in a fresh component anchors the black side.
    bp.side[root] = 0;
    q.clear();
    q.push_back(root);
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      bool odd = false;
      g.neighbors(u).for_each([&](int v) {
        if (bp.side[v] == -1) {
          bp.side[v] = 1 - bp.side[u];
          q.push_back(v);
        } else if (bp.side[v] == bp.side[u]) {
          odd = true;
        }
      });
      if (odd) return std::nullopt;
    }
  }
  return bp;
}

ProductGraph categorical_product(const Graph& a, const Graph& b) {
  ProductGraph p;
  p.left_size = a.vertex_count();
  p.right_size = b.vertex_count();
  for (int i = 0; i < p.left_size; ++i)
    for (int j = 0; j < p.right_size; ++j)
      p.graph.add_vertex(a.vertex_name(i) + "|" + b.vertex_name(j));
  for (auto [i, i2] : a.edges())
    for (auto [j, j2] : b.edges()) {
      p.graph.add_edge(p.pair_index(i, j), p.pair_index(i2, j2));
      p.graph.add_edge(p.pair_index(i, j2), p.pair_index(i2, j));
    }
  return p;
}

ProductGraph bipartite_resolution(const Graph& h) {
  Graph k2;
  k2.add_edge("0", "1");
  return categorical_product(k2, h);
}

DiagonalSquare square_with_diagonal(const Graph& h) {
  if (!h.is_connected())
    throw std::invalid_argument("square_with_diagonal requires a connected graph");

  DiagonalSquare ds;
  ds.h_size = h.vertex_count();
  ds.square = categorical_product(h, h);
  int sq_n = ds.square.graph.vertex_count();

  // BFS over the square from all diagonal vertices at once. Membership in the
  // diagonal's component and the distance to the diagonal fall out together.
  std::vector<int> dist(sq_n, -1);
  std::deque<int> q;
  for (int x = 0; x < ds.h_size; ++x) {
    int v = ds.square.pair_index(x, x);
    dist[v] = 0;
    q.push_back(v);
  }
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    ds.square.graph.neighbors(u).for_each([&](int v) {
      if (dist[v] == -1) {
        dist[v] = dist[u] + 1;
        q.push_back(v);
      }
    });
  }

  ds.square_to_comp.assign(sq_n, -1);
  for (int v = 0; v < sq_n; ++v) {
    if (dist[v] == -1) continue;
    int c = ds.component.add_vertex(ds.square.graph.vertex_name(v));
    ds.square_to_comp[v] = c;
    ds.comp_to_square.push_back(v);
    ds.coords.emplace_back(ds.square.left_of(v), ds.square.right_of(v));
    ds.dist_to_diagonal.push_back(dist[v]);
  }
  for (auto [u, v] : ds.square.graph.edges()) {
    int cu = ds.square_to_comp[u], cv = ds.square_to_comp[v];
    if (cu != -1 && cv != -1) ds.component.add_edge(cu, cv);
  }
  ds.diagonal.reserve(ds.h_size);
  for (int x = 0; x < ds.h_size; ++x)
    ds.diagonal.push_back(ds.square_to_comp[ds.square.pair_index(x, x)]);
  return ds;
}

}  // namespace homreconf
