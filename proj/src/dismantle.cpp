#include "homreconf/dismantle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "homreconf/errors.hpp"

namespace homreconf {
namespace {

Bitset to_bits(int n, const std::vector<int>& ids) {
  Bitset b(n);
  for (int v : ids) {
    if (v < 0 || v >= n) throw std::invalid_argument("vertex id out of range");
    b.set(v);
  }
  return b;
}

}  // namespace

std::vector<int> dominating_vertices(const Graph& g, int v) {
  if (v < 0 || v >= g.vertex_count())
    throw std::invalid_argument("dominating_vertices: unknown vertex");
  std::vector<int> out;
  for (int u = 0; u < g.vertex_count(); ++u)
    if (u != v && g.neighbors(v).is_subset_of(g.neighbors(u))) out.push_back(u);
  return out;
}

DismantleOutcome greedy_dismantle(const Graph& g, const std::vector<int>& target) {
  int n = g.vertex_count();
  Bitset target_bits = to_bits(n, target);
  Bitset alive(n);
  alive.set_all();

  DismantleOutcome out;
  out.seq.target = target_bits.to_vector();
  auto by_name = g.vertices_by_name();

  int remaining = n - target_bits.count();
  while (remaining > 0) {
    int removed = -1, into = -1;
    for (int v : by_name) {
      if (!alive.test(v) || target_bits.test(v)) continue;
      for (int u : by_name) {
        if (u == v || !alive.test(u)) continue;
        if (Bitset::masked_subset(g.neighbors(v), alive, g.neighbors(u))) {
          removed = v;
          into = u;
          break;
        }
      }
      if (removed != -1) break;
    }
    if (removed == -1) {
      out.stuck = alive.to_vector();
      return out;
    }
    out.seq.steps.push_back({removed, into});
    alive.reset(removed);
    --remaining;
  }
  out.success = true;
  return out;
}

bool validate_dismantling(const Graph& base, const DismantlingSequence& seq) {
  int n = base.vertex_count();
  Bitset alive(n);
  alive.set_all();
  Bitset target_bits(n);
  for (int v : seq.target) {
    if (v < 0 || v >= n) return false;
    target_bits.set(v);
  }
  for (const auto& s : seq.steps) {
    if (s.removed < 0 || s.removed >= n || s.into < 0 || s.into >= n) return false;
    if (s.removed == s.into) return false;
    if (!alive.test(s.removed) || !alive.test(s.into)) return false;
    if (target_bits.test(s.removed)) return false;
    if (!Bitset::masked_subset(base.neighbors(s.removed), alive,
                               base.neighbors(s.into)))
      return false;
    alive.reset(s.removed);
  }
  return alive == target_bits;
}

std::vector<int> composed_retraction(const Graph& base, const DismantlingSequence& seq) {
  int n = base.vertex_count();
  std::vector<int> img(n);
  for (int v = 0; v < n; ++v) img[v] = v;
  for (const auto& s : seq.steps)
    for (int v = 0; v < n; ++v)
      if (img[v] == s.removed) img[v] = s.into;
  return img;
}

DismantlingSequence resolve_bipartite(const Graph& h, const ProductGraph& bres,
                                      const DismantlingSequence& seq) {
  if (!validate_dismantling(h, seq))
    throw std::invalid_argument("resolve_bipartite: input sequence is not a valid dismantling");
  int n = h.vertex_count();
  DismantlingSequence out;
  for (const auto& s : seq.steps) {
    out.steps.push_back({bres.pair_index(0, s.removed), bres.pair_index(0, s.into)});
    out.steps.push_back({bres.pair_index(1, s.removed), bres.pair_index(1, s.into)});
  }
  for (int side = 0; side < 2; ++side)
    for (int w : seq.target) out.target.push_back(side * n + w);
  std::sort(out.target.begin(), out.target.end());
  return out;
}

DismantlingSequence symmetric_shadow(const Graph& h, const ProductGraph& bres,
                                     const DismantlingSequence& seq_on_b) {
  if (!validate_dismantling(bres.graph, seq_on_b))
    throw std::invalid_argument("symmetric_shadow: input sequence is not a valid dismantling");
  int n = h.vertex_count();

  Bitset t0(n), t1(n);
  for (int v : seq_on_b.target)
    (v < n ? t0 : t1).set(v % n);
  if (!(t0 == t1))
    throw std::invalid_argument(
        "symmetric_shadow: input does not end at a full two-sided target");

  DismantlingSequence out;
  out.target = t0.to_vector();
  for (const auto& s : seq_on_b.steps) {
    if ((s.removed < n) != (s.into < n))
      throw std::invalid_argument("symmetric_shadow: step crosses coordinates");
    if (s.removed < n) out.steps.push_back({s.removed, s.into});
  }
  // The projection is only guaranteed valid for removal orders that keep the
  // two sides in sync (as greedy search and resolve_bipartite outputs do);
  // refuse rather than emit a bogus certificate.
  if (!validate_dismantling(h, out))
    throw std::runtime_error(
        "symmetric_shadow: projected sequence fails domination replay");
  return out;
}

EfficientOutcome efficient_dismantle_diagonal(const DiagonalSquare& ds,
                                              int force_last) {
  const Graph& comp = ds.component;
  int n = comp.vertex_count();
  const auto& dist = ds.dist_to_diagonal;

  // Distance classes, name-ordered within each class.
  int max_d = 0;
  for (int v = 0; v < n; ++v) max_d = std::max(max_d, dist[v]);
  std::vector<std::vector<int>> level(max_d + 1);
  for (int v : comp.vertices_by_name()) level[dist[v]].push_back(v);

  if (force_last >= 0 && (force_last >= n || dist[force_last] != 1))
    throw std::invalid_argument(
        "efficient_dismantle_diagonal: force_last must be a distance-1 vertex");

  EfficientOutcome out;
  out.seq.target = ds.diagonal;
  std::sort(out.seq.target.begin(), out.seq.target.end());

  Bitset alive(n);
  alive.set_all();
  // Strictly-closer dominator for v in the current retract, or -1. Nearer
  // classes are scanned first so a step descends one level when it can.
  auto dominator = [&](int v) {
    for (int d2 = dist[v] - 1; d2 >= 0; --d2)
      for (int u : level[d2]) {
        if (!alive.test(u)) continue;
        if (Bitset::masked_subset(comp.neighbors(v), alive, comp.neighbors(u)))
          return u;
      }
    return -1;
  };

  // Greedy closure with farthest-first preference: each round removes the
  // name-least removable vertex from the deepest class that has one, falling
  // back to shallower classes when the deep ones stall and returning to them
  // once a removal frees something up.  Eager removal is complete here: if v
  // is removable via a dominator that was itself removed earlier, the
  // dominator recorded for *that* removal covers the same (since shrunken)
  // neighbourhood at strictly smaller distance, and chasing that chain
  // downward must reach a live vertex because distance-0 vertices are never
  // removed.  So once removable, always removable, in particular a stall with
  // vertices left over proves no strictly-descending order exists at all.
  std::vector<std::vector<int>> pending(max_d + 1);
  int remaining = 0;
  for (int d = 1; d <= max_d; ++d)
    for (int v : level[d])
      if (v != force_last) {
        pending[d].push_back(v);
        ++remaining;
      }
  // A vertex needs re-checking only after its alive neighbourhood shrinks;
  // with the same neighbourhood a failed dominator search stays failed.
  std::vector<char> dirty(n, 1);
  while (remaining > 0) {
    int picked = -1, into = -1;
    for (int d = max_d; d >= 1 && picked == -1; --d) {
      for (size_t i = 0; i < pending[d].size(); ++i) {
        int v = pending[d][i];
        if (!dirty[v]) continue;
        int u = dominator(v);
        if (u == -1) {
          dirty[v] = 0;
          continue;
        }
        picked = v;
        into = u;
        pending[d].erase(pending[d].begin() + i);
        break;
      }
    }
    if (picked == -1) {
      for (int d = max_d; d >= 1 && out.stuck_vertex == -1; --d)
        if (!pending[d].empty()) out.stuck_vertex = pending[d].front();
      return out;
    }
    out.seq.steps.push_back({picked, into});
    alive.reset(picked);
    --remaining;
    for (int w = 0; w < n; ++w)
      if (alive.test(w) && comp.adjacent(picked, w)) dirty[w] = 1;
  }
  if (force_last >= 0) {
    int into = dominator(force_last);
    if (into == -1) {
      out.stuck_vertex = force_last;
      return out;
    }
    out.seq.steps.push_back({force_last, into});
    alive.reset(force_last);
  }
  out.success = true;
  return out;
}

EfficientOutcome efficient_dismantle_diagonal(const Graph& h) {
  return efficient_dismantle_diagonal(square_with_diagonal(h));
}

std::string serialize_dismantling(const Graph& base, const DismantlingSequence& seq) {
  std::ostringstream out;
  out << "base: " << base.vertex_count() << " vertices\n";
  out << "target:";
  for (int v : seq.target) out << ' ' << base.vertex_name(v);
  out << '\n';
  for (const auto& s : seq.steps)
    out << base.vertex_name(s.removed) << " -> " << base.vertex_name(s.into) << '\n';
  return out.str();
}

DismantlingSequence parse_dismantling(const Graph& base, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  DismantlingSequence seq;

  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") != std::string::npos) return true;
    }
    return false;
  };

  auto resolve = [&](const std::string& name) {
    auto v = base.find_vertex(name);
    if (!v) throw ParseError("unknown vertex '" + name + "'", line_no);
    return *v;
  };

  if (!next_line()) throw ParseError("missing base header", 1);
  {
    std::istringstream hs(line);
    std::string kw, unit;
    int n = -1;
    if (!(hs >> kw >> n >> unit) || kw != "base:" || unit != "vertices")
      throw ParseError("expected 'base: <n> vertices'", line_no);
    if (n != base.vertex_count())
      throw ParseError("base size mismatch: header says " + std::to_string(n) +
                           ", graph has " + std::to_string(base.vertex_count()),
                       line_no);
  }

  if (!next_line()) throw ParseError("missing target line", line_no + 1);
  {
    std::istringstream ts(line);
    std::string kw;
    if (!(ts >> kw) || kw != "target:")
      throw ParseError("expected 'target: <names>'", line_no);
    for (std::string name; ts >> name;) seq.target.push_back(resolve(name));
    std::sort(seq.target.begin(), seq.target.end());
  }

  while (next_line()) {
    std::istringstream ss(line);
    std::string a, arrow, b;
    if (!(ss >> a >> arrow >> b) || arrow != "->" || (ss >> arrow))
      throw ParseError("expected '<removed> -> <into>'", line_no);
    seq.steps.push_back({resolve(a), resolve(b)});
  }
  return seq;
}

}  // namespace homreconf
