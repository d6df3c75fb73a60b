#include "homreconf/paths.hpp"

namespace homreconf {

Assignment ReconfigPath::end() const {
  Assignment a = start;
  for (const auto& t : transitions) a[t.vertex] = t.to;
  return a;
}

std::vector<Assignment> ReconfigPath::maps() const {
  std::vector<Assignment> out;
  out.reserve(transitions.size() + 1);
  Assignment a = start;
  out.push_back(a);
  for (const auto& t : transitions) {
    a[t.vertex] = t.to;
    out.push_back(a);
  }
  return out;
}

bool validate_walk(const Graph& g, const Graph& h, const PartialColouring& p,
                   const Walk& w) {
  for (const auto& m : w.maps) {
    if (!is_homomorphism(g, h, m)) return false;
    if (!extends_pins(m, p)) return false;
  }
  for (size_t i = 0; i + 1 < w.maps.size(); ++i)
    if (!hom_adjacent(g, h, w.maps[i], w.maps[i + 1], HomEdgeMode::kWalk))
      return false;
  return true;
}

bool validate_reconfig_path(const Graph& g, const Graph& h,
                            const PartialColouring& p, const ReconfigPath& path) {
  Assignment cur = path.start;
  if (!is_homomorphism(g, h, cur) || !extends_pins(cur, p)) return false;
  for (const auto& t : path.transitions) {
    if (t.vertex < 0 || t.vertex >= g.vertex_count()) return false;
    if (cur[t.vertex] != t.from || t.from == t.to) return false;
    Assignment nxt = cur;
    nxt[t.vertex] = t.to;
    if (!is_homomorphism(g, h, nxt) || !extends_pins(nxt, p)) return false;
    if (!hom_adjacent(g, h, cur, nxt, HomEdgeMode::kReconfig)) return false;
    cur = std::move(nxt);
  }
  return true;
}

}  // namespace homreconf
