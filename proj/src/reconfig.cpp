#include "homreconf/reconfig.hpp"

#include <algorithm>
#include <stdexcept>

#include "homreconf/errors.hpp"

namespace homreconf {
namespace {

// WALK adjacency for two maps already known to be range-valid. Covers every
// ordered adjacent pair of G, loops once.
bool walk_adjacent_maps(const Graph& g, const Graph& h, const Assignment& x,
                        const Assignment& y) {
  for (int u = 0; u < g.vertex_count(); ++u) {
    const Bitset& nb = g.neighbors(u);
    for (int v = nb.next(0); v >= 0; v = nb.next(v + 1))
      if (!h.adjacent(x[u], y[v])) return false;
  }
  return true;
}

void dedup_consecutive(std::vector<Assignment>& rows) {
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

void check_assignment_shape(const Graph& g, const Graph& h, const Assignment& a,
                            const char* what) {
  if ((int)a.size() != g.vertex_count())
    throw std::invalid_argument(std::string(what) + ": size does not match G");
  for (int x : a)
    if (x < 0 || x >= h.vertex_count())
      throw std::invalid_argument(std::string(what) + ": image out of range");
}

void append_note(std::string& note, const std::string& extra) {
  if (!note.empty()) note += "; ";
  note += extra;
}

}  // namespace

DeltaStats delta_stats(const Graph& g, const Graph& h, const Assignment& phi,
                       const Assignment& psi) {
  check_assignment_shape(g, h, phi, "delta_stats: phi");
  check_assignment_shape(g, h, psi, "delta_stats: psi");
  auto dm = distance_matrix(h);
  DeltaStats s;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int d = dm.at(phi[v], psi[v]);
    if (d < 0)
      throw std::invalid_argument("delta_stats: images of vertex '" +
                                  g.vertex_name(v) +
                                  "' lie in different components of the host");
    s.total += d;
    s.odd_count += d & 1;
  }
  return s;
}

DiagonalWalkParts diagonal_walk_parts(const Graph& g, const DiagonalSquare& ds,
                                      const DismantlingSequence& seq,
                                      const Assignment& phi,
                                      const Assignment& psi) {
  int ng = g.vertex_count();
  if ((int)phi.size() != ng || (int)psi.size() != ng)
    throw std::invalid_argument("diagonal_walk_parts: map size does not match G");

  std::vector<int> cur(ng);
  for (int v = 0; v < ng; ++v) {
    if (phi[v] < 0 || phi[v] >= ds.h_size || psi[v] < 0 || psi[v] >= ds.h_size)
      throw std::invalid_argument("diagonal_walk_parts: image out of range");
    cur[v] = ds.pair_component_index(phi[v], psi[v]);
    if (cur[v] < 0)
      throw std::invalid_argument(
          "diagonal_walk_parts: images of vertex '" + g.vertex_name(v) +
          "' lie outside the diagonal component");
  }

  DiagonalWalkParts parts;
  parts.a.reserve(seq.steps.size() + 1);
  parts.b.reserve(seq.steps.size() + 1);
  auto push_row = [&]() {
    Assignment ra(ng), rb(ng);
    for (int v = 0; v < ng; ++v) {
      ra[v] = ds.coords[cur[v]].first;
      rb[v] = ds.coords[cur[v]].second;
    }
    parts.a.push_back(std::move(ra));
    parts.b.push_back(std::move(rb));
  };
  push_row();
  for (const auto& st : seq.steps) {
    for (int v = 0; v < ng; ++v)
      if (cur[v] == st.removed) cur[v] = st.into;
    push_row();
  }
  return parts;
}

Walk walk_from_diagonal_dismantling(const Graph& g, const DiagonalSquare& ds,
                                    const DismantlingSequence& seq,
                                    const PartialColouring& p,
                                    const Assignment& phi,
                                    const Assignment& psi) {
  if (!extends_pins(phi, p) || !extends_pins(psi, p))
    throw InvalidEndpoints("walk endpoints do not extend the pins");
  auto parts = diagonal_walk_parts(g, ds, seq, phi, psi);
  Walk w;
  w.maps = parts.a;
  for (int i = (int)parts.b.size() - 2; i >= 0; --i) w.maps.push_back(parts.b[i]);
  dedup_consecutive(w.maps);
  return w;
}

ReconfigPath resolve_walk(const Graph& g, const Graph& h, const Walk& w,
                          const PartialColouring& p) {
  if (w.maps.empty())
    throw std::invalid_argument("resolve_walk: empty walk");
  ReconfigPath path;
  path.start = w.maps.front();
  Assignment cur = path.start;
  for (size_t j = 1; j < w.maps.size(); ++j) {
    const Assignment& nxt = w.maps[j];
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (cur[v] == nxt[v]) continue;
      path.transitions.push_back({v, cur[v], nxt[v]});
      cur[v] = nxt[v];
    }
  }
  // Any per-vertex update order keeps every intermediate map valid on a WALK
  // edge, so a replay failure can only mean the input walk was broken.
  if (!validate_reconfig_path(g, h, p, path))
    throw std::logic_error("resolve_walk: input walk is not a valid walk");
  return path;
}

Walk nu_lift_walk(const Graph& g, const Graph& h, const Walk& w,
                  const MajorityTable& f, const PartialColouring& p) {
  if (!validate_majority(h, f))
    throw std::invalid_argument("nu_lift_walk: invalid majority table");
  if (w.maps.empty())
    throw std::invalid_argument("nu_lift_walk: empty walk");
  if (!validate_walk(g, h, PartialColouring::empty(g.vertex_count()), w))
    throw std::invalid_argument("nu_lift_walk: input walk is not valid");
  const Assignment& phi = w.maps.front();
  const Assignment& psi = w.maps.back();
  if (!extends_pins(phi, p) || !extends_pins(psi, p))
    throw std::invalid_argument("nu_lift_walk: walk endpoints do not extend the pins");

  int ng = g.vertex_count();
  Walk out;
  out.maps.reserve(w.maps.size());
  for (const auto& m : w.maps) {
    Assignment row(ng);
    for (int v = 0; v < ng; ++v) row[v] = f.at(psi[v], m[v], phi[v]);
    out.maps.push_back(std::move(row));
  }
  if (out.maps.front() != phi || out.maps.back() != psi)
    throw std::logic_error("nu_lift_walk: near-unanimity identities failed");
  return out;
}

Walk retraction_walk(const Graph& g, const Graph& h, const Assignment& phi,
                     const Assignment& psi) {
  if (!is_homomorphism(g, h, phi) || !is_homomorphism(g, h, psi))
    throw InvalidEndpoints("retraction_walk: endpoints are not homomorphisms");

  // Anchor: name-least looped vertex, else (bipartite) the name-least edge.
  std::vector<int> target;
  for (int v : h.vertices_by_name())
    if (h.has_loop(v)) {
      target = {v};
      break;
    }
  if (target.empty()) {
    if (!bipartite_classify(h))
      throw std::invalid_argument(
          "retraction_walk: host has no looped vertex and is not bipartite");
    for (int u : h.vertices_by_name()) {
      const Bitset& nb = h.neighbors(u);
      int best = -1;
      for (int w2 = nb.next(0); w2 >= 0; w2 = nb.next(w2 + 1))
        if (best < 0 || h.vertex_name(w2) < h.vertex_name(best)) best = w2;
      if (best >= 0) {
        target = {u, best};
        std::sort(target.begin(), target.end());
        break;
      }
    }
    if (target.empty())
      throw std::invalid_argument("retraction_walk: host has no edges");
  }

  auto out = greedy_dismantle(h, target);
  if (!out.success)
    throw std::invalid_argument("retraction_walk: host does not dismantle to its anchor");

  int ng = g.vertex_count();
  std::vector<Assignment> left{phi}, right{psi};
  for (const auto& st : out.seq.steps) {
    Assignment na = left.back(), nb = right.back();
    for (int v = 0; v < ng; ++v) {
      if (na[v] == st.removed) na[v] = st.into;
      if (nb[v] == st.removed) nb[v] = st.into;
    }
    left.push_back(std::move(na));
    right.push_back(std::move(nb));
  }

  if (left.back() != right.back() &&
      !walk_adjacent_maps(g, h, left.back(), right.back()))
    throw std::runtime_error(
        "retraction_walk: halves do not meet; endpoints lie in different components");

  Walk w;
  w.maps = std::move(left);
  for (int i = (int)right.size() - 1; i >= 0; --i) w.maps.push_back(right[i]);
  dedup_consecutive(w.maps);
  if (!validate_walk(g, h, PartialColouring::empty(ng), w))
    throw std::logic_error("retraction_walk: constructed walk failed validation");
  return w;
}

namespace {

// Brute-force route: BFS over the explicit reconfiguration graph.
void oracle_route(const Graph& g, const Graph& h, const PartialColouring& p,
                  const Assignment& phi, const Assignment& psi,
                  const ReconfigureOptions& opts, ReconfigureResult& res) {
  auto hg = hom_graph(g, h, p, HomEdgeMode::kReconfig, false, opts.cap);
  int i = hg.find_node(phi), j = hg.find_node(psi);
  if (i < 0 || j < 0)
    throw std::logic_error("reconfigure: validated endpoint missing from the oracle graph");
  auto nodes = hg.shortest_path(i, j);
  if (nodes.empty()) {
    res.status = ReconfigStatus::kDisconnected;
    append_note(res.note, "oracle: endpoints lie in different components");
    return;
  }
  Walk w;
  for (int id : nodes) w.maps.push_back(hg.nodes[id]);
  res.walk = w;
  res.path = resolve_walk(g, h, w, p);
  res.status = ReconfigStatus::kPath;
  res.oracle_distance = (long long)nodes.size() - 1;
  res.certificate.name = "oracle";
  res.certificate.value = (long long)nodes.size() - 1;
}

}  // namespace

ReconfigureResult reconfigure(const Graph& g, const Graph& h,
                              const PartialColouring& p, const Assignment& phi,
                              const Assignment& psi,
                              const ReconfigureOptions& opts) {
  int ng = g.vertex_count(), nh = h.vertex_count();
  if ((int)p.image.size() != ng)
    throw std::invalid_argument("reconfigure: pin vector size does not match G");
  if (!is_homomorphism(g, h, phi) || !extends_pins(phi, p))
    throw InvalidEndpoints("phi is not a homomorphism extending the pins");
  if (!is_homomorphism(g, h, psi) || !extends_pins(psi, p))
    throw InvalidEndpoints("psi is not a homomorphism extending the pins");

  ReconfigureResult res;

  if (phi == psi) {
    res.status = ReconfigStatus::kPath;
    res.path.start = phi;
    res.walk.maps = {phi};
    res.certificate.name = "|psi-phi|+O";
    res.certificate.value = 0;
    if (opts.with_oracle) res.oracle_distance = 0;
    return res;
  }

  if (!h.is_connected()) {
    if (!opts.with_oracle) {
      res.status = ReconfigStatus::kUndecided;
      append_note(res.note, "host graph is disconnected; oracle disabled");
      return res;
    }
    oracle_route(g, h, p, phi, psi, opts, res);
    return res;
  }

  res.delta = delta_stats(g, h, phi, psi);
  auto ds = square_with_diagonal(h);

  // Vertices with no edge at all have no adjacency constraints; they ride
  // along frozen and get one direct transition each at the end.
  std::vector<int> iso_moves;
  Assignment psi_t = psi;
  for (int v = 0; v < ng; ++v)
    if (g.degree(v) == 0 && phi[v] != psi[v]) {
      iso_moves.push_back(v);
      psi_t[v] = phi[v];
    }

  for (int v = 0; v < ng; ++v) {
    if (g.degree(v) == 0) continue;
    if (ds.pair_component_index(phi[v], psi[v]) < 0) {
      res.status = ReconfigStatus::kDisconnected;
      append_note(res.note, "images of vertex '" + g.vertex_name(v) +
                                "' cannot be connected: pair outside the diagonal component");
      return res;
    }
  }

  auto eo = efficient_dismantle_diagonal(ds);
  DismantlingSequence seq;
  bool efficient = eo.success;
  if (eo.success) {
    seq = std::move(eo.seq);
  } else {
    auto go = greedy_dismantle(ds.component, ds.diagonal);
    if (!go.success) {
      if (!opts.with_oracle) {
        res.status = ReconfigStatus::kUndecided;
        append_note(res.note,
                    "diagonal component does not dismantle (host not near-unanimity); oracle disabled");
        return res;
      }
      oracle_route(g, h, p, phi, psi, opts, res);
      return res;
    }
    seq = std::move(go.seq);
    res.used_greedy = true;
    append_note(res.note, "strictly-decreasing dismantling unavailable; greedy order used");
  }

  auto parts = diagonal_walk_parts(g, ds, seq, phi, psi_t);
  bool skip = false;

  if (efficient) {
    // Find the last step that moves a tracked pair; reorder the dismantling
    // so that pair goes last, then try to cut the walk's apex.
    std::vector<int> cur(ng);
    for (int v = 0; v < ng; ++v) cur[v] = ds.pair_component_index(phi[v], psi_t[v]);
    int last_removed = -1;
    for (const auto& st : seq.steps) {
      bool active = false;
      for (int v = 0; v < ng; ++v)
        if (cur[v] == st.removed) {
          active = true;
          cur[v] = st.into;
        }
      if (active) last_removed = st.removed;
    }
    if (last_removed >= 0 && ds.dist_to_diagonal[last_removed] == 1) {
      auto eo2 = efficient_dismantle_diagonal(ds, last_removed);
      if (eo2.success) {
        auto parts2 = diagonal_walk_parts(g, ds, eo2.seq, phi, psi_t);
        size_t m = parts2.a.size() - 1;
        if (m >= 1 && walk_adjacent_maps(g, h, parts2.a[m - 1], parts2.b[m - 1])) {
          skip = true;
          seq = std::move(eo2.seq);
          parts = std::move(parts2);
        }
      }
    }
  }

  Walk w;
  size_t m = parts.a.size() - 1;
  if (skip)
    w.maps.assign(parts.a.begin(), parts.a.end() - 1);
  else
    w.maps = parts.a;
  for (int i = (int)m - 1; i >= 0; --i) w.maps.push_back(parts.b[i]);
  dedup_consecutive(w.maps);

  for (int v : iso_moves) {
    Assignment nxt = w.maps.back();
    nxt[v] = psi[v];
    w.maps.push_back(std::move(nxt));
  }

  res.walk = w;
  res.path = resolve_walk(g, h, w, p);
  res.status = ReconfigStatus::kPath;
  res.dismantling = std::move(seq);

  long long emitted = res.path.length();
  long long total = res.delta.total, odd = res.delta.odd_count;
  bool bip = bipartite_classify(h).has_value();
  struct Cand {
    bool ok;
    const char* name;
    long long value;
  };
  const Cand cands[] = {
      {efficient && bip, "|psi-phi|-1", std::max<long long>(0, total - 1)},
      {efficient && skip, "|psi-phi|+O-1", total + odd - 1},
      {efficient, "|psi-phi|+O", total + odd},
      {true, "2*nG*nH^2", 2LL * ng * nh * nh},
  };
  res.certificate.name = "2*nG*nH^2";
  res.certificate.value = 2LL * ng * nh * nh;
  for (const auto& c : cands)
    if (c.ok && emitted <= c.value) {
      res.certificate.name = c.name;
      res.certificate.value = c.value;
      break;
    }
  res.certificate.skip_fired = skip;
  res.certificate.efficient = efficient;

  if (opts.with_oracle) {
    auto hg = hom_graph(g, h, p, HomEdgeMode::kReconfig, false, opts.cap);
    int i = hg.find_node(phi), j = hg.find_node(psi);
    if (i < 0 || j < 0)
      throw std::logic_error("reconfigure: validated endpoint missing from the oracle graph");
    res.oracle_distance = hg.distance(i, j);
  }

  return res;
}

}  // namespace homreconf
