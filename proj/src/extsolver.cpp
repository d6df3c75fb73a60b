#include "homreconf/extsolver.hpp"

#include <deque>
#include <stdexcept>
#include <utility>

#include "homreconf/builders.hpp"
#include "homreconf/errors.hpp"

namespace homreconf {
namespace {

// Remove values of dom[u] with no neighbour left in dom[v]; true if changed.
bool revise(const Graph& h, DomainTable& t, int u, int v) {
  bool changed = false;
  Bitset& du = t.dom[u];
  for (int x = du.next(0); x >= 0; x = du.next(x + 1)) {
    if (!h.neighbors(x).intersects(t.dom[v])) {
      du.reset(x);
      changed = true;
    }
  }
  return changed;
}

// AC-3 over the proper edges of g, seeded with the given arcs (u means
// "revise every in-arc of u's neighbours against u"... we queue concrete
// ordered arcs). Returns false iff a domain empties.
bool propagate(const Graph& g, const Graph& h, DomainTable& t,
               std::deque<std::pair<int, int>> queue) {
  while (!queue.empty()) {
    auto [u, v] = queue.front();
    queue.pop_front();
    if (!revise(h, t, u, v)) continue;
    if (t.dom[u].none()) return false;
    g.neighbors(u).for_each([&](int w) {
      if (w != u && w != v) queue.emplace_back(w, u);
    });
  }
  return true;
}

std::deque<std::pair<int, int>> all_arcs(const Graph& g) {
  std::deque<std::pair<int, int>> q;
  for (auto [u, v] : g.edges())
    if (u != v) {
      q.emplace_back(u, v);
      q.emplace_back(v, u);
    }
  return q;
}

std::deque<std::pair<int, int>> arcs_into(const Graph& g, int v) {
  std::deque<std::pair<int, int>> q;
  g.neighbors(v).for_each([&](int w) {
    if (w != v) q.emplace_back(w, v);
  });
  return q;
}

// Looped G-vertices can only map to looped H-vertices. Stable under AC, so
// one application suffices.
void apply_loop_rule(const Graph& g, const Graph& h, DomainTable& t) {
  Bitset looped(h.vertex_count());
  for (int x = 0; x < h.vertex_count(); ++x)
    if (h.has_loop(x)) looped.set(x);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.has_loop(v)) t.dom[v] &= looped;
}

std::optional<Assignment> search(const Graph& g, const Graph& h,
                                 const DomainTable& t, const SolveOptions& opts) {
  int ng = g.vertex_count();
  int pick = -1, best = -1;
  for (int v = 0; v < ng; ++v) {
    int c = t.dom[v].count();
    if (c <= 1) continue;
    if (opts.var_order == VarOrder::kDeclaration) {
      pick = v;
      break;
    }
    if (best == -1 || c < best) {
      best = c;
      pick = v;
    }
  }
  if (pick == -1) {
    // Every domain is a singleton; for binary constraints the arc-consistent
    // point is a solution.
    Assignment a(ng);
    for (int v = 0; v < ng; ++v) a[v] = t.dom[v].next(0);
    return a;
  }
  for (int x = t.dom[pick].next(0); x >= 0; x = t.dom[pick].next(x + 1)) {
    DomainTable t2 = t;
    t2.dom[pick].clear();
    t2.dom[pick].set(x);
    if (!propagate(g, h, t2, arcs_into(g, pick))) continue;
    if (auto r = search(g, h, t2, opts)) return r;
  }
  return std::nullopt;
}

}  // namespace

DomainTable initial_domains(const Graph& g, const Graph& h, const PartialColouring& p) {
  int ng = g.vertex_count(), nh = h.vertex_count();
  if ((int)p.image.size() != ng)
    throw std::invalid_argument("initial_domains: pin vector size mismatch");
  DomainTable t;
  t.dom.assign(ng, Bitset(nh));
  for (int v = 0; v < ng; ++v) {
    if (p.pinned(v)) {
      if (p.image[v] >= nh)
        throw std::invalid_argument("initial_domains: pin image out of range");
      t.dom[v].set(p.image[v]);
    } else {
      t.dom[v].set_all();
    }
  }
  apply_loop_rule(g, h, t);
  return t;
}

bool arc_consistency(const Graph& g, const Graph& h, DomainTable& domains) {
  apply_loop_rule(g, h, domains);
  if (domains.any_empty()) return false;
  if (!propagate(g, h, domains, all_arcs(g))) return false;
  return !domains.any_empty();
}

std::optional<Assignment> solve_extension(const Graph& g, const Graph& h,
                                          const PartialColouring& p,
                                          const SolveOptions& opts) {
  if (g.vertex_count() == 0) return Assignment{};
  DomainTable t = initial_domains(g, h, p);
  if (!arc_consistency(g, h, t)) return std::nullopt;
  return search(g, h, t, opts);
}

LadderInstance ladder_instance(const Graph& g, int ell, const PartialColouring& p,
                               const Assignment& phi, const Assignment& psi) {
  int ng = g.vertex_count();
  if (ell < 0) throw std::invalid_argument("ladder_instance: negative length");
  if ((int)phi.size() != ng || (int)psi.size() != ng || (int)p.image.size() != ng)
    throw std::invalid_argument("ladder_instance: size mismatch");

  LadderInstance lad;
  lad.ell = ell;
  lad.g_size = ng;
  lad.graph = categorical_product(path_graph(ell + 1, /*reflexive=*/true), g).graph;
  lad.pins = PartialColouring::empty((ell + 1) * ng);
  for (int gv = 0; gv < ng; ++gv) {
    lad.pins.image[lad.index(0, gv)] = phi[gv];
    if (ell == 0) {
      if (phi[gv] != psi[gv]) lad.inconsistent = true;
    } else {
      lad.pins.image[lad.index(ell, gv)] = psi[gv];
    }
    for (int i = 1; i < ell; ++i)
      if (p.pinned(gv)) lad.pins.image[lad.index(i, gv)] = p.image[gv];
  }
  return lad;
}

std::optional<Walk> shortest_hom_walk(const Graph& g, const Graph& h,
                                      const PartialColouring& p,
                                      const Assignment& phi, const Assignment& psi,
                                      int max_len) {
  if (!is_homomorphism(g, h, phi) || !extends_pins(phi, p))
    throw InvalidEndpoints("shortest_hom_walk: phi is not an extension of the pins");
  if (!is_homomorphism(g, h, psi) || !extends_pins(psi, p))
    throw InvalidEndpoints("shortest_hom_walk: psi is not an extension of the pins");

  if (phi == psi) {
    Walk w;
    w.maps.push_back(phi);
    return w;
  }

  // Parity-aware distances: a walk of length l exists from x to y iff the
  // shortest walk of the same parity is at most l. Distances in K2 x H give
  // exactly that.
  auto bres = bipartite_resolution(h);
  auto pd = distance_matrix(bres.graph);
  auto parity_dist = [&](int x, int y, int par) {
    return pd.at(bres.pair_index(0, x), bres.pair_index(par, y));
  };

  auto g_edges = g.edges();
  auto feasible = [&](int ell) {
    int par = ell & 1;
    for (auto [u, v] : g_edges) {
      // Alternating image sequences along the edge must realize H-walks of
      // length exactly ell, in both directions.
      int tu = par ? psi[v] : psi[u];
      int tv = par ? psi[u] : psi[v];
      int du = parity_dist(phi[u], tu, par);
      if (du == DistanceMatrix::kUnreachable || du > ell) return false;
      if (u != v) {
        int dv = parity_dist(phi[v], tv, par);
        if (dv == DistanceMatrix::kUnreachable || dv > ell) return false;
      }
    }
    return true;
  };

  for (int ell = 1; ell <= max_len; ++ell) {
    if (!feasible(ell)) continue;
    auto lad = ladder_instance(g, ell, p, phi, psi);
    if (lad.inconsistent) continue;
    auto sol = solve_extension(lad.graph, h, lad.pins);
    if (!sol) continue;
    Walk w;
    w.maps.reserve(ell + 1);
    for (int i = 0; i <= ell; ++i) {
      Assignment m(g.vertex_count());
      for (int gv = 0; gv < g.vertex_count(); ++gv) m[gv] = (*sol)[lad.index(i, gv)];
      w.maps.push_back(std::move(m));
    }
    return w;
  }
  return std::nullopt;
}

int default_walk_budget(const Graph& h, bool has_majority) {
  int n = h.vertex_count();
  return has_majority ? 2 * n : 2 * n * n;
}

}  // namespace homreconf
