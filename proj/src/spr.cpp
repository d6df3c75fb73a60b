#include "homreconf/spr.hpp"

#include <algorithm>
#include <stdexcept>

#include "homreconf/builders.hpp"
#include "homreconf/errors.hpp"
#include "homreconf/nu.hpp"

namespace homreconf {
namespace {

Graph strip_loops(const Graph& h, bool& stripped) {
  stripped = false;
  Graph out;
  for (int v = 0; v < h.vertex_count(); ++v) out.add_vertex(h.vertex_name(v));
  for (auto [a, b] : h.edges()) {
    if (a == b) {
      stripped = true;
      continue;
    }
    out.add_edge(a, b);
  }
  return out;
}

}  // namespace

Graph with_loops(const Graph& h, const std::vector<int>& loops) {
  Graph out;
  for (int v = 0; v < h.vertex_count(); ++v) out.add_vertex(h.vertex_name(v));
  for (auto [a, b] : h.edges()) out.add_edge(a, b);
  for (int v : loops) {
    if (v < 0 || v >= h.vertex_count())
      throw std::invalid_argument("with_loops: vertex out of range");
    out.add_edge(v, v);
  }
  return out;
}

Graph with_all_loops(const Graph& h) {
  std::vector<int> all(h.vertex_count());
  for (int v = 0; v < h.vertex_count(); ++v) all[v] = v;
  return with_loops(h, all);
}

SprInstance spr_instance(const Graph& h, int u, int v) {
  if (u < 0 || u >= h.vertex_count() || v < 0 || v >= h.vertex_count())
    throw std::invalid_argument("spr_instance: endpoint out of range");
  SprInstance inst;
  inst.host = strip_loops(h, inst.stripped_loops);
  inst.u = u;
  inst.v = v;
  auto dm = distance_matrix(inst.host);
  int d = dm.at(u, v);
  if (d < 0)
    throw std::invalid_argument("spr_instance: endpoints '" + h.vertex_name(u) +
                                "' and '" + h.vertex_name(v) + "' are not connected");
  inst.d = d;
  inst.path = path_graph(d + 1, false);
  inst.pins = PartialColouring::empty(d + 1);
  inst.pins.image[0] = u;
  inst.pins.image[d] = v;
  return inst;
}

SprResult spr_reconfigure(const SprInstance& inst, const Assignment& phi,
                          const Assignment& psi, const SprOptions& opts) {
  if (!is_homomorphism(inst.path, inst.host, phi) || !extends_pins(phi, inst.pins))
    throw InvalidEndpoints("phi is not a shortest path between the instance endpoints");
  if (!is_homomorphism(inst.path, inst.host, psi) || !extends_pins(psi, inst.pins))
    throw InvalidEndpoints("psi is not a shortest path between the instance endpoints");

  SprResult res;
  res.bound = inst.d * (double)inst.d / 2.0 - 1.0;
  if (opts.k > 2)
    res.general_bound = (long long)(opts.k - 2) * (inst.d + 1) * inst.d / 2;

  // d <= 1: the pins force a unique extension.
  if (inst.d <= 1) {
    res.route = "trivial";
    res.inner.status = ReconfigStatus::kPath;
    res.inner.path.start = phi;
    res.inner.walk.maps = {phi};
    res.inner.certificate.name = "|psi-phi|+O";
    res.inner.certificate.value = 0;
    return res;
  }

  // A pinned extension into the loop-augmented host is still a proper
  // shortest path (a length-d walk u -> v cannot afford a loop step), and
  // single-vertex moves between such maps never use a loop either, so the
  // augmented reconfiguration graph restricted to the pins equals the bare
  // one. Augmenting only buys dismantlability.
  std::vector<std::vector<int>> loop_sets = opts.loop_sets;
  if (loop_sets.empty()) {
    std::vector<int> all(inst.host.vertex_count());
    for (int v = 0; v < inst.host.vertex_count(); ++v) all[v] = v;
    loop_sets.push_back(all);
    loop_sets.push_back({});
  }

  for (const auto& loops : loop_sets) {
    Graph aug = with_loops(inst.host, loops);
    if (!aug.is_connected()) continue;
    if (!is_nu(aug).nu) continue;

    ReconfigureOptions ropts;
    ropts.cap = opts.cap;
    res.inner = reconfigure(inst.path, aug, inst.pins, phi, psi, ropts);
    res.route = "nu";
    res.loops_used = loops;
    try {
      auto f = find_majority(aug);
      res.k3_verified = f.has_value();
    } catch (const CapExceeded&) {
      res.k3_verified = false;
    }
    res.bound_asserted = res.k3_verified && inst.d >= 2;
    if (res.inner.status == ReconfigStatus::kPath) return res;
    // kDisconnected from the pipeline is definitive; kPath and
    // kDisconnected are the only outcomes for a dismantlable host.
    return res;
  }

  // No augmentation worked: brute force.
  ReconfigureOptions ropts;
  ropts.with_oracle = true;
  ropts.cap = opts.cap;
  res.inner = reconfigure(inst.path, inst.host, inst.pins, phi, psi, ropts);
  res.route = "oracle";
  return res;
}

SpTrivialVerdict sp_trivial_check(const Graph& h, const std::vector<int>& loops,
                                  long long cap, bool run_exact) {
  if (!h.is_irreflexive())
    throw std::invalid_argument("sp_trivial_check: host must be irreflexive");
  if (!h.is_connected())
    throw std::invalid_argument("sp_trivial_check: host must be connected");

  SpTrivialVerdict verdict;
  Graph aug = with_loops(h, loops);
  verdict.nu_sufficient = is_nu(aug).nu;

  if (!run_exact) return verdict;

  verdict.exact_ran = true;
  verdict.exact_trivial = true;
  for (int u = 0; u < h.vertex_count() && verdict.exact_trivial; ++u)
    for (int v = u; v < h.vertex_count(); ++v) {
      auto inst = spr_instance(h, u, v);
      auto hg = hom_graph(inst.path, inst.host, inst.pins, HomEdgeMode::kReconfig,
                          false, cap);
      if (hg.component_count > 1) {
        verdict.exact_trivial = false;
        verdict.witness = std::make_pair(u, v);
        break;
      }
    }
  return verdict;
}

}  // namespace homreconf
