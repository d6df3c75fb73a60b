#include "homreconf/resultdoc.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "homreconf/builders.hpp"
#include "homreconf/dismantle.hpp"
#include "homreconf/errors.hpp"
#include "homreconf/nu.hpp"
#include "homreconf/spr.hpp"

namespace homreconf {

std::string render_document(const ordered_json& body) {
  return "format: 1\n" + body.dump(2) + "\n";
}

ordered_json parse_document(const std::string& text) {
  size_t nl = text.find('\n');
  std::string header = nl == std::string::npos ? text : text.substr(0, nl);
  // trim trailing carriage return
  if (!header.empty() && header.back() == '\r') header.pop_back();
  if (header != "format: 1")
    throw ParseError("expected 'format: 1' header, got '" + header + "'", 1);
  try {
    return ordered_json::parse(text.substr(nl + 1));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid document body: ") + e.what(), 2);
  }
}

ordered_json mapping_json(const Graph& g, const Graph& h, const Assignment& a) {
  ordered_json j = ordered_json::object();
  for (int v = 0; v < g.vertex_count(); ++v)
    j[g.vertex_name(v)] = h.vertex_name(a[v]);
  return j;
}

ordered_json pins_json(const Graph& g, const Graph& h, const PartialColouring& p) {
  ordered_json j = ordered_json::object();
  for (int v = 0; v < g.vertex_count(); ++v)
    if (p.pinned(v)) j[g.vertex_name(v)] = h.vertex_name(p.image[v]);
  return j;
}

ordered_json path_json(const Graph& g, const Graph& h, const ReconfigPath& path) {
  ordered_json j;
  j["start"] = mapping_json(g, h, path.start);
  ordered_json ts = ordered_json::array();
  for (const auto& t : path.transitions)
    ts.push_back({{"vertex", g.vertex_name(t.vertex)},
                  {"from", h.vertex_name(t.from)},
                  {"to", h.vertex_name(t.to)}});
  j["transitions"] = ts;
  j["length"] = path.length();
  return j;
}

ordered_json walk_json(const Graph& g, const Graph& h, const Walk& w) {
  ordered_json j = ordered_json::array();
  for (const auto& m : w.maps) j.push_back(mapping_json(g, h, m));
  return j;
}

namespace {

int resolve(const Graph& gr, const std::string& name, const char* what) {
  auto v = gr.find_vertex(name);
  if (!v) throw ParseError(std::string(what) + ": unknown vertex '" + name + "'");
  return *v;
}

}  // namespace

Assignment mapping_from_json(const ordered_json& j, const Graph& g, const Graph& h) {
  Assignment a(g.vertex_count(), -1);
  for (auto it = j.begin(); it != j.end(); ++it) {
    int gv = resolve(g, it.key(), "mapping");
    a[gv] = resolve(h, it.value().get<std::string>(), "mapping");
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (a[v] < 0)
      throw ParseError("mapping: no image for vertex '" + g.vertex_name(v) + "'");
  return a;
}

PartialColouring pins_from_json(const ordered_json& j, const Graph& g, const Graph& h) {
  auto p = PartialColouring::empty(g.vertex_count());
  for (auto it = j.begin(); it != j.end(); ++it) {
    int gv = resolve(g, it.key(), "pins");
    p.image[gv] = resolve(h, it.value().get<std::string>(), "pins");
  }
  return p;
}

ReconfigPath path_from_json(const ordered_json& j, const Graph& g, const Graph& h) {
  ReconfigPath path;
  path.start = mapping_from_json(j.at("start"), g, h);
  for (const auto& t : j.at("transitions")) {
    PathTransition tr;
    tr.vertex = resolve(g, t.at("vertex").get<std::string>(), "transition");
    tr.from = resolve(h, t.at("from").get<std::string>(), "transition");
    tr.to = resolve(h, t.at("to").get<std::string>(), "transition");
    path.transitions.push_back(tr);
  }
  return path;
}

Walk walk_from_json(const ordered_json& j, const Graph& g, const Graph& h) {
  Walk w;
  for (const auto& m : j) w.maps.push_back(mapping_from_json(m, g, h));
  return w;
}

// ---------------------------------------------------------------------------
// Replay

namespace {

struct Checker {
  ReplayReport& rep;
  void operator()(bool ok, const std::string& what) {
    ++rep.checks;
    if (!ok) {
      rep.ok = false;
      rep.errors.push_back(what);
    }
  }
};

bool same_target(const std::vector<int>& a, std::vector<int> b) {
  std::vector<int> sa = a;
  std::sort(sa.begin(), sa.end());
  std::sort(b.begin(), b.end());
  return sa == b;
}

// Matches the greedy rule: neighbourhoods restricted to the alive set,
// loops included.
bool has_alive_dominator(const Graph& gr, const Bitset& alive, int v) {
  for (int u = 0; u < gr.vertex_count(); ++u) {
    if (u == v || !alive.test(u)) continue;
    if (Bitset::masked_subset(gr.neighbors(v), alive, gr.neighbors(u))) return true;
  }
  return false;
}

long long cert_expected_value(const std::string& name, const DeltaStats& delta,
                              int ng, int nh, long long path_len) {
  if (name == "|psi-phi|-1") return std::max<long long>(0, delta.total - 1);
  if (name == "|psi-phi|+O-1") return delta.total + delta.odd_count - 1;
  if (name == "|psi-phi|+O") return delta.total + delta.odd_count;
  if (name == "2*nG*nH^2") return 2LL * ng * nh * nh;
  if (name == "oracle") return path_len;
  return -1;
}

void replay_check_nu(const ordered_json& body, ReplayReport& rep) {
  Checker check{rep};
  Graph h = parse_graph(body.at("input").at("h").get<std::string>());
  auto ds = square_with_diagonal(h);
  bool nu = body.at("nu").get<bool>();
  if (nu) {
    auto seq = parse_dismantling(ds.component, body.at("dismantling").get<std::string>());
    check(validate_dismantling(ds.component, seq), "check-nu: dismantling does not replay");
    check(same_target(seq.target, ds.diagonal),
          "check-nu: dismantling target is not the diagonal");
  } else {
    std::vector<int> stuck;
    for (const auto& nm : body.at("stuck"))
      stuck.push_back(resolve(ds.component, nm.get<std::string>(), "stuck"));
    Bitset alive(ds.component.vertex_count());
    for (int v : stuck) alive.set(v);
    for (int v : ds.diagonal)
      check(alive.test(v), "check-nu: stuck set lost a diagonal vertex");
    Bitset diag(ds.component.vertex_count());
    for (int v : ds.diagonal) diag.set(v);
    bool irreducible = true;
    for (int v : stuck)
      if (!diag.test(v) && has_alive_dominator(ds.component, alive, v))
        irreducible = false;
    check(irreducible, "check-nu: stuck set still has a dominated vertex");
  }
  if (body.contains("majority")) {
    auto f = parse_majority(h, body.at("majority").get<std::string>());
    check(validate_majority(h, f), "check-nu: majority table invalid");
  }
}

void replay_reconfigure_body(const ordered_json& body, const Graph& g, const Graph& h,
                             const PartialColouring& p, const Assignment& phi,
                             const Assignment& psi, ReplayReport& rep,
                             const char* tag) {
  Checker check{rep};
  std::string status = body.at("status").get<std::string>();
  if (status == "path") {
    auto path = path_from_json(body.at("path"), g, h);
    check(validate_reconfig_path(g, h, p, path),
          std::string(tag) + ": path does not replay");
    check(path.start == phi, std::string(tag) + ": path does not start at phi");
    check(path.end() == psi, std::string(tag) + ": path does not end at psi");
    long long len = path.length();
    check(body.at("path").at("length").get<long long>() == len,
          std::string(tag) + ": recorded length mismatch");

    if (body.contains("delta")) {
      auto delta = delta_stats(g, h, phi, psi);
      check(body.at("delta").at("total").get<int>() == delta.total,
            std::string(tag) + ": |psi-phi| mismatch");
      check(body.at("delta").at("odd").get<int>() == delta.odd_count,
            std::string(tag) + ": odd-count mismatch");
      const auto& cert = body.at("certificate");
      std::string name = cert.at("name").get<std::string>();
      long long value = cert.at("value").get<long long>();
      long long expect =
          cert_expected_value(name, delta, g.vertex_count(), h.vertex_count(), len);
      check(expect >= 0, std::string(tag) + ": unknown certificate '" + name + "'");
      check(value == expect, std::string(tag) + ": certificate value mismatch");
      check(len <= value, std::string(tag) + ": emitted length exceeds certificate");
    }
    if (body.contains("walk")) {
      auto w = walk_from_json(body.at("walk"), g, h);
      check(validate_walk(g, h, p, w), std::string(tag) + ": walk does not replay");
      check(!w.maps.empty() && w.maps.front() == phi && w.maps.back() == psi,
            std::string(tag) + ": walk endpoints mismatch");
    }
    if (body.contains("dismantling")) {
      auto ds = square_with_diagonal(h);
      auto seq = parse_dismantling(ds.component, body.at("dismantling").get<std::string>());
      check(validate_dismantling(ds.component, seq),
            std::string(tag) + ": dismantling does not replay");
      check(same_target(seq.target, ds.diagonal),
            std::string(tag) + ": dismantling target is not the diagonal");
    }
  } else if (status == "disconnected") {
    if (h.is_connected()) {
      auto ds = square_with_diagonal(h);
      bool witness = false;
      for (int v = 0; v < g.vertex_count() && !witness; ++v)
        if (g.degree(v) > 0 && ds.pair_component_index(phi[v], psi[v]) < 0)
          witness = true;
      check(witness, std::string(tag) + ": no witness for disconnection");
    }
  }
  // "undecided" carries no certificate.
}

void replay_reconfigure(const ordered_json& body, ReplayReport& rep) {
  Checker check{rep};
  const auto& in = body.at("input");
  Graph g = parse_graph(in.at("g").get<std::string>());
  Graph h = parse_graph(in.at("h").get<std::string>());
  auto p = pins_from_json(in.at("pins"), g, h);
  auto phi = mapping_from_json(in.at("phi"), g, h);
  auto psi = mapping_from_json(in.at("psi"), g, h);
  check(is_homomorphism(g, h, phi) && extends_pins(phi, p),
        "reconfigure: phi is not a valid endpoint");
  check(is_homomorphism(g, h, psi) && extends_pins(psi, p),
        "reconfigure: psi is not a valid endpoint");
  replay_reconfigure_body(body, g, h, p, phi, psi, rep, "reconfigure");
}

void replay_homgraph(const ordered_json& body, ReplayReport& rep) {
  Checker check{rep};
  const auto& in = body.at("input");
  Graph g = parse_graph(in.at("g").get<std::string>());
  Graph h = parse_graph(in.at("h").get<std::string>());
  auto p = pins_from_json(in.at("pins"), g, h);
  auto mode = in.at("mode").get<std::string>() == "walk" ? HomEdgeMode::kWalk
                                                         : HomEdgeMode::kReconfig;
  bool black = in.at("black_restricted").get<bool>();
  long long cap = in.at("cap").get<long long>();
  auto hg = hom_graph(g, h, p, mode, black, cap);
  check((long long)hg.nodes.size() == body.at("nodes").get<long long>(),
        "homgraph: node count mismatch");
  long long edges = 0;
  for (size_t i = 0; i < hg.adj.size(); ++i)
    edges += hg.adj[i].count() - (hg.adj[i].test((int)i) ? 1 : 0);
  edges /= 2;
  check(edges == body.at("edges").get<long long>(), "homgraph: edge count mismatch");
  check(hg.component_count == body.at("components").get<int>(),
        "homgraph: component count mismatch");
  check(hg.diameter == body.at("diameter").get<int>(), "homgraph: diameter mismatch");
}

void replay_spr(const ordered_json& body, ReplayReport& rep) {
  Checker check{rep};
  const auto& in = body.at("input");
  Graph h = parse_graph(in.at("h").get<std::string>());
  int u = resolve(h, in.at("u").get<std::string>(), "spr");
  int v = resolve(h, in.at("v").get<std::string>(), "spr");
  auto inst = spr_instance(h, u, v);
  check(inst.d == body.at("d").get<int>(), "spr: distance mismatch");

  auto path_assignment = [&](const ordered_json& names) {
    Assignment a;
    for (const auto& nm : names)
      a.push_back(resolve(inst.host, nm.get<std::string>(), "spr path"));
    return a;
  };
  auto phi = path_assignment(in.at("phi"));
  auto psi = path_assignment(in.at("psi"));
  check((int)phi.size() == inst.d + 1 && (int)psi.size() == inst.d + 1,
        "spr: endpoint path length mismatch");
  check(is_homomorphism(inst.path, inst.host, phi) && extends_pins(phi, inst.pins),
        "spr: phi is not a shortest path");
  check(is_homomorphism(inst.path, inst.host, psi) && extends_pins(psi, inst.pins),
        "spr: psi is not a shortest path");

  std::string route = body.at("route").get<std::string>();
  Graph routed = inst.host;
  if (route == "nu") {
    std::vector<int> loops;
    for (const auto& nm : body.at("loops_used"))
      loops.push_back(resolve(inst.host, nm.get<std::string>(), "spr loops"));
    routed = with_loops(inst.host, loops);
    check(is_nu(routed).nu, "spr: routed host is not dismantlable");
    if (body.at("k3_verified").get<bool>() && routed.vertex_count() <= 8)
      check(find_majority(routed).has_value(), "spr: majority claim does not replay");
  }

  std::string status = body.at("status").get<std::string>();
  if (status == "path") {
    auto path = path_from_json(body.at("path"), inst.path, inst.host);
    check(validate_reconfig_path(inst.path, inst.host, inst.pins, path),
          "spr: path does not replay");
    check(path.start == phi && path.end() == psi, "spr: path endpoints mismatch");
    if (body.at("bound_asserted").get<bool>())
      check(2LL * path.length() <= (long long)inst.d * inst.d - 2,
            "spr: emitted length exceeds d^2/2 - 1");
  } else if (status == "disconnected") {
    long long cap = in.at("cap").get<long long>();
    auto hg = hom_graph(inst.path, inst.host, inst.pins, HomEdgeMode::kReconfig,
                        false, cap);
    int i = hg.find_node(phi), j = hg.find_node(psi);
    check(i >= 0 && j >= 0 && hg.component[i] != hg.component[j],
          "spr: disconnection does not replay");
  }
}

void replay_spr_trivial(const ordered_json& body, ReplayReport& rep) {
  Checker check{rep};
  const auto& in = body.at("input");
  Graph h = parse_graph(in.at("h").get<std::string>());
  std::vector<int> loops;
  for (const auto& nm : in.at("loops"))
    loops.push_back(resolve(h, nm.get<std::string>(), "spr-trivial loops"));
  long long cap = in.at("cap").get<long long>();
  bool run_exact = in.at("run_exact").get<bool>();
  auto verdict = sp_trivial_check(h, loops, cap, run_exact);
  check(verdict.nu_sufficient == body.at("nu_sufficient").get<bool>(),
        "spr-trivial: sufficient verdict mismatch");
  check(verdict.exact_ran == body.at("exact_ran").get<bool>(),
        "spr-trivial: exact_ran mismatch");
  if (verdict.exact_ran)
    check(verdict.exact_trivial == body.at("exact_trivial").get<bool>(),
          "spr-trivial: exact verdict mismatch");
}

void replay_verify_bounds(const ordered_json& body, ReplayReport& rep) {
  Checker check{rep};
  const auto& in = body.at("input");
  std::vector<std::pair<std::string, std::string>> corpus;
  for (const auto& e : in.at("corpus"))
    corpus.emplace_back(e.at("name").get<std::string>(), e.at("text").get<std::string>());
  auto outcome = verify_bounds_campaign(corpus, in.at("seed").get<uint64_t>(),
                                        in.at("cap").get<long long>());
  check(outcome.instances == body.at("instances"),
        "verify-bounds: campaign table does not reproduce");
  check(outcome.violations == body.at("violations").get<int>(),
        "verify-bounds: violation count mismatch");
  check(outcome.skipped == body.at("skipped").get<int>(),
        "verify-bounds: skip count mismatch");
}

}  // namespace

ReplayReport replay_result_document(const std::string& text) {
  ReplayReport rep;
  try {
    auto body = parse_document(text);
    std::string cmd = body.at("command").get<std::string>();
    if (cmd == "check-nu")
      replay_check_nu(body, rep);
    else if (cmd == "reconfigure")
      replay_reconfigure(body, rep);
    else if (cmd == "homgraph")
      replay_homgraph(body, rep);
    else if (cmd == "spr")
      replay_spr(body, rep);
    else if (cmd == "spr-trivial")
      replay_spr_trivial(body, rep);
    else if (cmd == "verify-bounds")
      replay_verify_bounds(body, rep);
    else {
      rep.ok = false;
      rep.errors.push_back("unknown command: " + cmd);
    }
  } catch (const std::exception& e) {
    rep.ok = false;
    rep.errors.push_back(std::string("replay aborted: ") + e.what());
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Bound-verification campaign

CampaignOutcome verify_bounds_campaign(
    const std::vector<std::pair<std::string, std::string>>& corpus, uint64_t seed,
    long long cap) {
  CampaignOutcome out;
  int host_index = 0;

  for (const auto& [name, text] : corpus) {
    ++host_index;
    Graph h = parse_graph(text);
    ordered_json row;
    row["host"] = name;
    row["n"] = h.vertex_count();
    ordered_json skips = ordered_json::array();
    ordered_json checks = ordered_json::array();
    auto expect_le = [&](const std::string& bound, long long lhs, long long rhs) {
      bool ok = lhs <= rhs;
      checks.push_back(ordered_json{
          {"bound", bound}, {"lhs", lhs}, {"rhs", rhs}, {"ok", ok}});
      if (!ok) ++out.violations;
    };

    if (!h.is_connected() || h.vertex_count() == 0) {
      row["skipped"] = "host disconnected or empty";
      ++out.skipped;
      out.instances.push_back(row);
      continue;
    }

    int nh = h.vertex_count();
    bool nu = is_nu(h).nu;
    row["nu"] = nu;
    bool maj = false;
    if (nh <= 8) maj = find_majority(h).has_value();
    row["majority"] = maj;

    std::mt19937_64 rng(seed + 1000003ULL * (uint64_t)host_index);

    struct GSpec {
      int n;
      double edge_prob, loop_prob;
    };
    const GSpec specs[] = {{3, 0.7, 0.0}, {3, 0.7, 1.0}, {4, 0.6, 0.5}};
    for (const auto& sp : specs) {
      Graph g = random_connected_graph(rng, sp.n, sp.edge_prob, sp.loop_prob);
      auto p = PartialColouring::empty(g.vertex_count());
      std::vector<Assignment> all;
      try {
        all = enumerate_extensions(g, h, p, cap);
      } catch (const CapExceeded&) {
        skips.push_back("enumeration cap");
        ++out.skipped;
        continue;
      }
      if (all.empty()) continue;
      const Assignment& sigma = all[rng() % all.size()];
      int pinv = (int)(rng() % g.vertex_count());
      p.image[pinv] = sigma[pinv];

      HomGraph hgw, hgr;
      try {
        hgw = hom_graph(g, h, p, HomEdgeMode::kWalk, false, cap);
        hgr = hom_graph(g, h, p, HomEdgeMode::kReconfig, false, cap);
      } catch (const CapExceeded&) {
        skips.push_back("hom graph cap");
        ++out.skipped;
        continue;
      }
      if (hgw.nodes.empty()) continue;

      if (nu) {
        int diam = 0;
        for (int dc : hgw.comp_diameter) diam = std::max(diam, dc);
        expect_le("walk-diameter <= 2nH^2", diam, 2LL * nh * nh);
        if (maj) expect_le("walk-diameter <= 2nH", diam, 2LL * nh);
      }

      int samples = std::min<int>(6, (int)hgr.nodes.size());
      for (int s = 0; s < samples; ++s) {
        int i = (int)(rng() % hgr.nodes.size());
        std::vector<int> same;
        for (int j = 0; j < (int)hgr.nodes.size(); ++j)
          if (hgr.component[j] == hgr.component[i]) same.push_back(j);
        int j = same[rng() % same.size()];
        auto delta = delta_stats(g, h, hgr.nodes[i], hgr.nodes[j]);
        long long dist = hgr.distance(i, j);
        expect_le("ceil(|psi-phi|/2) <= oracle", (delta.total + 1) / 2, dist);
        if (g.is_reflexive()) expect_le("|psi-phi| <= oracle (reflexive G)", delta.total, dist);
        if (nu) {
          auto rr = reconfigure(g, h, p, hgr.nodes[i], hgr.nodes[j]);
          expect_le("status == path", rr.status == ReconfigStatus::kPath ? 0 : 1, 0);
          if (rr.status == ReconfigStatus::kPath) {
            expect_le("emitted <= certificate", rr.path.length(), rr.certificate.value);
            expect_le("oracle <= emitted", dist, rr.path.length());
          }
        }
      }
    }

    // Shortest-path sweep on small irreflexive hosts.
    if (h.is_irreflexive() && nh <= 8) {
      bool capped = false;
      for (int u = 0; u < nh && !capped; ++u)
        for (int v = u + 1; v < nh && !capped; ++v) {
          auto inst = spr_instance(h, u, v);
          if (inst.d < 2) continue;
          std::vector<Assignment> exts;
          try {
            exts = enumerate_extensions(inst.path, inst.host, inst.pins, cap);
          } catch (const CapExceeded&) {
            skips.push_back("spr enumeration cap");
            ++out.skipped;
            capped = true;
            break;
          }
          if (exts.size() < 2) continue;
          const Assignment& phi = exts.front();
          const Assignment& psi = exts.back();
          auto hg = hom_graph(inst.path, inst.host, inst.pins,
                              HomEdgeMode::kReconfig, false, cap);
          int i = hg.find_node(phi), j = hg.find_node(psi);
          long long dist = hg.distance(i, j);
          if (dist < 0) continue;  // disconnected instance: nothing bounded
          auto sr = spr_reconfigure(inst, phi, psi);
          if (sr.inner.status == ReconfigStatus::kPath && sr.bound_asserted)
            expect_le("2*spr-length <= d^2-2 (u=" + h.vertex_name(u) +
                          ",v=" + h.vertex_name(v) + ")",
                      2LL * sr.inner.path.length(), (long long)inst.d * inst.d - 2);
        }
    }

    if (!skips.empty()) row["skips"] = skips;
    row["checks"] = checks;
    out.instances.push_back(row);
  }
  return out;
}

}  // namespace homreconf
