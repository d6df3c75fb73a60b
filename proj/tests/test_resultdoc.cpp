#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "homreconf/builders.hpp"
#include "homreconf/dismantle.hpp"
#include "homreconf/errors.hpp"
#include "homreconf/graph.hpp"
#include "homreconf/hom.hpp"
#include "homreconf/nu.hpp"
#include "homreconf/reconfig.hpp"
#include "homreconf/resultdoc.hpp"
#include "homreconf/spr.hpp"

using namespace homreconf;

TEST_CASE("document framing") {
  ordered_json body = {{"command", "x"}, {"k", 3}};
  std::string text = render_document(body);
  CHECK(text.rfind("format: 1\n", 0) == 0);
  CHECK(parse_document(text) == body);

  try {
    parse_document("format: 2\n{}");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
  }
  try {
    parse_document("format: 1\n{broken");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("json encodings roundtrip") {
  Graph g = path_graph(3);
  Graph h = cycle_graph(5);

  Assignment a{0, 1, 2};
  auto mj = mapping_json(g, h, a);
  CHECK(mapping_from_json(mj, g, h) == a);
  ordered_json partial = mj;
  partial.erase("1");
  CHECK_THROWS_AS(mapping_from_json(partial, g, h), ParseError);
  ordered_json foreign = mj;
  foreign["0"] = "zz";
  CHECK_THROWS_AS(mapping_from_json(foreign, g, h), ParseError);

  auto p = PartialColouring::empty(3);
  p.image[1] = 4;
  auto pj = pins_json(g, h, p);
  CHECK(pj.size() == 1);
  auto p2 = pins_from_json(pj, g, h);
  CHECK(p2.image == p.image);

  ReconfigPath path;
  path.start = {0, 1, 2};
  path.transitions.push_back({0, 0, 2});
  path.transitions.push_back({2, 2, 4});
  auto pathj = path_json(g, h, path);
  CHECK(pathj.at("length").get<int>() == 2);
  auto path2 = path_from_json(pathj, g, h);
  CHECK(path2.start == path.start);
  REQUIRE(path2.transitions.size() == 2);
  CHECK(path2.transitions[1].vertex == 2);
  CHECK(path2.transitions[1].from == 2);
  CHECK(path2.transitions[1].to == 4);
  CHECK(path2.end() == Assignment{2, 1, 4});

  Walk w;
  w.maps = {a, Assignment{1, 2, 3}};
  auto wj = walk_json(g, h, w);
  auto w2 = walk_from_json(wj, g, h);
  CHECK(w2.maps == w.maps);
}

TEST_CASE("replay check-nu documents") {
  Graph p3 = path_graph(3);
  auto ds = square_with_diagonal(p3);
  auto verdict = is_nu(p3, ds);
  REQUIRE(verdict.nu);
  auto f = find_majority(p3);
  REQUIRE(f.has_value());

  ordered_json body;
  body["command"] = "check-nu";
  body["input"] = {{"h", p3.to_text()}};
  body["nu"] = true;
  body["dismantling"] = serialize_dismantling(ds.component, verdict.certificate);
  body["majority"] = serialize_majority(p3, *f);
  auto rep = replay_result_document(render_document(body));
  CHECK(rep.ok);
  CHECK(rep.checks >= 3);
  CHECK(rep.errors.empty());

  // a corrupted majority table is caught
  MajorityTable bad = *f;
  bad.at(0, 0, 1) = bad.at(0, 0, 1) == 0 ? 2 : 0;
  ordered_json tampered = body;
  tampered["majority"] = serialize_majority(p3, bad);
  CHECK(!replay_result_document(render_document(tampered)).ok);

  // negative verdict, with the stuck retract as witness
  Graph c5 = cycle_graph(5);
  auto ds5 = square_with_diagonal(c5);
  auto v5 = is_nu(c5, ds5);
  REQUIRE(!v5.nu);
  ordered_json neg;
  neg["command"] = "check-nu";
  neg["input"] = {{"h", c5.to_text()}};
  neg["nu"] = false;
  ordered_json stuck = ordered_json::array();
  for (int v : v5.stuck) stuck.push_back(ds5.component.vertex_name(v));
  neg["stuck"] = stuck;
  auto rep5 = replay_result_document(render_document(neg));
  CHECK(rep5.ok);

  // dropping a diagonal vertex from the stuck set is caught
  ordered_json neg2 = neg;
  std::string diag_name = ds5.component.vertex_name(ds5.diagonal[0]);
  ordered_json pruned = ordered_json::array();
  for (const auto& nm : neg2["stuck"])
    if (nm.get<std::string>() != diag_name) pruned.push_back(nm);
  neg2["stuck"] = pruned;
  CHECK(!replay_result_document(render_document(neg2)).ok);

  // claiming nu without a certificate aborts the replay
  ordered_json lie = neg;
  lie["nu"] = true;
  CHECK(!replay_result_document(render_document(lie)).ok);
}

namespace {

ordered_json reconfigure_doc(const Graph& g, const Graph& h,
                             const PartialColouring& p, const Assignment& phi,
                             const Assignment& psi, const ReconfigureResult& rr) {
  ordered_json body;
  body["command"] = "reconfigure";
  body["input"] = {{"g", g.to_text()},
                   {"h", h.to_text()},
                   {"pins", pins_json(g, h, p)},
                   {"phi", mapping_json(g, h, phi)},
                   {"psi", mapping_json(g, h, psi)}};
  body["status"] = rr.status == ReconfigStatus::kPath ? "path"
                   : rr.status == ReconfigStatus::kDisconnected ? "disconnected"
                                                                : "undecided";
  if (h.is_connected())
    body["delta"] = {{"total", rr.delta.total}, {"odd", rr.delta.odd_count}};
  if (rr.status == ReconfigStatus::kPath) {
    body["certificate"] = {{"name", rr.certificate.name},
                           {"value", rr.certificate.value}};
    body["path"] = path_json(g, h, rr.path);
    body["walk"] = walk_json(g, h, rr.walk);
    if (!rr.dismantling.target.empty()) {
      auto ds = square_with_diagonal(h);
      body["dismantling"] = serialize_dismantling(ds.component, rr.dismantling);
    }
  }
  return body;
}

}  // namespace

TEST_CASE("replay reconfigure documents") {
  Graph g = parse_graph("u v");
  Graph h = path_graph(3);
  auto p = PartialColouring::empty(2);
  p.image[g.vertex("v")] = h.vertex("1");
  Assignment phi{h.vertex("0"), h.vertex("1")};
  Assignment psi{h.vertex("2"), h.vertex("1")};

  ReconfigureOptions opts;
  opts.with_oracle = true;
  auto rr = reconfigure(g, h, p, phi, psi, opts);
  REQUIRE(rr.status == ReconfigStatus::kPath);

  ordered_json body = reconfigure_doc(g, h, p, phi, psi, rr);
  auto rep = replay_result_document(render_document(body));
  CHECK(rep.ok);
  CHECK(rep.checks >= 10);
  if (!rep.ok)
    for (const auto& e : rep.errors) MESSAGE(e);

  ordered_json t1 = body;
  t1["certificate"]["value"] = rr.certificate.value + 1;
  auto rep1 = replay_result_document(render_document(t1));
  CHECK(!rep1.ok);

  ordered_json t2 = body;
  t2["path"]["transitions"].erase(t2["path"]["transitions"].size() - 1);
  CHECK(!replay_result_document(render_document(t2)).ok);

  ordered_json t3 = body;
  t3["path"]["length"] = rr.path.length() + 1;
  CHECK(!replay_result_document(render_document(t3)).ok);

  ordered_json t4 = body;
  t4["command"] = "mystery";
  auto rep4 = replay_result_document(render_document(t4));
  CHECK(!rep4.ok);
  REQUIRE(!rep4.errors.empty());
  CHECK(rep4.errors[0].find("unknown command") != std::string::npos);
}

TEST_CASE("replay homgraph document") {
  Graph g = parse_graph("u v");
  Graph h = path_graph(3);
  auto p = PartialColouring::empty(2);
  auto hg = hom_graph(g, h, p, HomEdgeMode::kWalk, false, 1000);

  long long edges = 0;
  for (size_t i = 0; i < hg.adj.size(); ++i)
    edges += hg.adj[i].count() - (hg.adj[i].test((int)i) ? 1 : 0);
  edges /= 2;

  ordered_json body;
  body["command"] = "homgraph";
  body["input"] = {{"g", g.to_text()},
                   {"h", h.to_text()},
                   {"pins", pins_json(g, h, p)},
                   {"mode", "walk"},
                   {"black_restricted", false},
                   {"cap", 1000}};
  body["nodes"] = hg.nodes.size();
  body["edges"] = edges;
  body["components"] = hg.component_count;
  body["diameter"] = hg.diameter;
  CHECK(replay_result_document(render_document(body)).ok);

  ordered_json t = body;
  t["edges"] = edges + 1;
  CHECK(!replay_result_document(render_document(t)).ok);
}

TEST_CASE("replay spr document") {
  Graph dia = diamond_graph();
  auto inst = spr_instance(dia, dia.vertex("a"), dia.vertex("c"));
  Assignment phi{dia.vertex("a"), dia.vertex("b"), dia.vertex("c")};
  Assignment psi{dia.vertex("a"), dia.vertex("d"), dia.vertex("c")};
  auto sr = spr_reconfigure(inst, phi, psi);
  REQUIRE(sr.inner.status == ReconfigStatus::kPath);

  auto names = [&](const Assignment& a) {
    ordered_json arr = ordered_json::array();
    for (int x : a) arr.push_back(inst.host.vertex_name(x));
    return arr;
  };
  ordered_json body;
  body["command"] = "spr";
  body["input"] = {{"h", dia.to_text()}, {"u", "a"}, {"v", "c"},
                   {"phi", names(phi)},  {"psi", names(psi)}, {"cap", 1000000}};
  body["d"] = inst.d;
  body["route"] = sr.route;
  ordered_json loops = ordered_json::array();
  for (int v : sr.loops_used) loops.push_back(inst.host.vertex_name(v));
  body["loops_used"] = loops;
  body["k3_verified"] = sr.k3_verified;
  body["status"] = "path";
  body["path"] = path_json(inst.path, inst.host, sr.inner.path);
  body["bound_asserted"] = sr.bound_asserted;
  auto rep = replay_result_document(render_document(body));
  CHECK(rep.ok);
  if (!rep.ok)
    for (const auto& e : rep.errors) MESSAGE(e);

  ordered_json t = body;
  t["d"] = inst.d + 1;
  CHECK(!replay_result_document(render_document(t)).ok);
}

TEST_CASE("replay spr-trivial document") {
  Graph c5 = cycle_graph(5);
  auto verdict = sp_trivial_check(c5, {}, 1'000'000, true);
  ordered_json body;
  body["command"] = "spr-trivial";
  body["input"] = {{"h", c5.to_text()},
                   {"loops", ordered_json::array()},
                   {"cap", 1'000'000},
                   {"run_exact", true}};
  body["nu_sufficient"] = verdict.nu_sufficient;
  body["exact_ran"] = verdict.exact_ran;
  body["exact_trivial"] = verdict.exact_trivial;
  CHECK(replay_result_document(render_document(body)).ok);

  ordered_json t = body;
  t["nu_sufficient"] = !verdict.nu_sufficient;
  CHECK(!replay_result_document(render_document(t)).ok);
}

TEST_CASE("bound campaign is deterministic and clean on small hosts") {
  std::vector<std::pair<std::string, std::string>> corpus = {
      {"k2", complete_graph(2).to_text()},
      {"p3", path_graph(3).to_text()},
      {"c4", cycle_graph(4).to_text()},
      {"split", "a b\nc d"},
  };
  auto one = verify_bounds_campaign(corpus, 7, 200000);
  auto two = verify_bounds_campaign(corpus, 7, 200000);
  CHECK(one.instances == two.instances);
  CHECK(one.violations == 0);
  CHECK(two.skipped == one.skipped);
  REQUIRE(one.instances.size() == 4);
  CHECK(one.instances[3].contains("skipped"));  // disconnected host row
  CHECK(one.skipped >= 1);
  // every recorded check on the connected hosts passed
  for (const auto& row : one.instances)
    if (row.contains("checks"))
      for (const auto& c : row["checks"]) CHECK(c.at("ok").get<bool>());

  ordered_json body;
  body["command"] = "verify-bounds";
  ordered_json jc = ordered_json::array();
  for (const auto& [n, t] : corpus) jc.push_back({{"name", n}, {"text", t}});
  body["input"] = {{"seed", 7}, {"cap", 200000}, {"corpus", jc}};
  body["instances"] = one.instances;
  body["violations"] = one.violations;
  body["skipped"] = one.skipped;
  auto rep = replay_result_document(render_document(body));
  CHECK(rep.ok);

  ordered_json t = body;
  t["instances"][0]["n"] = 99;
  CHECK(!replay_result_document(render_document(t)).ok);
}
