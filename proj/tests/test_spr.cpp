#include <algorithm>

#include "doctest.h"
#include "homreconf/builders.hpp"
#include "homreconf/errors.hpp"
#include "homreconf/graph.hpp"
#include "homreconf/hom.hpp"
#include "homreconf/nu.hpp"
#include "homreconf/spr.hpp"

using namespace homreconf;

static Assignment hyper_path(const Graph& h, const std::vector<const char*>& names) {
  Assignment a;
  for (const char* nm : names) a.push_back(h.vertex(nm));
  return a;
}

TEST_CASE("spr_instance") {
  Graph q3 = hypercube(3);
  auto inst = spr_instance(q3, q3.vertex("000"), q3.vertex("111"));
  CHECK(inst.d == 3);
  CHECK(inst.path.vertex_count() == 4);
  CHECK(inst.pins.image[0] == q3.vertex("000"));
  CHECK(inst.pins.image[3] == q3.vertex("111"));
  CHECK(!inst.stripped_loops);
  // extensions of the pins are exactly the shortest u-v paths
  auto exts = enumerate_extensions(inst.path, inst.host, inst.pins);
  CHECK(exts.size() == 6);  // 3! coordinate orders

  Graph c5 = cycle_graph(5);
  CHECK(spr_instance(c5, 0, 2).d == 2);
  auto degenerate = spr_instance(c5, 1, 1);
  CHECK(degenerate.d == 0);
  CHECK(degenerate.path.vertex_count() == 1);

  // loops are stripped before measuring distance
  Graph rp = path_graph(3, true);
  auto stripped = spr_instance(rp, 0, 2);
  CHECK(stripped.stripped_loops);
  CHECK(stripped.d == 2);
  CHECK(stripped.host.is_irreflexive());

  Graph split = parse_graph("a b\nc d");
  CHECK_THROWS_AS(spr_instance(split, split.vertex("a"), split.vertex("c")),
                  std::invalid_argument);
  CHECK_THROWS_AS(spr_instance(q3, -1, 2), std::invalid_argument);
}

TEST_CASE("spr_reconfigure on the hypercube") {
  Graph q3 = hypercube(3);
  auto inst = spr_instance(q3, q3.vertex("000"), q3.vertex("111"));
  auto phi = hyper_path(q3, {"000", "100", "110", "111"});
  auto psi = hyper_path(q3, {"000", "001", "011", "111"});

  // The cube is twin-free with or without loops, so no loop set survives the
  // dismantling test and the oracle answers. Its instances still reconfigure
  // within the quadratic bound; the bound just is not asserted a priori.
  auto res = spr_reconfigure(inst, phi, psi);
  CHECK(res.route == "oracle");
  CHECK(res.loops_used.empty());
  CHECK(!res.k3_verified);
  CHECK(res.bound == doctest::Approx(3.5));
  CHECK(!res.bound_asserted);
  CHECK(res.inner.status == ReconfigStatus::kPath);
  CHECK(validate_reconfig_path(inst.path, inst.host, inst.pins, res.inner.path));
  CHECK(res.inner.path.start == phi);
  CHECK(res.inner.path.end() == psi);
  CHECK(2 * res.inner.path.length() <= inst.d * inst.d - 2);
  CHECK(!res.general_bound.has_value());

  SprOptions with_k;
  with_k.k = 4;
  auto rk = spr_reconfigure(inst, phi, psi, with_k);
  REQUIRE(rk.general_bound.has_value());
  CHECK(*rk.general_bound == 2 * (inst.d + 1) * inst.d / 2);

  Assignment bad = hyper_path(q3, {"000", "100", "100", "111"});  // not a hom
  CHECK_THROWS_AS(spr_reconfigure(inst, phi, bad), InvalidEndpoints);
}

TEST_CASE("spr_reconfigure degenerate and oracle routes") {
  // unique geodesic: phi == psi, trivial route
  Graph c5 = cycle_graph(5);
  auto inst = spr_instance(c5, 0, 2);
  Assignment only{0, 1, 2};
  auto res = spr_reconfigure(inst, only, only);
  CHECK(res.inner.status == ReconfigStatus::kPath);
  CHECK(res.inner.path.length() == 0);

  // C6 antipodal pair: two geodesics in different components, no loop set
  // makes the host dismantlable, so the oracle answers
  Graph c6 = cycle_graph(6);
  auto i6 = spr_instance(c6, 0, 3);
  Assignment up{0, 1, 2, 3}, down{0, 5, 4, 3};
  auto r6 = spr_reconfigure(i6, up, down);
  CHECK(r6.route == "oracle");
  CHECK(r6.inner.status == ReconfigStatus::kDisconnected);

  // diamond: the two a-c geodesics are one move apart
  Graph dia = diamond_graph();
  auto di = spr_instance(dia, dia.vertex("a"), dia.vertex("c"));
  Assignment left{dia.vertex("a"), dia.vertex("b"), dia.vertex("c")};
  Assignment right{dia.vertex("a"), dia.vertex("d"), dia.vertex("c")};
  auto rd = spr_reconfigure(di, left, right);
  CHECK(rd.route == "nu");
  CHECK(rd.inner.status == ReconfigStatus::kPath);
  CHECK(rd.inner.path.length() == 1);
  CHECK(rd.bound_asserted);
  CHECK(2 * rd.inner.path.length() <= di.d * di.d - 2);
}

TEST_CASE("sp_trivial_check") {
  // the cube: the sufficient test fails (twin-free), the exact sweep over all
  // endpoint pairs still reports trivial
  Graph q3 = hypercube(3);
  auto v = sp_trivial_check(q3, {}, 1'000'000, false);
  CHECK(!v.nu_sufficient);
  CHECK(!v.exact_ran);
  auto vx = sp_trivial_check(q3, {}, 1'000'000, true);
  CHECK(!vx.nu_sufficient);
  CHECK(vx.exact_ran);
  CHECK(vx.exact_trivial);
  CHECK(!vx.witness.has_value());

  // chordal host with every vertex looped
  Graph dia = diamond_graph();
  std::vector<int> all{0, 1, 2, 3};
  auto vd = sp_trivial_check(dia, all, 1'000'000, false);
  CHECK(vd.nu_sufficient);

  // C5: the sufficient test fails for any loop set, the exact test says
  // trivial anyway
  Graph c5 = cycle_graph(5);
  for (const std::vector<int>& loops :
       {std::vector<int>{}, std::vector<int>{0}, std::vector<int>{0, 1, 2, 3, 4}}) {
    auto vc = sp_trivial_check(c5, loops, 1'000'000, true);
    CHECK(!vc.nu_sufficient);
    CHECK(vc.exact_ran);
    CHECK(vc.exact_trivial);
    CHECK(!vc.witness.has_value());
  }

  // C6 is not SP-trivial: the antipodal pair splits
  Graph c6 = cycle_graph(6);
  auto v6 = sp_trivial_check(c6, {}, 1'000'000, true);
  CHECK(!v6.nu_sufficient);
  CHECK(v6.exact_ran);
  CHECK(!v6.exact_trivial);
  REQUIRE(v6.witness.has_value());
  CHECK(v6.witness->first == 0);
  CHECK(v6.witness->second == 3);

  CHECK_THROWS_AS(sp_trivial_check(path_graph(3, true), {}, 1000, false),
                  std::invalid_argument);
  CHECK_THROWS_AS(sp_trivial_check(parse_graph("a b\nc d"), {}, 1000, false),
                  std::invalid_argument);
}

TEST_CASE("with_loops") {
  Graph p3 = path_graph(3);
  auto one = with_loops(p3, {1});
  CHECK(one.has_loop(1));
  CHECK(!one.has_loop(0));
  auto all = with_all_loops(p3);
  CHECK(all.is_reflexive());
  CHECK_THROWS_AS(with_loops(p3, {5}), std::invalid_argument);
}

TEST_CASE("every map in an spr path is a geodesic") {
  Graph q3 = hypercube(3);
  auto inst = spr_instance(q3, q3.vertex("000"), q3.vertex("111"));
  auto phi = hyper_path(q3, {"000", "100", "110", "111"});
  auto psi = hyper_path(q3, {"000", "010", "011", "111"});
  auto res = spr_reconfigure(inst, phi, psi);
  REQUIRE(res.inner.status == ReconfigStatus::kPath);
  auto dm = distance_matrix(inst.host);
  for (const auto& m : res.inner.path.maps()) {
    CHECK(is_homomorphism(inst.path, inst.host, m));
    CHECK(extends_pins(m, inst.pins));
    for (size_t i = 0; i + 1 < m.size(); ++i)
      CHECK(dm.at(m[i], m[i + 1]) == 1);
  }
}
