#include <algorithm>

#include "doctest.h"
#include "homreconf/builders.hpp"
#include "homreconf/dismantle.hpp"
#include "homreconf/errors.hpp"
#include "homreconf/graph.hpp"
#include "homreconf/nu.hpp"

using namespace homreconf;

static Graph reflexive_path_abc() {
  Graph g;
  g.add_vertex("a");
  g.add_vertex("b");
  g.add_vertex("c");
  for (int v = 0; v < 3; ++v) g.add_edge(v, v);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  return g;
}

TEST_CASE("is_nu verdicts with certificates") {
  auto k2 = is_nu(path_graph(2));
  CHECK(k2.nu);

  auto king = is_nu(king_graph(3, 3));
  CHECK(king.nu);
  auto kds = square_with_diagonal(king_graph(3, 3));
  CHECK(validate_dismantling(kds.component, king.certificate));
  std::vector<int> tgt = king.certificate.target;
  std::sort(tgt.begin(), tgt.end());
  std::vector<int> diag = kds.diagonal;
  std::sort(diag.begin(), diag.end());
  CHECK(tgt == diag);

  auto rc4 = is_nu(cycle_graph(4, true));
  CHECK(!rc4.nu);
  CHECK(!rc4.stuck.empty());

  CHECK(!is_nu(cycle_graph(5)).nu);
  CHECK(!is_nu(cycle_graph(6)).nu);
  CHECK(is_nu(cycle_graph(4)).nu);

  // The cube is twin-free, so nothing in its square is ever dominated: the
  // dismantling test rejects it even though its shortest-path instances all
  // reconfigure (see the spr tests).
  auto q3 = is_nu(hypercube(3));
  CHECK(!q3.nu);
  CHECK(!q3.stuck.empty());

  CHECK_THROWS_AS(is_nu(parse_graph("a b\nc d")), std::invalid_argument);
}

TEST_CASE("nu holds for products and retracts of nu graphs") {
  Graph rp3 = path_graph(3, true);
  REQUIRE(is_nu(rp3).nu);
  auto prod = categorical_product(rp3, rp3);
  REQUIRE(prod.graph.is_connected());
  CHECK(is_nu(prod.graph).nu);
}

TEST_CASE("find_majority on small hosts") {
  auto mk2 = find_majority(path_graph(2));
  REQUIRE(mk2.has_value());
  CHECK(validate_majority(path_graph(2), *mk2));
  // two-element majority is unique
  CHECK(mk2->at(0, 0, 1) == 0);
  CHECK(mk2->at(0, 1, 0) == 0);
  CHECK(mk2->at(1, 0, 0) == 0);
  CHECK(mk2->at(1, 1, 0) == 1);

  Graph rp = reflexive_path_abc();
  auto mrp = find_majority(rp);
  REQUIRE(mrp.has_value());
  CHECK(validate_majority(rp, *mrp));
  // the position-median table is also a valid answer
  MajorityTable median;
  median.n = 3;
  median.table.assign(27, 0);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int z = 0; z < 3; ++z) {
        int lo = std::min(x, std::min(y, z));
        int hi = std::max(x, std::max(y, z));
        median.at(x, y, z) = x + y + z - lo - hi;
      }
  CHECK(validate_majority(rp, median));

  CHECK(!find_majority(cycle_graph(6)).has_value());
  CHECK(!find_majority(cycle_graph(4, true)).has_value());
  CHECK(!find_majority(hypercube(3)).has_value());  // agrees with is_nu

  CHECK_THROWS_AS(find_majority(king_graph(3, 3)), CapExceeded);
  CHECK(find_majority(king_graph(3, 3), 9).has_value());
}

TEST_CASE("validate_majority rejects tampering") {
  auto f = find_majority(path_graph(3));
  REQUIRE(f.has_value());
  CHECK(validate_majority(path_graph(3), *f));
  MajorityTable bad = *f;
  bad.at(0, 0, 1) = 1;  // breaks the near-unanimity identity
  CHECK(!validate_majority(path_graph(3), bad));
  MajorityTable wrong_size = *f;
  wrong_size.table.pop_back();
  CHECK(!validate_majority(path_graph(3), wrong_size));
}

TEST_CASE("majority table text round-trip") {
  Graph h = path_graph(3);
  auto f = find_majority(h);
  REQUIRE(f.has_value());
  auto text = serialize_majority(h, *f);
  auto back = parse_majority(h, text);
  CHECK(back.table == f->table);

  CHECK_THROWS_AS(parse_majority(h, "0 0 -> 0"), ParseError);
  CHECK_THROWS_AS(parse_majority(h, "0 0 zz -> 0"), ParseError);
  CHECK_THROWS_AS(parse_majority(h, "0 0 0 -> 0\n0 0 0 -> 1"), ParseError);
  CHECK_THROWS_AS(parse_majority(h, "0 0 0 -> 0\n"), ParseError);  // incomplete
}

TEST_CASE("tree_extension_solvable") {
  Graph edge = path_graph(2);
  auto pin_both = PartialColouring::empty(2);
  pin_both.image[0] = 0;
  pin_both.image[1] = 0;
  CHECK(!tree_extension_solvable(edge, pin_both, path_graph(2)));

  Graph p3 = path_graph(3);
  Graph c5 = cycle_graph(5);
  auto leaf_pins = PartialColouring::empty(3);
  leaf_pins.image[0] = c5.vertex("0");
  leaf_pins.image[2] = c5.vertex("0");
  CHECK(tree_extension_solvable(p3, leaf_pins, c5));

  Graph star;
  star.add_vertex("c");
  for (const char* l : {"x", "y", "z"}) star.add_vertex(l);
  star.add_edge(0, 1);
  star.add_edge(0, 2);
  star.add_edge(0, 3);
  Graph c6 = cycle_graph(6);
  auto star_pins = PartialColouring::empty(4);
  star_pins.image[1] = c6.vertex("1");
  star_pins.image[2] = c6.vertex("3");
  star_pins.image[3] = c6.vertex("5");
  CHECK(!tree_extension_solvable(star, star_pins, c6));

  CHECK_THROWS_AS(
      tree_extension_solvable(cycle_graph(4), PartialColouring::empty(4), c6),
      std::invalid_argument);
  CHECK_THROWS_AS(
      tree_extension_solvable(parse_graph("a a"), PartialColouring::empty(1), c6),
      std::invalid_argument);
}

TEST_CASE("find_3leaf_obstruction") {
  Graph c6 = cycle_graph(6);
  auto obs = find_3leaf_obstruction(c6, 4);
  REQUIRE(obs.has_value());
  CHECK(!tree_extension_solvable(obs->tree, obs->pins, c6));

  CHECK(!find_3leaf_obstruction(path_graph(2), 3).has_value());
  CHECK(!find_3leaf_obstruction(hypercube(3), 6).has_value());
}
