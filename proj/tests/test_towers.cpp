#include <map>

#include "doctest.h"
#include "towercoh/group_tower.hpp"

using namespace towercoh;

namespace {

int element_order(const LevelGroup& g, int x) {
  int n = 1, y = x;
  while (y != 0) {
    y = g.times(y, x);
    ++n;
  }
  return n;
}

std::map<int, int> order_multiset(const LevelGroup& g) {
  std::map<int, int> m;
  for (int x = 0; x < g.order; ++x) m[element_order(g, x)] += 1;
  return m;
}

bool is_abelian(const LevelGroup& g) {
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      if (g.times(a, b) != g.times(b, a)) return false;
  return true;
}

}  // namespace

TEST_CASE("abelian towers") {
  GroupTower t = make_abelian_tower(1, 2, 3);
  CHECK(validate_tower(t).ok);
  for (int r = 0; r <= 3; ++r) CHECK(t.order(r) == (1 << r));
  TowerElement one = abelian_element(t, {1});
  CHECK(one.level_index == std::vector<int>{0, 1, 1, 1});
  CHECK(validate_element(t, one).ok);
  TowerElement five = element_from_level(t, 5);
  CHECK(five.level_index == std::vector<int>{0, 1, 1, 5});

  GroupTower t2 = make_abelian_tower(2, 3, 2);
  CHECK(validate_tower(t2).ok);
  CHECK(t2.order(2) == 81);
  CHECK(t2.element_name(2, 0) == "(0,0)");
  TowerElement e = abelian_element(t2, {1, 2});
  CHECK(e.level_index[2] == 1 * 9 + 2);
  TowerElement neg = tower_inv(t2, e);
  CHECK(tower_mul(t2, e, neg) == tower_identity(t2));

  GroupTower t0 = make_abelian_tower(0, 5, 3);
  CHECK(validate_tower(t0).ok);
  for (int r = 0; r <= 3; ++r) CHECK(t0.order(r) == 1);
}

TEST_CASE("heisenberg towers") {
  GroupTower h2 = make_heisenberg_tower(2, 1);
  CHECK(validate_tower(h2).ok);
  CHECK(h2.order(1) == 8);
  CHECK(!is_abelian(h2.levels[1]));

  GroupTower h3 = make_heisenberg_tower(3, 1);
  CHECK(validate_tower(h3).ok);
  CHECK(h3.order(1) == 27);
  // Exponent p for odd p: every x satisfies x^3 = identity.
  for (int x = 0; x < 27; ++x) {
    int cube = h3.levels[1].times(h3.levels[1].times(x, x), x);
    CHECK(cube == 0);
  }

  GroupTower h32 = make_heisenberg_tower(3, 2);
  CHECK(validate_tower(h32).ok);
  CHECK(h32.order(2) == 729);
  TowerElement e = heisenberg_element(h32, 4, 7, 2);
  // Entrywise reduction: (4,7,2) mod 3 = (1,1,2).
  CHECK(e.level_index[1] == (1 * 3 + 1) * 3 + 2);

  // Group law sanity: X*Y and Y*X differ by the commutator in the center.
  GroupTower h = make_heisenberg_tower(2, 2);
  TowerElement X = heisenberg_element(h, 1, 0, 0), Y = heisenberg_element(h, 0, 1, 0);
  TowerElement XY = tower_mul(h, X, Y), YX = tower_mul(h, Y, X);
  CHECK(XY != YX);
  CHECK(tower_mul(h, XY, tower_inv(h, XY)) == tower_identity(h));
  TowerElement comm = tower_mul(h, XY, tower_inv(h, YX));
  CHECK(comm == heisenberg_element(h, 0, 0, 1));
}

TEST_CASE("custom towers and validation") {
  LevelGroup z2;
  z2.order = 2;
  z2.mul = {0, 1, 1, 0};
  z2.inv = {0, 1};
  LevelGroup triv;
  triv.order = 1;
  triv.mul = {0};
  triv.inv = {0};
  GroupTower t = make_custom_tower(2, {triv, z2}, {{}, {0, 0}});
  CHECK(validate_tower(t).ok);
  CHECK(t.depth == 1);

  LevelGroup z3;
  z3.order = 3;
  z3.mul = {0, 1, 2, 1, 2, 0, 2, 0, 1};
  z3.inv = {0, 2, 1};
  CHECK_THROWS_AS(make_custom_tower(2, {triv, z3}, {{}, {0, 0, 0}}), std::invalid_argument);

  LevelGroup broken = z2;
  broken.inv = {1, 0};
  CHECK(!validate_group(broken).ok);
}

TEST_CASE("subgroup closure") {
  GroupTower t = make_abelian_tower(2, 2, 2);
  SubTower h = closure_of(t, {abelian_element(t, {1, 0})});
  CHECK(validate_subtower(t, h).ok);
  for (int r = 0; r <= 2; ++r) {
    CHECK(static_cast<int>(h.members[r].size()) == (1 << r));
    CHECK(subtower_index(t, h, r) == (1 << r));
  }
  CHECK(!subtower_is_full(t, h));

  GroupTower t1 = make_abelian_tower(1, 2, 3);
  SubTower h2 = closure_of(t1, {abelian_element(t1, {2})});
  CHECK(subtower_index(t1, h2, 0) == 1);
  for (int r = 1; r <= 3; ++r) CHECK(subtower_index(t1, h2, r) == 2);

  GroupTower hei = make_heisenberg_tower(2, 2);
  SubTower full = closure_of(hei, {heisenberg_element(hei, 1, 0, 0), heisenberg_element(hei, 0, 1, 0)});
  CHECK(subtower_is_full(hei, full));

  // Idempotence: regenerate from all top-level members.
  std::vector<TowerElement> gens2;
  for (int x : h.members[2]) gens2.push_back(element_from_level(t, x));
  SubTower again = closure_of(t, gens2);
  CHECK(again.members == h.members);
}

TEST_CASE("subtower as standalone tower") {
  GroupTower t = make_abelian_tower(1, 2, 3);
  SubTower h = closure_of(t, {abelian_element(t, {2})});
  GroupTower ht = subtower_as_tower(t, h);
  CHECK(validate_tower(ht).ok);
  CHECK(ht.order(0) == 1);
  CHECK(ht.order(1) == 1);
  CHECK(ht.order(2) == 2);
  CHECK(ht.order(3) == 4);
  TowerElement two = element_in_subtower(t, h, abelian_element(t, {2}));
  CHECK(two.level_index == std::vector<int>{0, 0, 1, 1});
  CHECK(validate_element(ht, two).ok);
  CHECK_THROWS_AS(element_in_subtower(t, h, abelian_element(t, {1})), std::invalid_argument);
}

TEST_CASE("quotient towers") {
  GroupTower hei = make_heisenberg_tower(2, 2);
  SubTower center = closure_of(hei, {heisenberg_element(hei, 0, 0, 1)});
  CHECK(center.members[1].size() == 2);
  CHECK(center.members[2].size() == 4);
  CHECK(check_normal(hei, center).ok);
  QuotientTower q = quotient_tower(hei, center);
  CHECK(validate_tower(q.tower).ok);
  GroupTower ab = make_abelian_tower(2, 2, 2);
  for (int r = 0; r <= 2; ++r) {
    CHECK(q.tower.order(r) == ab.order(r));
    CHECK(is_abelian(q.tower.levels[r]));
    CHECK(order_multiset(q.tower.levels[r]) == order_multiset(ab.levels[r]));
  }
  TowerElement zbar = element_in_quotient(q, heisenberg_element(hei, 0, 0, 1));
  CHECK(zbar == tower_identity(q.tower));
  TowerElement xbar = element_in_quotient(q, heisenberg_element(hei, 1, 0, 0));
  TowerElement ybar = element_in_quotient(q, heisenberg_element(hei, 0, 1, 0));
  TowerElement xy = element_in_quotient(q, tower_mul(hei, heisenberg_element(hei, 1, 0, 0),
                                                     heisenberg_element(hei, 0, 1, 0)));
  CHECK(tower_mul(q.tower, xbar, ybar) == xy);

  // Quotient by the trivial subtower is the same tower.
  SubTower triv;
  triv.members = {{0}, {0}, {0}};
  QuotientTower same = quotient_tower(hei, triv);
  for (int r = 0; r <= 2; ++r) {
    CHECK(same.tower.order(r) == hei.order(r));
    CHECK(same.tower.levels[r].mul == hei.levels[r].mul);
  }

  GroupTower ab2 = make_abelian_tower(2, 2, 2);
  QuotientTower line = quotient_tower(ab2, closure_of(ab2, {abelian_element(ab2, {1, 0})}));
  CHECK(line.tower.order(2) == 4);
  bool has_order4 = false;
  for (int x = 0; x < 4; ++x) has_order4 |= (element_order(line.tower.levels[2], x) == 4);
  CHECK(has_order4);
}

TEST_CASE("non-normal subgroups are rejected with a witness") {
  GroupTower hei = make_heisenberg_tower(2, 1);
  SubTower x_only = closure_of(hei, {heisenberg_element(hei, 1, 0, 0)});
  CHECK(x_only.members[1].size() == 2);
  Validation v = check_normal(hei, x_only);
  CHECK(!v.ok);
  CHECK(v.message.find("not normal at level 1") != std::string::npos);
  CHECK_THROWS_AS(quotient_tower(hei, x_only), std::invalid_argument);
}
