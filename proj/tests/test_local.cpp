#include <array>
#include <map>

#include "doctest.h"
#include "towercoh/builtin.hpp"
#include "towercoh/local_system.hpp"

using namespace towercoh;

namespace {

bool is_zero(const MatZ& m) {
  for (const auto& v : m.a)
    if (v != 0) return false;
  return true;
}

bool is_zero(const MatMod& m) {
  for (long long v : m.a)
    if (v != 0) return false;
  return true;
}

// d o d = 0 in every degree, both over the integers and mod p^s.
void check_complex(const CochainComplex& c) {
  for (size_t n = 0; n + 1 < c.d.size(); ++n) {
    CHECK(is_zero(mat_mul(c.d_int[n + 1], c.d_int[n])));
    CHECK(is_zero(mat_mul(c.d[n + 1], c.d[n], c.ring)));
  }
}

}  // namespace

TEST_CASE("descriptor validation") {
  CHECK(validate_descriptor(make_torus_descriptor(2, 3, {1, 0}, {0, 1})).ok);
  CHECK(validate_descriptor(make_torus_scalar_descriptor(2, 2, 1, 3)).ok);
  CHECK(validate_descriptor(make_cylinder_descriptor(2, 4)).ok);
  CHECK(validate_descriptor(make_circle_descriptor(3, 5, 1)).ok);

  FlatDescriptor bad = make_torus_descriptor(2, 2, {1, 0}, {0, 1});
  bad.labels[2] = abelian_element(bad.tower, {1, 0});  // diagonal no longer a+b
  Validation v = validate_descriptor(bad);
  CHECK(!v.ok);
  CHECK(v.message.find("flatness fails at 2-cell T1") != std::string::npos);
  CHECK(v.message.find("level 1") != std::string::npos);
  CHECK_THROWS_AS(twisted_complex(bad, 1, Zps(2, 1)), std::invalid_argument);

  FlatDescriptor short_labels = make_torus_descriptor(2, 2, {1, 0}, {0, 1});
  short_labels.labels.pop_back();
  CHECK(!validate_descriptor(short_labels).ok);
}

TEST_CASE("heisenberg descriptor is flat and dense") {
  FlatDescriptor h2 = make_heisenberg_descriptor(2, 2);
  CHECK(validate_descriptor(h2).ok);
  CHECK(descriptor_is_dense(h2));
  FlatDescriptor h3 = make_heisenberg_descriptor(3, 1);
  CHECK(validate_descriptor(h3).ok);
  CHECK(descriptor_is_dense(h3));

  // The quotient has exactly seven edge classes, one per coordinate
  // difference arising on the cube.
  CHECK(h2.labels.size() == 7);
  std::map<int, int> mult;
  GroupTower big = make_heisenberg_tower(2, 2);
  for (const auto& e : h2.labels) mult[e.level_index[2]] += 1;
  auto idx = [&](long long a, long long b, long long c) {
    return heisenberg_element(big, a, b, c).level_index[2];
  };
  for (auto [a, b, c] : std::vector<std::array<long long, 3>>{{0, 0, 1},
                                                              {0, 1, 0},
                                                              {0, 1, -1},
                                                              {1, 0, 0},
                                                              {1, 0, 1},
                                                              {1, 1, 0},
                                                              {1, 1, 1}})
    CHECK(mult[idx(a, b, c)] == 1);
}

TEST_CASE("label closure") {
  CHECK(descriptor_is_dense(make_circle_descriptor(2, 3, 1)));
  CHECK(descriptor_is_dense(make_torus_descriptor(2, 2, {1, 0}, {0, 1})));
  FlatDescriptor half = make_torus_descriptor(2, 3, {1, 0}, {0, 0});
  CHECK(!descriptor_is_dense(half));
  SubTower h = label_closure(half);
  for (int r = 0; r <= 3; ++r) CHECK(subtower_index(half.tower, h, r) == (1 << r));
}

TEST_CASE("circle differential, pinned") {
  FlatDescriptor fd = make_circle_descriptor(2, 1, 1);
  CochainComplex c = twisted_complex(fd, 1, Zps(2, 1));
  CHECK(c.block == 2);
  REQUIRE(c.d.size() == 1);
  MatMod expect(2, 2);
  expect.at(0, 0) = 1;
  expect.at(0, 1) = 1;
  expect.at(1, 0) = 1;
  expect.at(1, 1) = 1;
  CHECK(c.d[0] == expect);
  MatZ lift(2, 2);
  lift.at(0, 0) = -1;
  lift.at(0, 1) = 1;
  lift.at(1, 0) = 1;
  lift.at(1, 1) = -1;
  CHECK(c.d_int[0] == lift);
}

TEST_CASE("twisted complexes square to zero") {
  check_complex(twisted_complex(make_torus_descriptor(2, 2, {1, 0}, {0, 1}), 2, Zps(2, 2)));
  check_complex(twisted_complex(make_torus_scalar_descriptor(2, 2, 1, 3), 2, Zps(2, 3)));
  check_complex(twisted_complex(make_cylinder_descriptor(2, 2), 2, Zps(2, 2)));
  check_complex(twisted_complex(make_heisenberg_descriptor(2, 1), 1, Zps(2, 1)));
  check_complex(twisted_complex(make_heisenberg_descriptor(3, 1), 1, Zps(3, 1)));

  // Row sums of the integer lift alternate with degree: the leading face
  // cancels the sign pattern in even-length rows.
  CochainComplex h = twisted_complex(make_heisenberg_descriptor(2, 1), 1, Zps(2, 1));
  for (size_t n = 0; n < h.d_int.size(); ++n) {
    bigint want = (n % 2 == 1) ? 1 : 0;
    for (int r = 0; r < h.d_int[n].rows; ++r) {
      bigint sum = 0;
      for (int c = 0; c < h.d_int[n].cols; ++c) sum += h.d_int[n].at(r, c);
      CHECK(sum == want);
    }
  }
}

TEST_CASE("level zero equals constant coefficients") {
  FlatDescriptor fd = make_torus_descriptor(2, 2, {1, 0}, {0, 1});
  CochainComplex tw = twisted_complex(fd, 0, Zps(2, 2));
  CochainComplex cc = constant_complex(fd.complex, Zps(2, 2));
  CHECK(tw.block == 1);
  REQUIRE(tw.d.size() == cc.d.size());
  for (size_t n = 0; n < tw.d.size(); ++n) {
    CHECK(tw.d[n] == cc.d[n]);
    CHECK(tw.d_int[n] == cc.d_int[n]);
  }

  FlatDescriptor hei = make_heisenberg_descriptor(2, 1);
  CochainComplex tw3 = twisted_complex(hei, 0, Zps(2, 1));
  CochainComplex cc3 = constant_complex(hei.complex, Zps(2, 1));
  for (size_t n = 0; n < tw3.d.size(); ++n) CHECK(tw3.d[n] == cc3.d[n]);
}

TEST_CASE("constant torus differentials") {
  DeltaComplex torus = make_torus_complex();
  CochainComplex c = constant_complex(torus, Zps(2, 2));
  CHECK(c.cochain_rank(0) == 1);
  CHECK(c.cochain_rank(1) == 3);
  CHECK(c.cochain_rank(2) == 2);
  CHECK(is_zero(c.d_int[0]));
  // Both triangles read boundary a + b - d.
  for (int t = 0; t < 2; ++t) {
    CHECK(c.d_int[1].at(t, 0) == 1);
    CHECK(c.d_int[1].at(t, 1) == 1);
    CHECK(c.d_int[1].at(t, 2) == -1);
  }
  check_complex(c);
}

TEST_CASE("relative complex drops the subcomplex") {
  FlatDescriptor fd = make_cylinder_descriptor(2, 2);
  Subcomplex bdry = cylinder_boundary(fd.complex);
  CochainComplex rel = twisted_complex(fd, 0, Zps(2, 2), &bdry);
  CHECK(rel.cochain_rank(0) == 0);
  CHECK(rel.cochain_rank(1) == 2);  // m and d survive
  CHECK(rel.cochain_rank(2) == 2);
  CHECK(rel.active[1] == std::vector<int>{2, 3});
  // Both triangles keep only the +m and -d terms.
  for (int t = 0; t < 2; ++t) {
    CHECK(rel.d_int[1].at(t, 0) == 1);
    CHECK(rel.d_int[1].at(t, 1) == -1);
  }
  check_complex(rel);

  // Twisted relative complex at r = 2 also squares to zero.
  check_complex(twisted_complex(fd, 2, Zps(2, 2), &bdry));

  Subcomplex open_sub = make_empty_subcomplex(fd.complex);
  open_sub.selected[1][2] = true;  // edge m without its endpoints
  CHECK_THROWS_AS(twisted_complex(fd, 1, Zps(2, 2), &open_sub), std::invalid_argument);
}

TEST_CASE("transition maps are chain maps") {
  Zps ring(2, 2);
  FlatDescriptor circle = make_circle_descriptor(2, 3, 1);
  MatMod blk = transition_block(circle.tower, 1, ring);
  CHECK(blk.rows == 4);
  CHECK(blk.cols == 2);
  for (int y = 0; y < 4; ++y)
    for (int a = 0; a < 2; ++a) CHECK(blk.at(y, a) == (y % 2 == a ? 1 : 0));

  auto check_chain_map = [&](const FlatDescriptor& fd, int r, const Subcomplex* sub) {
    CochainComplex lo = twisted_complex(fd, r, ring, sub);
    CochainComplex hi = twisted_complex(fd, r + 1, ring, sub);
    for (int n = 0; n < fd.complex.dim(); ++n) {
      MatMod tn = transition_matrix(fd, r, ring, n, sub);
      MatMod tn1 = transition_matrix(fd, r, ring, n + 1, sub);
      CHECK(mat_mul(hi.d[n], tn, ring) == mat_mul(tn1, lo.d[n], ring));
    }
  };
  check_chain_map(circle, 1, nullptr);
  check_chain_map(circle, 2, nullptr);
  FlatDescriptor torus = make_torus_descriptor(2, 2, {1, 0}, {0, 1});
  check_chain_map(torus, 1, nullptr);
  FlatDescriptor cyl = make_cylinder_descriptor(2, 3);
  Subcomplex bdry = cylinder_boundary(cyl.complex);
  check_chain_map(cyl, 1, &bdry);
  check_chain_map(make_heisenberg_descriptor(2, 2), 1, nullptr);

  CHECK_THROWS_AS(transition_block(circle.tower, 3, ring), std::invalid_argument);
}
