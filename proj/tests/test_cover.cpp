#include <random>

#include "doctest.h"
#include "random_descriptors.hpp"
#include "towercoh/builtin.hpp"
#include "towercoh/cover.hpp"

using namespace towercoh;

namespace {

void check_equal_complexes(const CochainComplex& a, const CochainComplex& b) {
  REQUIRE(a.d.size() == b.d.size());
  for (size_t n = 0; n < a.d.size(); ++n) {
    CHECK(a.d[n] == b.d[n]);
    CHECK(a.d_int[n] == b.d_int[n]);
  }
}

void check_shapiro(const FlatDescriptor& fd, int r, const Zps& ring) {
  CochainComplex tw = twisted_complex(fd, r, ring);
  CoverComplex cov = build_cover(fd, r);
  check_equal_complexes(tw, constant_complex(cov.complex, ring));
}

}  // namespace

TEST_CASE("circle covers") {
  FlatDescriptor fd = make_circle_descriptor(2, 3, 1);
  CoverComplex cov = build_cover(fd, 2);
  CHECK(cov.sheets == 4);
  CHECK(cov.complex.counts == std::vector<int>{4, 4});
  CHECK(component_count(cov.complex) == 1);
  for (int x = 0; x < 4; ++x) {
    CHECK(cov.complex.face(1, x, 0) == (x + 3) % 4);  // label 1 pulls the sheet back
    CHECK(cov.complex.face(1, x, 1) == x);
  }

  // Labels that only generate a subgroup leave the cover disconnected.
  CHECK(component_count(build_cover(make_circle_descriptor(2, 2, 2), 2).complex) == 2);
  FlatDescriptor half = make_torus_descriptor(2, 2, {1, 0}, {0, 0});
  CHECK(component_count(build_cover(half, 1).complex) == 2);
  CHECK(component_count(build_cover(half, 2).complex) == 4);
}

TEST_CASE("twisted differentials equal cover differentials") {
  check_shapiro(make_circle_descriptor(2, 1, 1), 1, Zps(2, 1));
  check_shapiro(make_circle_descriptor(2, 3, 1), 3, Zps(2, 2));
  check_shapiro(make_circle_descriptor(3, 2, 1), 2, Zps(3, 2));
  check_shapiro(make_torus_descriptor(2, 2, {1, 0}, {0, 1}), 2, Zps(2, 2));
  check_shapiro(make_torus_descriptor(2, 2, {1, 0}, {0, 0}), 1, Zps(2, 1));
  check_shapiro(make_torus_scalar_descriptor(2, 2, 1, 3), 2, Zps(2, 2));
  check_shapiro(make_cylinder_descriptor(2, 2), 2, Zps(2, 2));
  check_shapiro(make_heisenberg_descriptor(2, 1), 1, Zps(2, 1));
}

TEST_CASE("relative twisted differentials equal relative cover differentials") {
  FlatDescriptor fd = make_cylinder_descriptor(2, 2);
  Subcomplex bdry = cylinder_boundary(fd.complex);
  Zps ring(2, 2);
  CoverComplex cov = build_cover(fd, 2);
  Subcomplex lifted = lift_subcomplex(cov, bdry);
  CHECK(validate_subcomplex(cov.complex, lifted).ok);
  check_equal_complexes(twisted_complex(fd, 2, ring, &bdry),
                        constant_complex(cov.complex, ring, &lifted));
}

TEST_CASE("deck transformations act freely and commute with faces") {
  FlatDescriptor fd = make_heisenberg_descriptor(2, 1);
  CoverComplex cov = build_cover(fd, 1);
  const LevelGroup& g = fd.tower.level(1);
  CHECK(cov.sheets == 8);
  for (int h = 0; h < 8; ++h) {
    std::vector<std::vector<int>> maps;
    for (int d = 0; d <= cov.complex.dim(); ++d) maps.push_back(deck_cell_map(fd, cov, h, d));
    for (int d = 1; d <= cov.complex.dim(); ++d)
      for (int c = 0; c < cov.complex.count(d); ++c) {
        if (h != 0) CHECK(maps[d][c] != c);
        for (int i = 0; i <= d; ++i)
          CHECK(cov.complex.face(d, maps[d][c], i) == maps[d - 1][cov.complex.face(d, c, i)]);
      }
  }
  // Right translations compose contravariantly: h2 then h1 is h2 * h1.
  for (int h1 = 0; h1 < 8; ++h1)
    for (int h2 = 0; h2 < 8; ++h2) {
      std::vector<int> a = deck_cell_map(fd, cov, h1, 2);
      std::vector<int> b = deck_cell_map(fd, cov, h2, 2);
      std::vector<int> c = deck_cell_map(fd, cov, g.times(h2, h1), 2);
      for (int i = 0; i < cov.complex.count(2); ++i) CHECK(a[b[i]] == c[i]);
    }
}

TEST_CASE("cover projections are simplicial and match coefficient transitions") {
  FlatDescriptor fd = make_circle_descriptor(2, 3, 1);
  CoverComplex c1 = build_cover(fd, 1), c2 = build_cover(fd, 2), c3 = build_cover(fd, 3);
  auto p32 = cover_projection(fd, c3, c2);
  auto p21 = cover_projection(fd, c2, c1);
  for (int d = 1; d <= 1; ++d)
    for (int c = 0; c < c3.complex.count(d); ++c)
      for (int i = 0; i <= d; ++i)
        CHECK(c2.complex.face(d, p32[d][c], i) == p32[d - 1][c3.complex.face(d, c, i)]);
  // The composite projects two levels at once.
  for (int d = 0; d <= 1; ++d)
    for (int c = 0; c < c3.complex.count(d); ++c) {
      int s = c / c3.sheets, y = c % c3.sheets;
      CHECK(p21[d][p32[d][c]] == s * c1.sheets + fd.tower.project_to(3, 1, y));
    }

  auto check_pullback = [](const FlatDescriptor& f, int r, const Zps& ring) {
    CoverComplex lo = build_cover(f, r), hi = build_cover(f, r + 1);
    auto proj = cover_projection(f, hi, lo);
    for (int n = 0; n <= f.complex.dim(); ++n) {
      MatMod pb(hi.complex.count(n), lo.complex.count(n));
      for (int c = 0; c < hi.complex.count(n); ++c) pb.at(c, proj[n][c]) = 1;
      CHECK(pb == transition_matrix(f, r, ring, n));
    }
  };
  check_pullback(fd, 1, Zps(2, 2));
  check_pullback(fd, 2, Zps(2, 2));
  check_pullback(make_heisenberg_descriptor(2, 2), 1, Zps(2, 1));
}

TEST_CASE("random descriptors keep the two constructions in sync") {
  std::mt19937 rng(20260822u);
  for (int iter = 0; iter < 8; ++iter) {
    FlatDescriptor fd = towercoh_testing::random_descriptor(rng);
    REQUIRE(validate_descriptor(fd).ok);
    int r = 1 + (int)(rng() % 2);
    Zps ring(fd.tower.p, 1 + (int)(rng() % 2));
    check_shapiro(fd, r, ring);

    // Relative variant against the closure of one random cell.
    int d = (int)(rng() % (unsigned)(fd.complex.dim() + 1));
    if (fd.complex.count(d) == 0) continue;
    int cell = (int)(rng() % (unsigned)fd.complex.count(d));
    Subcomplex sub = close_under_faces(fd.complex, {{d, cell}});
    CoverComplex cov = build_cover(fd, r);
    Subcomplex lifted = lift_subcomplex(cov, sub);
    check_equal_complexes(twisted_complex(fd, r, ring, &sub),
                          constant_complex(cov.complex, ring, &lifted));
  }
}
