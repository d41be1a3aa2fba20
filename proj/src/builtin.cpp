#include "towercoh/builtin.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace towercoh {

DeltaComplex make_circle_complex() {
  DeltaComplex c;
  c.counts = {1, 1};
  c.faces = {{}, {{0, 0}}};
  c.labels = {{"v"}, {"e"}};
  return c;
}

DeltaComplex make_torus_complex() {
  // Square with corners identified to one vertex; a = bottom/top, b =
  // left/right, d = diagonal. Lower triangle has vertices (bl, br, tr),
  // upper has (bl, tl, tr); edge_01/edge_12/edge_02 give the cocycle
  // relation g(d) = g(a)g(b) on both.
  DeltaComplex c;
  c.counts = {1, 3, 2};
  c.faces.resize(3);
  c.faces[1] = {{0, 0}, {0, 0}, {0, 0}};       // a, b, d
  c.faces[2] = {{1, 2, 0}, {0, 2, 1}};         // T1 = (b, d, a), T2 = (a, d, b)
  c.labels = {{"v"}, {"a", "b", "d"}, {"T1", "T2"}};
  return c;
}

DeltaComplex make_cylinder_complex() {
  // Vertices x (bottom circle) and y (top circle); a, b the boundary loops,
  // m the vertical seam, d the square's diagonal.
  DeltaComplex c;
  c.counts = {2, 4, 2};
  c.faces.resize(3);
  c.faces[1] = {{0, 0}, {1, 1}, {1, 0}, {1, 0}};  // a, b, m (x->y), d (x->y)
  c.faces[2] = {{2, 3, 0}, {1, 3, 2}};            // T1 = (m, d, a), T2 = (b, d, m)
  c.labels = {{"x", "y"}, {"a", "b", "m", "d"}, {"T1", "T2"}};
  return c;
}

Subcomplex cylinder_boundary(const DeltaComplex& cylinder) {
  return close_under_faces(cylinder, {{1, 0}, {1, 1}});
}

namespace {

struct HeisenbergBuild {
  DeltaComplex cube;
  QuotientResult quotient;
};

// Unit cube with vertex ids 4a+2b+c, glued into the nilmanifold. The first
// coordinate glues with a shear (the deck translation twists c by b), the
// other two glue straight; the induced boundary triangulations force an
// anti-diagonal on the a=0 face and diagonals through vertex 7 elsewhere.
// Six tetrahedra cone the three near faces to vertex 7.
HeisenbergBuild heisenberg_cube() {
  DeltaComplex cube = simplicial_from_tuples(8, {
      {0, 1, 2, 7}, {1, 2, 3, 7},   // over the a=0 face
      {0, 4, 5, 7}, {0, 1, 5, 7},   // over the b=0 face
      {0, 4, 6, 7}, {0, 2, 6, 7},   // over the c=0 face
  });

  // Triangle lookup by ascending vertex tuple.
  std::map<std::vector<int>, int> tri;
  for (int t = 0; t < cube.count(2); ++t) tri[cell_vertices(cube, 2, t)] = t;
  auto pair_tris = [&](std::vector<int> a, std::vector<int> b) {
    return std::pair<CellRef, CellRef>{{2, tri.at(a)}, {2, tri.at(b)}};
  };

  std::vector<std::pair<CellRef, CellRef>> glue = {
      pair_tris({0, 1, 2}, {4, 5, 7}),  // a-faces, sheared
      pair_tris({1, 2, 3}, {4, 6, 7}),
      pair_tris({0, 4, 5}, {2, 6, 7}),  // b-faces, straight
      pair_tris({0, 1, 5}, {2, 3, 7}),
      pair_tris({0, 4, 6}, {1, 5, 7}),  // c-faces, straight
      pair_tris({0, 2, 6}, {1, 3, 7}),
  };
  QuotientResult q = quotient_complex(cube, glue);
  return {std::move(cube), std::move(q)};
}

}  // namespace

DeltaComplex make_heisenberg_complex() { return heisenberg_cube().quotient.complex; }

DeltaComplex make_solid_triangle() { return simplicial_from_tuples(3, {{0, 1, 2}}); }

DeltaComplex make_hollow_triangle() {
  return simplicial_from_tuples(3, {{0, 1}, {0, 2}, {1, 2}});
}

FlatDescriptor make_circle_descriptor(long long p, int depth, long long label) {
  FlatDescriptor fd;
  fd.complex = make_circle_complex();
  fd.tower = make_abelian_tower(1, p, depth);
  fd.labels = {abelian_element(fd.tower, {label})};
  return fd;
}

FlatDescriptor make_torus_descriptor(long long p, int depth, std::pair<long long, long long> a,
                                     std::pair<long long, long long> b) {
  FlatDescriptor fd;
  fd.complex = make_torus_complex();
  fd.tower = make_abelian_tower(2, p, depth);
  fd.labels = {abelian_element(fd.tower, {a.first, a.second}),
               abelian_element(fd.tower, {b.first, b.second}),
               abelian_element(fd.tower, {a.first + b.first, a.second + b.second})};
  return fd;
}

FlatDescriptor make_torus_scalar_descriptor(long long p, int depth, long long a, long long b) {
  FlatDescriptor fd;
  fd.complex = make_torus_complex();
  fd.tower = make_abelian_tower(1, p, depth);
  fd.labels = {abelian_element(fd.tower, {a}), abelian_element(fd.tower, {b}),
               abelian_element(fd.tower, {a + b})};
  return fd;
}

FlatDescriptor make_cylinder_descriptor(long long p, int depth) {
  FlatDescriptor fd;
  fd.complex = make_cylinder_complex();
  fd.tower = make_abelian_tower(1, p, depth);
  // a = b = 1, m = 0, and the diagonal follows d = a * m = m * b.
  fd.labels = {abelian_element(fd.tower, {1}), abelian_element(fd.tower, {1}),
               abelian_element(fd.tower, {0}), abelian_element(fd.tower, {1})};
  return fd;
}

FlatDescriptor make_heisenberg_descriptor(long long p, int depth) {
  HeisenbergBuild hb = heisenberg_cube();
  FlatDescriptor fd;
  fd.complex = hb.quotient.complex;
  fd.tower = make_heisenberg_tower(p, depth);

  // Label of a cube edge u -> w: the group-law difference h(u)^{-1} h(w)
  // of the vertex coordinates h(4a+2b+c) = (a, b, c).  Every identified
  // pair of edges must agree, which pins the gluing down.
  auto coord = [](int v) { return std::array<long long, 3>{v / 4, (v / 2) % 2, v % 2}; };
  std::vector<bool> seen(fd.complex.count(1), false);
  fd.labels.assign(fd.complex.count(1), tower_identity(fd.tower));
  for (int e = 0; e < hb.cube.count(1); ++e) {
    std::vector<int> vs = cell_vertices(hb.cube, 1, e);
    auto u = coord(vs[0]), w = coord(vs[1]);
    TowerElement lab = heisenberg_element(fd.tower, w[0] - u[0], w[1] - u[1],
                                          u[0] * u[1] - u[0] * w[1] - u[2] + w[2]);
    int qe = hb.quotient.cell_map[1][e];
    if (seen[qe] && !(fd.labels[qe] == lab))
      throw std::logic_error("heisenberg gluing produced inconsistent edge labels");
    fd.labels[qe] = lab;
    seen[qe] = true;
  }
  return fd;
}

}  // namespace towercoh
