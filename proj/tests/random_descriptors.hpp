#pragma once

#include <random>
#include <set>
#include <vector>

#include "towercoh/local_system.hpp"

namespace towercoh_testing {

// Small random descriptor over an abelian tower of depth 2.  A graph gets
// fully random edge labels (no flatness constraint in dimension one); a
// 2-complex gets labels from random vertex potentials, which satisfy the
// triangle relation automatically.  At most ten cells.
inline towercoh::FlatDescriptor random_descriptor(std::mt19937& rng) {
  using namespace towercoh;
  auto ri = [&](int lo, int hi) { return (int)(lo + rng() % (unsigned)(hi - lo + 1)); };

  DeltaComplex cx;
  bool with_triangles = ri(0, 1) == 1;
  while (true) {
    int nv = ri(with_triangles ? 3 : 2, with_triangles ? 4 : 5);
    std::set<std::vector<int>> tuples;
    if (with_triangles) {
      int nt = ri(1, 2);
      for (int t = 0; t < nt; ++t) {
        int u = ri(0, nv - 3);
        int v = ri(u + 1, nv - 2);
        int w = ri(v + 1, nv - 1);
        tuples.insert({u, v, w});
      }
    } else {
      int ne = ri(1, 6);
      for (int e = 0; e < ne; ++e) {
        int u = ri(0, nv - 2);
        int v = ri(u + 1, nv - 1);
        tuples.insert({u, v});
      }
    }
    cx = simplicial_from_tuples(nv, {tuples.begin(), tuples.end()});
    if (cx.total_cells() <= 10 && cx.count(1) > 0) break;
  }

  FlatDescriptor fd;
  fd.complex = cx;
  int rank = ri(1, 2);
  long long p = (ri(0, 1) == 0) ? 2 : 3;
  fd.tower = make_abelian_tower(rank, p, 2);
  long long q = p * p;
  if (cx.dim() < 2) {
    for (int e = 0; e < cx.count(1); ++e) {
      std::vector<long long> coords;
      for (int k = 0; k < rank; ++k) coords.push_back(ri(0, (int)q - 1));
      fd.labels.push_back(abelian_element(fd.tower, coords));
    }
  } else {
    std::vector<std::vector<long long>> pot(cx.count(0));
    for (auto& v : pot)
      for (int k = 0; k < rank; ++k) v.push_back(ri(0, (int)q - 1));
    for (int e = 0; e < cx.count(1); ++e) {
      std::vector<int> vs = cell_vertices(cx, 1, e);
      std::vector<long long> coords;
      for (int k = 0; k < rank; ++k) coords.push_back(pot[vs[1]][k] - pot[vs[0]][k]);
      fd.labels.push_back(abelian_element(fd.tower, coords));
    }
  }
  return fd;
}

}  // namespace towercoh_testing
