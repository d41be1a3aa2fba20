#include "towercoh/local_system.hpp"

#include <stdexcept>

namespace towercoh {

Validation validate_descriptor(const FlatDescriptor& fd) {
  const DeltaComplex& cx = fd.complex;
  if (static_cast<int>(fd.labels.size()) != cx.count(1))
    return {false, "descriptor has " + std::to_string(fd.labels.size()) + " labels for " +
                       std::to_string(cx.count(1)) + " edges"};
  for (const auto& e : fd.labels) {
    Validation v = validate_element(fd.tower, e);
    if (!v.ok) return v;
  }
  if (cx.dim() < 2) return {true, ""};
  for (int t = 0; t < cx.count(2); ++t) {
    int e01 = edge_between(cx, 2, t, 0, 1);
    int e12 = edge_between(cx, 2, t, 1, 2);
    int e02 = edge_between(cx, 2, t, 0, 2);
    for (int r = 1; r <= fd.tower.depth; ++r) {
      int lhs = fd.label_at(e02, r);
      int rhs = fd.tower.level(r).times(fd.label_at(e01, r), fd.label_at(e12, r));
      if (lhs != rhs)
        return {false, "flatness fails at 2-cell " + cx.cell_name(2, t) + " level " +
                           std::to_string(r) + ": labels " +
                           fd.tower.element_name(r, fd.label_at(e01, r)) + " * " +
                           fd.tower.element_name(r, fd.label_at(e12, r)) + " != " +
                           fd.tower.element_name(r, lhs)};
    }
  }
  return {true, ""};
}

SubTower label_closure(const FlatDescriptor& fd) {
  return closure_of(fd.tower, fd.labels);
}

bool descriptor_is_dense(const FlatDescriptor& fd) {
  return subtower_is_full(fd.tower, label_closure(fd));
}

namespace {

// Active cells per dimension and a cell -> position lookup (-1 = excluded).
struct ActiveIndex {
  std::vector<std::vector<int>> active;
  std::vector<std::vector<int>> pos;
};

ActiveIndex active_cells(const DeltaComplex& cx, const Subcomplex* rel) {
  ActiveIndex a;
  a.active.resize(cx.dim() + 1);
  a.pos.resize(cx.dim() + 1);
  for (int d = 0; d <= cx.dim(); ++d) {
    a.pos[d].assign(cx.count(d), -1);
    for (int c = 0; c < cx.count(d); ++c) {
      if (rel && rel->has(d, c)) continue;
      a.pos[d][c] = static_cast<int>(a.active[d].size());
      a.active[d].push_back(c);
    }
  }
  return a;
}

// Shared builder: `act(tau, x)` gives the permutation action of the leading
// face of tau on coefficient index x (identity when block == 1).
template <typename Act>
CochainComplex build_complex(const DeltaComplex& cx, int level, int block, const Zps& ring,
                             const Subcomplex* rel, Act act) {
  if (rel) {
    Validation v = validate_subcomplex(cx, *rel);
    if (!v.ok) throw std::invalid_argument("relative subcomplex: " + v.message);
  }
  ActiveIndex a = active_cells(cx, rel);
  CochainComplex out;
  out.ring = ring;
  out.level = level;
  out.block = block;
  out.active = a.active;
  for (int n = 0; n < cx.dim(); ++n) {
    int rows = static_cast<int>(a.active[n + 1].size()) * block;
    int cols = static_cast<int>(a.active[n].size()) * block;
    MatZ d(rows, cols);
    for (int ti = 0; ti < static_cast<int>(a.active[n + 1].size()); ++ti) {
      int tau = a.active[n + 1][ti];
      for (int i = 0; i <= n + 1; ++i) {
        int face = cx.face(n + 1, tau, i);
        int fp = a.pos[n][face];
        if (fp < 0) continue;  // face forced to zero in the relative complex
        if (i == 0) {
          for (int x = 0; x < block; ++x)
            d.at(ti * block + act(CellRef{n + 1, tau}, x), fp * block + x) += 1;
        } else {
          long long sign = (i % 2 == 0) ? 1 : -1;
          for (int x = 0; x < block; ++x) d.at(ti * block + x, fp * block + x) += sign;
        }
      }
    }
    out.d_int.push_back(std::move(d));
  }
  for (const MatZ& m : out.d_int) out.d.push_back(reduce_mod(m, ring));
  return out;
}

}  // namespace

CochainComplex twisted_complex(const FlatDescriptor& fd, int r, const Zps& ring,
                               const Subcomplex* rel) {
  Validation v = validate_descriptor(fd);
  if (!v.ok) throw std::invalid_argument("twisted_complex: " + v.message);
  if (r < 0 || r > fd.tower.depth)
    throw std::invalid_argument("twisted_complex: level " + std::to_string(r) +
                                " outside tower of depth " + std::to_string(fd.tower.depth));
  const LevelGroup& g = fd.tower.level(r);
  const DeltaComplex& cx = fd.complex;
  // The leading face carries the label of the edge from vertex 0 to vertex 1;
  // it permutes the function basis by left translation.
  auto leading = [&](CellRef tau, int x) {
    int e = edge_between(cx, tau.dim, tau.index, 0, 1);
    return g.times(fd.label_at(e, r), x);
  };
  return build_complex(cx, r, g.order, ring, rel, leading);
}

CochainComplex constant_complex(const DeltaComplex& cx, const Zps& ring, const Subcomplex* rel) {
  return build_complex(cx, 0, 1, ring, rel, [](CellRef, int x) { return x; });
}

MatMod transition_block(const GroupTower& tower, int r, const Zps& ring) {
  if (r < 0 || r + 1 > tower.depth)
    throw std::invalid_argument("transition_block: level out of range");
  int big = tower.order(r + 1), small = tower.order(r);
  MatMod m(big, small);
  for (int y = 0; y < big; ++y) m.at(y, tower.project(r + 1, y)) = 1 % ring.q;
  return m;
}

MatMod transition_matrix(const FlatDescriptor& fd, int r, const Zps& ring, int n,
                         const Subcomplex* rel) {
  MatMod blk = transition_block(fd.tower, r, ring);
  ActiveIndex a = active_cells(fd.complex, rel);
  if (n < 0 || n > fd.complex.dim())
    throw std::invalid_argument("transition_matrix: bad degree");
  int cells = static_cast<int>(a.active[n].size());
  MatMod m(cells * blk.rows, cells * blk.cols);
  for (int c = 0; c < cells; ++c)
    for (int y = 0; y < blk.rows; ++y)
      for (int x = 0; x < blk.cols; ++x)
        m.at(c * blk.rows + y, c * blk.cols + x) = blk.at(y, x);
  return m;
}

}  // namespace towercoh
