#pragma once

#include <optional>
#include <string>
#include <vector>

#include "towercoh/delta_complex.hpp"
#include "towercoh/group_tower.hpp"
#include "towercoh/matrix.hpp"
#include "towercoh/ring.hpp"
#include "towercoh/smith.hpp"

namespace towercoh {

// A local system on a delta complex, described by one tower element per edge.
// The label of an edge transports fiber data from its endpoint 0 to its
// endpoint 1; flatness is the per-triangle condition label(e02) =
// label(e01) * label(e12) at every tower level.
struct FlatDescriptor {
  DeltaComplex complex;
  GroupTower tower;
  std::vector<TowerElement> labels;  // indexed by 1-cell

  // Label image at one tower level.
  int label_at(int edge, int level) const { return labels[edge].level_index[level]; }
};

Validation validate_descriptor(const FlatDescriptor& fd);

// Subgroup of the tower generated by all edge labels.
SubTower label_closure(const FlatDescriptor& fd);

// True when the labels generate the whole group at every level.
bool descriptor_is_dense(const FlatDescriptor& fd);

// Cochain complex with one coefficient block per active cell.  Coefficients
// are functions on the level-r group with values in Z/p^s; the block size is
// the group order and entries are indexed cell-major (cell * block + element).
// A relative complex keeps only cells outside the marked subcomplex; the rest
// are forced to zero, which is consistent because the subcomplex is closed
// under faces.
struct CochainComplex {
  Zps ring;
  int level = 0;
  int block = 1;
  std::vector<std::vector<int>> active;  // active cell ids per dimension
  std::vector<MatZ> d_int;               // d_int[n]: C^n -> C^{n+1}, integer lift
  std::vector<MatMod> d;                 // the same reduced into [0, p^s)

  int dim() const { return static_cast<int>(active.size()) - 1; }
  int cochain_rank(int n) const {
    if (n < 0 || n > dim()) return 0;
    return static_cast<int>(active[n].size()) * block;
  }
  // Decode a coordinate index into (cell id, element index).
  std::pair<int, int> coordinate(int n, int idx) const {
    return {active[n][idx / block], idx % block};
  }
};

// Twisted cochain complex of the descriptor at tower level r.  Throws
// std::invalid_argument when the descriptor is not flat or r is out of range.
CochainComplex twisted_complex(const FlatDescriptor& fd, int r, const Zps& ring,
                               const Subcomplex* rel = nullptr);

// Untwisted complex with plain Z/p^s coefficients (block size 1).
CochainComplex constant_complex(const DeltaComplex& cx, const Zps& ring,
                                const Subcomplex* rel = nullptr);

// Degree-n cochain map from level r to level r+1 induced by pulling
// coefficient functions back along the group projection.  Block diagonal, one
// block per active cell; rows belong to the level r+1 complex, columns to the
// level r complex.
MatMod transition_matrix(const FlatDescriptor& fd, int r, const Zps& ring, int n,
                         const Subcomplex* rel = nullptr);

// Single coefficient block of the transition: entry (y, a) is 1 when the
// projection sends y to a.
MatMod transition_block(const GroupTower& tower, int r, const Zps& ring);

}  // namespace towercoh
