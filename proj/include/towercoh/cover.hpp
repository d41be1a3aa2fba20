#pragma once

#include <vector>

#include "towercoh/delta_complex.hpp"
#include "towercoh/local_system.hpp"

namespace towercoh {

// Covering complex of a descriptor at one tower level.  Cells are pairs
// (base cell, sheet); the cell id is base * sheets + sheet.  The leading
// face moves the sheet by the inverse edge label, all other faces keep it.
struct CoverComplex {
  DeltaComplex complex;
  int sheets = 1;
  int level = 0;
};

CoverComplex build_cover(const FlatDescriptor& fd, int r);

// Lift of a subcomplex of the base: every sheet over a selected cell.
Subcomplex lift_subcomplex(const CoverComplex& cov, const Subcomplex& base);

// Permutation of dimension-dim cover cells under right translation of the
// sheet by group element h.  Right translation commutes with all faces, so
// this is an automorphism of the cover.
std::vector<int> deck_cell_map(const FlatDescriptor& fd, const CoverComplex& cov, int h, int dim);

// Cell maps (one per dimension) of the projection from the level r+1 cover
// onto the level r cover, given by projecting the sheet.
std::vector<std::vector<int>> cover_projection(const FlatDescriptor& fd, const CoverComplex& hi,
                                               const CoverComplex& lo);

}  // namespace towercoh
