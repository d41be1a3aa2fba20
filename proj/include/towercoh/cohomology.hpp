#pragma once

#include <string>
#include <vector>

#include "towercoh/local_system.hpp"
#include "towercoh/module.hpp"
#include "towercoh/smith.hpp"

namespace towercoh {

// Cohomology of a cochain complex in one degree over Z/p^s.  The kernel of
// the outgoing differential is read off the Smith form of d^n; incoming
// boundaries are rewritten in kernel coordinates and the quotient is
// presented by an integer Smith form.  Generators are cocycles reduced to
// canonical representatives against the boundary lattice.
struct CohomologyResult {
  Zps ring;
  int degree = 0;
  int cochain_rank = 0;
  ModuleShape shape;
  std::vector<std::vector<long long>> generators;  // one cocycle per factor

  // Projection data.
  MatMod dn;                     // outgoing differential, for the cocycle test
  MatMod vinv;                   // kernel coordinates from the Smith form of dn
  std::vector<int> kernel_cols;  // columns of V spanning the kernel
  std::vector<int> kernel_val;   // diagonal valuation per kernel column
  MatZ u_coker;                  // row transform of the presentation Smith form
  std::vector<int> beta_all;     // factor valuation per presentation row
};

CohomologyResult cohomology(const CochainComplex& c, int n);

// Coordinates of a cocycle in the factors of h (entry t lives mod
// p^shape.exps[t]).  Throws when z is not a cocycle.
std::vector<long long> project_cocycle(const CohomologyResult& h, const std::vector<long long>& z);

// Chain-map identity d_tgt T = T d_src in every degree; the message names
// the first failing degree and entry.
Validation check_chain_map(const CochainComplex& src, const CochainComplex& tgt,
                           const std::vector<MatMod>& maps);

// Module map induced on degree-n cohomology by a chain map block.
ModuleMap induced_map(const CohomologyResult& hsrc, const CohomologyResult& htgt,
                      const MatMod& map_n);

// Lower-triangular column basis of the lattice spanned by the given columns;
// requires full row rank.
MatZ hnf_basis(const MatZ& cols);
// Replace v by its canonical representative modulo the basis columns.
void hnf_reduce(const MatZ& basis, std::vector<bigint>& v);

}  // namespace towercoh
