#pragma once

#include <vector>

#include "towercoh/matrix.hpp"
#include "towercoh/ring.hpp"

namespace towercoh {

// Smith normal form over Z: U * M * V = D with U, V unimodular and
// D diagonal, d_i >= 0, d_i | d_{i+1}. Pivoting is deterministic
// (minimal absolute value, ties by lowest row then column), so repeated
// runs on equal input produce identical certificates.
struct SmithZ {
  std::vector<bigint> divisors;  // length min(rows, cols)
  MatZ U, Uinv, V, Vinv;
  bigint det_u = 1, det_v = 1;  // tracked; always +-1
  int rank = 0;                 // number of nonzero divisors
};

SmithZ smith_z(MatZ m);

// Diagonalization over Z/p^s: U * M * V = D with U, V invertible mod p^s and
// D diagonal with entries p^{a_i}, a_1 <= a_2 <= ... (a = s encodes a zero
// entry at this precision). Pivoting: minimal p-valuation, ties by lowest
// row then column.
struct SmithZps {
  Zps ring;
  std::vector<int> diag_val;  // length min(rows, cols), ascending, values in [0, s]
  MatMod V, Vinv;
  MatMod U, Uinv;  // tracked only when requested
  bool has_u = false;

  // Valuation of the diagonal entry owning column j (s for columns beyond the diagonal).
  int col_valuation(int j) const {
    return j < static_cast<int>(diag_val.size()) ? diag_val[j] : ring.s;
  }
};

SmithZps smith_zps(MatMod m, const Zps& ring, bool track_u = false);

// Basis of the integer kernel lattice of M (columns of the result).
MatZ integer_kernel(const MatZ& m);

// Membership of v in the lattice spanned by the columns of L.
bool lattice_contains(const MatZ& l, const std::vector<bigint>& v);

}  // namespace towercoh
