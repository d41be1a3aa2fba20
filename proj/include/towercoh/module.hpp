#pragma once

#include <string>
#include <vector>

#include "towercoh/matrix.hpp"
#include "towercoh/smith.hpp"

namespace towercoh {

// Finite abelian p-group in invariant form: ascending exponents, each >= 1,
// standing for the direct sum of Z/p^exps[i].
struct ModuleShape {
  long long p = 2;
  std::vector<int> exps;

  int rank() const { return static_cast<int>(exps.size()); }
  bool trivial() const { return exps.empty(); }
  long long order_val() const;  // p-adic valuation of the group order
  bool operator==(const ModuleShape&) const = default;
  std::string to_string() const;
};

// Homomorphism in decomposition coordinates: column j of f is the image of
// the j-th generator of src, with row i well defined mod p^tgt.exps[i].
struct ModuleMap {
  ModuleShape src, tgt;
  MatZ f;
};

bool map_well_defined(const ModuleMap& m);
bool map_is_zero(const ModuleMap& m);
ModuleMap map_compose(const ModuleMap& g, const ModuleMap& f);
long long coker_order_val(const ModuleMap& m);
long long image_order_val(const ModuleMap& m);
bool map_is_iso(const ModuleMap& m);
ModuleShape image_decomposition(const ModuleMap& m);
// Generators of ker(m) as a submodule of src (columns in src coordinates;
// the relation lattice of src is always contained in the span).
MatZ kernel_generators(const ModuleMap& m);

// Submodules of an ambient module, given by generator columns (integers in
// decomposition coordinates). The lattice form appends diag(p^exps) so that
// membership and equality reduce to integer lattice questions.
MatZ submodule_lattice(const ModuleShape& ambient, const MatZ& gens);
bool submodule_contains(const ModuleShape& ambient, const MatZ& gens,
                        const std::vector<bigint>& v);
bool submodule_equal(const ModuleShape& ambient, const MatZ& a, const MatZ& b);
ModuleShape submodule_decomposition(const ModuleShape& ambient, const MatZ& gens);

// Repeated membership tests against one lattice share a single normal form.
class LatticeTester {
 public:
  explicit LatticeTester(const MatZ& lattice);
  bool contains(const std::vector<bigint>& v) const;

 private:
  SmithZ s_;
  int rows_;
};

int bigint_valuation(const bigint& x, long long p);  // INT_MAX for x == 0

}  // namespace towercoh
