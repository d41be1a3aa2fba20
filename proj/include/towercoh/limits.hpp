#pragma once

#include <string>
#include <vector>

#include "towercoh/cohomology.hpp"
#include "towercoh/local_system.hpp"

namespace towercoh {

// Degree-n cohomology along tower levels 0..R at one coefficient precision,
// with a stabilization verdict. Certification vocabulary, strongest first:
//
//   certified-iso    two consecutive transitions starting at r0 are
//                    isomorphisms; every later computed transition must then
//                    be one too, and a violation aborts with a counterexample
//                    dump rather than returning a wrong certificate.
//   certified-image  the surviving image of level r0 inside the level-R
//                    module equals that of level r0+1; the estimate is that
//                    image. Catches chains whose maps shrink forever (the
//                    dense circle in degree 1) where the iso rule cannot.
//   certified-zero   every class from level 0 dies within the window, but
//                    the images near level R are still moving.
//   not-stabilized   none of the above with r0 <= R-2. No algorithm bounds
//                    r0, so this is a result, not an error; the value field
//                    is meaningless in this case.
//
// A chain of zero modules certifies at r0 = 0 regardless of R: there is
// nothing left to move.
struct ColimitResult {
  int degree = 0;
  Zps ring;
  int R = 0;
  std::vector<ModuleShape> shapes;  // index r = 0..R
  std::vector<ModuleMap> maps;      // maps[r]: shapes[r] -> shapes[r+1]
  std::string flag = "not-stabilized";
  int r0 = -1;
  ModuleShape value;  // colimit estimate; meaningful when certified()

  bool certified() const { return flag != "not-stabilized"; }
};

// Stabilization verdict for a finite chain of module maps.
ColimitResult stabilize_chain(int degree, const Zps& ring, std::vector<ModuleShape> shapes,
                              std::vector<ModuleMap> maps);

// Twisted cohomology along the tower with the pullback transitions. R must
// not exceed the tower depth; degrees above the complex dimension give
// trivial certified chains.
ColimitResult colimit_cohomology(const FlatDescriptor& fd, int n, const Zps& ring, int R,
                                 const Subcomplex* rel = nullptr);

// One degree assembled over s = 1..S, outer limit last. The reconstruction
// reads the s = S value: full-precision factors are conjecturally free, the
// rest is torsion. It must reduce correctly to every lower precision.
struct DegreeReport {
  int degree = 0;
  long long p = 2;
  std::vector<ColimitResult> per_s;  // index s-1
  std::string confidence = "not-stabilized";  // certified | inconsistent | not-stabilized
  int free_rank = 0;
  std::vector<int> torsion;  // exponents below S, ascending

  bool certified() const { return confidence != "not-stabilized"; }
  bool nonzero() const { return free_rank > 0 || !torsion.empty(); }
  std::string reconstruction() const;  // "Z_2 + Z/4" style, "0" when trivial
};

struct CompletedReport {
  long long p = 2;
  int S = 1;
  int R = 0;
  std::vector<DegreeReport> degrees;

  const DegreeReport* find(int degree) const;
};

CompletedReport completed_cohomology(const FlatDescriptor& fd, const std::vector<int>& degrees,
                                     int S, int R, const Subcomplex* rel = nullptr);

// Exactness of the pair sequence at one node: the named column's degree-n
// group at one tower level, image of the incoming map against kernel of the
// outgoing one.
struct LesNodeCheck {
  int level = 0;
  int degree = 0;
  std::string column;  // relative | absolute | boundary
  bool exact = true;
  std::string detail;  // set on failure
};

struct LesReport {
  Zps ring;
  int R = 0;
  std::vector<ColimitResult> relative, absolute, boundary;  // per degree 0..dim
  std::vector<std::vector<ModuleMap>> connecting;  // [level][n]: H^n(bnd) -> H^{n+1}(rel)
  std::vector<LesNodeCheck> checks;
  bool all_exact = true;
};

// Relative, absolute and boundary cohomology of the pair (complex, z) with
// the extension / restriction / connecting maps, exactness checked at every
// node of every level.
LesReport les_check(const FlatDescriptor& fd, const Subcomplex& z, const Zps& ring, int R);

// One certificate cell of the label-closure reduction: the full computation
// against [L_r : H_r] copies of the reduced one.
struct ExciseEntry {
  int degree = 0;
  int r = 0;
  int s = 1;
  long long index = 1;
  ModuleShape full, reduced;
  bool match = false;
};

struct ExciseResult {
  SubTower sub;            // closure of the edge labels
  GroupTower sub_tower;    // the closure as a standalone tower
  FlatDescriptor reduced;  // same complex, labels rewritten into sub_tower
  bool identity = false;   // dense labels, reduction changes nothing
  std::vector<ExciseEntry> certificate;  // grid s = 1..S, r = 0..R, all degrees
  bool certified = true;
};

ExciseResult excise_reduce(const FlatDescriptor& fd, int S, int R);

// Comparison of a tower descriptor against a user-supplied base of the
// fibration by a normal subtower: completed reports must agree degree by
// degree wherever both sides certified.
struct CollapseDegree {
  int degree = 0;
  std::vector<int> compared_s;  // precisions certified on both sides
  bool equal = true;
  std::string full_reconstruction, quotient_reconstruction;
};

struct CollapseVerdict {
  bool equal = true;     // every compared value agrees
  bool complete = true;  // every requested (degree, s) was comparable
  std::vector<CollapseDegree> degrees;
  CompletedReport full, quotient;
};

CollapseVerdict nilpotent_collapse_check(const FlatDescriptor& fd, const SubTower& normal,
                                         const FlatDescriptor& quotient_fd,
                                         const std::vector<int>& degrees, int S, int R);

// Defect of a declared product-of-circles descriptor: the largest degree
// carrying nonzero completed cohomology, cross-checked against the corank of
// the label matrix over Z/p^R. generator_edges lists the circle directions;
// tower_rank is the coordinate count of the abelian tower. When some degree
// fails to certify the cohomological side is only a floor and the corank is
// reported as the estimate.
struct DefectReport {
  int defect = 0;
  int algebraic = 0;        // corank of the label matrix
  int cohomological = -1;   // largest certified nonzero degree, -1 when none
  bool all_certified = false;
  bool lower_bound = false;
  bool agree = false;
  std::vector<int> label_valuations;  // Smith valuations over Z/p^R
  CompletedReport completed;
};

DefectReport defect_estimate(const FlatDescriptor& fd, const std::vector<int>& generator_edges,
                             int tower_rank, int S, int R);

// Transfer valuation in the top degree: on cyclic full-precision top
// cohomology the transition entry has valuation min(s, v_p([L_{r+1}:L_r])).
struct TransferCheck {
  int r = 0;
  long long index = 1;
  int entry_valuation = 0;
  int expected = 0;
  bool ok = false;
};

std::vector<TransferCheck> top_degree_transfer(const FlatDescriptor& fd, const Zps& ring, int R);

}  // namespace towercoh
