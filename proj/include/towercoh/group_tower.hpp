#pragma once

#include <string>
#include <vector>

#include "towercoh/delta_complex.hpp"  // Validation

namespace towercoh {

// Finite group on elements 0..order-1 with 0 the identity.
struct LevelGroup {
  int order = 1;
  std::vector<int> mul;  // row-major order x order
  std::vector<int> inv;

  int times(int a, int b) const { return mul[a * order + b]; }
  int inverse(int a) const { return inv[a]; }
};

Validation validate_group(const LevelGroup& g);

// Levels L_0 (trivial) .. L_depth with surjections proj[r]: L_r -> L_{r-1}.
struct GroupTower {
  long long p = 2;
  int depth = 0;
  std::vector<LevelGroup> levels;
  std::vector<std::vector<int>> proj;           // proj[r], defined for r >= 1
  std::vector<std::vector<std::string>> names;  // optional element names

  const LevelGroup& level(int r) const { return levels[r]; }
  int order(int r) const { return levels[r].order; }
  int project(int r, int x) const { return proj[r][x]; }
  int project_to(int r_from, int r_to, int x) const;
  std::string element_name(int r, int x) const;
};

Validation validate_tower(const GroupTower& t);

// Compatible sequence of images, one per level.
struct TowerElement {
  std::vector<int> level_index;  // size depth+1, [0] == 0
  bool operator==(const TowerElement&) const = default;
};

Validation validate_element(const GroupTower& t, const TowerElement& e);
TowerElement tower_identity(const GroupTower& t);
TowerElement tower_mul(const GroupTower& t, const TowerElement& a, const TowerElement& b);
TowerElement tower_inv(const GroupTower& t, const TowerElement& a);
// Builds the compatible sequence downward from an element of L_r; levels
// above r are not defined and r must equal the tower depth.
TowerElement element_from_level(const GroupTower& t, int x);

GroupTower make_abelian_tower(int rank, long long p, int depth);
GroupTower make_heisenberg_tower(long long p, int depth);
GroupTower make_custom_tower(long long p, std::vector<LevelGroup> levels,
                             std::vector<std::vector<int>> proj);

// Element constructors; values are reduced mod p^r per level.
TowerElement abelian_element(const GroupTower& t, const std::vector<long long>& coords);
TowerElement heisenberg_element(const GroupTower& t, long long a, long long b, long long c);

// Subgroups H_r <= L_r with proj(H_r) = H_{r-1}.
struct SubTower {
  std::vector<std::vector<int>> members;  // ascending element ids per level
};

SubTower closure_of(const GroupTower& t, const std::vector<TowerElement>& generators);
Validation validate_subtower(const GroupTower& t, const SubTower& h);
long long subtower_index(const GroupTower& t, const SubTower& h, int r);
bool subtower_is_full(const GroupTower& t, const SubTower& h);

// H reindexed as a standalone tower; element x of the result at level r is
// parent element h.members[r][x].
GroupTower subtower_as_tower(const GroupTower& t, const SubTower& h);
TowerElement element_in_subtower(const GroupTower& t, const SubTower& h, const TowerElement& e);

// Normality witness: empty message when normal, otherwise the level and the
// offending conjugation.
Validation check_normal(const GroupTower& t, const SubTower& h);

struct QuotientTower {
  GroupTower tower;
  std::vector<std::vector<int>> coset_of;  // per level: parent element -> quotient id
};
QuotientTower quotient_tower(const GroupTower& t, const SubTower& h);  // throws if not normal
TowerElement element_in_quotient(const QuotientTower& q, const TowerElement& e);

}  // namespace towercoh
