#include "towercoh/group_tower.hpp"

#include <algorithm>
#include <sstream>

#include "towercoh/ring.hpp"

namespace towercoh {

namespace {

constexpr int kMaxGroupOrder = 4096;  // eager tables stay desk-scale

long long ipow(long long b, int e) {
  long long v = 1;
  for (int i = 0; i < e; ++i) v *= b;
  return v;
}

bool is_p_power(long long n, long long p) {
  if (n < 1) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

Validation validate_group(const LevelGroup& g) {
  int n = g.order;
  if (n < 1) return {false, "group order must be positive"};
  if (static_cast<int>(g.mul.size()) != n * n) return {false, "multiplication table size mismatch"};
  if (static_cast<int>(g.inv.size()) != n) return {false, "inverse table size mismatch"};
  for (int v : g.mul)
    if (v < 0 || v >= n) return {false, "multiplication table entry out of range"};
  for (int a = 0; a < n; ++a) {
    if (g.times(0, a) != a || g.times(a, 0) != a)
      return {false, "element 0 is not an identity at element " + std::to_string(a)};
    int i = g.inv[a];
    if (i < 0 || i >= n || g.times(a, i) != 0 || g.times(i, a) != 0)
      return {false, "inverse table wrong at element " + std::to_string(a)};
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.times(g.times(a, b), c) != g.times(a, g.times(b, c)))
          return {false, "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) +
                             "," + std::to_string(c) + ")"};
  return {};
}

int GroupTower::project_to(int r_from, int r_to, int x) const {
  for (int r = r_from; r > r_to; --r) x = proj[r][x];
  return x;
}

std::string GroupTower::element_name(int r, int x) const {
  if (r < static_cast<int>(names.size()) && x < static_cast<int>(names[r].size()) &&
      !names[r][x].empty())
    return names[r][x];
  return "g" + std::to_string(x);
}

Validation validate_tower(const GroupTower& t) {
  if (t.depth < 0) return {false, "negative depth"};
  if (static_cast<int>(t.levels.size()) != t.depth + 1) return {false, "level list size mismatch"};
  if (static_cast<int>(t.proj.size()) != t.depth + 1) return {false, "projection list size mismatch"};
  if (t.levels[0].order != 1) return {false, "level 0 must be trivial"};
  if (!is_prime(t.p)) return {false, "tower prime is not prime"};
  for (int r = 0; r <= t.depth; ++r) {
    Validation g = validate_group(t.levels[r]);
    if (!g.ok) return {false, "level " + std::to_string(r) + ": " + g.message};
    if (!is_p_power(t.levels[r].order, t.p))
      return {false, "level " + std::to_string(r) + " order is not a power of p"};
    if (r == 0) continue;
    const auto& pr = t.proj[r];
    if (static_cast<int>(pr.size()) != t.levels[r].order)
      return {false, "projection " + std::to_string(r) + " size mismatch"};
    std::vector<char> hit(t.levels[r - 1].order, 0);
    for (int x = 0; x < t.levels[r].order; ++x) {
      if (pr[x] < 0 || pr[x] >= t.levels[r - 1].order)
        return {false, "projection " + std::to_string(r) + " out of range"};
      hit[pr[x]] = 1;
    }
    for (int y = 0; y < t.levels[r - 1].order; ++y)
      if (!hit[y]) return {false, "projection " + std::to_string(r) + " is not surjective"};
    for (int a = 0; a < t.levels[r].order; ++a)
      for (int b = 0; b < t.levels[r].order; ++b)
        if (pr[t.levels[r].times(a, b)] != t.levels[r - 1].times(pr[a], pr[b]))
          return {false, "projection " + std::to_string(r) + " is not a homomorphism at (" +
                             std::to_string(a) + "," + std::to_string(b) + ")"};
  }
  return {};
}

Validation validate_element(const GroupTower& t, const TowerElement& e) {
  if (static_cast<int>(e.level_index.size()) != t.depth + 1)
    return {false, "element has wrong number of levels"};
  if (e.level_index[0] != 0) return {false, "level 0 image must be the identity"};
  for (int r = 1; r <= t.depth; ++r) {
    int x = e.level_index[r];
    if (x < 0 || x >= t.order(r)) return {false, "level " + std::to_string(r) + " image out of range"};
    if (t.project(r, x) != e.level_index[r - 1])
      return {false, "images at levels " + std::to_string(r) + " and " + std::to_string(r - 1) +
                         " are incompatible"};
  }
  return {};
}

TowerElement tower_identity(const GroupTower& t) {
  TowerElement e;
  e.level_index.assign(t.depth + 1, 0);
  return e;
}

TowerElement tower_mul(const GroupTower& t, const TowerElement& a, const TowerElement& b) {
  TowerElement e = tower_identity(t);
  for (int r = 0; r <= t.depth; ++r)
    e.level_index[r] = t.levels[r].times(a.level_index[r], b.level_index[r]);
  return e;
}

TowerElement tower_inv(const GroupTower& t, const TowerElement& a) {
  TowerElement e = tower_identity(t);
  for (int r = 0; r <= t.depth; ++r) e.level_index[r] = t.levels[r].inverse(a.level_index[r]);
  return e;
}

TowerElement element_from_level(const GroupTower& t, int x) {
  if (x < 0 || x >= t.order(t.depth))
    throw std::invalid_argument("element_from_level: index out of range at depth");
  TowerElement e = tower_identity(t);
  e.level_index[t.depth] = x;
  for (int r = t.depth; r >= 1; --r) e.level_index[r - 1] = t.project(r, e.level_index[r]);
  return e;
}

namespace {

LevelGroup trivial_group() {
  LevelGroup g;
  g.order = 1;
  g.mul = {0};
  g.inv = {0};
  return g;
}

void check_order_cap(long long order) {
  if (order > kMaxGroupOrder)
    throw std::invalid_argument("level group order " + std::to_string(order) +
                                " exceeds the supported cap of " + std::to_string(kMaxGroupOrder));
}

}  // namespace

GroupTower make_abelian_tower(int rank, long long p, int depth) {
  if (rank < 0 || depth < 0 || !is_prime(p)) throw std::invalid_argument("make_abelian_tower: bad arguments");
  GroupTower t;
  t.p = p;
  t.depth = depth;
  t.levels.resize(depth + 1);
  t.proj.resize(depth + 1);
  t.names.resize(depth + 1);
  for (int r = 0; r <= depth; ++r) {
    long long q = ipow(p, r);        // coordinate modulus
    long long order = ipow(q, rank);  // lexicographic digit vectors
    check_order_cap(order);
    LevelGroup& g = t.levels[r];
    g.order = static_cast<int>(order);
    g.mul.resize(order * order);
    g.inv.resize(order);
    auto decode = [&](long long x) {
      std::vector<long long> v(rank);
      for (int i = rank - 1; i >= 0; --i) {
        v[i] = x % q;
        x /= q;
      }
      return v;
    };
    auto encode = [&](const std::vector<long long>& v) {
      long long x = 0;
      for (int i = 0; i < rank; ++i) x = x * q + v[i];
      return x;
    };
    t.names[r].resize(order);
    for (long long x = 0; x < order; ++x) {
      auto vx = decode(x);
      std::ostringstream name;
      name << "(";
      for (int i = 0; i < rank; ++i) name << (i ? "," : "") << vx[i];
      name << ")";
      t.names[r][x] = name.str();
      std::vector<long long> nx(rank);
      for (int i = 0; i < rank; ++i) nx[i] = (q - vx[i]) % q;
      g.inv[x] = static_cast<int>(encode(nx));
      for (long long y = 0; y < order; ++y) {
        auto vy = decode(y);
        std::vector<long long> vz(rank);
        for (int i = 0; i < rank; ++i) vz[i] = (vx[i] + vy[i]) % q;
        g.mul[x * order + y] = static_cast<int>(encode(vz));
      }
    }
    if (r >= 1) {
      long long qd = ipow(p, r - 1);
      t.proj[r].resize(order);
      for (long long x = 0; x < order; ++x) {
        auto vx = decode(x);
        long long y = 0;
        for (int i = 0; i < rank; ++i) y = y * qd + vx[i] % qd;
        t.proj[r][x] = static_cast<int>(y);
      }
    }
  }
  return t;
}

GroupTower make_heisenberg_tower(long long p, int depth) {
  if (depth < 0 || !is_prime(p)) throw std::invalid_argument("make_heisenberg_tower: bad arguments");
  GroupTower t;
  t.p = p;
  t.depth = depth;
  t.levels.resize(depth + 1);
  t.proj.resize(depth + 1);
  t.names.resize(depth + 1);
  for (int r = 0; r <= depth; ++r) {
    long long q = ipow(p, r);
    long long order = q * q * q;
    check_order_cap(order);
    LevelGroup& g = t.levels[r];
    g.order = static_cast<int>(order);
    g.mul.resize(order * order);
    g.inv.resize(order);
    auto encode = [&](long long a, long long b, long long c) { return (a * q + b) * q + c; };
    t.names[r].resize(order);
    for (long long a = 0; a < q; ++a)
      for (long long b = 0; b < q; ++b)
        for (long long c = 0; c < q; ++c) {
          long long x = encode(a, b, c);
          std::ostringstream name;
          name << "(" << a << "," << b << "," << c << ")";
          t.names[r][x] = name.str();
          // (a,b,c)^-1 = (-a,-b,ab-c)
          g.inv[x] = static_cast<int>(
              encode((q - a) % q, (q - b) % q, ((a * b - c) % q + q) % q));
          for (long long a2 = 0; a2 < q; ++a2)
            for (long long b2 = 0; b2 < q; ++b2)
              for (long long c2 = 0; c2 < q; ++c2)
                g.mul[x * order + encode(a2, b2, c2)] = static_cast<int>(
                    encode((a + a2) % q, (b + b2) % q, (c + c2 + a * b2) % q));
        }
    if (r >= 1) {
      long long qd = q / p;
      t.proj[r].resize(order);
      for (long long a = 0; a < q; ++a)
        for (long long b = 0; b < q; ++b)
          for (long long c = 0; c < q; ++c)
            t.proj[r][encode(a, b, c)] =
                static_cast<int>(((a % qd) * qd + b % qd) * qd + c % qd);
    }
  }
  return t;
}

GroupTower make_custom_tower(long long p, std::vector<LevelGroup> levels,
                             std::vector<std::vector<int>> proj) {
  GroupTower t;
  t.p = p;
  t.depth = static_cast<int>(levels.size()) - 1;
  t.levels = std::move(levels);
  for (const auto& g : t.levels) check_order_cap(g.order);
  if (static_cast<int>(proj.size()) == t.depth) proj.insert(proj.begin(), {});  // level 0 slot
  t.proj = std::move(proj);
  Validation v = validate_tower(t);
  if (!v.ok) throw std::invalid_argument("make_custom_tower: " + v.message);
  return t;
}

TowerElement abelian_element(const GroupTower& t, const std::vector<long long>& coords) {
  TowerElement e = tower_identity(t);
  for (int r = 1; r <= t.depth; ++r) {
    long long q = ipow(t.p, r);
    long long x = 0;
    for (long long c : coords) x = x * q + ((c % q) + q) % q;
    e.level_index[r] = static_cast<int>(x);
  }
  Validation v = validate_element(t, e);
  if (!v.ok) throw std::logic_error("abelian_element: " + v.message);
  return e;
}

TowerElement heisenberg_element(const GroupTower& t, long long a, long long b, long long c) {
  TowerElement e = tower_identity(t);
  for (int r = 1; r <= t.depth; ++r) {
    long long q = ipow(t.p, r);
    long long ar = ((a % q) + q) % q, br = ((b % q) + q) % q, cr = ((c % q) + q) % q;
    e.level_index[r] = static_cast<int>((ar * q + br) * q + cr);
  }
  Validation v = validate_element(t, e);
  if (!v.ok) throw std::logic_error("heisenberg_element: " + v.message);
  return e;
}

SubTower closure_of(const GroupTower& t, const std::vector<TowerElement>& generators) {
  for (const auto& g : generators) {
    Validation v = validate_element(t, g);
    if (!v.ok) throw std::invalid_argument("closure_of: " + v.message);
  }
  SubTower h;
  h.members.resize(t.depth + 1);
  for (int r = 0; r <= t.depth; ++r) {
    const LevelGroup& g = t.levels[r];
    std::vector<char> in(g.order, 0);
    std::vector<int> queue = {0};
    in[0] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
      int x = queue[head];
      for (const auto& gen : generators) {
        int y = g.times(x, gen.level_index[r]);
        if (!in[y]) {
          in[y] = 1;
          queue.push_back(y);
        }
      }
    }
    for (int x = 0; x < g.order; ++x)
      if (in[x]) h.members[r].push_back(x);
  }
  return h;
}

Validation validate_subtower(const GroupTower& t, const SubTower& h) {
  if (static_cast<int>(h.members.size()) != t.depth + 1)
    return {false, "subtower has wrong number of levels"};
  for (int r = 0; r <= t.depth; ++r) {
    const auto& m = h.members[r];
    if (m.empty() || m[0] != 0) return {false, "level " + std::to_string(r) + " must contain the identity"};
    if (!std::is_sorted(m.begin(), m.end())) return {false, "member lists must ascend"};
    std::vector<char> in(t.order(r), 0);
    for (int x : m) {
      if (x < 0 || x >= t.order(r)) return {false, "member out of range at level " + std::to_string(r)};
      in[x] = 1;
    }
    for (int a : m)
      for (int b : m)
        if (!in[t.levels[r].times(a, b)])
          return {false, "level " + std::to_string(r) + " members not closed under multiplication"};
    for (int a : m)
      if (!in[t.levels[r].inverse(a)])
      return {false, "level " + std::to_string(r) + " members not closed under inverse"};
    if (r >= 1) {
      std::vector<char> down(t.order(r - 1), 0);
      for (int x : m) down[t.project(r, x)] = 1;
      for (int y = 0; y < t.order(r - 1); ++y) {
        bool member = std::binary_search(h.members[r - 1].begin(), h.members[r - 1].end(), y);
        if (down[y] && !member)
          return {false, "projection image leaves the subtower at level " + std::to_string(r)};
        if (!down[y] && member)
          return {false, "projection is not onto the lower level at level " + std::to_string(r)};
      }
    }
  }
  return {};
}

long long subtower_index(const GroupTower& t, const SubTower& h, int r) {
  return t.order(r) / static_cast<long long>(h.members[r].size());
}

bool subtower_is_full(const GroupTower& t, const SubTower& h) {
  for (int r = 0; r <= t.depth; ++r)
    if (static_cast<int>(h.members[r].size()) != t.order(r)) return false;
  return true;
}

GroupTower subtower_as_tower(const GroupTower& t, const SubTower& h) {
  Validation hv = validate_subtower(t, h);
  if (!hv.ok) throw std::invalid_argument("subtower_as_tower: " + hv.message);
  GroupTower out;
  out.p = t.p;
  out.depth = t.depth;
  out.levels.resize(t.depth + 1);
  out.proj.resize(t.depth + 1);
  out.names.resize(t.depth + 1);
  for (int r = 0; r <= t.depth; ++r) {
    const auto& m = h.members[r];
    std::vector<int> pos(t.order(r), -1);
    for (int i = 0; i < static_cast<int>(m.size()); ++i) pos[m[i]] = i;
    LevelGroup& g = out.levels[r];
    g.order = static_cast<int>(m.size());
    g.mul.resize(m.size() * m.size());
    g.inv.resize(m.size());
    out.names[r].resize(m.size());
    for (int i = 0; i < g.order; ++i) {
      g.inv[i] = pos[t.levels[r].inverse(m[i])];
      out.names[r][i] = t.element_name(r, m[i]);
      for (int j = 0; j < g.order; ++j) g.mul[i * g.order + j] = pos[t.levels[r].times(m[i], m[j])];
    }
    if (r >= 1) {
      std::vector<int> lower_pos(t.order(r - 1), -1);
      for (int i = 0; i < static_cast<int>(h.members[r - 1].size()); ++i)
        lower_pos[h.members[r - 1][i]] = i;
      out.proj[r].resize(m.size());
      for (int i = 0; i < g.order; ++i) out.proj[r][i] = lower_pos[t.project(r, m[i])];
    }
  }
  Validation v = validate_tower(out);
  if (!v.ok) throw std::logic_error("subtower_as_tower: result invalid: " + v.message);
  return out;
}

TowerElement element_in_subtower(const GroupTower& t, const SubTower& h, const TowerElement& e) {
  TowerElement out = e;
  for (int r = 0; r <= t.depth; ++r) {
    const auto& m = h.members[r];
    auto it = std::lower_bound(m.begin(), m.end(), e.level_index[r]);
    if (it == m.end() || *it != e.level_index[r])
      throw std::invalid_argument("element_in_subtower: element leaves the subtower at level " +
                                  std::to_string(r));
    out.level_index[r] = static_cast<int>(it - m.begin());
  }
  return out;
}

Validation check_normal(const GroupTower& t, const SubTower& h) {
  Validation hv = validate_subtower(t, h);
  if (!hv.ok) return hv;
  for (int r = 0; r <= t.depth; ++r) {
    const LevelGroup& g = t.levels[r];
    std::vector<char> in(g.order, 0);
    for (int x : h.members[r]) in[x] = 1;
    for (int x = 0; x < g.order; ++x)
      for (int m : h.members[r]) {
        int conj = g.times(g.times(x, m), g.inverse(x));
        if (!in[conj])
          return {false, "not normal at level " + std::to_string(r) + ": " + t.element_name(r, x) +
                             " * " + t.element_name(r, m) + " * " + t.element_name(r, x) +
                             "^-1 = " + t.element_name(r, conj) + " is outside the subgroup"};
      }
  }
  return {};
}

QuotientTower quotient_tower(const GroupTower& t, const SubTower& h) {
  Validation n = check_normal(t, h);
  if (!n.ok) throw std::invalid_argument("quotient_tower: " + n.message);
  QuotientTower out;
  out.tower.p = t.p;
  out.tower.depth = t.depth;
  out.tower.levels.resize(t.depth + 1);
  out.tower.proj.resize(t.depth + 1);
  out.tower.names.resize(t.depth + 1);
  out.coset_of.resize(t.depth + 1);
  for (int r = 0; r <= t.depth; ++r) {
    const LevelGroup& g = t.levels[r];
    // Coset of x = { x*m }; representative = minimal member; ids by rep order.
    std::vector<int> rep(g.order, -1);
    for (int x = 0; x < g.order; ++x) {
      int best = x;
      for (int m : h.members[r]) best = std::min(best, g.times(x, m));
      rep[x] = best;
    }
    std::vector<int> reps;
    for (int x = 0; x < g.order; ++x)
      if (rep[x] == x) reps.push_back(x);
    std::vector<int> id(g.order, -1);
    for (int i = 0; i < static_cast<int>(reps.size()); ++i) id[reps[i]] = i;
    auto& coset = out.coset_of[r];
    coset.resize(g.order);
    for (int x = 0; x < g.order; ++x) coset[x] = id[rep[x]];

    LevelGroup& q = out.tower.levels[r];
    q.order = static_cast<int>(reps.size());
    q.mul.resize(q.order * q.order);
    q.inv.resize(q.order);
    out.tower.names[r].resize(q.order);
    for (int i = 0; i < q.order; ++i) {
      q.inv[i] = coset[g.inverse(reps[i])];
      out.tower.names[r][i] = t.element_name(r, reps[i]) + "H";
      for (int j = 0; j < q.order; ++j) q.mul[i * q.order + j] = coset[g.times(reps[i], reps[j])];
    }
    if (r >= 1) {
      out.tower.proj[r].resize(q.order);
      for (int i = 0; i < q.order; ++i)
        out.tower.proj[r][i] = out.coset_of[r - 1][t.project(r, reps[i])];
    }
  }
  Validation v = validate_tower(out.tower);
  if (!v.ok) throw std::logic_error("quotient_tower: result invalid: " + v.message);
  return out;
}

TowerElement element_in_quotient(const QuotientTower& q, const TowerElement& e) {
  TowerElement out = e;
  for (size_t r = 0; r < out.level_index.size(); ++r)
    out.level_index[r] = q.coset_of[r][e.level_index[r]];
  return out;
}

}  // namespace towercoh
