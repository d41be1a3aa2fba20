#include "towercoh/cohomology.hpp"

#include <stdexcept>

namespace towercoh {

namespace {

bigint floordiv(const bigint& a, const bigint& b) {
  bigint q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) q -= 1;
  return q;
}

long long pow_ll(long long p, int e) {
  long long v = 1;
  while (e-- > 0) v *= p;
  return v;
}

}  // namespace

MatZ hnf_basis(const MatZ& cols) {
  int n = cols.rows, k = cols.cols;
  MatZ w = cols;
  auto col_sub = [&](int j, int c, const bigint& t) {
    if (t == 0) return;
    for (int r = 0; r < n; ++r) w.at(r, j) -= t * w.at(r, c);
  };
  for (int r = 0; r < n; ++r) {
    int c = r;
    while (true) {
      int best = -1;
      bigint bv = 0;
      for (int j = c; j < k; ++j) {
        bigint a = abs(w.at(r, j));
        if (a != 0 && (best < 0 || a < bv)) {
          best = j;
          bv = a;
        }
      }
      if (best < 0) throw std::invalid_argument("hnf_basis: columns do not span full rank");
      if (best != c)
        for (int i = 0; i < n; ++i) std::swap(w.at(i, c), w.at(i, best));
      bool clean = true;
      for (int j = c + 1; j < k; ++j) {
        col_sub(j, c, w.at(r, j) / w.at(r, c));
        if (w.at(r, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (w.at(r, c) < 0)
      for (int i = 0; i < n; ++i) w.at(i, c) = -w.at(i, c);
    for (int j = 0; j < c; ++j) col_sub(j, c, floordiv(w.at(r, j), w.at(r, c)));
  }
  MatZ h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h.at(i, j) = w.at(i, j);
  return h;
}

void hnf_reduce(const MatZ& basis, std::vector<bigint>& v) {
  int n = basis.rows;
  for (int r = 0; r < n; ++r) {
    bigint t = floordiv(v[r], basis.at(r, r));
    if (t == 0) continue;
    for (int i = r; i < n; ++i) v[i] -= t * basis.at(i, r);
  }
}

CohomologyResult cohomology(const CochainComplex& cx, int n) {
  if (n < 0 || n > cx.dim()) throw std::invalid_argument("cohomology: degree out of range");
  const Zps& ring = cx.ring;
  int rank_n = cx.cochain_rank(n);

  CohomologyResult h;
  h.ring = ring;
  h.degree = n;
  h.cochain_rank = rank_n;
  h.dn = (n < cx.dim()) ? cx.d[n] : MatMod(0, rank_n);
  MatMod dprev = (n > 0) ? cx.d[n - 1] : MatMod(rank_n, 0);

  SmithZps sm = smith_zps(h.dn, ring, false);
  h.vinv = sm.Vinv;
  for (int i = 0; i < rank_n; ++i) {
    int a = sm.col_valuation(i);
    if (a >= 1) {
      h.kernel_cols.push_back(i);
      h.kernel_val.push_back(a);
    }
  }
  int m = static_cast<int>(h.kernel_cols.size());

  // Boundaries in kernel coordinates.  d o d = 0 forces row i of Vinv*dprev
  // to be divisible by p^(s - a_i); the quotient presentation divides it out
  // and adds the generator orders on the diagonal.
  MatMod bp = mat_mul(sm.Vinv, dprev, ring);
  int k = bp.cols;
  for (int i = 0; i < rank_n; ++i) {
    if (sm.col_valuation(i) >= 1) continue;
    for (int j = 0; j < k; ++j)
      if (bp.at(i, j) != 0)
        throw std::logic_error("cohomology: boundary escapes the kernel (d*d != 0?)");
  }
  MatZ pres(m, k + m);
  for (int t = 0; t < m; ++t) {
    long long div = ring.pow_p(ring.s - h.kernel_val[t]);
    for (int j = 0; j < k; ++j) {
      long long v = bp.at(h.kernel_cols[t], j);
      if (v % div != 0)
        throw std::logic_error("cohomology: boundary coordinate not divisible (d*d != 0?)");
      pres.at(t, j) = v / div;
    }
    pres.at(t, k + t) = ring.pow_p(h.kernel_val[t]);
  }

  SmithZ ps = smith_z(pres);
  if (ps.rank != m) throw std::logic_error("cohomology: presentation lost full rank");
  h.u_coker = ps.U;
  h.shape.p = ring.p;
  for (int t = 0; t < m; ++t) {
    bigint d = ps.divisors[t];
    int v = 0;
    while (d % ring.p == 0) {
      d /= ring.p;
      ++v;
    }
    if (d != 1) throw std::logic_error("cohomology: factor is not a prime power");
    h.beta_all.push_back(v);
    if (v > 0) h.shape.exps.push_back(v);
  }

  // Canonical generators: columns of Uinv in kernel coordinates, written out
  // as cochains and reduced against boundaries plus p^s relations.
  if (!h.shape.exps.empty()) {
    MatZ lattice(rank_n, dprev.cols + rank_n);
    MatZ dprev_int = to_integer(dprev);
    for (int i = 0; i < rank_n; ++i) {
      for (int j = 0; j < dprev.cols; ++j) lattice.at(i, j) = dprev_int.at(i, j);
      lattice.at(i, dprev.cols + i) = ring.q;
    }
    MatZ basis = hnf_basis(lattice);
    for (int t = 0; t < m; ++t) {
      if (h.beta_all[t] == 0) continue;
      std::vector<bigint> g(rank_n, 0);
      for (int i = 0; i < m; ++i) {
        bigint coeff = ps.Uinv.at(i, t) * ring.pow_p(ring.s - h.kernel_val[i]);
        if (coeff == 0) continue;
        for (int r = 0; r < rank_n; ++r) g[r] += coeff * sm.V.at(r, h.kernel_cols[i]);
      }
      hnf_reduce(basis, g);
      std::vector<long long> out(rank_n);
      for (int r = 0; r < rank_n; ++r) out[r] = static_cast<long long>(g[r]);
      h.generators.push_back(std::move(out));
    }
  }
  return h;
}

std::vector<long long> project_cocycle(const CohomologyResult& h, const std::vector<long long>& z) {
  if (static_cast<int>(z.size()) != h.cochain_rank)
    throw std::invalid_argument("project_cocycle: wrong length");
  for (long long v : mat_apply(h.dn, z, h.ring))
    if (v != 0) throw std::invalid_argument("project_cocycle: not a cocycle");
  std::vector<long long> w = mat_apply(h.vinv, z, h.ring);
  int m = static_cast<int>(h.kernel_cols.size());
  std::vector<bigint> t(m);
  for (int i = 0; i < m; ++i) {
    long long div = h.ring.pow_p(h.ring.s - h.kernel_val[i]);
    long long v = w[h.kernel_cols[i]];
    if (v % div != 0) throw std::logic_error("project_cocycle: kernel coordinate not divisible");
    t[i] = v / div;
  }
  std::vector<long long> out;
  for (int r = 0; r < m; ++r) {
    if (h.beta_all[r] == 0) continue;
    bigint acc = 0;
    for (int i = 0; i < m; ++i) acc += h.u_coker.at(r, i) * t[i];
    long long mod = pow_ll(h.ring.p, h.beta_all[r]);
    long long red = static_cast<long long>(acc % mod);
    if (red < 0) red += mod;
    out.push_back(red);
  }
  return out;
}

Validation check_chain_map(const CochainComplex& src, const CochainComplex& tgt,
                           const std::vector<MatMod>& maps) {
  if (src.dim() != tgt.dim()) return {false, "chain map: complexes have different dimensions"};
  if (static_cast<int>(maps.size()) != src.dim() + 1)
    return {false, "chain map: expected one block per degree"};
  for (int n = 0; n <= src.dim(); ++n)
    if (maps[n].rows != tgt.cochain_rank(n) || maps[n].cols != src.cochain_rank(n))
      return {false, "chain map: block " + std::to_string(n) + " has the wrong shape"};
  for (int n = 0; n < src.dim(); ++n) {
    MatMod lhs = mat_mul(tgt.d[n], maps[n], tgt.ring);
    MatMod rhs = mat_mul(maps[n + 1], src.d[n], tgt.ring);
    if (!(lhs == rhs))
      for (int i = 0; i < lhs.rows; ++i)
        for (int j = 0; j < lhs.cols; ++j)
          if (lhs.at(i, j) != rhs.at(i, j))
            return {false, "chain map fails at degree " + std::to_string(n) + ", entry (" +
                               std::to_string(i) + "," + std::to_string(j) + "): " +
                               std::to_string(lhs.at(i, j)) + " != " + std::to_string(rhs.at(i, j))};
  }
  return {true, ""};
}

ModuleMap induced_map(const CohomologyResult& hsrc, const CohomologyResult& htgt,
                      const MatMod& map_n) {
  if (map_n.rows != htgt.cochain_rank || map_n.cols != hsrc.cochain_rank)
    throw std::invalid_argument("induced_map: block shape mismatch");
  ModuleMap mm;
  mm.src = hsrc.shape;
  mm.tgt = htgt.shape;
  mm.f = MatZ(static_cast<int>(htgt.shape.exps.size()), static_cast<int>(hsrc.shape.exps.size()));
  for (size_t j = 0; j < hsrc.generators.size(); ++j) {
    std::vector<long long> img = mat_apply(map_n, hsrc.generators[j], htgt.ring);
    std::vector<long long> coords = project_cocycle(htgt, img);
    for (size_t i = 0; i < coords.size(); ++i) mm.f.at(static_cast<int>(i), static_cast<int>(j)) = coords[i];
  }
  if (!map_well_defined(mm)) throw std::logic_error("induced_map: map not well defined");
  return mm;
}

}  // namespace towercoh
