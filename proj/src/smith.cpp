#include "towercoh/smith.hpp"

#include <algorithm>
#include <sstream>

namespace towercoh {

std::string sparse_to_text(const SparseMatrix& m) {
  std::ostringstream os;
  os << m.rows << " " << m.cols << " " << m.entries.size() << "\n";
  for (const auto& t : m.entries) os << t.row << " " << t.col << " " << t.value << "\n";
  return os.str();
}

SparseMatrix sparse_from_text(const std::string& text) {
  std::istringstream is(text);
  SparseMatrix m;
  size_t n = 0;
  if (!(is >> m.rows >> m.cols >> n)) throw std::invalid_argument("sparse_from_text: bad header");
  m.entries.resize(n);
  for (size_t i = 0; i < n; ++i)
    if (!(is >> m.entries[i].row >> m.entries[i].col >> m.entries[i].value))
      throw std::invalid_argument("sparse_from_text: truncated entry list");
  return m;
}

namespace {

// Elementary operations that keep U*M = M0-row-side and M*V = M0-col-side in sync.
struct ZWork {
  MatZ m, u, uinv, v, vinv;
  bigint det_u = 1, det_v = 1;

  void row_swap(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
    for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
    for (int r = 0; r < uinv.rows; ++r) std::swap(uinv.at(r, i), uinv.at(r, j));
    det_u = -det_u;
  }
  void col_swap(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
    for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
    for (int c = 0; c < vinv.cols; ++c) std::swap(vinv.at(i, c), vinv.at(j, c));
    det_v = -det_v;
  }
  // row_i += c * row_j
  void row_add(int i, int j, const bigint& c) {
    if (c == 0) return;
    for (int k = 0; k < m.cols; ++k) m.at(i, k) += c * m.at(j, k);
    for (int k = 0; k < u.cols; ++k) u.at(i, k) += c * u.at(j, k);
    for (int r = 0; r < uinv.rows; ++r) uinv.at(r, j) -= c * uinv.at(r, i);
  }
  // col_j += c * col_i
  void col_add(int j, int i, const bigint& c) {
    if (c == 0) return;
    for (int r = 0; r < m.rows; ++r) m.at(r, j) += c * m.at(r, i);
    for (int r = 0; r < v.rows; ++r) v.at(r, j) += c * v.at(r, i);
    for (int k = 0; k < vinv.cols; ++k) vinv.at(i, k) -= c * vinv.at(j, k);
  }
  void row_negate(int i) {
    for (int k = 0; k < m.cols; ++k) m.at(i, k) = -m.at(i, k);
    for (int k = 0; k < u.cols; ++k) u.at(i, k) = -u.at(i, k);
    for (int r = 0; r < uinv.rows; ++r) uinv.at(r, i) = -uinv.at(r, i);
    det_u = -det_u;
  }
};

bigint babs(const bigint& x) { return x < 0 ? bigint(-x) : x; }

}  // namespace

SmithZ smith_z(MatZ m0) {
  ZWork w;
  w.m = std::move(m0);
  const int rows = w.m.rows, cols = w.m.cols;
  w.u = MatZ::identity(rows);
  w.uinv = MatZ::identity(rows);
  w.v = MatZ::identity(cols);
  w.vinv = MatZ::identity(cols);

  const int K = std::min(rows, cols);
  for (int k = 0; k < K; ++k) {
    // Locate the minimal nonzero entry in the trailing submatrix.
    int pi = -1, pj = -1;
    bigint best = 0;
    for (int i = k; i < rows; ++i)
      for (int j = k; j < cols; ++j) {
        const bigint& x = w.m.at(i, j);
        if (x == 0) continue;
        bigint ax = babs(x);
        if (pi < 0 || ax < best) { best = ax; pi = i; pj = j; }
      }
    if (pi < 0) break;  // submatrix is zero
    w.row_swap(k, pi);
    w.col_swap(k, pj);

    for (;;) {
      // Clear column k below the pivot via division with remainder.
      bool touched = false;
      for (int i = k + 1; i < rows; ++i) {
        if (w.m.at(i, k) == 0) continue;
        bigint q = w.m.at(i, k) / w.m.at(k, k);
        w.row_add(i, k, -q);
        if (w.m.at(i, k) != 0) {  // remainder strictly smaller: promote it
          w.row_swap(k, i);
          touched = true;
        }
      }
      if (touched) continue;
      for (int j = k + 1; j < cols; ++j) {
        if (w.m.at(k, j) == 0) continue;
        bigint q = w.m.at(k, j) / w.m.at(k, k);
        w.col_add(j, k, -q);
        if (w.m.at(k, j) != 0) {
          w.col_swap(k, j);
          touched = true;
        }
      }
      if (touched) continue;

      // Pivot must divide the rest of the submatrix.
      int bi = -1, bj = -1;
      for (int i = k + 1; i < rows && bi < 0; ++i)
        for (int j = k + 1; j < cols; ++j)
          if (w.m.at(i, j) % w.m.at(k, k) != 0) { bi = i; bj = j; break; }
      if (bi < 0) break;
      w.row_add(k, bi, 1);
    }
    if (w.m.at(k, k) < 0) w.row_negate(k);
  }

  SmithZ out;
  out.divisors.resize(K);
  for (int k = 0; k < K; ++k) {
    out.divisors[k] = w.m.at(k, k);
    if (out.divisors[k] != 0) ++out.rank;
  }
  out.U = std::move(w.u);
  out.Uinv = std::move(w.uinv);
  out.V = std::move(w.v);
  out.Vinv = std::move(w.vinv);
  out.det_u = w.det_u;
  out.det_v = w.det_v;
  return out;
}

namespace {

struct ModWork {
  Zps ring;
  MatMod m, u, uinv, v, vinv;
  bool track_u = false;

  void row_swap(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
    if (!track_u) return;
    for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
    for (int r = 0; r < uinv.rows; ++r) std::swap(uinv.at(r, i), uinv.at(r, j));
  }
  void col_swap(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
    for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
    for (int c = 0; c < vinv.cols; ++c) std::swap(vinv.at(i, c), vinv.at(j, c));
  }
  void row_add(int i, int j, long long c) {
    c = ring.norm(c);
    if (c == 0) return;
    for (int k = 0; k < m.cols; ++k) m.at(i, k) = ring.add(m.at(i, k), ring.mul(c, m.at(j, k)));
    if (!track_u) return;
    for (int k = 0; k < u.cols; ++k) u.at(i, k) = ring.add(u.at(i, k), ring.mul(c, u.at(j, k)));
    for (int r = 0; r < uinv.rows; ++r) uinv.at(r, j) = ring.sub(uinv.at(r, j), ring.mul(c, uinv.at(r, i)));
  }
  void col_add(int j, int i, long long c) {
    c = ring.norm(c);
    if (c == 0) return;
    for (int r = 0; r < m.rows; ++r) m.at(r, j) = ring.add(m.at(r, j), ring.mul(c, m.at(r, i)));
    for (int r = 0; r < v.rows; ++r) v.at(r, j) = ring.add(v.at(r, j), ring.mul(c, v.at(r, i)));
    for (int k = 0; k < vinv.cols; ++k) vinv.at(i, k) = ring.sub(vinv.at(i, k), ring.mul(c, vinv.at(j, k)));
  }
  // row_i *= unit
  void row_scale(int i, long long unit) {
    unit = ring.norm(unit);
    if (unit == 1) return;
    long long inv = ring.unit_inverse(unit);
    for (int k = 0; k < m.cols; ++k) m.at(i, k) = ring.mul(m.at(i, k), unit);
    if (!track_u) return;
    for (int k = 0; k < u.cols; ++k) u.at(i, k) = ring.mul(u.at(i, k), unit);
    for (int r = 0; r < uinv.rows; ++r) uinv.at(r, i) = ring.mul(uinv.at(r, i), inv);
  }
};

}  // namespace

SmithZps smith_zps(MatMod m0, const Zps& ring, bool track_u) {
  ModWork w;
  w.ring = ring;
  w.m = std::move(m0);
  for (auto& x : w.m.a) x = ring.norm(x);
  const int rows = w.m.rows, cols = w.m.cols;
  w.track_u = track_u;
  w.v = MatMod::identity(cols);
  w.vinv = MatMod::identity(cols);
  if (track_u) {
    w.u = MatMod::identity(rows);
    w.uinv = MatMod::identity(rows);
  }

  const int K = std::min(rows, cols);
  std::vector<int> diag;
  for (int k = 0; k < K; ++k) {
    int pi = -1, pj = -1, best = ring.s;
    for (int i = k; i < rows; ++i)
      for (int j = k; j < cols; ++j) {
        long long x = w.m.at(i, j);
        if (x == 0) continue;
        int val = ring.valuation(x);
        if (val < best) { best = val; pi = i; pj = j; }
      }
    if (pi < 0) { diag.push_back(ring.s); continue; }
    w.row_swap(k, pi);
    w.col_swap(k, pj);
    const int pv = best;
    const long long pk = ring.pow_p(pv);
    // Normalize the pivot to exactly p^pv.
    long long unit = w.m.at(k, k) / pk;
    if (track_u) {
      w.row_scale(k, ring.unit_inverse(unit));
    } else {
      // Row scaling without U tracking is still a legal row operation.
      long long inv = ring.unit_inverse(unit);
      for (int c = k; c < cols; ++c) w.m.at(k, c) = ring.mul(w.m.at(k, c), inv);
    }
    // Every remaining entry has valuation >= pv, so the quotients are exact.
    for (int i = k + 1; i < rows; ++i) {
      long long x = w.m.at(i, k);
      if (x == 0) continue;
      w.row_add(i, k, ring.neg(x / pk));
    }
    for (int j = k + 1; j < cols; ++j) {
      long long x = w.m.at(k, j);
      if (x == 0) continue;
      w.col_add(j, k, ring.neg(x / pk));
    }
    diag.push_back(pv);
  }
  // Pad to min(rows, cols) in case of early continue bookkeeping mismatch.
  while (static_cast<int>(diag.size()) < K) diag.push_back(ring.s);

  SmithZps out;
  out.ring = ring;
  out.diag_val = std::move(diag);
  out.V = std::move(w.v);
  out.Vinv = std::move(w.vinv);
  out.has_u = track_u;
  if (track_u) {
    out.U = std::move(w.u);
    out.Uinv = std::move(w.uinv);
  }
  return out;
}

MatZ integer_kernel(const MatZ& m) {
  SmithZ s = smith_z(m);
  const int cols = m.cols;
  std::vector<int> free_cols;
  for (int j = 0; j < cols; ++j) {
    bool zero = j >= static_cast<int>(s.divisors.size()) || s.divisors[j] == 0;
    if (zero) free_cols.push_back(j);
  }
  MatZ k(cols, static_cast<int>(free_cols.size()));
  for (int t = 0; t < static_cast<int>(free_cols.size()); ++t)
    for (int r = 0; r < cols; ++r) k.at(r, t) = s.V.at(r, free_cols[t]);
  return k;
}

bool lattice_contains(const MatZ& l, const std::vector<bigint>& v) {
  if (static_cast<int>(v.size()) != l.rows) throw std::invalid_argument("lattice_contains: shape mismatch");
  SmithZ s = smith_z(l);
  std::vector<bigint> w = mat_apply(s.U, v);
  for (int i = 0; i < l.rows; ++i) {
    if (i < static_cast<int>(s.divisors.size()) && s.divisors[i] != 0) {
      if (w[i] % s.divisors[i] != 0) return false;
    } else if (w[i] != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace towercoh
