#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "towercoh/ring.hpp"

namespace towercoh {

using bigint = boost::multiprecision::cpp_int;

// Dense row-major matrix over Z/p^s (entries kept canonical by the owner).
struct MatMod {
  int rows = 0, cols = 0;
  std::vector<long long> a;

  MatMod() = default;
  MatMod(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  long long& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  long long at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  static MatMod identity(int n) {
    MatMod m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  bool operator==(const MatMod& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

inline MatMod mat_mul(const MatMod& x, const MatMod& y, const Zps& ring) {
  if (x.cols != y.rows) throw std::invalid_argument("mat_mul: shape mismatch");
  MatMod z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      long long v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) {
        long long w = y.at(k, j);
        if (w == 0) continue;
        z.at(i, j) = ring.norm(z.at(i, j) + ring.mul(v, w));
      }
    }
  return z;
}

inline std::vector<long long> mat_apply(const MatMod& m, const std::vector<long long>& v, const Zps& ring) {
  if (static_cast<int>(v.size()) != m.cols) throw std::invalid_argument("mat_apply: shape mismatch");
  std::vector<long long> out(m.rows, 0);
  for (int i = 0; i < m.rows; ++i) {
    long long acc = 0;
    for (int j = 0; j < m.cols; ++j) {
      long long w = m.at(i, j);
      if (w != 0 && v[j] != 0) acc = ring.norm(acc + ring.mul(w, v[j]));
    }
    out[i] = acc;
  }
  return out;
}

// Dense matrix over Z with exact big-integer entries.
struct MatZ {
  int rows = 0, cols = 0;
  std::vector<bigint> a;

  MatZ() = default;
  MatZ(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  bigint& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const bigint& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  static MatZ identity(int n) {
    MatZ m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  bool operator==(const MatZ& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

inline MatZ mat_mul(const MatZ& x, const MatZ& y) {
  if (x.cols != y.rows) throw std::invalid_argument("mat_mul: shape mismatch");
  MatZ z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const bigint& v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        if (y.at(k, j) != 0) z.at(i, j) += v * y.at(k, j);
    }
  return z;
}

inline std::vector<bigint> mat_apply(const MatZ& m, const std::vector<bigint>& v) {
  if (static_cast<int>(v.size()) != m.cols) throw std::invalid_argument("mat_apply: shape mismatch");
  std::vector<bigint> out(m.rows, 0);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0 && v[j] != 0) out[i] += m.at(i, j) * v[j];
  return out;
}

inline MatZ to_integer(const MatMod& m) {
  MatZ z(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) z.a[i] = m.a[i];
  return z;
}

inline MatMod reduce_mod(const MatZ& m, const Zps& ring) {
  MatMod out(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) {
    bigint r = m.a[i] % ring.q;
    if (r < 0) r += ring.q;
    out.a[i] = static_cast<long long>(r);
  }
  return out;
}

// Sparse triplet form, used for debug dumps and as the documented exchange format.
struct SparseTriplet {
  int row, col;
  long long value;
};

struct SparseMatrix {
  int rows = 0, cols = 0;
  std::vector<SparseTriplet> entries;  // sorted row-major, duplicates merged
};

inline SparseMatrix to_sparse(const MatMod& m) {
  SparseMatrix s;
  s.rows = m.rows;
  s.cols = m.cols;
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0) s.entries.push_back({i, j, m.at(i, j)});
  return s;
}

std::string sparse_to_text(const SparseMatrix& m);
SparseMatrix sparse_from_text(const std::string& text);

}  // namespace towercoh
