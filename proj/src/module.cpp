#include "towercoh/module.hpp"

#include <climits>
#include <sstream>
#include <stdexcept>

namespace towercoh {

int bigint_valuation(const bigint& x, long long p) {
  if (x == 0) return INT_MAX;
  bigint y = x < 0 ? bigint(-x) : x;
  int v = 0;
  while (y % p == 0) { y /= p; ++v; }
  return v;
}

long long ModuleShape::order_val() const {
  long long t = 0;
  for (int e : exps) t += e;
  return t;
}

std::string ModuleShape::to_string() const {
  if (exps.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < exps.size(); ++i) {
    if (i) os << " + ";
    long long q = 1;
    for (int k = 0; k < exps[i]; ++k) q *= p;
    os << "Z/" << q;
  }
  return os.str();
}

namespace {

void check_shapes(const ModuleMap& m) {
  if (m.f.rows != m.tgt.rank() || m.f.cols != m.src.rank())
    throw std::invalid_argument("module map: matrix shape does not match src/tgt ranks");
  if (m.src.p != m.tgt.p)
    throw std::invalid_argument("module map: src and tgt have different primes");
}

bigint pow_p(long long p, int e) {
  bigint q = 1;
  for (int k = 0; k < e; ++k) q *= p;
  return q;
}

}  // namespace

bool map_well_defined(const ModuleMap& m) {
  check_shapes(m);
  for (int i = 0; i < m.f.rows; ++i)
    for (int j = 0; j < m.f.cols; ++j) {
      int v = bigint_valuation(m.f.at(i, j), m.tgt.p);
      if (v == INT_MAX) continue;
      // p^src.exps[j] kills the generator, so it must kill the image entry.
      if (v + m.src.exps[j] < m.tgt.exps[i]) return false;
    }
  return true;
}

bool map_is_zero(const ModuleMap& m) {
  check_shapes(m);
  for (int i = 0; i < m.f.rows; ++i) {
    bigint q = pow_p(m.tgt.p, m.tgt.exps[i]);
    for (int j = 0; j < m.f.cols; ++j)
      if (m.f.at(i, j) % q != 0) return false;
  }
  return true;
}

ModuleMap map_compose(const ModuleMap& g, const ModuleMap& f) {
  if (!(f.tgt == g.src))
    throw std::invalid_argument("map_compose: middle modules disagree");
  ModuleMap out;
  out.src = f.src;
  out.tgt = g.tgt;
  out.f = mat_mul(g.f, f.f);
  for (int i = 0; i < out.f.rows; ++i) {
    bigint q = pow_p(out.tgt.p, out.tgt.exps[i]);
    for (int j = 0; j < out.f.cols; ++j) {
      bigint r = out.f.at(i, j) % q;
      if (r < 0) r += q;
      out.f.at(i, j) = r;
    }
  }
  return out;
}

long long coker_order_val(const ModuleMap& m) {
  check_shapes(m);
  MatZ pres = submodule_lattice(m.tgt, m.f);
  SmithZ s = smith_z(pres);
  long long val = 0;
  for (const bigint& d : s.divisors) {
    if (d == 0)
      throw std::logic_error("coker_order_val: presentation lost full rank");
    val += bigint_valuation(d, m.tgt.p);
  }
  if (s.rank < m.tgt.rank())
    throw std::logic_error("coker_order_val: presentation lost full rank");
  return val;
}

long long image_order_val(const ModuleMap& m) {
  return m.tgt.order_val() - coker_order_val(m);
}

bool map_is_iso(const ModuleMap& m) {
  check_shapes(m);
  if (!(m.src.exps == m.tgt.exps)) return false;
  // Equal finite orders, so surjective is enough.
  return coker_order_val(m) == 0;
}

ModuleShape image_decomposition(const ModuleMap& m) {
  check_shapes(m);
  return submodule_decomposition(m.tgt, m.f);
}

MatZ kernel_generators(const ModuleMap& m) {
  check_shapes(m);
  int n = m.src.rank();
  if (n == 0) return MatZ(0, 0);
  if (m.tgt.rank() == 0) return MatZ::identity(n);
  // x lies in the kernel iff f*x is a relation of tgt, i.e. (x, y) solves
  // [f | diag(p^tgt.exps)] * (x, y) = 0 over Z for some y.
  MatZ full = integer_kernel(submodule_lattice(m.tgt, m.f));
  MatZ out(n, full.cols);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < full.cols; ++c) out.at(r, c) = full.at(r, c);
  return out;
}

MatZ submodule_lattice(const ModuleShape& ambient, const MatZ& gens) {
  if (gens.rows != ambient.rank())
    throw std::invalid_argument("submodule_lattice: generator rows do not match ambient rank");
  int n = ambient.rank();
  MatZ l(n, gens.cols + n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < gens.cols; ++c) l.at(r, c) = gens.at(r, c);
  for (int r = 0; r < n; ++r) l.at(r, gens.cols + r) = pow_p(ambient.p, ambient.exps[r]);
  return l;
}

LatticeTester::LatticeTester(const MatZ& lattice) : s_(smith_z(lattice)), rows_(lattice.rows) {}

bool LatticeTester::contains(const std::vector<bigint>& v) const {
  if (static_cast<int>(v.size()) != rows_)
    throw std::invalid_argument("LatticeTester: vector length mismatch");
  std::vector<bigint> w = mat_apply(s_.U, v);
  for (int i = 0; i < rows_; ++i) {
    if (i < static_cast<int>(s_.divisors.size()) && s_.divisors[i] != 0) {
      if (w[i] % s_.divisors[i] != 0) return false;
    } else if (w[i] != 0) {
      return false;
    }
  }
  return true;
}

bool submodule_contains(const ModuleShape& ambient, const MatZ& gens,
                        const std::vector<bigint>& v) {
  LatticeTester t(submodule_lattice(ambient, gens));
  return t.contains(v);
}

bool submodule_equal(const ModuleShape& ambient, const MatZ& a, const MatZ& b) {
  LatticeTester ta(submodule_lattice(ambient, a));
  LatticeTester tb(submodule_lattice(ambient, b));
  std::vector<bigint> col(ambient.rank());
  for (int j = 0; j < b.cols; ++j) {
    for (int r = 0; r < b.rows; ++r) col[r] = b.at(r, j);
    if (!ta.contains(col)) return false;
  }
  for (int j = 0; j < a.cols; ++j) {
    for (int r = 0; r < a.rows; ++r) col[r] = a.at(r, j);
    if (!tb.contains(col)) return false;
  }
  return true;
}

ModuleShape submodule_decomposition(const ModuleShape& ambient, const MatZ& gens) {
  if (gens.rows != ambient.rank())
    throw std::invalid_argument("submodule_decomposition: generator rows do not match ambient rank");
  ModuleShape out;
  out.p = ambient.p;
  int m = gens.cols;
  if (m == 0) return out;
  // The submodule is Z^m modulo the relation lattice of the generating map.
  MatZ full = integer_kernel(submodule_lattice(ambient, gens));
  MatZ rel(m, full.cols);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < full.cols; ++c) rel.at(r, c) = full.at(r, c);
  SmithZ s = smith_z(rel);
  if (s.rank < m)
    throw std::logic_error("submodule_decomposition: relation lattice is not full rank");
  for (const bigint& d : s.divisors) {
    int v = bigint_valuation(d, ambient.p);
    if (v == INT_MAX) throw std::logic_error("submodule_decomposition: zero divisor");
    if (pow_p(ambient.p, v) != (d < 0 ? bigint(-d) : d))
      throw std::logic_error("submodule_decomposition: divisor is not a prime power");
    if (v > 0) out.exps.push_back(v);
  }
  return out;
}

}  // namespace towercoh
