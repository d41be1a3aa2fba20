#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace towercoh {

bool is_prime(long long n);

// Arithmetic context for Z/p^s with canonical representatives in [0, p^s).
// p^s must stay below 2^31 so that products fit in 64 bits.
struct Zps {
  long long p = 2;
  int s = 1;
  long long q = 2;  // p^s

  Zps() = default;
  Zps(long long prime, int exponent) : p(prime), s(exponent) {
    if (!is_prime(p)) throw std::invalid_argument("Zps: p must be prime, got " + std::to_string(p));
    if (s < 1) throw std::invalid_argument("Zps: precision s must be >= 1");
    q = 1;
    for (int i = 0; i < s; ++i) {
      if (q > (1LL << 31) / p) throw std::invalid_argument("Zps: p^s too large");
      q *= p;
    }
  }

  long long norm(long long v) const {
    long long r = v % q;
    return r < 0 ? r + q : r;
  }
  long long add(long long a, long long b) const { return norm(a + b); }
  long long sub(long long a, long long b) const { return norm(a - b); }
  long long mul(long long a, long long b) const { return norm(norm(a) * norm(b)); }
  long long neg(long long a) const { return norm(-a); }

  // p-adic valuation of the canonical representative, capped at s (v(0) = s).
  int valuation(long long v) const {
    v = norm(v);
    if (v == 0) return s;
    int k = 0;
    while (v % p == 0) { v /= p; ++k; }
    return k;
  }

  long long pow_p(int k) const {
    long long r = 1;
    for (int i = 0; i < k; ++i) r *= p;
    return r;
  }

  bool is_unit(long long v) const { return valuation(v) == 0; }

  // Inverse of a unit mod p^s (extended Euclid).
  long long unit_inverse(long long u) const {
    u = norm(u);
    if (!is_unit(u)) throw std::domain_error("Zps: inverse of a non-unit");
    long long a = u, b = q, x0 = 1, x1 = 0;
    while (b != 0) {
      long long t = a / b;
      long long r = a - t * b; a = b; b = r;
      long long x = x0 - t * x1; x0 = x1; x1 = x;
    }
    return norm(x0);
  }

  // Exact division by p^k: v must be divisible by p^k as a representative.
  long long divide_pk(long long v, int k) const {
    v = norm(v);
    long long d = pow_p(k);
    if (v % d != 0) throw std::domain_error("Zps: inexact division by p^k");
    return v / d;
  }

  bool operator==(const Zps& o) const { return p == o.p && s == o.s; }
};

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace towercoh
