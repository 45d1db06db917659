#pragma once

// Integer arithmetic mod 64-bit numbers: products via unsigned __int128,
// Miller-Rabin primality, and trial-division + Pollard-rho factorization.
// Internal support for group-order handling; not part of the public API.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace diffspec::modarith {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % mod);
}

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
  a %= mod;
  b %= mod;
  std::uint64_t s = a + b;
  if (s < a || s >= mod) s -= mod;
  return s;
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t mod) {
  std::uint64_t r = mod == 1 ? 0 : 1;
  a %= mod;
  while (e != 0) {
    if (e & 1) r = mulmod(r, a, mod);
    a = mulmod(a, a, mod);
    e >>= 1;
  }
  return r;
}

/// Inverse of a mod `mod` (gcd(a, mod) must be 1). For mod == 1 returns 0.
inline std::uint64_t modinv(std::uint64_t a, std::uint64_t mod) {
  if (mod == 1) return 0;
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(mod), new_r = static_cast<std::int64_t>(a % mod);
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(mod);
  return static_cast<std::uint64_t>(t);
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit integers.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

/// One nontrivial factor of composite odd n (Brent's cycle variant).
inline std::uint64_t pollard_rho(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t x = 2, y = 2, d = 1;
    while (d == 1) {
      x = addmod(mulmod(x, x, n), c, n);
      y = addmod(mulmod(y, y, n), c, n);
      y = addmod(mulmod(y, y, n), c, n);
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

/// Prime factorization as (prime, multiplicity), primes ascending.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p * p <= n && p < (1u << 20); p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  std::vector<std::uint64_t> stack;
  if (n > 1) stack.push_back(n);
  while (!stack.empty()) {
    std::uint64_t v = stack.back();
    stack.pop_back();
    if (is_prime(v)) {
      primes.push_back(v);
      continue;
    }
    std::uint64_t d = pollard_rho(v);
    stack.push_back(d);
    stack.push_back(v / d);
  }
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1u);
  }
  return out;
}

}  // namespace diffspec::modarith
