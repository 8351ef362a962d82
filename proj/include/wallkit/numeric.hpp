#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wallkit {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

enum class ErrorCode {
  NotSymmetric,
  Degenerate,
  BadParam,
  LatticeMismatch,
  ZeroVector,
  DependentInput,
  NotDefinite,
  NotPrimitive,
  NotIsometry,
  NotIntegral,
  IsotropicMirror,
  BadPair,
  DivisibilityNotOne,
  NoSplitDeclared,
  NotEquivalent,
  NotHyperbolic,
  UnboundedWindow,
  BadWitness,
  OnWall,
  FixtureInvalid,
  NoSuchF,
  ParseError,
  Internal,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) fail(code, what);
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// g = a*x + b*y with g >= 0.
inline Int extgcd(const Int& a, const Int& b, Int& x, Int& y) {
  Int g;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int mod_floor(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Quotient minimizing |a - q*b|; ties toward the smaller quotient. The
// floor remainder has the divisor's sign, so the competing quotient is
// always floor + 1.
inline Int round_div(const Int& a, const Int& b) {
  Int q = floor_div(a, b);
  Int r = a - q * b;
  if (2 * abs(r) > abs(b)) q += 1;
  return q;
}

// floor(sqrt(a)), a >= 0.
inline Int isqrt(const Int& a) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

inline Int rat_floor(const Rat& q) { return floor_div(q.get_num(), q.get_den()); }

inline Int rat_ceil(const Rat& q) {
  Int c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return c;
}

// floor(sqrt(q)) for q >= 0; exact (no floating point).
inline Int rat_sqrt_floor(const Rat& q) { return isqrt(rat_floor(q)); }

// Integer upper bound s with s >= sqrt(q); q >= 0.
inline Int rat_sqrt_upper(const Rat& q) { return isqrt(rat_floor(q)) + 1; }

// Representative of q mod 2Z in [0, 2).
inline Rat normalize_mod2(Rat q) {
  Rat two(2);
  Int k = rat_floor(q / two);
  q -= Rat(2 * k);
  if (q < 0) q += two;  // not reachable, kept for safety with negative zero handling
  return q;
}

// Representative of q mod Z in [0, 1).
inline Rat normalize_mod1(Rat q) {
  Int k = rat_floor(q);
  q -= Rat(k);
  return q;
}

inline bool is_even(const Int& a) { return mpz_even_p(a.get_mpz_t()) != 0; }

inline Int gcd_of(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  return g;
}

// Number of distinct prime factors, trial division.
inline int distinct_prime_factors(Int n) {
  n = abs(n);
  int count = 0;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ++count;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ++count;
  return count;
}

// FNV-1a over raw bytes; used to tag report inputs.
inline std::uint64_t fnv1a64(const void* data, std::size_t len) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

inline constexpr const char* kToolVersion = "wallkit 0.1.0";

}  // namespace wallkit
