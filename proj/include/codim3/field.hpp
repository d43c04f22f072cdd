// Coefficient fields: GF(p) for a prime p, and the rationals (characteristic 0).
//
// All arithmetic is exact.  Elements are kept in canonical form at all times:
// GF(p) residues live in [0, p-1]; rationals are reduced fractions with a
// positive denominator (maintained by boost).  Printing of GF(p) elements uses
// the balanced representative in [-(p-1)/2, (p-1)/2] so that e.g. 2 mod 3 is
// rendered as -1.

#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "codim3/errors.hpp"

namespace codim3 {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Runtime description of the coefficient field: 0 means the rationals,
// anything else must be prime.
struct FieldSpec {
  std::uint32_t characteristic = 0;

  FieldSpec() = default;
  explicit FieldSpec(std::uint32_t ch) : characteristic(ch) {
    if (ch != 0 && !is_prime(ch))
      throw std::invalid_argument("field characteristic must be 0 or a prime, got " +
                                  std::to_string(ch));
  }
};

// Draws a uniform integer in [0, n).  Rejection sampling on the raw 64-bit
// stream keeps the result independent of the standard library's
// uniform_int_distribution, which is not specified bit-for-bit.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform_below: empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t u;
  do {
    u = rng();
  } while (u >= limit);
  return u % n;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed for worker w derived from the user-facing seed; worker 0 is the
// single-threaded stream.
inline std::uint64_t worker_seed(std::uint64_t seed, unsigned worker) {
  return splitmix64(seed + 0x9e3779b97f4a7c15ULL * (worker + 1));
}

class PrimeField {
 public:
  using Elem = std::int64_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not prime");
  }
  explicit PrimeField(const FieldSpec& spec) : PrimeField(spec.characteristic) {}

  std::uint32_t characteristic() const { return p_; }
  FieldSpec spec() const { return FieldSpec(p_); }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }

  Elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return r;
  }
  Elem from_fraction(long long num, long long den) const {
    Elem d = from_int(den);
    if (d == 0) throw parse_error("coefficient denominator vanishes in GF(" + std::to_string(p_) + ")");
    return mul(from_int(num), inv(d));
  }

  Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p_ ? s - p_ : s; }
  Elem sub(Elem a, Elem b) const { Elem d = a - b; return d < 0 ? d + p_ : d; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
  Elem inv(Elem a) const {
    if (a == 0) throw std::invalid_argument("inverse of zero");
    // extended Euclid
    Elem t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
      Elem q = r / new_r;
      t = std::exchange(new_t, t - q * new_t);
      r = std::exchange(new_r, r - q * new_r);
    }
    return t < 0 ? t + p_ : t;
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem random_element(std::mt19937_64& rng) const { return static_cast<Elem>(uniform_below(rng, p_)); }
  Elem random_nonzero(std::mt19937_64& rng) const { return static_cast<Elem>(1 + uniform_below(rng, p_ - 1)); }

  // Balanced representative used for display.
  long long balanced(Elem a) const {
    return a > static_cast<Elem>(p_ / 2) ? static_cast<long long>(a) - p_ : a;
  }
  bool print_negative(Elem a) const { return balanced(a) < 0; }
  std::string print_abs(Elem a) const {
    long long b = balanced(a);
    return std::to_string(b < 0 ? -b : b);
  }

 private:
  std::uint32_t p_;
};

class RationalField {
 public:
  using Elem = boost::multiprecision::cpp_rational;

  RationalField() = default;
  explicit RationalField(const FieldSpec& spec) {
    if (spec.characteristic != 0)
      throw std::invalid_argument("RationalField requires characteristic 0");
  }

  std::uint32_t characteristic() const { return 0; }
  FieldSpec spec() const { return FieldSpec(0); }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(const Elem& a) const { return a == 0; }

  Elem from_int(long long v) const { return Elem(v); }
  Elem from_fraction(long long num, long long den) const {
    if (den == 0) throw parse_error("coefficient denominator is zero");
    return Elem(num) / Elem(den);
  }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw std::invalid_argument("inverse of zero");
    return Elem(1) / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  // The experiment needs "random" rational coefficients; small balanced
  // integers mirror the +/-1 coefficients the sampled ideals tend to have.
  Elem random_element(std::mt19937_64& rng) const {
    return Elem(static_cast<long long>(uniform_below(rng, 3)) - 1);
  }
  Elem random_nonzero(std::mt19937_64& rng) const {
    return uniform_below(rng, 2) == 0 ? Elem(-1) : Elem(1);
  }

  bool print_negative(const Elem& a) const { return a < 0; }
  std::string print_abs(const Elem& a) const {
    Elem b = a < 0 ? Elem(-a) : a;
    return b.str();
  }
};

}  // namespace codim3
