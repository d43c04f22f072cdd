// Monomials x^a y^b z^c of the trivariate ring, ordered by graded reverse
// lexicographic order with x > y > z.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

namespace codim3 {

constexpr int kNumVars = 3;

struct Monomial {
  std::array<std::int16_t, kNumVars> e{0, 0, 0};

  constexpr Monomial() = default;
  constexpr Monomial(int a, int b, int c) : e{static_cast<std::int16_t>(a),
                                              static_cast<std::int16_t>(b),
                                              static_cast<std::int16_t>(c)} {}

  static constexpr Monomial one() { return Monomial(); }
  static constexpr Monomial var(int i, int exp = 1) {
    Monomial m;
    m.e[i] = static_cast<std::int16_t>(exp);
    return m;
  }

  int degree() const { return e[0] + e[1] + e[2]; }

  bool divides(const Monomial& m) const {
    return e[0] <= m.e[0] && e[1] <= m.e[1] && e[2] <= m.e[2];
  }

  Monomial operator*(const Monomial& m) const {
    return Monomial(e[0] + m.e[0], e[1] + m.e[1], e[2] + m.e[2]);
  }
  // Exact quotient; requires m.divides(*this).
  Monomial operator/(const Monomial& m) const {
    return Monomial(e[0] - m.e[0], e[1] - m.e[1], e[2] - m.e[2]);
  }

  bool operator==(const Monomial& m) const { return e == m.e; }
  bool operator!=(const Monomial& m) const { return e != m.e; }

  // Injective encoding, usable as a hash-map key.
  std::int64_t code() const {
    return (static_cast<std::int64_t>(e[0]) << 32) |
           (static_cast<std::int64_t>(e[1]) << 16) | e[2];
  }
};

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  return Monomial(std::max(a.e[0], b.e[0]), std::max(a.e[1], b.e[1]),
                  std::max(a.e[2], b.e[2]));
}

// Strict grevlex order: on equal total degree, the monomial whose rightmost
// nonzero exponent difference is positive is the smaller one.
inline bool grevlex_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (int i = kNumVars - 1; i >= 0; --i) {
    int d = a.e[i] - b.e[i];
    if (d != 0) return d > 0;
  }
  return false;
}

inline bool operator<(const Monomial& a, const Monomial& b) { return grevlex_less(a, b); }

// All monomials of total degree d, listed in descending grevlex order
// (x^d first, z^d last).
inline std::vector<Monomial> monomials_of_degree(int d) {
  std::vector<Monomial> out;
  out.reserve((d + 1) * (d + 2) / 2);
  for (int a = 0; a <= d; ++a)
    for (int b = 0; b + a <= d; ++b) out.push_back(Monomial(a, b, d - a - b));
  std::sort(out.begin(), out.end(),
            [](const Monomial& x, const Monomial& y) { return grevlex_less(y, x); });
  return out;
}

}  // namespace codim3
