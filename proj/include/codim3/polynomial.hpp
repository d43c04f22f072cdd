// Homogeneous polynomials in k[x,y,z] with exact coefficients, and finitely
// generated homogeneous ideals.
//
// A polynomial is a list of (monomial, coefficient) terms kept in canonical
// form: coefficients nonzero, monomials distinct and sorted in descending
// grevlex order.  The zero polynomial is the empty list; its nominal degree is
// tracked so homogeneity bookkeeping stays intact.

#pragma once

#include <map>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "codim3/field.hpp"
#include "codim3/monomial.hpp"

namespace codim3 {

template <class F>
class Poly {
 public:
  using Elem = typename F::Elem;
  struct Term {
    Monomial mono;
    Elem coeff;
  };

  Poly() = default;
  static Poly zero(int degree) {
    Poly p;
    p.deg_ = degree;
    return p;
  }
  static Poly term(const F& k, const Monomial& m, Elem c) {
    Poly p;
    p.deg_ = m.degree();
    if (!k.is_zero(c)) p.terms_.push_back({m, std::move(c)});
    return p;
  }

  // Canonicalizes an arbitrary term list: sorts, merges duplicates, drops
  // zeros, and checks that all monomials share one total degree.
  static Poly from_terms(const F& k, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
      return grevlex_less(b.mono, a.mono);
    });
    Poly p;
    int deg = -1;
    for (auto& t : terms) {
      if (k.is_zero(t.coeff)) continue;
      if (deg < 0) deg = t.mono.degree();
      if (t.mono.degree() != deg)
        throw std::invalid_argument("terms of mixed degree in a homogeneous polynomial");
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff = k.add(p.terms_.back().coeff, t.coeff);
        if (k.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
      } else {
        p.terms_.push_back(std::move(t));
      }
    }
    p.deg_ = deg < 0 ? 0 : deg;
    return p;
  }

  int degree() const { return deg_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Elem& leading_coefficient() const { return terms_.front().coeff; }

  bool operator==(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
        return false;
    return terms_.empty() ? deg_ == o.deg_ : true;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

 private:
  int deg_ = 0;
  std::vector<Term> terms_;
};

template <class F>
Poly<F> add(const F& k, const Poly<F>& f, const Poly<F>& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  if (f.degree() != g.degree())
    throw std::invalid_argument("cannot add homogeneous polynomials of degrees " +
                                std::to_string(f.degree()) + " and " +
                                std::to_string(g.degree()));
  std::vector<typename Poly<F>::Term> out;
  out.reserve(f.terms().size() + g.terms().size());
  auto a = f.terms().begin(), ae = f.terms().end();
  auto b = g.terms().begin(), be = g.terms().end();
  while (a != ae && b != be) {
    if (a->mono == b->mono) {
      auto c = k.add(a->coeff, b->coeff);
      if (!k.is_zero(c)) out.push_back({a->mono, std::move(c)});
      ++a, ++b;
    } else if (grevlex_less(b->mono, a->mono)) {
      out.push_back(*a++);
    } else {
      out.push_back(*b++);
    }
  }
  out.insert(out.end(), a, ae);
  out.insert(out.end(), b, be);
  Poly<F> r = Poly<F>::zero(f.degree());
  if (!out.empty()) {
    // already canonical
    r = Poly<F>::from_terms(k, std::move(out));
  }
  return r;
}

template <class F>
Poly<F> scale(const F& k, const Poly<F>& f, const typename F::Elem& c) {
  if (k.is_zero(c)) return Poly<F>::zero(f.degree());
  std::vector<typename Poly<F>::Term> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) out.push_back({t.mono, k.mul(t.coeff, c)});
  Poly<F> r = Poly<F>::zero(f.degree());
  if (!out.empty()) r = Poly<F>::from_terms(k, std::move(out));
  return r;
}

template <class F>
Poly<F> neg(const F& k, const Poly<F>& f) {
  return scale(k, f, k.neg(k.one()));
}

template <class F>
Poly<F> sub(const F& k, const Poly<F>& f, const Poly<F>& g) {
  return add(k, f, neg(k, g));
}

template <class F>
Poly<F> mul(const F& k, const Poly<F>& f, const Poly<F>& g) {
  if (f.is_zero() || g.is_zero()) return Poly<F>::zero(f.degree() + g.degree());
  std::map<std::int64_t, std::pair<Monomial, typename F::Elem>> acc;
  for (const auto& a : f.terms())
    for (const auto& b : g.terms()) {
      Monomial m = a.mono * b.mono;
      auto c = k.mul(a.coeff, b.coeff);
      auto it = acc.find(m.code());
      if (it == acc.end())
        acc.emplace(m.code(), std::make_pair(m, std::move(c)));
      else
        it->second.second = k.add(it->second.second, c);
    }
  std::vector<typename Poly<F>::Term> out;
  out.reserve(acc.size());
  for (auto& [_, mc] : acc) out.push_back({mc.first, std::move(mc.second)});
  auto r = Poly<F>::from_terms(k, std::move(out));
  return r.is_zero() ? Poly<F>::zero(f.degree() + g.degree()) : r;
}

// Multiplication by a single term, the workhorse of reduction.
template <class F>
Poly<F> mul_term(const F& k, const Poly<F>& f, const Monomial& m,
                 const typename F::Elem& c) {
  std::vector<typename Poly<F>::Term> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    auto cc = k.mul(t.coeff, c);
    if (!k.is_zero(cc)) out.push_back({t.mono * m, std::move(cc)});
  }
  Poly<F> r = Poly<F>::zero(f.degree() + m.degree());
  if (!out.empty()) r = Poly<F>::from_terms(k, std::move(out));
  return r;
}

// Monic normalization (leading coefficient 1); zero stays zero.
template <class F>
Poly<F> monic(const F& k, const Poly<F>& f) {
  if (f.is_zero()) return f;
  return scale(k, f, k.inv(f.leading_coefficient()));
}

// A random homogeneous polynomial of degree d >= 1.
//
// num_terms > 0: exactly that many distinct degree-d monomials (fewer only if
// the degree has fewer monomials than requested), each with a uniformly random
// nonzero coefficient.  num_terms == 0: every degree-d monomial independently
// gets a uniformly random coefficient, zero allowed, resampling if everything
// vanished.
template <class F>
Poly<F> random_homogeneous(const F& k, int d, int num_terms, std::mt19937_64& rng) {
  if (d < 1) throw std::invalid_argument("random_homogeneous: degree must be >= 1");
  std::vector<Monomial> monos = monomials_of_degree(d);
  std::vector<typename Poly<F>::Term> terms;
  if (num_terms > 0) {
    std::size_t want = std::min<std::size_t>(num_terms, monos.size());
    // partial Fisher-Yates to pick `want` distinct monomials
    for (std::size_t i = 0; i < want; ++i) {
      std::size_t j = i + uniform_below(rng, monos.size() - i);
      std::swap(monos[i], monos[j]);
      terms.push_back({monos[i], k.random_nonzero(rng)});
    }
    return Poly<F>::from_terms(k, std::move(terms));
  }
  for (;;) {
    terms.clear();
    for (const auto& m : monos) {
      auto c = k.random_element(rng);
      if (!k.is_zero(c)) terms.push_back({m, std::move(c)});
    }
    if (!terms.empty()) return Poly<F>::from_terms(k, std::move(terms));
  }
}

// A homogeneous ideal, given by a (not necessarily minimal) list of
// homogeneous generators.  The zero ideal is the empty list.
template <class F>
struct Ideal {
  F field;
  std::vector<Poly<F>> gens;

  explicit Ideal(const F& k) : field(k) {}
  Ideal(const F& k, std::vector<Poly<F>> generators) : field(k) {
    gens.reserve(generators.size());
    for (auto& g : generators)
      if (!g.is_zero()) gens.push_back(std::move(g));
  }

  bool is_zero() const { return gens.empty(); }
};

}  // namespace codim3
