// Reduced Groebner bases for homogeneous ideals of k[x,y,z] under grevlex,
// plus the derived data the classifier needs: normal forms, codimension,
// standard monomials and the Hilbert function of artinian quotients, minimal
// generating sets, and socle dimension.
//
// The engine is plain Buchberger with the normal selection strategy and both
// classical pair criteria; S-pairs are processed in ascending degree, which
// for homogeneous input acts as degree truncation.  The workload is many small
// bases, so this beats a fancier engine on simplicity without losing the
// determinism the on-disk formats need.

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "codim3/errors.hpp"
#include "codim3/linalg.hpp"
#include "codim3/polynomial.hpp"

namespace codim3 {

// All degree-indexed loops are capped here; hitting the cap raises a
// diagnostic instead of looping forever on misuse.
constexpr int kDegreeCap = 64;

template <class F>
struct GroebnerBasis {
  F field;
  // Reduced basis: monic, no leading monomial divides any monomial of another
  // element; sorted ascending by leading monomial.
  std::vector<Poly<F>> elems;
};

// Full normal form: no monomial of the result is divisible by any leading
// monomial of G.
template <class F>
Poly<F> normal_form(const F& k, const Poly<F>& f, const std::vector<Poly<F>>& G) {
  Poly<F> work = f;
  std::vector<typename Poly<F>::Term> out;
  while (!work.is_zero()) {
    const auto& lt = work.terms().front();
    const Poly<F>* reducer = nullptr;
    for (const auto& g : G)
      if (!g.is_zero() && g.leading_monomial().divides(lt.mono)) {
        reducer = &g;
        break;
      }
    if (reducer == nullptr) {
      out.push_back(lt);
      work = sub(k, work, Poly<F>::term(k, lt.mono, lt.coeff));
    } else {
      auto c = k.div(lt.coeff, reducer->leading_coefficient());
      work = sub(k, work, mul_term(k, *reducer, lt.mono / reducer->leading_monomial(), c));
    }
  }
  Poly<F> r = Poly<F>::zero(f.degree());
  if (!out.empty()) r = Poly<F>::from_terms(k, std::move(out));
  return r;
}

template <class F>
Poly<F> normal_form(const F& k, const Poly<F>& f, const GroebnerBasis<F>& G) {
  return normal_form(k, f, G.elems);
}

namespace detail {

struct SPair {
  int deg;
  Monomial lcm;
  int i, j;
  bool operator<(const SPair& o) const {
    if (deg != o.deg) return deg < o.deg;
    if (lcm != o.lcm) return grevlex_less(lcm, o.lcm);
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
};

}  // namespace detail

template <class F>
GroebnerBasis<F> reduced_groebner_basis(const Ideal<F>& I) {
  const F& k = I.field;
  std::vector<Poly<F>> G;
  for (const auto& g : I.gens) {
    Poly<F> r = normal_form(k, g, G);
    if (!r.is_zero()) G.push_back(monic(k, r));
  }

  std::set<detail::SPair> queue;
  std::set<std::pair<int, int>> treated;
  auto push_pairs = [&](int j) {
    for (int i = 0; i < j; ++i) {
      Monomial l = lcm(G[i].leading_monomial(), G[j].leading_monomial());
      queue.insert({l.degree(), l, i, j});
    }
  };
  for (int j = 1; j < static_cast<int>(G.size()); ++j) push_pairs(j);

  while (!queue.empty()) {
    detail::SPair sp = *queue.begin();
    queue.erase(queue.begin());
    treated.insert({sp.i, sp.j});
    const Monomial &mi = G[sp.i].leading_monomial(), &mj = G[sp.j].leading_monomial();
    // product criterion
    if (sp.lcm == mi * mj) continue;
    // chain criterion
    bool chained = false;
    for (int t = 0; t < static_cast<int>(G.size()) && !chained; ++t) {
      if (t == sp.i || t == sp.j) continue;
      if (!G[t].leading_monomial().divides(sp.lcm)) continue;
      auto key = [&](int a, int b) { return std::pair(std::min(a, b), std::max(a, b)); };
      if (treated.count(key(sp.i, t)) && treated.count(key(sp.j, t))) chained = true;
    }
    if (chained) continue;

    Poly<F> s = sub(k, mul_term(k, G[sp.i], sp.lcm / mi, k.one()),
                    mul_term(k, G[sp.j], sp.lcm / mj, k.one()));
    Poly<F> r = normal_form(k, s, G);
    if (r.is_zero()) continue;
    if (r.degree() > kDegreeCap)
      throw std::runtime_error("groebner: degree cap " + std::to_string(kDegreeCap) +
                               " exceeded");
    G.push_back(monic(k, r));
    push_pairs(static_cast<int>(G.size()) - 1);
  }

  // Minimalize: drop elements whose leading monomial is a multiple of
  // another's.
  std::sort(G.begin(), G.end(), [](const Poly<F>& a, const Poly<F>& b) {
    return grevlex_less(a.leading_monomial(), b.leading_monomial());
  });
  std::vector<Poly<F>> minimal;
  for (const auto& g : G) {
    bool redundant = false;
    for (const auto& h : minimal)
      if (h.leading_monomial().divides(g.leading_monomial())) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(g);
  }

  // Tail-reduce each element against the rest.
  GroebnerBasis<F> out{k, {}};
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly<F>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    out.elems.push_back(monic(k, normal_form(k, minimal[i], others)));
  }
  std::sort(out.elems.begin(), out.elems.end(), [](const Poly<F>& a, const Poly<F>& b) {
    return grevlex_less(a.leading_monomial(), b.leading_monomial());
  });
  return out;
}

// Krull dimension of R/in(I) (= of R/I): the largest subset S of the
// variables such that no leading monomial involves only variables from S.
template <class F>
int krull_dimension(const GroebnerBasis<F>& gb) {
  int best = -1;
  for (int mask = 0; mask < 8; ++mask) {
    bool ok = true;
    for (const auto& g : gb.elems) {
      int support = 0;
      for (int v = 0; v < kNumVars; ++v)
        if (g.leading_monomial().e[v] > 0) support |= 1 << v;
      if ((support & ~mask) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, __builtin_popcount(static_cast<unsigned>(mask)));
  }
  return best;  // -1 only for the unit ideal
}

template <class F>
int codimension(const GroebnerBasis<F>& gb) {
  int dim = krull_dimension(gb);
  return dim < 0 ? 3 : 3 - dim;
}

template <class F>
int codimension(const Ideal<F>& I) {
  return codimension(reduced_groebner_basis(I));
}

template <class F>
bool contains_unit(const GroebnerBasis<F>& gb) {
  for (const auto& g : gb.elems)
    if (g.leading_monomial().degree() == 0) return true;
  return false;
}

// Sparse vector over the global standard-monomial basis.
template <class F>
using NfVector = std::vector<std::pair<int, typename F::Elem>>;

// The artinian quotient R/I presented by a reduced Groebner basis together
// with its standard-monomial basis, listed per internal degree.
template <class F>
class Quotient {
 public:
  Quotient(const F& k, GroebnerBasis<F> gb) : k_(k), gb_(std::move(gb)) {
    if (contains_unit(gb_))
      throw std::invalid_argument("quotient of the unit ideal is the zero ring");
    if (codimension(gb_) != 3) throw std::invalid_argument("not codimension 3");
    for (int d = 0; d <= kDegreeCap + 1; ++d) {
      std::vector<Monomial> std_d;
      for (const auto& m : monomials_of_degree(d)) {
        bool reducible = false;
        for (const auto& g : gb_.elems)
          if (g.leading_monomial().divides(m)) {
            reducible = true;
            break;
          }
        if (!reducible) std_d.push_back(m);
      }
      if (std_d.empty()) break;  // stays empty in all higher degrees
      if (d > kDegreeCap)
        throw std::runtime_error("quotient: degree cap exceeded while enumerating basis");
      degree_offset_.push_back(total_);
      total_ += static_cast<int>(std_d.size());
      std_monos_.push_back(std::move(std_d));
    }
    for (std::size_t d = 0; d < std_monos_.size(); ++d)
      for (std::size_t i = 0; i < std_monos_[d].size(); ++i)
        index_[std_monos_[d][i].code()] =
            degree_offset_[d] + static_cast<int>(i);
  }

  const F& field() const { return k_; }
  const GroebnerBasis<F>& basis() const { return gb_; }
  int total_dimension() const { return total_; }
  int socle_degree() const { return static_cast<int>(std_monos_.size()) - 1; }

  // Hilbert function value in degree d.
  int hilbert(int d) const {
    if (d < 0 || d > socle_degree()) return 0;
    return static_cast<int>(std_monos_[d].size());
  }
  std::vector<int> hilbert_function() const {
    std::vector<int> h;
    for (const auto& v : std_monos_) h.push_back(static_cast<int>(v.size()));
    return h;
  }

  const std::vector<Monomial>& standard_monomials(int d) const { return std_monos_[d]; }
  int global_index(const Monomial& m) const {
    auto it = index_.find(m.code());
    return it == index_.end() ? -1 : it->second;
  }
  int degree_offset(int d) const { return degree_offset_[d]; }

  // Image of a monomial in the standard-monomial basis, memoized.
  const NfVector<F>& nf_monomial(const Monomial& m) const {
    auto it = nf_cache_.find(m.code());
    if (it != nf_cache_.end()) return it->second;
    NfVector<F> v;
    int gi = global_index(m);
    if (gi >= 0) {
      v.push_back({gi, k_.one()});
    } else {
      Poly<F> r = normal_form(k_, Poly<F>::term(k_, m, k_.one()), gb_.elems);
      for (const auto& t : r.terms()) {
        int idx = global_index(t.mono);
        if (idx < 0) throw internal_error("normal form left a non-standard monomial");
        v.push_back({idx, t.coeff});
      }
    }
    return nf_cache_.emplace(m.code(), std::move(v)).first->second;
  }

 private:
  F k_;
  GroebnerBasis<F> gb_;
  std::vector<std::vector<Monomial>> std_monos_;
  std::vector<int> degree_offset_;
  int total_ = 0;
  std::unordered_map<std::int64_t, int> index_;
  mutable std::unordered_map<std::int64_t, NfVector<F>> nf_cache_;
};

template <class F>
Quotient<F> quotient_presentation(const Ideal<F>& I) {
  return Quotient<F>(I.field, reduced_groebner_basis(I));
}

// Minimal homogeneous generating set, chosen degree by degree: in each degree
// the span of R_1 * I_{d-1} is extended to a basis of I_d, the new vectors
// being the degree-d minimal generators.  Output is ordered by ascending
// degree, then ascending leading monomial.
template <class F>
std::vector<Poly<F>> minimal_generators(const F& k, const GroebnerBasis<F>& gb) {
  std::vector<Poly<F>> out;
  if (gb.elems.empty()) return out;
  std::set<int> degrees;
  for (const auto& g : gb.elems) degrees.insert(g.degree());
  for (int d : degrees) {
    const std::vector<Monomial> monos = monomials_of_degree(d);
    std::unordered_map<std::int64_t, int> col;
    for (std::size_t i = 0; i < monos.size(); ++i) col[monos[i].code()] = static_cast<int>(i);
    auto vec_of = [&](const Poly<F>& p) {
      std::vector<typename F::Elem> v(monos.size(), k.zero());
      for (const auto& t : p.terms()) v[col[t.mono.code()]] = t.coeff;
      return v;
    };
    Echelon<F> ech(k, static_cast<int>(monos.size()));
    // span of R_1 * I_{d-1}: all proper monomial multiples of lower-degree
    // basis elements
    for (const auto& g : gb.elems) {
      if (g.degree() >= d) continue;
      for (const auto& m : monomials_of_degree(d - g.degree()))
        ech.insert(vec_of(mul_term(k, g, m, k.one())), -1);
    }
    // extend with the degree-d basis elements, ascending leading monomial
    std::vector<const Poly<F>*> here;
    for (const auto& g : gb.elems)
      if (g.degree() == d) here.push_back(&g);
    std::sort(here.begin(), here.end(), [](const Poly<F>* a, const Poly<F>* b) {
      return grevlex_less(a->leading_monomial(), b->leading_monomial());
    });
    for (const Poly<F>* g : here) {
      if (!ech.insert(vec_of(*g), 0)) continue;
      const auto& row = ech.back_row();
      std::vector<typename Poly<F>::Term> terms;
      for (std::size_t c = 0; c < monos.size(); ++c)
        if (!k.is_zero(row[c])) terms.push_back({monos[c], row[c]});
      out.push_back(Poly<F>::from_terms(k, std::move(terms)));
    }
  }
  // already (degree, leading monomial) ascending by construction
  return out;
}

template <class F>
std::vector<Poly<F>> minimal_generators(const Ideal<F>& I) {
  return minimal_generators(I.field, reduced_groebner_basis(I));
}

// dim_k { v in R/I : x v = y v = z v = 0 }, computed degreewise from the
// three multiplication matrices in the standard-monomial basis.
template <class F>
int socle_dimension(const Quotient<F>& Q) {
  const F& k = Q.field();
  int socle = 0;
  for (int d = 0; d <= Q.socle_degree(); ++d) {
    int cols = Q.hilbert(d), rows = 3 * Q.hilbert(d + 1);
    if (rows == 0) {
      socle += cols;
      continue;
    }
    Matrix<F> mat(rows, cols);
    const auto& basis_d = Q.standard_monomials(d);
    for (int c = 0; c < cols; ++c)
      for (int v = 0; v < kNumVars; ++v) {
        const auto& nf = Q.nf_monomial(basis_d[c] * Monomial::var(v));
        for (const auto& [gi, coeff] : nf) {
          int local = gi - Q.degree_offset(d + 1);
          mat.at(v * Q.hilbert(d + 1) + local, c) = coeff;
        }
      }
    socle += cols - rank(k, std::move(mat));
  }
  return socle;
}

}  // namespace codim3
