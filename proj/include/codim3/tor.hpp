// Tor_*(R/I, k) as a graded-commutative algebra, computed from the Koszul
// complex on x, y, z tensored with the artinian quotient R/I.  Both routes --
// this one and the minimal free resolution -- compute the same algebra, and
// the Koszul one is finite-dimensional linear algebra with an explicit,
// strictly associative product.
//
// Basis vectors of K_i are u (x) e_S with u a standard monomial and S a size-i
// subset of {x,y,z}; the internal degree of u (x) e_S is deg(u) + |S| and is
// preserved by the differential, so every computation here is blocked by
// internal degree.

#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "codim3/groebner.hpp"
#include "codim3/linalg.hpp"

namespace codim3 {

namespace wedge {

// Subsets of {0,1,2} as bitmasks, grouped by size.
inline constexpr std::array<std::array<int, 3>, 4> kMasks = {{
    {0, -1, -1},
    {1, 2, 4},
    {3, 5, 6},
    {7, -1, -1},
}};
inline constexpr std::array<int, 4> kCount = {1, 3, 3, 1};

// Position of a mask within its size class.
inline int index_of(int mask) {
  switch (mask) {
    case 0: return 0;
    case 1: return 0;
    case 2: return 1;
    case 4: return 2;
    case 3: return 0;
    case 5: return 1;
    case 6: return 2;
    case 7: return 0;
  }
  return -1;
}

// Sign of e_S ^ e_T for disjoint S, T: (-1)^{#{(s,t) in SxT : s > t}}.
inline int product_sign(int s_mask, int t_mask) {
  int inversions = 0;
  for (int t = 0; t < 3; ++t) {
    if (!(t_mask & (1 << t))) continue;
    for (int s = t + 1; s < 3; ++s)
      if (s_mask & (1 << s)) ++inversions;
  }
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace wedge

// The Koszul complex of R/I: block differential matrices per homological and
// internal degree.  d[i][t] maps block (i,t) to block (i-1,t).
template <class F>
struct KoszulComplex {
  std::array<int, 4> dims{};                    // total dimension per homological degree
  std::array<std::map<int, Matrix<F>>, 4> d;    // d[1..3]

  int socle_degree = 0;

  // Dimension of block (i,t) given the quotient's Hilbert function.
  static int block_dim(const Quotient<F>& Q, int i, int t) {
    return wedge::kCount[i] * Q.hilbert(t - i);
  }
};

template <class F>
KoszulComplex<F> koszul_complex(const Quotient<F>& Q) {
  const F& k = Q.field();
  KoszulComplex<F> K;
  K.socle_degree = Q.socle_degree();
  for (int i = 0; i < 4; ++i) K.dims[i] = wedge::kCount[i] * Q.total_dimension();

  for (int i = 1; i <= 3; ++i) {
    for (int t = i; t <= Q.socle_degree() + i; ++t) {
      int cols = KoszulComplex<F>::block_dim(Q, i, t);
      if (cols == 0) continue;
      int rows = KoszulComplex<F>::block_dim(Q, i - 1, t);
      Matrix<F> mat(rows, cols);
      const auto& source_monos = Q.standard_monomials(t - i);
      const int target_hf = Q.hilbert(t - i + 1);
      for (int si = 0; si < wedge::kCount[i]; ++si) {
        int s_mask = wedge::kMasks[i][si];
        for (std::size_t ui = 0; ui < source_monos.size(); ++ui) {
          int col = si * static_cast<int>(source_monos.size()) + static_cast<int>(ui);
          int j = 0;  // position of the variable within S, for the sign
          for (int v = 0; v < kNumVars; ++v) {
            if (!(s_mask & (1 << v))) continue;
            ++j;
            if (rows == 0) continue;
            int t_mask = s_mask & ~(1 << v);
            int ti = wedge::index_of(t_mask);
            const auto& nf = Q.nf_monomial(source_monos[ui] * Monomial::var(v));
            for (const auto& [gi, coeff] : nf) {
              int local = gi - Q.degree_offset(t - i + 1);
              int row = ti * target_hf + local;
              auto signed_coeff = (j % 2 == 1) ? coeff : k.neg(coeff);
              mat.at(row, col) = k.add(mat.at(row, col), signed_coeff);
            }
          }
        }
      }
      K.d[i].emplace(t, std::move(mat));
    }
  }
  return K;
}

struct TorClass {
  int internal_degree;
  int local_index;  // position within the block's homology basis
};

// Homology bases of the Koszul complex with cycle representatives and, per
// block, the echelon structure used to project arbitrary cycles onto the
// chosen basis.  Products are filled in by tor_products.
template <class F>
class TorAlgebra {
 public:
  using Elem = typename F::Elem;

  struct Block {
    Echelon<F> echelon;                    // spans ker d_i within the block
    std::vector<std::vector<Elem>> reps;   // homology representatives
    int global_base = 0;                   // index of reps[0] in the A_i basis
  };

  std::array<std::vector<TorClass>, 4> classes;
  std::array<std::map<int, Block>, 4> blocks;

  // mu11[a][b]: coordinates of (A_1 basis a) * (A_1 basis b) over the A_2
  // basis; mu12[a][f]: coordinates of a * f over the A_3 basis.
  std::vector<std::vector<std::vector<Elem>>> mu11;
  std::vector<std::vector<std::vector<Elem>>> mu12;

  int dim(int i) const { return static_cast<int>(classes[i].size()); }
  int m() const { return dim(1); }
  int n() const { return dim(3); }
};

template <class F>
TorAlgebra<F> graded_homology(const Quotient<F>& Q, const KoszulComplex<F>& K) {
  using Elem = typename F::Elem;
  const F& k = Q.field();
  TorAlgebra<F> A;
  for (int i = 0; i < 4; ++i) {
    for (int t = i; t <= Q.socle_degree() + i; ++t) {
      int dim = KoszulComplex<F>::block_dim(Q, i, t);
      if (dim == 0) continue;
      typename TorAlgebra<F>::Block block{Echelon<F>(k, dim), {}, A.dim(i)};

      // boundaries from homological degree i+1
      if (i < 3) {
        auto it = K.d[i + 1].find(t);
        if (it != K.d[i + 1].end()) {
          const Matrix<F>& dmat = it->second;
          for (int c = 0; c < dmat.cols; ++c) {
            std::vector<Elem> col(dim, k.zero());
            for (int r = 0; r < dim; ++r) col[r] = dmat.at(r, c);
            block.echelon.insert(std::move(col), -1);
          }
        }
      }

      // cycles in block (i,t); d_0 = 0, so everything is a cycle there
      std::vector<std::vector<Elem>> cycles;
      if (i == 0) {
        for (int c = 0; c < dim; ++c) {
          std::vector<Elem> v(dim, k.zero());
          v[c] = k.one();
          cycles.push_back(std::move(v));
        }
      } else {
        cycles = kernel_basis(k, K.d[i].at(t));
      }
      for (auto& z : cycles) {
        if (!block.echelon.insert(std::move(z), static_cast<int>(block.reps.size())))
          continue;
        block.reps.push_back(block.echelon.back_row());
        A.classes[i].push_back({t, static_cast<int>(block.reps.size()) - 1});
      }
      // blocks with no homology still carry the cycle span, which the product
      // projection needs for its membership check
      A.blocks[i].emplace(t, std::move(block));
    }
  }

  if (A.dim(0) != 1) throw internal_error("tor: dim A_0 != 1");
  if (1 - A.dim(1) + A.dim(2) - A.dim(3) != 0)
    throw internal_error("tor: Euler characteristic violation");
  return A;
}

namespace detail {

// Multiplies two Koszul cycle representatives living in blocks (i1,t1) and
// (i2,t2); the result is a vector over block (i1+i2, t1+t2).
template <class F>
std::vector<typename F::Elem> wedge_product(const Quotient<F>& Q, int i1, int t1,
                                            const std::vector<typename F::Elem>& a,
                                            int i2, int t2,
                                            const std::vector<typename F::Elem>& b) {
  const F& k = Q.field();
  const int i = i1 + i2, t = t1 + t2;
  const int hf_out = Q.hilbert(t - i);
  std::vector<typename F::Elem> out(
      static_cast<std::size_t>(wedge::kCount[i] * hf_out), k.zero());
  if (hf_out == 0) return out;
  const auto& monos1 = Q.standard_monomials(t1 - i1);
  const auto& monos2 = Q.standard_monomials(t2 - i2);
  for (int s1 = 0; s1 < wedge::kCount[i1]; ++s1) {
    int mask1 = wedge::kMasks[i1][s1];
    for (std::size_t u1 = 0; u1 < monos1.size(); ++u1) {
      const auto& ca = a[s1 * monos1.size() + u1];
      if (k.is_zero(ca)) continue;
      for (int s2 = 0; s2 < wedge::kCount[i2]; ++s2) {
        int mask2 = wedge::kMasks[i2][s2];
        if (mask1 & mask2) continue;
        int sign = wedge::product_sign(mask1, mask2);
        int out_idx = wedge::index_of(mask1 | mask2);
        for (std::size_t u2 = 0; u2 < monos2.size(); ++u2) {
          const auto& cb = b[s2 * monos2.size() + u2];
          if (k.is_zero(cb)) continue;
          auto c = k.mul(ca, cb);
          if (sign < 0) c = k.neg(c);
          for (const auto& [gi, coeff] : Q.nf_monomial(monos1[u1] * monos2[u2])) {
            int local = gi - Q.degree_offset(t - i);
            auto& slot = out[out_idx * hf_out + local];
            slot = k.add(slot, k.mul(c, coeff));
          }
        }
      }
    }
  }
  return out;
}

// Projects a cycle in block (i,t) onto the homology basis, as coordinates
// over the full A_i basis.
template <class F>
std::vector<typename F::Elem> project_class(const F& k, const TorAlgebra<F>& A, int i,
                                            int t, std::vector<typename F::Elem> v) {
  std::vector<typename F::Elem> coords(A.dim(i), k.zero());
  bool all_zero = true;
  for (const auto& e : v)
    if (!k.is_zero(e)) {
      all_zero = false;
      break;
    }
  if (all_zero) return coords;
  auto it = A.blocks[i].find(t);
  if (it == A.blocks[i].end())
    throw internal_error("tor: product lands outside the recorded blocks");
  auto proj = it->second.echelon.project(std::move(v));
  if (!proj) throw internal_error("tor: product of cycles is not a cycle");
  for (const auto& [local, c] : *proj) coords[it->second.global_base + local] = c;
  return coords;
}

}  // namespace detail

// Fills mu11 and mu12 by wedge-multiplying cycle representatives and
// projecting to homology.
template <class F>
void tor_products(const Quotient<F>& Q, TorAlgebra<F>& A) {
  const F& k = Q.field();
  const int m = A.dim(1), mid = A.dim(2), n = A.dim(3);
  A.mu11.assign(m, std::vector<std::vector<typename F::Elem>>(
                       m, std::vector<typename F::Elem>(mid, k.zero())));
  A.mu12.assign(m, std::vector<std::vector<typename F::Elem>>(
                       mid, std::vector<typename F::Elem>(n, k.zero())));
  for (int a = 0; a < m; ++a) {
    const TorClass& ca = A.classes[1][a];
    const auto& rep_a = A.blocks[1].at(ca.internal_degree).reps[ca.local_index];
    for (int b = 0; b < m; ++b) {
      const TorClass& cb = A.classes[1][b];
      const auto& rep_b = A.blocks[1].at(cb.internal_degree).reps[cb.local_index];
      auto w = detail::wedge_product(Q, 1, ca.internal_degree, rep_a, 1,
                                     cb.internal_degree, rep_b);
      A.mu11[a][b] = detail::project_class(k, A, 2, ca.internal_degree + cb.internal_degree,
                                           std::move(w));
    }
    for (int f = 0; f < mid; ++f) {
      const TorClass& cf = A.classes[2][f];
      const auto& rep_f = A.blocks[2].at(cf.internal_degree).reps[cf.local_index];
      auto w = detail::wedge_product(Q, 1, ca.internal_degree, rep_a, 2,
                                     cf.internal_degree, rep_f);
      A.mu12[a][f] = detail::project_class(k, A, 3, ca.internal_degree + cf.internal_degree,
                                           std::move(w));
    }
  }
}

// The classification invariants.  r_first (the flattening of mu12 in its
// first argument) and s (the flattening of mu11) are carried along for
// diagnostics and the T / H(3,0) split.
struct TorInvariants {
  int m = 0, n = 0;
  int p = 0, q = 0, r = 0;
  int r_first = 0;
  int s = 0;
};

template <class F>
TorInvariants compute_invariants(const F& k, const TorAlgebra<F>& A) {
  TorInvariants inv;
  inv.m = A.dim(1);
  inv.n = A.dim(3);
  const int mid = A.dim(2);

  // p = rank of the span of all products A_1 * A_1 inside A_2
  {
    Matrix<F> mat(inv.m * inv.m, mid);
    for (int a = 0; a < inv.m; ++a)
      for (int b = 0; b < inv.m; ++b)
        for (int c = 0; c < mid; ++c) mat.at(a * inv.m + b, c) = A.mu11[a][b][c];
    inv.p = rank(k, std::move(mat));
  }
  // q = rank of the span of all products A_1 * A_2 inside A_3
  {
    Matrix<F> mat(inv.m * mid, inv.n);
    for (int a = 0; a < inv.m; ++a)
      for (int f = 0; f < mid; ++f)
        for (int c = 0; c < inv.n; ++c) mat.at(a * mid + f, c) = A.mu12[a][f][c];
    inv.q = rank(k, std::move(mat));
  }
  // r = rank of delta : A_2 -> Hom(A_1, A_3), f |-> (a |-> a f)
  {
    Matrix<F> mat(mid, inv.m * inv.n);
    for (int f = 0; f < mid; ++f)
      for (int a = 0; a < inv.m; ++a)
        for (int c = 0; c < inv.n; ++c) mat.at(f, a * inv.n + c) = A.mu12[a][f][c];
    inv.r = rank(k, std::move(mat));
  }
  // first-argument flattening of mu12: A_1 -> Hom(A_2, A_3)
  {
    Matrix<F> mat(inv.m, mid * inv.n);
    for (int a = 0; a < inv.m; ++a)
      for (int f = 0; f < mid; ++f)
        for (int c = 0; c < inv.n; ++c) mat.at(a, f * inv.n + c) = A.mu12[a][f][c];
    inv.r_first = rank(k, std::move(mat));
  }
  // flattening of mu11: A_1 -> Hom(A_1, A_2)
  {
    Matrix<F> mat(inv.m, inv.m * mid);
    for (int a = 0; a < inv.m; ++a)
      for (int b = 0; b < inv.m; ++b)
        for (int c = 0; c < mid; ++c) mat.at(a, b * mid + c) = A.mu11[b][a][c];
    inv.s = rank(k, std::move(mat));
  }
  return inv;
}

// The five multiplication classes.
enum class TorClassName : char { B = 'B', C = 'C', G = 'G', H = 'H', T = 'T' };

struct TorProfile {
  int m = 0, n = 0;
  TorClassName cls = TorClassName::H;
  int p = 0, q = 0, r = 0;

  bool operator==(const TorProfile& o) const {
    return m == o.m && n == o.n && cls == o.cls && p == o.p && q == o.q && r == o.r;
  }
};

inline std::string display_class(const TorProfile& t) {
  switch (t.cls) {
    case TorClassName::B: return "B";
    case TorClassName::T: return "T";
    case TorClassName::C: return "C(3)";
    case TorClassName::G: return "G(" + std::to_string(t.r) + ")";
    case TorClassName::H:
      return "H(" + std::to_string(t.p) + "," + std::to_string(t.q) + ")";
  }
  return "?";
}

// Decision table for the five normal forms.  The T vs H(3,0) split uses the
// rank s of the mu11 flattening: T has exactly three classes acting
// nontrivially on A_1, H(3,0) has four.
inline TorProfile classify(const TorInvariants& inv) {
  TorProfile out{inv.m, inv.n, TorClassName::H, inv.p, inv.q, inv.r};
  if (inv.p == 0 && inv.q == 1 && inv.r >= 2) {
    out.cls = TorClassName::G;
    return out;
  }
  if (inv.p == 1 && inv.q == 1 && inv.r == 2) {
    out.cls = TorClassName::B;
    return out;
  }
  if (inv.p == 3 && inv.q == 1 && inv.r == 3 && inv.m == 3 && inv.n == 1) {
    out.cls = TorClassName::C;
    return out;
  }
  if (inv.p == 3 && inv.q == 0 && inv.r == 0) {
    if (inv.s == 3) {
      out.cls = TorClassName::T;
      return out;
    }
    if (inv.s == 4) {
      out.cls = TorClassName::H;
      return out;
    }
    throw unclassifiable_error("p=3,q=0,r=0 with mu11 flattening rank " +
                               std::to_string(inv.s));
  }
  if (inv.r == inv.q) {
    out.cls = TorClassName::H;
    return out;
  }
  throw unclassifiable_error("no class matches (m,n,p,q,r)=(" + std::to_string(inv.m) +
                             "," + std::to_string(inv.n) + "," + std::to_string(inv.p) +
                             "," + std::to_string(inv.q) + "," + std::to_string(inv.r) +
                             ")");
}

// Convenience: the full pipeline from an artinian quotient.
template <class F>
TorAlgebra<F> tor_algebra(const Quotient<F>& Q) {
  KoszulComplex<F> K = koszul_complex(Q);
  TorAlgebra<F> A = graded_homology(Q, K);
  tor_products(Q, A);
  return A;
}

}  // namespace codim3
