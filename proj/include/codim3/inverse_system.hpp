// Macaulay duality: ideals with prescribed quotient type built from dual
// forms.  The dual variables X, Y, Z are divided powers and the ring acts by
// contraction (exponent subtraction), which stays exact in every
// characteristic -- differentiation would lose factors of p.

#pragma once

#include <vector>

#include "codim3/groebner.hpp"
#include "codim3/linalg.hpp"
#include "codim3/polynomial.hpp"

namespace codim3 {

// A nonzero homogeneous form in the divided-power dual variables.
template <class F>
struct DualForm {
  Poly<F> form;

  explicit DualForm(Poly<F> f) : form(std::move(f)) {
    if (form.is_zero()) throw std::invalid_argument("dual form must be nonzero");
  }
};

// Contraction of a single monomial against a dual monomial: componentwise
// exponent subtraction, zero as soon as any exponent would go negative.
template <class F>
Poly<F> contract(const F& k, const Monomial& mono, const Poly<F>& dual) {
  std::vector<typename Poly<F>::Term> out;
  for (const auto& t : dual.terms())
    if (mono.divides(t.mono)) out.push_back({t.mono / mono, t.coeff});
  int deg = dual.degree() - mono.degree();
  if (out.empty()) return Poly<F>::zero(deg < 0 ? 0 : deg);
  return Poly<F>::from_terms(k, std::move(out));
}

template <class F>
Poly<F> contract(const F& k, const Monomial& mono, const DualForm<F>& dual) {
  return contract(k, mono, dual.form);
}

// The ideal of all polynomials annihilating every given dual form, assembled
// degree by degree as contraction-matrix kernels and trimmed to a minimal
// generating set.  The quotient is artinian with socle degree at most the
// largest dual degree.
template <class F>
Ideal<F> annihilator_ideal(const F& k, const std::vector<DualForm<F>>& forms) {
  if (forms.empty()) throw std::invalid_argument("annihilator_ideal: no dual forms");
  int max_deg = 0;
  for (const auto& f : forms) max_deg = std::max(max_deg, f.form.degree());

  std::vector<Poly<F>> raw;
  for (int d = 1; d <= max_deg + 1; ++d) {
    const std::vector<Monomial> monos = monomials_of_degree(d);
    // stack the contraction maps R_d -> D_{deg F_j - d} over all forms
    int rows = 0;
    std::vector<std::vector<Monomial>> targets;
    for (const auto& f : forms) {
      int td = f.form.degree() - d;
      targets.push_back(td >= 0 ? monomials_of_degree(td) : std::vector<Monomial>{});
      rows += static_cast<int>(targets.back().size());
    }
    Matrix<F> mat(rows, static_cast<int>(monos.size()));
    int row_base = 0;
    for (std::size_t j = 0; j < forms.size(); ++j) {
      const auto& target = targets[j];
      std::unordered_map<std::int64_t, int> target_index;
      for (std::size_t i = 0; i < target.size(); ++i)
        target_index[target[i].code()] = static_cast<int>(i);
      for (std::size_t c = 0; c < monos.size(); ++c) {
        Poly<F> image = contract(k, monos[c], forms[j]);
        for (const auto& t : image.terms())
          mat.at(row_base + target_index.at(t.mono.code()), static_cast<int>(c)) = t.coeff;
      }
      row_base += static_cast<int>(target.size());
    }
    for (const auto& v : kernel_basis(k, std::move(mat))) {
      std::vector<typename Poly<F>::Term> terms;
      for (std::size_t c = 0; c < monos.size(); ++c)
        if (!k.is_zero(v[c])) terms.push_back({monos[c], v[c]});
      raw.push_back(Poly<F>::from_terms(k, std::move(terms)));
    }
  }
  Ideal<F> bulk(k, std::move(raw));
  return Ideal<F>(k, minimal_generators(bulk));
}

// The type of the artinian quotient R/I: the rank of the last free module in
// the minimal resolution, computed as the socle dimension.
template <class F>
int quotient_type(const Ideal<F>& I) {
  return socle_dimension(quotient_presentation(I));
}

}  // namespace codim3
