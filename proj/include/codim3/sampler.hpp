// Random generation of homogeneous grade-3 ideals: parameter handling, the
// direct branch with its mingens top-up and pure-power fix-up, the inverse
// system branch, the retry budget, and the validation gates.

#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "codim3/groebner.hpp"
#include "codim3/inverse_system.hpp"
#include "codim3/polynomial.hpp"

namespace codim3 {

// The parameter table of the main routine.  deg_seq == {0} is the sentinel
// for "draw mn random degrees in [low_deg, high_deg] afresh on every attempt".
struct SamplerConfig {
  std::uint32_t field_char = 3;
  long check_in = 0;
  std::vector<int> deg_seq = {0};
  int low_deg = 2;
  int high_deg = 8;
  int num_terms = 0;
  int mn = 5;
  bool use_n = false;
  int max_tries = 10;
  bool strict_terms = false;
  int max_m = 12;
  int max_n = 10;
  bool logging = false;
  std::uint64_t seed = 0;

  bool default_deg_seq() const { return deg_seq.size() == 1 && deg_seq[0] == 0; }

  void validate() const {
    FieldSpec check(field_char);  // throws on a composite
    if (low_deg < 1) throw std::invalid_argument("lowDeg must be positive");
    if (low_deg > high_deg) throw std::invalid_argument("lowDeg must not exceed highDeg");
    if (mn < 1) throw std::invalid_argument("mn must be positive");
    if (max_tries < 0) throw std::invalid_argument("maxTries must be nonnegative");
    if (num_terms < 0) throw std::invalid_argument("numTerms must be nonnegative");
    if (check_in < 0) throw std::invalid_argument("checkIn must be nonnegative");
    if (max_m < 1 || max_n < 1) throw std::invalid_argument("maxM and maxN must be positive");
    if (!default_deg_seq())
      for (int d : deg_seq)
        if (d < 1) throw std::invalid_argument("degSeq entries must be positive");
  }
};

enum class FailureReason {
  mingens_exhausted,
  codim_monomial,
  variables_exhausted,
  maxtries_exhausted,
  type_mismatch,
  validation_failed,
};

inline const char* to_string(FailureReason r) {
  switch (r) {
    case FailureReason::mingens_exhausted: return "mingens-exhausted";
    case FailureReason::codim_monomial: return "codim-monomial";
    case FailureReason::variables_exhausted: return "variables-exhausted";
    case FailureReason::maxtries_exhausted: return "maxtries-exhausted";
    case FailureReason::type_mismatch: return "type-mismatch";
    case FailureReason::validation_failed: return "validation-failed";
  }
  return "?";
}

template <class F>
struct AttemptOutcome {
  Ideal<F> ideal;
  std::optional<GroebnerBasis<F>> gb;  // present on success
  std::optional<FailureReason> failure;

  bool success() const { return !failure.has_value(); }
};

// The degree sequence for one attempt: either the user's sequence verbatim or
// mn fresh uniform draws from [low_deg, high_deg].
inline std::vector<int> degree_sequence(const SamplerConfig& cfg, std::mt19937_64& rng) {
  if (!cfg.default_deg_seq()) return cfg.deg_seq;
  std::vector<int> out(cfg.mn);
  for (int& d : out)
    d = cfg.low_deg + static_cast<int>(uniform_below(rng, cfg.high_deg - cfg.low_deg + 1));
  return out;
}

// g + v^(deg g): the pure-power fix-up applied to a single generator.  The
// exponent is matched to the generator's degree so homogeneity survives.
template <class F>
Poly<F> add_pure_power(const F& k, const Poly<F>& g, int var) {
  return add(k, g, Poly<F>::term(k, Monomial::var(var, g.degree()), k.one()));
}

// One attempt of the inverse-system branch: accept exactly when the quotient
// type matches mn.
template <class F>
AttemptOutcome<F> from_dual_attempt(const F& k, const SamplerConfig& cfg,
                                    const std::vector<DualForm<F>>& forms) {
  Ideal<F> I = annihilator_ideal(k, forms);
  auto gb = reduced_groebner_basis(I);
  Quotient<F> Q(k, gb);
  if (socle_dimension(Q) != cfg.mn)
    return {Ideal<F>(k), std::nullopt, FailureReason::type_mismatch};
  return {std::move(I), std::move(gb), std::nullopt};
}

namespace detail {

template <class F>
std::size_t mingens_count(const F& k, const GroebnerBasis<F>& gb) {
  return minimal_generators(k, gb).size();
}

// One attempt of the direct branch.  Returns success, a hard zero-ideal
// outcome (variables exhausted), or a retryable failure.
template <class F>
AttemptOutcome<F> attempt_direct(const F& k, const SamplerConfig& cfg,
                                 std::mt19937_64& rng) {
  std::vector<int> degs = degree_sequence(cfg, rng);
  std::vector<Poly<F>> gens;
  gens.reserve(degs.size());
  for (int d : degs) gens.push_back(random_homogeneous(k, d, cfg.num_terms, rng));

  Ideal<F> I(k, gens);
  auto gb = reduced_groebner_basis(I);
  std::size_t mu = mingens_count(k, gb);

  // top up to mn minimal generators, at most 10 extra draws
  if (mu < static_cast<std::size_t>(cfg.mn)) {
    for (int tries = 0; tries < 10 && mu != static_cast<std::size_t>(cfg.mn); ++tries) {
      int d = degs[uniform_below(rng, degs.size())];
      gens.push_back(random_homogeneous(k, d, cfg.num_terms, rng));
      I = Ideal<F>(k, gens);
      gb = reduced_groebner_basis(I);
      mu = mingens_count(k, gb);
    }
  }
  if (mu != static_cast<std::size_t>(cfg.mn))
    return {Ideal<F>(k), std::nullopt, FailureReason::mingens_exhausted};

  if (codimension(gb) == 3) return {std::move(I), std::move(gb), std::nullopt};
  if (cfg.num_terms == 1)
    return {Ideal<F>(k), std::nullopt, FailureReason::codim_monomial};

  // fix-up: per variable, sweep the generating set replacing g_i by
  // g_i + v^(deg g_i) cumulatively; success means codim 3 with mn minimal
  // generators
  const std::vector<Poly<F>> original = I.gens;
  for (int var = 0; var < kNumVars; ++var) {
    std::vector<Poly<F>> work = original;
    for (std::size_t i = 0; i < work.size(); ++i) {
      work[i] = add_pure_power(k, work[i], var);
      Ideal<F> J(k, work);
      auto jgb = reduced_groebner_basis(J);
      if (codimension(jgb) == 3 && mingens_count(k, jgb) == static_cast<std::size_t>(cfg.mn))
        return {std::move(J), std::move(jgb), std::nullopt};
    }
  }
  return {Ideal<F>(k), std::nullopt, FailureReason::variables_exhausted};
}

template <class F>
AttemptOutcome<F> attempt_inverse_system(const F& k, const SamplerConfig& cfg,
                                         std::mt19937_64& rng) {
  std::vector<int> degs = degree_sequence(cfg, rng);
  std::vector<DualForm<F>> forms;
  forms.reserve(degs.size());
  for (int d : degs)
    forms.push_back(DualForm<F>(random_homogeneous(k, d, cfg.num_terms, rng)));
  return from_dual_attempt(k, cfg, forms);
}

// Retry harness shared by both branches.  A hard variables-exhausted outcome
// returns the zero ideal immediately; other failures consume maxTries credits.
template <class F, class Attempt>
AttemptOutcome<F> with_retries(const F& k, const SamplerConfig& cfg,
                               std::mt19937_64& rng, Attempt&& attempt) {
  for (int num_tries = 0;; ++num_tries) {
    AttemptOutcome<F> out = attempt(k, cfg, rng);
    if (out.success() || out.failure == FailureReason::variables_exhausted) return out;
    if (num_tries >= cfg.max_tries)
      return {Ideal<F>(k), std::nullopt, FailureReason::maxtries_exhausted};
  }
}

}  // namespace detail

template <class F>
AttemptOutcome<F> generate_candidate(const F& k, const SamplerConfig& cfg,
                                     std::mt19937_64& rng) {
  return detail::with_retries<F>(k, cfg, rng, [](const F& kk, const SamplerConfig& c,
                                                 std::mt19937_64& r) {
    return detail::attempt_direct(kk, c, r);
  });
}

template <class F>
AttemptOutcome<F> generate_via_inverse_system(const F& k, const SamplerConfig& cfg,
                                              std::mt19937_64& rng) {
  return detail::with_retries<F>(k, cfg, rng, [](const F& kk, const SamplerConfig& c,
                                                 std::mt19937_64& r) {
    return detail::attempt_inverse_system(kk, c, r);
  });
}

struct ValidationResult {
  bool ok = true;
  std::string reason;

  static ValidationResult fail(std::string why) { return {false, std::move(why)}; }
};

// The post-generation checks, evaluated on the trimmed minimal generating
// set.  `type` is the socle dimension of R/I.
template <class F>
ValidationResult check_validity(const F& k, const std::vector<Poly<F>>& mingens,
                                int codim, int type, const SamplerConfig& cfg) {
  (void)k;
  if (codim != 3) return ValidationResult::fail("codimension is not 3");
  if (mingens.empty()) return ValidationResult::fail("zero ideal");
  if (cfg.strict_terms && cfg.num_terms > 0)
    for (const auto& g : mingens)
      if (g.term_count() != static_cast<std::size_t>(cfg.num_terms))
        return ValidationResult::fail("a minimal generator does not have exactly " +
                                      std::to_string(cfg.num_terms) + " terms");
  if (mingens.size() > static_cast<std::size_t>(cfg.max_m))
    return ValidationResult::fail("more than maxM minimal generators");
  if (type > cfg.max_n) return ValidationResult::fail("quotient type exceeds maxN");
  for (const auto& g : mingens)
    if (g.degree() < 2) return ValidationResult::fail("a minimal generator has degree < 2");
  return {};
}

template <class F>
ValidationResult validate_ideal(const Ideal<F>& I, const SamplerConfig& cfg) {
  const F& k = I.field;
  auto gb = reduced_groebner_basis(I);
  int codim = codimension(gb);
  if (codim != 3) return ValidationResult::fail("codimension is not 3");
  Quotient<F> Q(k, gb);
  return check_validity(k, minimal_generators(k, gb), codim, socle_dimension(Q), cfg);
}

}  // namespace codim3
