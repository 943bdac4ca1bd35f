#pragma once

// Shared helpers for the test suites: random generators for ordinals,
// finite posets and poset expressions, plus the sampling oracles used to
// validate closed-form suprema.

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "wqo/finite_poset.hpp"
#include "wqo/ordinal.hpp"
#include "wqo/poset_expr.hpp"

namespace wqo::testing {

using Rng = std::mt19937_64;

inline std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

// Random ordinal whose exponents are themselves random ordinals of depth
// `depth` (depth 0 => finite).  max_terms/max_coeff bound the CNF size.
inline Ordinal random_ordinal(Rng& rng, int depth, int max_terms = 3, int max_coeff = 5,
                              int max_finite = 9) {
  if (depth <= 0) return Ordinal(BigNat(uniform(rng, 0, max_finite)));
  const int nterms = static_cast<int>(uniform(rng, 0, max_terms));
  std::vector<Ordinal> exps;
  for (int i = 0; i < nterms; ++i)
    exps.push_back(random_ordinal(rng, depth - 1, max_terms, max_coeff, max_finite));
  std::sort(exps.begin(), exps.end(), [](const Ordinal& a, const Ordinal& b) { return b < a; });
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  Ordinal::Terms terms;
  for (const auto& e : exps)
    terms.push_back(Ordinal::Term{e, BigNat(uniform(rng, 1, max_coeff))});
  return Ordinal::from_terms(std::move(terms));
}

// Random ordinal below w^w (finite exponents <= max_exp).
inline Ordinal random_below_omega_omega(Rng& rng, int max_exp = 4, int max_coeff = 5) {
  Ordinal::Terms terms;
  for (int e = max_exp; e >= 0; --e) {
    if (uniform(rng, 0, 2) == 0) {
      terms.push_back(
          Ordinal::Term{Ordinal(BigNat(static_cast<unsigned>(e))), BigNat(uniform(rng, 1, max_coeff))});
    }
  }
  return Ordinal::from_terms(std::move(terms));
}

// Least upper bound of a strictly increasing sampled sequence whose CNF
// shape stabilises: either one coefficient grows without bound (sup bumps
// that exponent by one) or the first unstable exponent grows (recurse on
// the exponents).  Throws when no stable shape is detected.
inline Ordinal limit_of_samples(const std::vector<Ordinal>& samples) {
  if (samples.size() < 4) throw std::invalid_argument("limit_of_samples: need more samples");
  for (std::size_t i = 1; i < samples.size(); ++i)
    if (!(samples[i - 1] < samples[i]))
      throw std::invalid_argument("limit_of_samples: samples not strictly increasing");

  // work on the tail half, where the shape should have settled
  const std::size_t from = samples.size() / 2;
  const Ordinal& probe = samples[from];

  // longest common prefix of CNF terms across the tail
  std::size_t prefix = probe.terms().size();
  for (std::size_t i = from + 1; i < samples.size(); ++i) {
    const auto& t = samples[i].terms();
    std::size_t k = 0;
    while (k < prefix && k < t.size() && t[k].exp == probe.terms()[k].exp &&
           t[k].coeff == probe.terms()[k].coeff)
      ++k;
    prefix = k;
  }
  Ordinal stable = Ordinal::from_terms(
      Ordinal::Terms(probe.terms().begin(), probe.terms().begin() + prefix));

  // inspect the first position past the prefix
  std::vector<Ordinal> exps;
  std::vector<BigNat> coeffs;
  for (std::size_t i = from; i < samples.size(); ++i) {
    const auto& t = samples[i].terms();
    if (t.size() <= prefix) throw std::invalid_argument("limit_of_samples: shape collapsed");
    exps.push_back(t[prefix].exp);
    coeffs.push_back(t[prefix].coeff);
  }
  bool same_exp = true;
  for (const auto& e : exps) same_exp = same_exp && e == exps.front();
  if (same_exp) {
    for (std::size_t i = 1; i < coeffs.size(); ++i)
      if (!(coeffs[i - 1] < coeffs[i]))
        throw std::invalid_argument("limit_of_samples: coefficient not growing");
    return add(stable, omega_pow(add(exps.front(), Ordinal(BigNat(1)))));
  }
  return add(stable, omega_pow(limit_of_samples(exps)));
}

// Random poset on n elements: a random DAG over a shuffled order, closed
// transitively.
inline FinitePoset random_poset(Rng& rng, int n, double edge_prob = 0.35) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<bool> leq(static_cast<std::size_t>(n) * n, false);
  auto at = [&](int a, int b) -> decltype(leq)::reference {
    return leq[static_cast<std::size_t>(a) * n + b];
  };
  for (int i = 0; i < n; ++i) at(i, i) = true;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) < edge_prob) at(perm[i], perm[j]) = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (at(i, k))
        for (int j = 0; j < n; ++j)
          if (at(k, j)) at(i, j) = true;
  return FinitePoset(n, std::move(leq));
}

// Random expression with a finite denotation, at most max_elements elements
// and all symbolic invariants exact.  Multiset/Seq/Tree never appear (those
// denote infinite posets over non-empty bases).
inline PosetExpr random_finitary_expr(Rng& rng, std::uint64_t max_elements, int depth = 3) {
  const std::uint64_t kind = depth <= 0 ? uniform(rng, 0, 1) : uniform(rng, 0, 5);
  auto sub_budget = [&](std::uint64_t parts) {
    return std::max<std::uint64_t>(1, max_elements / std::max<std::uint64_t>(parts, 1));
  };
  switch (kind) {
    case 0:
      return PosetExpr::ord(Ordinal(uniform(rng, 0, std::min<std::uint64_t>(max_elements, 5))));
    case 1:
      return PosetExpr::antichain(uniform(rng, 0, std::min<std::uint64_t>(max_elements, 4)));
    case 2: {
      const std::uint64_t parts = uniform(rng, 2, 3);
      std::vector<PosetExpr> cs;
      for (std::uint64_t i = 0; i < parts; ++i)
        cs.push_back(random_finitary_expr(rng, sub_budget(parts), depth - 1));
      return PosetExpr::lex_sum(std::move(cs));
    }
    case 3: {
      const std::uint64_t parts = uniform(rng, 2, 3);
      std::vector<PosetExpr> cs;
      for (std::uint64_t i = 0; i < parts; ++i)
        cs.push_back(random_finitary_expr(rng, sub_budget(parts), depth - 1));
      return PosetExpr::disjoint_sum(std::move(cs));
    }
    case 4:
      return PosetExpr::direct_prod(random_finitary_expr(rng, sub_budget(4), depth - 1),
                                    random_finitary_expr(rng, 4, depth - 1));
    default: {
      const std::uint64_t parts = uniform(rng, 2, 3);
      std::vector<PosetExpr> cs;
      for (std::uint64_t i = 0; i < parts; ++i)
        cs.push_back(random_finitary_expr(rng, depth > 1 ? 4 : 3, depth - 1));
      return PosetExpr::cart_prod(std::move(cs));
    }
  }
}

// Random expression over the full grammar (may denote infinite posets).
inline PosetExpr random_expr(Rng& rng, int depth = 3) {
  const std::uint64_t kind = depth <= 0 ? uniform(rng, 0, 2) : uniform(rng, 0, 9);
  auto sub = [&] { return random_expr(rng, depth - 1); };
  switch (kind) {
    case 0: {
      // finite ordinals, w, w^2, w*2+1, w^w
      switch (uniform(rng, 0, 4)) {
        case 0: return PosetExpr::ord(Ordinal(uniform(rng, 0, 5)));
        case 1: return PosetExpr::ord(Ordinal::omega());
        case 2: return PosetExpr::ord(omega_pow(Ordinal(uniform(rng, 1, 3))));
        case 3:
          return PosetExpr::ord(add(mul(Ordinal::omega(), Ordinal(uniform(rng, 1, 3))),
                                    Ordinal(uniform(rng, 0, 2))));
        default: return PosetExpr::ord(omega_pow(Ordinal::omega()));
      }
    }
    case 1: return PosetExpr::antichain(uniform(rng, 0, 4));
    case 2: return PosetExpr::rado();
    case 3: return PosetExpr::lex_sum({sub(), sub()});
    case 4: return PosetExpr::disjoint_sum({sub(), sub()});
    case 5: return PosetExpr::direct_prod(sub(), sub());
    case 6: {
      std::vector<PosetExpr> cs{sub(), sub()};
      if (uniform(rng, 0, 1)) cs.push_back(sub());
      return PosetExpr::cart_prod(std::move(cs));
    }
    case 7: return PosetExpr::multiset(sub());
    case 8: return PosetExpr::seq(sub());
    default: return PosetExpr::tree(sub());
  }
}

}  // namespace wqo::testing
