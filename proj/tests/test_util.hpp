#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "maharam/ordinal.hpp"

namespace maharam::testutil {

using Rng = std::mt19937_64;

inline std::uint64_t pick(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return lo + rng() % (hi - lo + 1);
}

// Random normalized CNF ordinal with tower depth <= depth and coefficients
// <= max_coeff.
inline Ordinal random_ordinal(Rng& rng, unsigned depth, std::uint64_t max_coeff = 4,
                              unsigned max_terms = 3) {
  if (depth == 0 || pick(rng, 0, 4) == 0) return Ordinal();
  unsigned nterms = static_cast<unsigned>(pick(rng, 1, max_terms));
  std::vector<Ordinal> exps;
  for (unsigned i = 0; i < nterms; ++i) exps.push_back(random_ordinal(rng, depth - 1, max_coeff));
  std::sort(exps.begin(), exps.end(), [](const Ordinal& a, const Ordinal& b) { return b < a; });
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  std::vector<Term> terms;
  for (const auto& e : exps) terms.push_back({e, pick(rng, 1, max_coeff)});
  return Ordinal::from_terms(std::move(terms));
}

// All ordinals below w^(max_exp+1) whose coefficients are <= max_coeff,
// i.e. sums w^max_exp*c_k + ... + w^0*c_0 over bounded digit vectors.
inline std::vector<Ordinal> digit_universe(unsigned max_exp, std::uint64_t max_coeff) {
  std::vector<Ordinal> out;
  std::vector<std::uint64_t> digits(max_exp + 1, 0);
  for (;;) {
    std::vector<Term> terms;
    for (int e = static_cast<int>(max_exp); e >= 0; --e)
      if (digits[e]) terms.push_back({Ordinal::from_nat(static_cast<std::uint64_t>(e)), digits[e]});
    out.push_back(Ordinal::from_terms(std::move(terms)));
    int pos = 0;
    while (pos <= static_cast<int>(max_exp) && digits[pos] == max_coeff) digits[pos++] = 0;
    if (pos > static_cast<int>(max_exp)) break;
    ++digits[pos];
  }
  return out;
}

}  // namespace maharam::testutil
