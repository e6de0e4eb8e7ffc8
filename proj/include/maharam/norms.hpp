#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "maharam/schreier.hpp"

namespace maharam {

// Minimum-cover norm of an admissible family, plus the cardinality norm used
// by the classical construction. Values are memoized per Norm instance.
class Norm {
public:
  static std::shared_ptr<Norm> cover(Family family);
  static std::shared_ptr<Norm> schreier(const Ordinal& alpha);
  static std::shared_ptr<Norm> cardinality();

  // Exact minimum number of family members covering f (|f| <= 20).
  unsigned exact(const FiniteSet& f) const;
  // A minimum-size cover witnessing exact().
  std::vector<FiniteSet> exact_cover(const FiniteSet& f) const;
  // Left-to-right longest-member-prefix cover; an upper bound for exact().
  unsigned greedy(const FiniteSet& f) const;
  std::vector<FiniteSet> greedy_cover(const FiniteSet& f) const;

  bool is_cardinality() const { return !family_.has_value(); }
  const Family& family() const;
  std::string describe() const;

private:
  Norm() = default;

  std::optional<Family> family_;
  mutable std::mutex mu_;
  mutable std::map<FiniteSet, unsigned> memo_;
};

struct RobertsResult {
  std::vector<std::size_t> perm;   // perm[i] = index of the source set of parts[i]
  std::vector<FiniteSet> parts;    // max(parts[i]) < min(parts[i+1]), norm exactly t
  std::vector<std::uint32_t> cuts; // k_0 < ... < k_{s-1}; parts[i] = sets[perm[i]] in [k_{i-1}, k_i)
};

// Roberts' selection: requires |sets| = s and norm(sets[l]) >= s*t for all l.
// Repeatedly finds the least cutoff where some unused set's slice reaches
// norm t, breaking ties by least set index.
RobertsResult roberts_select(const std::vector<FiniteSet>& sets, unsigned s, unsigned t,
                             const Norm& nm);

// Least consecutive pair c < d of C with [c, d) disjoint from D.
// Requires norm(C) >= 3 and norm(D) = 1; existence is then guaranteed.
std::pair<std::uint32_t, std::uint32_t> find_gap(const FiniteSet& c, const FiniteSet& d,
                                                 const Norm& nm);

}  // namespace maharam
