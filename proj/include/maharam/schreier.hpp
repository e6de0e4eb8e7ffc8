#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "maharam/ordinal.hpp"

namespace maharam {

class Norm;

// Finite subset of N kept as a strictly increasing list.
class FiniteSet {
public:
  FiniteSet() = default;
  // Accepts any order; duplicates are rejected.
  explicit FiniteSet(std::vector<std::uint32_t> elems);
  static FiniteSet from_csv(const std::string& csv);

  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const std::vector<std::uint32_t>& elements() const { return elems_; }
  std::uint32_t min() const;
  std::uint32_t max() const;
  bool contains(std::uint32_t v) const;
  bool is_subset_of(const FiniteSet& o) const;

  FiniteSet union_with(const FiniteSet& o) const;
  FiniteSet minus(const FiniteSet& o) const;
  FiniteSet intersect(const FiniteSet& o) const;
  // Elements in [lo, hi).
  FiniteSet slice(std::uint32_t lo, std::uint32_t hi) const;
  FiniteSet with(std::uint32_t v) const;

  bool operator==(const FiniteSet& o) const = default;
  bool operator<(const FiniteSet& o) const { return elems_ < o.elems_; }
  std::string to_string() const;

private:
  std::vector<std::uint32_t> elems_;
};

// A <=_s B: equal sizes and pointwise <= under the increasing enumerations.
bool leq_s(const FiniteSet& a, const FiniteSet& b);

struct MemberResult {
  bool member = false;
  // For Schreier families: the canonical chain alpha_0, ..., alpha_j computed
  // greedily (j = |F| when member; the partial chain otherwise).
  std::vector<Ordinal> witness;
};

// An admissible family of finite sets given by a membership procedure.
class Family {
public:
  // S_alpha; requires alpha > 0.
  static Family schreier(const Ordinal& alpha);
  // { S u T : S in s, T in t }, decided by exact split search (|F| <= 20).
  static Family oplus(const Family& s, const Family& t);
  // { F : ||F||_s <= n }; requires n >= 1.
  static Family power(const Family& s, unsigned n);
  static Family norm_ball(std::shared_ptr<Norm> norm, unsigned threshold);

  MemberResult member(const FiniteSet& f) const;
  bool contains(const FiniteSet& f) const { return member(f).member; }

  std::string describe() const;

  struct Impl;

private:
  std::shared_ptr<const Impl> impl_;
};

Family oplus(const Family& s, const Family& t);

}  // namespace maharam
