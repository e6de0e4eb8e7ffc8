#include "maharam/norms.hpp"

#include <bit>
#include <limits>
#include <unordered_map>

#include "maharam/errors.hpp"

namespace maharam {

namespace {

constexpr unsigned kInf = std::numeric_limits<unsigned>::max();

// All nonempty members of the family inside f, as position bitmasks. Complete
// because the family is hereditary, so every prefix of a member is a member.
std::vector<std::uint32_t> member_masks(const Family& fam, const FiniteSet& f) {
  const auto& elems = f.elements();
  std::vector<std::uint32_t> found;
  std::vector<std::uint32_t> current;
  auto dfs = [&](auto&& self, std::uint32_t mask, std::size_t next) -> void {
    for (std::size_t i = next; i < elems.size(); ++i) {
      current.push_back(elems[i]);
      if (fam.contains(FiniteSet(current))) {
        std::uint32_t m = mask | (1u << i);
        found.push_back(m);
        self(self, m, i + 1);
      }
      current.pop_back();
    }
  };
  dfs(dfs, 0, 0);
  return found;
}

std::vector<std::uint32_t> maximal_masks(std::vector<std::uint32_t> masks) {
  std::vector<std::uint32_t> out;
  for (auto m : masks) {
    bool dominated = false;
    for (auto o : masks)
      if (o != m && (m & ~o) == 0) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(m);
  }
  return out;
}

struct CoverSolver {
  const std::vector<std::uint32_t>& pieces;
  std::unordered_map<std::uint32_t, unsigned> memo;

  unsigned solve(std::uint32_t mask) {
    if (!mask) return 0;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    unsigned low = std::countr_zero(mask);
    unsigned best = kInf;
    for (auto p : pieces) {
      if (!(p >> low & 1)) continue;
      unsigned sub = solve(mask & ~p);
      if (sub != kInf && sub + 1 < best) best = sub + 1;
    }
    memo[mask] = best;
    return best;
  }
};

}  // namespace

std::shared_ptr<Norm> Norm::cover(Family family) {
  auto n = std::shared_ptr<Norm>(new Norm());
  n->family_ = std::move(family);
  return n;
}

std::shared_ptr<Norm> Norm::schreier(const Ordinal& alpha) {
  return cover(Family::schreier(alpha));
}

std::shared_ptr<Norm> Norm::cardinality() { return std::shared_ptr<Norm>(new Norm()); }

const Family& Norm::family() const {
  if (!family_) raise(ErrorCode::Precondition, "cardinality norm has no family");
  return *family_;
}

std::string Norm::describe() const {
  return family_ ? family_->describe() : std::string("card");
}

unsigned Norm::exact(const FiniteSet& f) const {
  if (is_cardinality()) return static_cast<unsigned>(f.size());
  if (f.empty()) return 0;
  if (f.size() > 20) raise(ErrorCode::Limit, "norm_exact limited to 20 elements");
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(f);
    if (it != memo_.end()) return it->second;
  }
  auto pieces = maximal_masks(member_masks(*family_, f));
  CoverSolver solver{pieces, {}};
  unsigned val = solver.solve((1u << f.size()) - 1);
  if (val == kInf)
    raise(ErrorCode::Precondition, "family does not cover " + f.to_string());
  std::lock_guard<std::mutex> lock(mu_);
  memo_.emplace(f, val);
  return val;
}

std::vector<FiniteSet> Norm::exact_cover(const FiniteSet& f) const {
  std::vector<FiniteSet> out;
  if (f.empty()) return out;
  if (is_cardinality()) {
    for (auto v : f.elements()) out.push_back(FiniteSet({v}));
    return out;
  }
  if (f.size() > 20) raise(ErrorCode::Limit, "norm_exact limited to 20 elements");
  auto pieces = maximal_masks(member_masks(*family_, f));
  CoverSolver solver{pieces, {}};
  std::uint32_t mask = (1u << f.size()) - 1;
  unsigned val = solver.solve(mask);
  if (val == kInf)
    raise(ErrorCode::Precondition, "family does not cover " + f.to_string());
  const auto& elems = f.elements();
  while (mask) {
    unsigned low = std::countr_zero(mask);
    for (auto p : pieces) {
      if (!(p >> low & 1)) continue;
      if (solver.solve(mask & ~p) + 1 == solver.solve(mask)) {
        std::vector<std::uint32_t> piece;
        for (std::size_t i = 0; i < elems.size(); ++i)
          if (p >> i & 1 && mask >> i & 1) piece.push_back(elems[i]);
        out.push_back(FiniteSet(std::move(piece)));
        mask &= ~p;
        break;
      }
    }
  }
  return out;
}

std::vector<FiniteSet> Norm::greedy_cover(const FiniteSet& f) const {
  std::vector<FiniteSet> out;
  if (is_cardinality()) {
    for (auto v : f.elements()) out.push_back(FiniteSet({v}));
    return out;
  }
  std::vector<std::uint32_t> rest = f.elements();
  while (!rest.empty()) {
    std::vector<std::uint32_t> piece{rest[0]};
    if (!family_->contains(FiniteSet(piece)))
      raise(ErrorCode::Precondition,
            "family does not cover {" + std::to_string(rest[0]) + "}");
    std::size_t taken = 1;
    while (taken < rest.size()) {
      piece.push_back(rest[taken]);
      if (!family_->contains(FiniteSet(piece))) {
        piece.pop_back();
        break;
      }
      ++taken;
    }
    out.push_back(FiniteSet(piece));
    rest.erase(rest.begin(), rest.begin() + taken);
  }
  return out;
}

unsigned Norm::greedy(const FiniteSet& f) const {
  return static_cast<unsigned>(greedy_cover(f).size());
}

RobertsResult roberts_select(const std::vector<FiniteSet>& sets, unsigned s, unsigned t,
                             const Norm& nm) {
  if (sets.size() != s || s == 0 || t == 0)
    raise(ErrorCode::Precondition, "roberts_select requires |sets| = s >= 1 and t >= 1");
  for (std::size_t l = 0; l < sets.size(); ++l) {
    unsigned n = nm.exact(sets[l]);
    if (n < s * t)
      raise(ErrorCode::Precondition, "roberts_select: norm of set " + std::to_string(l) +
                                         " is " + std::to_string(n) + " < s*t = " +
                                         std::to_string(s * t));
  }
  RobertsResult result;
  std::vector<bool> used(s, false);
  std::uint32_t k_prev = 0;
  std::uint32_t k_max = 0;
  for (const auto& set : sets) k_max = std::max(k_max, set.max() + 1);
  for (unsigned i = 0; i < s; ++i) {
    bool placed = false;
    for (std::uint32_t k = k_prev + 1; k <= k_max && !placed; ++k) {
      for (std::size_t l = 0; l < s; ++l) {
        if (used[l]) continue;
        FiniteSet slice = sets[l].slice(k_prev, k);
        if (nm.exact(slice) >= t) {
          result.perm.push_back(l);
          result.parts.push_back(std::move(slice));
          result.cuts.push_back(k);
          used[l] = true;
          k_prev = k;
          placed = true;
          break;
        }
      }
    }
    if (!placed)
      raise(ErrorCode::Precondition,
            "roberts_select: no slice of norm " + std::to_string(t) + " found at stage " +
                std::to_string(i));
  }
  return result;
}

std::pair<std::uint32_t, std::uint32_t> find_gap(const FiniteSet& c, const FiniteSet& d,
                                                 const Norm& nm) {
  unsigned nc = nm.exact(c);
  if (nc < 3)
    raise(ErrorCode::Precondition,
          "find_gap requires norm(C) >= 3, got " + std::to_string(nc));
  unsigned nd = nm.exact(d);
  if (nd != 1)
    raise(ErrorCode::Precondition,
          "find_gap requires norm(D) = 1, got " + std::to_string(nd));
  const auto& elems = c.elements();
  for (std::size_t i = 0; i + 1 < elems.size(); ++i)
    if (d.slice(elems[i], elems[i + 1]).empty()) return {elems[i], elems[i + 1]};
  raise(ErrorCode::Internal, "gap guaranteed by the norm bounds was not found");
}

}  // namespace maharam
