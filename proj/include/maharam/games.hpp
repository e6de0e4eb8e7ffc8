#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "maharam/norms.hpp"
#include "maharam/ordinal.hpp"
#include "maharam/schreier.hpp"

namespace maharam {

// Partial function u with u(k) < 2^k on a finite domain.
class PartialFn {
public:
  PartialFn() = default;
  explicit PartialFn(std::map<std::uint32_t, std::uint64_t> entries);
  static PartialFn single(std::uint32_t k, std::uint64_t v);

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const std::map<std::uint32_t, std::uint64_t>& entries() const { return entries_; }
  FiniteSet domain() const;
  std::optional<std::uint64_t> at(std::uint32_t k) const;

  PartialFn restrict_below(std::uint32_t m) const;
  PartialFn restrict_from(std::uint32_t m) const;
  // Requires compatibility.
  PartialFn union_with(const PartialFn& o) const;

  bool operator==(const PartialFn& o) const = default;
  bool operator<(const PartialFn& o) const { return entries_ < o.entries_; }
  std::string to_string() const;

private:
  std::map<std::uint32_t, std::uint64_t> entries_;
};

// u and v agree on the intersection of their domains.
bool compatible(const PartialFn& u, const PartialFn& v);

enum class GameKind { SchreierG, IncompH };

enum class Outcome { Ongoing, IWins, IIWins, IllegalI, IllegalII };

std::string outcome_name(Outcome o);

struct MoveII {
  std::uint32_t integer = 0;  // SchreierG
  PartialFn pfn;              // IncompH
};

struct Round {
  Ordinal i_move;
  bool has_ii = false;
  MoveII ii_move;
};

struct Transcript {
  GameKind kind;
  std::vector<Round> rounds;
  Outcome outcome = Outcome::Ongoing;
  int illegal_round = -1;
  std::string note;
};

// G_bound(fam) of the family game: Player I plays a strictly decreasing
// sequence of ordinals <= bound, Player II an increasing sequence of integers
// whose set stays in fam. The first player who cannot move loses.
struct SchreierGameSpec {
  Ordinal bound;
  Family fam;
};

// H_bound(P_alpha): Player I as above, Player II plays pairwise incompatible
// elements of P_alpha = { u : ||dom(u)||_alpha <= 1 }.
struct IncompGameSpec {
  Ordinal bound;
  Ordinal alpha;
  std::shared_ptr<Norm> norm;  // the alpha-norm; built by make() if absent

  static IncompGameSpec make(const Ordinal& bound, const Ordinal& alpha);
};

class PlayerI {
public:
  virtual ~PlayerI() = default;
  // The next ordinal, or nullopt when the strategy cannot move.
  virtual std::optional<Ordinal> next(const Transcript& t) = 0;
};

class PlayerII {
public:
  virtual ~PlayerII() = default;
  virtual std::optional<MoveII> next(const Transcript& t) = 0;
};

Transcript play(const SchreierGameSpec& spec, PlayerI& one, PlayerII& two, unsigned max_rounds);
Transcript play(const IncompGameSpec& spec, PlayerI& one, PlayerII& two, unsigned max_rounds);

// Re-checks every rule of a finished transcript from scratch; used by the
// verification suites to audit the referee itself.
bool recheck(const SchreierGameSpec& spec, const Transcript& t);
bool recheck(const IncompGameSpec& spec, const Transcript& t);

// Player I in G_alpha(S_alpha): start at alpha, then answer n with the
// largest <_n-predecessor of the current ordinal. Requires alpha > 0.
std::unique_ptr<PlayerI> strategy_I_schreier(const Ordinal& alpha);

// Player II in G_alphastar(S_alpha) for alphastar < alpha: track Player I's
// ordinals with least admissible Galvin levels.
std::unique_ptr<PlayerII> strategy_II_schreier(const Ordinal& alphastar, const Ordinal& alpha);

// Player I in G_{(alpha+1)(beta+1)-1}(S (+) T) from winning strategies for
// G_alpha(S) and G_beta(T); plays lexicographic pairs encoded as
// (alpha+1)*b + x. make_sigma produces a fresh inner-run strategy per block.
std::unique_ptr<PlayerI> strategy_I_oplus(std::function<std::unique_ptr<PlayerI>()> make_sigma,
                                          std::unique_ptr<PlayerI> tau, const Ordinal& alpha,
                                          const Ordinal& beta, Family s);

// Player II in H_xi(P_alpha) for xi < w^alpha; survives any strictly
// decreasing Player I sequence below xi.
std::unique_ptr<PlayerII> strategy_II_Palpha(const Ordinal& alpha);

// Player I in H_{w^alpha}(P_alpha); wins via parallel recursive runs with
// natural-sum bookkeeping. Requires alpha > 0.
std::unique_ptr<PlayerI> strategy_I_Palpha(const Ordinal& alpha);

// Exact well-founded rank of the tree of increasing sequences with range in
// fam, truncated to subsets of [0, universe_bound); universe_bound <= 16.
unsigned rank_finite(const Family& fam, unsigned universe_bound);

}  // namespace maharam
