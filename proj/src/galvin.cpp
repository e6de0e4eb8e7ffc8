#include "maharam/galvin.hpp"

#include "maharam/errors.hpp"

namespace maharam {

bool less_n(const Ordinal& x, const Ordinal& y, std::uint64_t n) {
  return x < y && code_leq(x, n);
}

const std::vector<Ordinal>& decode_table() {
  static const std::vector<Ordinal> table = [] {
    std::vector<Ordinal> t;
    t.reserve(kMaxGalvinLevel + 1);
    for (std::uint64_t m = 0; m <= kMaxGalvinLevel; ++m) t.push_back(decode(m));
    return t;
  }();
  return table;
}

std::optional<Ordinal> max_pred(const Ordinal& a, std::uint64_t n) {
  if (a.is_zero()) return std::nullopt;
  if (n > kMaxGalvinLevel)
    raise(ErrorCode::Limit, "Galvin level " + std::to_string(n) + " exceeds the supported cap");
  const auto& table = decode_table();
  const Ordinal* best = nullptr;
  for (std::uint64_t m = 0; m <= n; ++m) {
    const Ordinal& cand = table[m];
    if (cand < a && (!best || *best < cand)) best = &cand;
  }
  return *best;  // m = 0 decodes to 0, which is below any a > 0
}

}  // namespace maharam
