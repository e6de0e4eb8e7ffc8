#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "maharam/ordinal.hpp"

namespace maharam {

// Tree orders <_n realizing a Galvin decomposition of the ordinals below
// epsilon_0:  x <_n y  iff  x < y and code(x) <= n.
// Every Schreier-family fact downstream depends on this pinned choice.

// Largest level usable by max_pred; less_n itself is unrestricted.
inline constexpr std::uint64_t kMaxGalvinLevel = 65535;

bool less_n(const Ordinal& x, const Ordinal& y, std::uint64_t n);

// max{ xi : xi <_n a }, absent iff a = 0. Requires n <= kMaxGalvinLevel.
std::optional<Ordinal> max_pred(const Ordinal& a, std::uint64_t n);

// decode(0 .. kMaxGalvinLevel), built on first use and immutable afterwards.
const std::vector<Ordinal>& decode_table();

}  // namespace maharam
