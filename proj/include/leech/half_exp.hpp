#pragma once

#include <compare>
#include <string>

namespace leech {

// Exponent on the q^{1/2} grid, stored as twice its value so that every
// exponent the library touches is an exact integer. Level-1 forms use even
// twice values only; the theta side uses the full grid.
struct HalfExp {
  long twice = 0;

  constexpr HalfExp() = default;
  constexpr explicit HalfExp(long twice_value) : twice(twice_value) {}

  static constexpr HalfExp integer(long n) { return HalfExp(2 * n); }
  static constexpr HalfExp half(long twice_value) { return HalfExp(twice_value); }

  constexpr bool is_integer() const { return twice % 2 == 0; }
  constexpr long int_part() const { return twice / 2; }

  friend constexpr HalfExp operator+(HalfExp a, HalfExp b) { return HalfExp(a.twice + b.twice); }
  friend constexpr HalfExp operator-(HalfExp a, HalfExp b) { return HalfExp(a.twice - b.twice); }
  friend constexpr HalfExp operator-(HalfExp a) { return HalfExp(-a.twice); }
  friend constexpr auto operator<=>(HalfExp a, HalfExp b) = default;

  // "3", "-2", "5/2", ...
  std::string str() const {
    if (is_integer()) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
  }
};

inline HalfExp min(HalfExp a, HalfExp b) { return a < b ? a : b; }
inline HalfExp max(HalfExp a, HalfExp b) { return a < b ? b : a; }

}  // namespace leech
