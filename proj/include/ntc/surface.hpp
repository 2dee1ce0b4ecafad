#pragma once

#include <cstdint>
#include <string>

#include "ntc/bigint.hpp"
#include "ntc/error.hpp"

namespace ntc {

/// Orientable surface of genus g with n >= 1 punctures and chi(S) < 0.
struct Surface {
  std::int64_t genus = 0;
  std::int64_t punctures = 0;

  std::int64_t euler() const { return 2 - 2 * genus - punctures; }
  std::int64_t abs_euler() const { return -euler(); }
  /// xi(S) = 3g + n - 3, the maximal number of disjoint distinct curves.
  std::int64_t xi() const { return 3 * genus + punctures - 3; }

  bool operator==(const Surface&) const = default;

  std::string token() const { return std::to_string(genus) + "," + std::to_string(punctures); }
};

/// Derived constants. All exact; fixing_power and triviality_power can be huge.
struct SurfaceConstants {
  std::int64_t xi = 0;
  BigInt fixing_power;      // N = xi(S)!
  std::int64_t order_bound = 0;  // 12|chi|, max order of a mapping class of a cusped piece
  BigInt triviality_power;  // k = lcm(1..12|chi|); f^k trivial iff f finite order
};

Surface make_surface(std::int64_t genus, std::int64_t punctures);
Surface parse_surface(const std::string& token);
SurfaceConstants constants(const Surface& s);

} // namespace ntc
