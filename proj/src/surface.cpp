#include "ntc/surface.hpp"

namespace ntc {

Surface make_surface(std::int64_t genus, std::int64_t punctures) {
  require(genus >= 0, errc::invalid_argument, "genus must be nonnegative");
  require(punctures != 0, errc::unsupported, "closed surfaces are not supported");
  require(punctures > 0, errc::invalid_argument, "puncture count must be positive");
  Surface s{genus, punctures};
  require(s.euler() < 0, errc::non_hyperbolic, "chi(S) = " + std::to_string(s.euler()) + " >= 0");
  require(s.xi() >= 1, errc::degenerate,
          "xi(S) = " + std::to_string(s.xi()) + " < 1: surface carries no essential curves");
  return s;
}

Surface parse_surface(const std::string& token) {
  auto comma = token.find(',');
  require(comma != std::string::npos, errc::invalid_argument, "surface token must be \"g,n\"");
  std::int64_t g = 0, n = 0;
  try {
    g = std::stoll(token.substr(0, comma));
    n = std::stoll(token.substr(comma + 1));
  } catch (const std::exception&) {
    fail(errc::invalid_argument, "surface token must be \"g,n\": " + token);
  }
  return make_surface(g, n);
}

SurfaceConstants constants(const Surface& s) {
  SurfaceConstants c;
  c.xi = s.xi();
  c.fixing_power = factorial_big(c.xi);
  c.order_bound = 12 * s.abs_euler();
  c.triviality_power = lcm_range(1, c.order_bound);
  return c;
}

} // namespace ntc
