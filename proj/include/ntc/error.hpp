#pragma once

#include <stdexcept>
#include <string>

namespace ntc {

// Error taxonomy shared by the library and the CLI exit-code mapping.
enum class errc {
  invalid_argument,   // malformed input (bad flags, bad curve text, ...)
  non_hyperbolic,     // chi(S) >= 0
  unsupported,        // valid input outside the implemented families
  degenerate,         // xi(S) < 1, no essential curves
  corner_violation,   // coordinate vector fails a triangle's corner conditions
  zero_vector,
  not_flippable,
  tightening_stuck,
  not_half_twistable,
  non_stabilizing,
  not_in_kernel,
  kernel_not_preserved,
  budget_exceeded,
  infeasible_certified,
  internal,
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool ok, errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

} // namespace ntc
