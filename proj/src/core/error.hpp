#ifndef ALGINT_CORE_ERROR_HPP
#define ALGINT_CORE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace algint {

// Error taxonomy shared by the core and the C boundary. Every core
// exception carries one of these codes so the C API can translate
// without string matching.
enum class errc {
  invalid_argument,
  parse,
  mode_mismatch,
  algebra_mismatch,
  index_out_of_range,
  singular,
  no_solution,
  not_self_conjugated,
  no_invertible_intertwiner,
  completeness_violation,
  not_nilpotent,
  not_injective,
  not_homomorphism,
  invalid_cocycle,
  check_failed,
  io,
  internal,
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& msg) {
  throw error(code, msg);
}

} // namespace algint

#endif
