#pragma once

#include <stdexcept>
#include <string>

namespace ringlab {

enum class Errc {
  parse_error = 1,
  precondition,
  budget_exceeded,
  cap_exceeded,
  enumeration_unavailable,
  not_idempotent,
  element_not_in_ring,
  bad_argument,
  io_error,
  malformed_witness,
  internal,
};

class RingError : public std::runtime_error {
 public:
  RingError(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw RingError(code, msg);
}

}  // namespace ringlab
