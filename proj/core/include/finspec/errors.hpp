#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace finspec {

class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Construction input does not describe a ring (n < 2, bad tables, ...).
class invalid_ring_error : public error {
public:
  using error::error;
};

/// Non-monic modulus handed to a polynomial quotient.
class unsupported_modulus_error : public error {
public:
  using error::error;
};

/// Mixed parent rings, non-closed set handed to a closed-set-only op, etc.
class domain_error : public error {
public:
  using error::error;
};

/// A configured cap was exceeded; the message names the cap.
class resource_error : public error {
public:
  using error::error;
};

/// Bounded search ended without a result (e.g. annihilator degree cap).
class search_exhausted_error : public error {
public:
  using error::error;
};

/// Ring-spec grammar rejection, with the offending input position.
class parse_error : public error {
public:
  parse_error(const std::string& what, std::size_t position)
      : error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

}  // namespace finspec
