#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace abelmax {

/// Raised when an operation would need more elements than its configured cap.
class CapacityError : public std::runtime_error
{
public:
  CapacityError(std::string const &what_cap, std::uint64_t cap, std::uint64_t requested)
    : std::runtime_error(what_cap + " exceeded: requested " + std::to_string(requested) +
                         ", cap " + std::to_string(cap)),
      cap_(cap), requested_(requested)
  {}

  std::uint64_t cap() const noexcept { return cap_; }
  std::uint64_t requested() const noexcept { return requested_; }

private:
  std::uint64_t cap_;
  std::uint64_t requested_;
};

/// Malformed text input (cycle notation, generator files, group specs).
class ParseError : public std::runtime_error
{
public:
  explicit ParseError(std::string const &msg, int line = 0)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
      line_(line)
  {}

  int line() const noexcept { return line_; }

private:
  int line_;
};

} // namespace abelmax
