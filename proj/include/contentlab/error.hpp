#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace contentlab {

enum class Errc {
  invalid_modulus,
  size_cap,
  domain_mismatch,
  invalid_mult_set,
  invalid_monoid,
  degenerate_depth,
  syntax,
  unknown_constructor,
  io,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Error raised while reading a descriptor or element expression. `position`
/// is the 0-based offset of the offending token in the parsed text.
class ParseError : public Error {
 public:
  ParseError(Errc code, std::size_t position, std::string expected,
             const std::string& what)
      : Error(code, what), position_(position), expected_(std::move(expected)) {}
  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

/// Size caps. Exceeding one is always an error, never a silent truncation.
struct Limits {
  std::size_t max_ring = 4096;
  std::size_t max_alg = 4096;
  std::size_t max_ideals = 20000;
};

}  // namespace contentlab
