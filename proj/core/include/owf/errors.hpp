#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace owf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad word string, bad JSON, unknown suite.
class ParseError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

// A queried cell or requested sub-support lies outside a pattern's support.
class SupportError : public Error {
 public:
  using Error::Error;
};

// A windowed map needs a larger input window than the one supplied.
class WindowTooSmall : public Error {
 public:
  WindowTooSmall(const std::string& what, int required_radius)
      : Error(what + " (required radius " + std::to_string(required_radius) + ")"),
        required_radius_(required_radius) {}
  int required_radius() const noexcept { return required_radius_; }

 private:
  int required_radius_;
};

// Exhaustive operation refused by the radius guard.
class ResourceGuard : public Error {
 public:
  using Error::Error;
};

// A transversal-backed table was asked for an entry beyond its depth cap.
// Recoverable by rebuilding with a larger depth.
class InsufficientDepth : public Error {
 public:
  InsufficientDepth(const std::string& what, std::size_t needed_depth)
      : Error(what + " (needs transversal depth > " + std::to_string(needed_depth) + ")"),
        needed_depth_(needed_depth) {}
  std::size_t needed_depth() const noexcept { return needed_depth_; }

 private:
  std::size_t needed_depth_;
};

// Orbit membership could not be decided within the configured search radius.
class UndecidableMembership : public Error {
 public:
  using Error::Error;
};

class UndefinedEntry : public Error {
 public:
  using Error::Error;
};

}  // namespace owf
