#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hmf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Wrong vector length, weight outside the lattice, malformed argument.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A representation whose dimension exceeds the configured cap.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::int64_t dimension)
      : Error(what), dimension_(dimension) {}
  std::int64_t dimension() const noexcept { return dimension_; }

 private:
  std::int64_t dimension_;
};

// A torus map produced a non-integral image: the subgroup model does not
// match the lattice of the representation.
class EmbeddingError : public Error {
 public:
  using Error::Error;
};

// Input to a decomposition is not a nonnegative combination of irreducible
// characters.
class NotACharacterError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace hmf
