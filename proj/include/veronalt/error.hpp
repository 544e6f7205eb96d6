#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace veronalt {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed term text, group files, identity files.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A requested total degree lies beyond the configured cap.
class CapExceeded : public Error {
 public:
  CapExceeded(std::size_t degree, std::size_t cap, std::size_t rank)
      : Error("total degree " + std::to_string(degree) + " exceeds the degree cap " +
              std::to_string(cap) + " for rank " + std::to_string(rank) +
              "; raise it with --cap"),
        degree_(degree),
        cap_(cap) {}
  std::size_t degree() const noexcept { return degree_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t degree_;
  std::size_t cap_;
};

}  // namespace veronalt
