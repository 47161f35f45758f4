#pragma once

#include <stdexcept>
#include <string>

namespace bentga {

// Input outside the supported size or parameter domain (n too large, bad epsilon...).
class RangeError : public std::out_of_range {
 public:
  explicit RangeError(const std::string& what) : std::out_of_range(what) {}
};

// Structurally invalid input (non-bijective permutation, mismatched sizes, bad text).
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Output location cannot be created or written.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bentga
