#pragma once

#include <stdexcept>
#include <string>

namespace sqpairs {

// Bad input: violated precondition, malformed argument.
class ArgumentError : public std::invalid_argument {
 public:
  explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

// Request exceeds a configured memory or work ceiling.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sqpairs
