#pragma once

#include <stdexcept>
#include <string>

namespace scatent {

// Domain or numerical failure; the CLI maps this to exit code 2.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem or file-format failure; the CLI maps this to exit code 3.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace scatent
