#pragma once

#include <stdexcept>
#include <string>

namespace magicpath {

// Bad input: malformed grids, unsupported orders, inconsistent records.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Filesystem failures while reading or writing artifacts.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace magicpath
