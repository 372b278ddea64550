/// @file errors.hpp
/// @brief Exception types shared by the library and the CLI.
///
/// std::invalid_argument marks bad user input; NumericFailure marks a
/// computation that could not be completed (positivity loss, failed
/// certification, an internal consistency check).
#pragma once

#include <stdexcept>
#include <string>

namespace cel {

class NumericFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cel
