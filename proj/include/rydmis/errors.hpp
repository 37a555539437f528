// This code is part of rydmis.
//
// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#ifndef RYDMIS_ERRORS_HPP
#define RYDMIS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rydmis {

// Problem size exceeds a hard cap (exact MIS vertex cap, density-matrix cap).
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// A formula degenerates for this input (diverging radius, coincident atoms).
class SingularInputError : public std::domain_error {
 public:
  explicit SingularInputError(const std::string& what) : std::domain_error(what) {}
};

// A state object violates its invariant (e.g. unnormalized beyond tolerance).
class InvalidStateError : public std::runtime_error {
 public:
  explicit InvalidStateError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rydmis

#endif
