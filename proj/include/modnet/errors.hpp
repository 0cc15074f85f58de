#pragma once

#include <stdexcept>
#include <string>

namespace modnet {

// Invalid argument values (bad probabilities, mismatched vertex sets, ...).
using DomainError = std::domain_error;

// Malformed input data (negative weights, unparsable files, ...).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Input exceeds an enumeration/size limit.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace modnet
