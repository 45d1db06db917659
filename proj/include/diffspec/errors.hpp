#pragma once

#include <stdexcept>
#include <string>

namespace diffspec {

/// Thrown when an operation would exceed a documented size/time cap
/// (full-field scans, subgroup enumerations, oversized solution lists).
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an internal consistency check fails. Never fires on valid
/// inputs; seeing one means a bug, not a caller error.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace diffspec
