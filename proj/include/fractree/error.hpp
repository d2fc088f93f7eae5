#pragma once

#include <stdexcept>
#include <string>

namespace fractree {

// Parameter and precondition failures. The CLI maps these to exit code 2.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class BadN : public UsageError {
public:
  using UsageError::UsageError;
};

class InvalidVertex : public UsageError {
public:
  using UsageError::UsageError;
};

class InvalidVertexSet : public UsageError {
public:
  using UsageError::UsageError;
};

class DomainViolation : public UsageError {
public:
  using UsageError::UsageError;
};

class DisconnectedGraph : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Resource caps. The CLI maps these to exit code 3.
class ResourceCap : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class SizeCap : public ResourceCap {
public:
  using ResourceCap::ResourceCap;
};

class OverflowCap : public ResourceCap {
public:
  using ResourceCap::ResourceCap;
};

} // namespace fractree
