#pragma once

#include <stdexcept>
#include <string>

namespace srdg {

// Malformed documents and instances that break a model invariant.
class InvalidInput : public std::runtime_error {
 public:
  explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

// A configured search budget or memory cap was exceeded. Never a verdict.
class ResourceLimit : public std::runtime_error {
 public:
  explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

// The external MILP solver could not be run, or its answer could not be used.
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace srdg
