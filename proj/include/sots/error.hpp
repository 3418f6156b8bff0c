#pragma once

#include <stdexcept>
#include <string>

namespace sots {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mesh, cell or subdomain description violates its invariants.
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

/// Meshes of adjacent subdomains cannot be joined conformingly.
class MeshingError : public Error {
 public:
  using Error::Error;
};

class OutOfDomain : public Error {
 public:
  using Error::Error;
};

/// A caller broke a documented precondition (mismatched meshes, zero norms, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

class AssemblyError : public Error {
 public:
  using Error::Error;
};

class ConstraintError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Conjugate gradients hit the iteration cap.
class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, double residual, int iterations)
      : Error(what), residual_(residual), iterations_(iterations) {}

  double residual() const noexcept { return residual_; }
  int iterations() const noexcept { return iterations_; }

 private:
  double residual_;
  int iterations_;
};

}  // namespace sots
