#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace rpcc {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument or violated precondition.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// A linear system lost rank (degenerate denominator, kappa -> 1, ...).
class SingularSystemError : public Error {
  public:
    using Error::Error;
};

/// A scanned function returned a non-finite value; carries the abscissa.
class EvaluationError : public Error {
  public:
    EvaluationError(const std::string& what, double abscissa)
        : Error(what), abscissa_(abscissa) {}
    double abscissa() const { return abscissa_; }

  private:
    double abscissa_;
};

/// Iteration budget exhausted; carries the best estimate reached.
class ConvergenceError : public Error {
  public:
    ConvergenceError(const std::string& what, double best, int iterations)
        : Error(what), best_(best), iterations_(iterations) {}
    double best_estimate() const { return best_; }
    int iterations() const { return iterations_; }

  private:
    double best_;
    int iterations_;
};

/// Certificate pipeline: the requested branch has no root of f_n.
class NoRootError : public Error {
  public:
    using Error::Error;
};

/// Certificate pipeline: the mass family has no strictly positive members.
class EmptyPositivityError : public Error {
  public:
    using Error::Error;
};

/// Two bodies closer than the minimum-separation guard; names the pair.
class CollisionError : public Error {
  public:
    CollisionError(const std::string& what, int body_i, int body_j)
        : Error(what), body_i_(body_i), body_j_(body_j) {}
    int body_i() const { return body_i_; }
    int body_j() const { return body_j_; }

  private:
    int body_i_;
    int body_j_;
};

/// Degenerate geometry or weights (all points at origin, zero total mass).
class DegenerateError : public Error {
  public:
    using Error::Error;
};

/// Certificate file violates the schema; carries one message per issue.
class CertificateFormatError : public Error {
  public:
    CertificateFormatError(const std::string& what, std::vector<std::string> issues)
        : Error(what), issues_(std::move(issues)) {}
    const std::vector<std::string>& issues() const { return issues_; }

  private:
    std::vector<std::string> issues_;
};

}  // namespace rpcc
