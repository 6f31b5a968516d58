#ifndef DACOSTA_ERROR_HPP
#define DACOSTA_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dacosta {

/// Base of every recoverable error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an invariant that the mathematics guarantees is observed to
/// fail. Always a bug in this code, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error("syntax error at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class UnboundMetaVar : public Error {
 public:
  explicit UnboundMetaVar(std::string name)
      : Error("unbound metavariable " + name), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class UnknownAxiom : public Error {
 public:
  UnknownAxiom(const std::string& name, const std::string& system)
      : Error("axiom " + name + " is not part of system " + system) {}
};

class UnknownSystem : public Error {
 public:
  explicit UnknownSystem(const std::string& name) : Error("unknown system " + name) {}
};

class DuplicateName : public Error {
 public:
  using Error::Error;
};

class RejectedProof : public Error {
 public:
  using Error::Error;
};

class ScriptFormatError : public Error {
 public:
  ScriptFormatError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class NotALattice : public Error {
 public:
  using Error::Error;
};

class NotDistributive : public Error {
 public:
  using Error::Error;
};

class NotAPoset : public Error {
 public:
  using Error::Error;
};

class NotHereditary : public Error {
 public:
  using Error::Error;
};

class UnboundAtom : public Error {
 public:
  explicit UnboundAtom(const std::string& name) : Error("no value for atom " + name) {}
};

class NonHereditaryValuation : public Error {
 public:
  using Error::Error;
};

class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class UnknownBuiltin : public Error {
 public:
  explicit UnknownBuiltin(const std::string& name) : Error("unknown builtin " + name) {}
};

class ModelFormatError : public Error {
 public:
  using Error::Error;
};

class ResiduationFailure : public InternalError {
 public:
  using InternalError::InternalError;
};

class AdjointLawFailure : public InternalError {
 public:
  using InternalError::InternalError;
};

class ClosureFailure : public InternalError {
 public:
  using InternalError::InternalError;
};

}  // namespace dacosta

#endif  // DACOSTA_ERROR_HPP
