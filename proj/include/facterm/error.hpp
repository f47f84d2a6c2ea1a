#pragma once

#include <stdexcept>
#include <string>

namespace facterm {

enum class ErrorKind {
  Range,           // index or coordinate out of range
  Composition,     // endpoint mismatch when composing
  Generator,       // generator token not applicable
  Word,            // failure inside a generator word (message carries position)
  Class,           // morphism does not belong to the required class
  Domain,          // argument outside the domain of an operation
  Coverage,        // a model table is missing a required entry
  Resource,        // enumeration request above the configured bound
  Reconstruction,  // graded-law data fails an axiom
  Input,           // malformed external input
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string msg, std::string witness = {})
      : std::runtime_error(std::move(msg)), kind_(kind), witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::string witness_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg, const std::string& witness = {}) {
  throw Error(kind, msg, witness);
}

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Range: return "range";
    case ErrorKind::Composition: return "composition";
    case ErrorKind::Generator: return "generator";
    case ErrorKind::Word: return "word";
    case ErrorKind::Class: return "class";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Coverage: return "coverage";
    case ErrorKind::Resource: return "resource";
    case ErrorKind::Reconstruction: return "reconstruction";
    case ErrorKind::Input: return "input";
  }
  return "unknown";
}

}  // namespace facterm
