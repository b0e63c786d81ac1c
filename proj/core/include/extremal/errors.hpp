#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace extremal {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

// A proof step that must succeed did not; indicates a bug or a broken assumption.
class InternalInvariantBroken : public Error {
 public:
  using Error::Error;
};

class EmptyGraph : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class MemberNotFound : public Error {
 public:
  using Error::Error;
};

class NotHeavy : public Error {
 public:
  using Error::Error;
};

class ExtensionFailed : public Error {
 public:
  using Error::Error;
};

class AssemblyFailed : public Error {
 public:
  using Error::Error;
};

class DegenerateTree : public Error {
 public:
  using Error::Error;
};

class NotPrime : public Error {
 public:
  using Error::Error;
};

// An exhaustive check refuted a claimed property; carries the refuting vertex set.
class VerificationFailed : public Error {
 public:
  VerificationFailed(const std::string& what, std::vector<int> witness)
      : Error(what), witness_(std::move(witness)) {}
  const std::vector<int>& witness() const { return witness_; }

 private:
  std::vector<int> witness_;
};

}  // namespace extremal
