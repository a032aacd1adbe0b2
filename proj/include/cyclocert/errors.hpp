#ifndef CYCLOCERT_ERRORS_HPP
#define CYCLOCERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cyclocert {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Remainder of an exact division was nonzero.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

// Sturm counting requires a squarefree input.
class NotSquarefree : public Error {
 public:
  using Error::Error;
};

class NoRealRoot : public Error {
 public:
  using Error::Error;
};

// The recursive and closed-form constructions of P_j disagreed.
class ClosedFormMismatch : public Error {
 public:
  using Error::Error;
};

// Input polynomial is identically zero after reduction mod p.
class ZeroModP : public Error {
 public:
  using Error::Error;
};

class NotPrime : public Error {
 public:
  using Error::Error;
};

// A mod-p claim was requested for a modulus where it does not apply.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

class CertificateFailure : public Error {
 public:
  CertificateFailure(std::string check, const std::string& detail)
      : Error(check + ": " + detail), check_(std::move(check)) {}
  const std::string& check() const noexcept { return check_; }

 private:
  std::string check_;
};

}  // namespace cyclocert

#endif  // CYCLOCERT_ERRORS_HPP
