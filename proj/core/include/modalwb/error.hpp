#ifndef MODALWB_ERROR_HPP_
#define MODALWB_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace modalwb {

enum class ErrorKind {
  CarrierMismatch,
  AtomlessCarrier,
  MalformedInterval,
  EmptyElement,
  DegenerateParameter,
  Unsupported,
  PreconditionFailed,
  ContractViolation,
  CapExceeded,
  Parse,
  Name,
  Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace modalwb

#endif  // MODALWB_ERROR_HPP_
