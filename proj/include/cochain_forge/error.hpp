#pragma once

#include <stdexcept>
#include <string>

namespace cochain_forge {

enum class ErrorKind {
  InvalidBasis,
  OutOfWindow,
  DivisionByZero,
  Contract,
  InsufficientWindow,
  NotACocycle,
  CertificationFailure,
  Parse,
};

const char *to_string(ErrorKind kind) noexcept;

/// Every library failure is reported through this type. `stage()` names the
/// pipeline stage that raised it ("" outside the trivialization pipeline).
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &message, std::string stage = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::string &stage() const noexcept { return stage_; }
  /// The message without the kind and stage prefix.
  const std::string &detail() const noexcept { return detail_; }

private:
  ErrorKind kind_;
  std::string stage_;
  std::string detail_;
};

} // namespace cochain_forge
