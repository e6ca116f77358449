#include "cochain_forge/scalar.hpp"

#include "cochain_forge/error.hpp"

#include <cctype>
#include <ostream>

namespace cochain_forge {

const char *to_string(ErrorKind kind) noexcept {
  switch (kind) {
  case ErrorKind::InvalidBasis: return "invalid-basis";
  case ErrorKind::OutOfWindow: return "out-of-window";
  case ErrorKind::DivisionByZero: return "division-by-zero";
  case ErrorKind::Contract: return "contract";
  case ErrorKind::InsufficientWindow: return "insufficient-window";
  case ErrorKind::NotACocycle: return "not-a-cocycle";
  case ErrorKind::CertificationFailure: return "certification-failure";
  case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string &message, std::string stage)
    : std::runtime_error(stage.empty()
                             ? std::string(to_string(kind)) + ": " + message
                             : "[" + stage + "] " + to_string(kind) + ": " +
                                   message),
      kind_(kind), stage_(std::move(stage)), detail_(message) {}

namespace {

static_assert(sizeof(long) == sizeof(std::int64_t),
              "GMP's signed long constructor must hold an int64");

mpz_class to_mpz(std::int64_t v) { return mpz_class(static_cast<long>(v)); }

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

} // namespace

Scalar::Scalar(std::int64_t value) : value_(to_mpz(value)) {}

Scalar::Scalar(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0)
    throw Error(ErrorKind::DivisionByZero, "zero denominator");
  value_ = mpq_class(to_mpz(numerator), to_mpz(denominator));
  value_.canonicalize();
}

Scalar::Scalar(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0)
    throw Error(ErrorKind::DivisionByZero, "zero denominator");
  value_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
    throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(1);
  if (slash != std::string_view::npos) d = mpz_class(std::string(den), 10);
  if (d == 0)
    throw Error(ErrorKind::DivisionByZero,
                "zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  mpq_class q(n, d);
  q.canonicalize();
  return Scalar(std::move(q));
}

std::string Scalar::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Scalar Scalar::operator-() const {
  Scalar r;
  r.value_ = -value_;
  return r;
}

Scalar &Scalar::operator+=(const Scalar &rhs) {
  value_ += rhs.value_;
  return *this;
}

Scalar &Scalar::operator-=(const Scalar &rhs) {
  value_ -= rhs.value_;
  return *this;
}

Scalar &Scalar::operator*=(const Scalar &rhs) {
  value_ *= rhs.value_;
  return *this;
}

Scalar &Scalar::operator/=(const Scalar &rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero scalar");
  value_ /= rhs.value_;
  return *this;
}

std::ostream &operator<<(std::ostream &os, const Scalar &s) { return os << s.str(); }

} // namespace cochain_forge
