#pragma once

#include <compare>
#include <cstdint>
#include <gmpxx.h>
#include <iosfwd>
#include <string>
#include <string_view>

namespace cochain_forge {

/// Exact rational number, always in lowest terms with a positive denominator.
class Scalar {
public:
  Scalar() = default;
  Scalar(std::int64_t value); // NOLINT(google-explicit-constructor)
  Scalar(std::int64_t numerator, std::int64_t denominator);
  explicit Scalar(mpq_class value);

  /// Parses "p" or "p/q" (optional leading '-'). Throws Error{Parse} or
  /// Error{DivisionByZero}.
  static Scalar parse(std::string_view text);

  /// "p/q", or "p" when the denominator is one.
  std::string str() const;

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class &raw() const { return value_; }

  Scalar operator-() const;
  Scalar &operator+=(const Scalar &rhs);
  Scalar &operator-=(const Scalar &rhs);
  Scalar &operator*=(const Scalar &rhs);
  /// Throws Error{DivisionByZero} when rhs is zero.
  Scalar &operator/=(const Scalar &rhs);

  friend Scalar operator+(Scalar lhs, const Scalar &rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar &rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar &rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar &rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar &a, const Scalar &b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Scalar &a, const Scalar &b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

private:
  mpq_class value_{0};
};

std::ostream &operator<<(std::ostream &os, const Scalar &s);

} // namespace cochain_forge
