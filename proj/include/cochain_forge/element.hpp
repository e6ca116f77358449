#pragma once

#include "cochain_forge/basis.hpp"
#include "cochain_forge/scalar.hpp"

#include <iosfwd>
#include <map>
#include <string>

namespace cochain_forge {

/// Finite linear combination of basis vectors. Zero coefficients are never
/// stored, so structural equality is value equality.
class Element {
public:
  using Terms = std::map<BasisIndex, Scalar>;

  Element() = default;
  static Element basis(BasisIndex idx, const Scalar &coeff = Scalar(1));

  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(BasisIndex idx) const;

  /// Adds coeff * idx, pruning the term if it cancels.
  void add_term(BasisIndex idx, const Scalar &coeff);

  /// The t-component only.
  Element central_part() const;
  /// Everything except the t-component (the projection V -> W).
  Element non_central_part() const;

  Element operator-() const;
  Element &operator+=(const Element &rhs);
  Element &operator-=(const Element &rhs);
  Element &operator*=(const Scalar &s);

  friend Element operator+(Element a, const Element &b) { return a += b; }
  friend Element operator-(Element a, const Element &b) { return a -= b; }
  friend Element operator*(Element a, const Scalar &s) { return a *= s; }
  friend Element operator*(const Scalar &s, Element a) { return a *= s; }
  friend bool operator==(const Element &, const Element &) = default;

  /// Human-readable form such as "2/3*e:3 - 1/2*t"; "0" when zero.
  std::string str() const;

private:
  Terms terms_;
};

std::ostream &operator<<(std::ostream &os, const Element &x);

} // namespace cochain_forge
