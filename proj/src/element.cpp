#include "cochain_forge/element.hpp"

#include "cochain_forge/error.hpp"

#include <charconv>
#include <ostream>

namespace cochain_forge {

std::string BasisIndex::str() const {
  if (central_) return "t";
  return "e:" + std::to_string(n_);
}

BasisIndex BasisIndex::parse(std::string_view text) {
  if (text == "t") return t();
  if (text.size() > 2 && text.substr(0, 2) == "e:") {
    auto digits = text.substr(2);
    std::int64_t n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc{} && ptr == digits.data() + digits.size()) return e(n);
  }
  throw Error(ErrorKind::Parse, "malformed basis index '" + std::string(text) + "'");
}

Element Element::basis(BasisIndex idx, const Scalar &coeff) {
  Element x;
  x.add_term(idx, coeff);
  return x;
}

Scalar Element::coefficient(BasisIndex idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? Scalar() : it->second;
}

void Element::add_term(BasisIndex idx, const Scalar &coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(idx, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

Element Element::central_part() const {
  Element r;
  if (auto it = terms_.find(BasisIndex::t()); it != terms_.end())
    r.terms_.insert(*it);
  return r;
}

Element Element::non_central_part() const {
  Element r = *this;
  r.terms_.erase(BasisIndex::t());
  return r;
}

Element Element::operator-() const {
  Element r = *this;
  for (auto &[idx, c] : r.terms_) c = -c;
  return r;
}

Element &Element::operator+=(const Element &rhs) {
  for (const auto &[idx, c] : rhs.terms_) add_term(idx, c);
  return *this;
}

Element &Element::operator-=(const Element &rhs) {
  for (const auto &[idx, c] : rhs.terms_) add_term(idx, -c);
  return *this;
}

Element &Element::operator*=(const Scalar &s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &[idx, c] : terms_) c *= s;
  return *this;
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto &[idx, c] : terms_) {
    Scalar mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    if (mag != Scalar(1)) out += mag.str() + "*";
    out += idx.str();
  }
  return out;
}

std::ostream &operator<<(std::ostream &os, const Element &x) { return os << x.str(); }

} // namespace cochain_forge
