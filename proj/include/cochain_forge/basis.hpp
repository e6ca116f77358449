#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace cochain_forge {

/// A basis vector: either e_n (n an integer) or the central element t.
/// Ordered with e_n by n and t greater than every e_n.
class BasisIndex {
public:
  static constexpr BasisIndex e(std::int64_t n) { return BasisIndex(false, n); }
  static constexpr BasisIndex t() { return BasisIndex(true, 0); }

  constexpr bool is_central() const { return central_; }
  /// Index n of e_n; zero for t.
  constexpr std::int64_t n() const { return central_ ? 0 : n_; }
  /// deg(e_n) = n, deg(t) = 0.
  constexpr std::int64_t degree() const { return n(); }
  /// |n| for e_n, 0 for t. Used for window membership.
  constexpr std::int64_t radius() const { return n_ < 0 ? -n_ : n_; }

  /// "e:<n>" or "t".
  std::string str() const;
  /// Inverse of str(); throws Error{Parse}.
  static BasisIndex parse(std::string_view text);

  friend constexpr auto operator<=>(const BasisIndex &, const BasisIndex &) = default;

private:
  constexpr BasisIndex(bool central, std::int64_t n) : central_(central), n_(n) {}

  // Member order drives the defaulted comparison.
  bool central_;
  std::int64_t n_;
};

inline constexpr BasisIndex e(std::int64_t n) { return BasisIndex::e(n); }
inline constexpr BasisIndex central_t() { return BasisIndex::t(); }

} // namespace cochain_forge
