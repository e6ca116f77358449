#pragma once

#include "cochain_forge/error.hpp"
#include "cochain_forge/random.hpp"

#include <doctest.h>

#include <initializer_list>
#include <string>
#include <utility>

namespace cf = cochain_forge;

namespace testing {

inline cf::Scalar q(std::int64_t p, std::int64_t d = 1) { return cf::Scalar(p, d); }

inline cf::Element el(std::initializer_list<std::pair<cf::BasisIndex, cf::Scalar>> terms) {
  cf::Element x;
  for (const auto &[idx, c] : terms) x.add_term(idx, c);
  return x;
}

inline cf::Element E(std::int64_t n, cf::Scalar c = cf::Scalar(1)) {
  return cf::Element::basis(cf::e(n), c);
}

inline cf::Element T(cf::Scalar c = cf::Scalar(1)) {
  return cf::Element::basis(cf::central_t(), c);
}

/// Degree-zero Witt 1-cochain phi(e_i) = f(i) e_i on a window.
template <class F> cf::OneCochain diagonal(std::int64_t radius, F f) {
  cf::OneCochain phi(cf::Window{radius});
  for (std::int64_t i = -radius; i <= radius; ++i) phi.set(cf::e(i), E(i, f(i)));
  return phi;
}

inline cf::OneCochain random_phi(const cf::AlgebraSpec &alg, std::int64_t radius,
                                 std::uint64_t seed, bool mixed = true) {
  cf::Rng rng(seed);
  cf::RandomCochainOptions o;
  o.radius = radius;
  if (mixed) o.degrees = cf::random_degree_mix(rng, 3);
  return cf::random_one_cochain(alg, o, rng);
}

/// Runs f and returns the Error it throws; fails the test if it does not.
template <class F> cf::Error expect_error(F &&f) {
  try {
    f();
  } catch (const cf::Error &err) {
    return err;
  }
  FAIL("expected a cochain_forge::Error");
  return cf::Error(cf::ErrorKind::Contract, "unreachable");
}

} // namespace testing
