#pragma once

#include "cochain_forge/cochain.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace cochain_forge {

using Rng = std::mt19937_64;

/// Nonzero p/q with |p| <= max_numerator and 1 <= q <= max_denominator.
Scalar random_scalar(Rng &rng, std::int64_t max_numerator = 12,
                     std::int64_t max_denominator = 12);

struct RandomCochainOptions {
  std::int64_t radius = 8;
  /// Degrees of the homogeneous components to populate.
  std::vector<std::int64_t> degrees{0};
  /// Probability that a given coefficient is nonzero.
  double density = 0.8;
  std::int64_t max_denominator = 12;
  Module module = Module::Adjoint;
};

/// Random 1-cochain on the window: each basis vector x receives a random
/// combination of the degree deg(x)+d value basis for every d in `degrees`.
/// For the Virasoro algebra this includes t-components and values on t.
OneCochain random_one_cochain(const AlgebraSpec &alg, const RandomCochainOptions &opts,
                              Rng &rng);

/// Degrees -max_abs..max_abs, a random nonempty subset that always contains 0.
std::vector<std::int64_t> random_degree_mix(Rng &rng, std::int64_t max_abs = 3);

/// omega(e_n, e_-n) = (n^3 - n)/12 t on the evaluable pairs of the window.
TwoCochain central_cocycle(const AlgebraSpec &alg, std::int64_t radius);

} // namespace cochain_forge
