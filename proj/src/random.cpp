#include "cochain_forge/random.hpp"

#include "cochain_forge/error.hpp"

namespace cochain_forge {

Scalar random_scalar(Rng &rng, std::int64_t max_numerator, std::int64_t max_denominator) {
  if (max_numerator < 1 || max_denominator < 1)
    throw Error(ErrorKind::Contract, "random scalar bounds must be positive");
  std::uniform_int_distribution<std::int64_t> num(1, max_numerator);
  std::uniform_int_distribution<std::int64_t> den(1, max_denominator);
  std::bernoulli_distribution negative(0.5);
  std::int64_t p = num(rng);
  return Scalar(negative(rng) ? -p : p, den(rng));
}

OneCochain random_one_cochain(const AlgebraSpec &alg, const RandomCochainOptions &opts,
                              Rng &rng) {
  std::bernoulli_distribution keep(opts.density);
  OneCochain phi(Window{opts.radius});
  for (BasisIndex x : alg.window_basis(opts.radius)) {
    Element value;
    for (std::int64_t d : opts.degrees) {
      std::vector<BasisIndex> targets;
      if (opts.module == Module::Trivial) {
        if (x.degree() + d == 0) targets.push_back(central_t());
      } else {
        targets = alg.basis_of_degree(x.degree() + d);
      }
      for (BasisIndex v : targets)
        if (keep(rng)) value.add_term(v, random_scalar(rng, 12, opts.max_denominator));
    }
    if (!value.is_zero()) phi.set(x, std::move(value));
  }
  return phi;
}

std::vector<std::int64_t> random_degree_mix(Rng &rng, std::int64_t max_abs) {
  std::vector<std::int64_t> out{0};
  std::bernoulli_distribution pick(0.4);
  for (std::int64_t d = -max_abs; d <= max_abs; ++d)
    if (d != 0 && pick(rng)) out.push_back(d);
  return out;
}

TwoCochain central_cocycle(const AlgebraSpec &alg, std::int64_t radius) {
  TwoCochain omega(Window{radius});
  for (std::int64_t n = 2; n <= radius; ++n)
    if (pair_evaluable(alg, omega.window(), e(n), e(-n)))
      omega.set(e(n), e(-n), Element::basis(central_t(), central_term(n, -n)));
  return omega;
}

} // namespace cochain_forge
