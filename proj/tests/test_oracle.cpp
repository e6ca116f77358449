#include "cochain_forge/oracle.hpp"
#include "cochain_forge/trivialize.hpp"

#include "support.hpp"

using namespace testing;
using cf::AlgebraSpec;
using cf::e;
using cf::Module;
using cf::Scalar;
using cf::TwoCochain;
using cf::Window;

namespace {

const cf::BasisIndex t = cf::central_t();

// psi(e_-n, e_n) = f(n) t on 1 <= n <= radius.
template <class F> TwoCochain diagonal_central(std::int64_t radius, F f) {
  TwoCochain psi(Window{radius});
  for (std::int64_t n = 1; n <= radius; ++n) psi.set(e(-n), e(n), T(f(n)));
  return psi;
}

} // namespace

TEST_CASE("coordinates round trip") {
  auto vir = AlgebraSpec::virasoro();
  cf::PairCoordinates coords(vir, Module::Adjoint, 0, 6);
  auto psi = cf::delta1(random_phi(vir, 6, 11, false), vir);
  CHECK(coords.decode(coords.encode(psi)) == psi);
  for (std::size_t k = 1; k < coords.size(); ++k)
    CHECK(std::max(coords.columns()[k - 1].x.radius(), coords.columns()[k - 1].y.radius()) <=
          std::max(coords.columns()[k].x.radius(), coords.columns()[k].y.radius()));
  CHECK(coords.columns().front().label().rfind("psi[", 0) == 0);

  TwoCochain off(Window{6});
  off.set(e(1), e(2), E(4));
  CHECK(expect_error([&] { coords.encode(off); }).kind() == cf::ErrorKind::Contract);
}

TEST_CASE("trivial Witt cocycles on radius 8 contain n and n^3") {
  auto witt = AlgebraSpec::witt();
  cf::PairCoordinates coords(witt, Module::Trivial, 0, 8);
  CHECK(coords.size() == 8);
  auto space = cf::windowed_cocycle_space(witt, Module::Trivial, 0, 8);
  auto linear = coords.encode(diagonal_central(8, [](std::int64_t n) { return q(n); }));
  auto cubic = coords.encode(diagonal_central(8, [](std::int64_t n) { return q(n * n * n); }));
  CHECK(cf::contains(space, linear));
  CHECK(cf::contains(space, cubic));
  auto square = coords.encode(diagonal_central(8, [](std::int64_t n) { return q(n * n); }));
  CHECK_FALSE(cf::contains(space, square));
  CHECK(space.dimension() == 2);
}

TEST_CASE("windows too small for any pair give empty spaces") {
  auto witt = AlgebraSpec::witt();
  CHECK(cf::windowed_cocycle_space(witt, Module::Adjoint, 0, 0).dimension() == 0);
  CHECK(cf::PairCoordinates(witt, Module::Adjoint, 0, 0).size() == 0);
}

TEST_CASE("coboundary dimensions") {
  auto witt = AlgebraSpec::witt();
  // Only phi(e_0) = t contributes with trivial coefficients.
  CHECK(cf::windowed_coboundary_space(witt, Module::Trivial, 0, 8).dimension() == 1);
  // 17 unknowns with the inner derivation phi(e_i) = i e_i in the kernel.
  CHECK(cf::PointCoordinates(witt, Module::Adjoint, 0, 8).size() == 17);
  CHECK(cf::windowed_coboundary_space(witt, Module::Adjoint, 0, 8).dimension() == 16);
  for (std::int64_t d : {-2, 0, 1}) {
    for (auto module : {Module::Adjoint, Module::Trivial}) {
      CAPTURE(d);
      auto z = cf::windowed_cocycle_space(witt, module, d, 7);
      auto b = cf::windowed_coboundary_space(witt, module, d, 7);
      CHECK(cf::is_subspace(b, z));
    }
  }
}

TEST_CASE("Virasoro trivial coboundary of phi(t) = t") {
  auto vir = AlgebraSpec::virasoro();
  cf::PairCoordinates pairs(vir, Module::Trivial, 0, 6);
  cf::PointCoordinates points(vir, Module::Trivial, 0, 6);
  auto images = cf::coboundary_images(vir, Module::Trivial, pairs, points);
  REQUIRE(images.size() == points.size());
  bool found = false;
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (points.columns()[k].x != t) continue;
    found = true;
    for (std::int64_t i = 1; i <= 6; ++i) {
      auto col = pairs.find({e(-i), e(i), t});
      REQUIRE(col.has_value());
      CHECK(cf::entry(images[k], *col) == q(i * i * i - i, 12));
    }
  }
  CHECK(found);
}

TEST_CASE("frozen restricted cohomology dimensions") {
  auto witt = AlgebraSpec::witt();
  auto vir = AlgebraSpec::virasoro();
  auto wk = cf::h2_report(witt, Module::Trivial, 0, 8, 4);
  CHECK(wk.cocycle_dim == 2);
  CHECK(wk.coboundary_dim == 1);
  CHECK(wk.h2_dim == 1);
  REQUIRE(wk.representatives.size() == 1);
  const TwoCochain &rep = wk.representatives.front();
  Scalar ratio = rep(e(-2), e(2)).coefficient(t) / q(6);
  CHECK(ratio != Scalar());
  for (std::int64_t n = 1; n <= 8; ++n) CHECK(rep(e(-n), e(n)) == T(ratio * q(n * n * n - n)));

  auto ww = cf::h2_report(witt, Module::Adjoint, 0, 8, 4);
  CHECK(ww.cocycle_dim == 16);
  CHECK(ww.coboundary_dim == 16);
  CHECK(ww.h2_dim == 0);
  auto vv = cf::h2_report(vir, Module::Adjoint, 0, 8, 4);
  CHECK(vv.cocycle_dim == 19);
  CHECK(vv.coboundary_dim == 19);
  CHECK(vv.h2_dim == 0);

  CHECK(cf::h2_report(witt, Module::Adjoint, 5, 6, 4).h2_dim == 0);
  CHECK(cf::h2_report(witt, Module::Adjoint, -1, 6, 4).h2_dim == 0);
  CHECK(cf::h2_report(witt, Module::Trivial, 2, 6, 4).h2_dim == 0);
  CHECK(expect_error([&] { cf::h2_report(witt, Module::Adjoint, 0, 6, 3); }).kind() ==
        cf::ErrorKind::Contract);
}

TEST_CASE("restricted dimensions do not grow with the margin") {
  auto witt = AlgebraSpec::witt();
  auto vir = AlgebraSpec::virasoro();
  for (const auto &alg : {witt, vir})
    for (auto module : {Module::Trivial, Module::Adjoint}) {
      std::size_t prev_z = SIZE_MAX, prev_h = SIZE_MAX;
      for (std::int64_t m = 4; m <= 8; ++m) {
        auto r = cf::h2_report(alg, module, 0, 6, m);
        CAPTURE(alg.name());
        CAPTURE(m);
        CHECK(r.cocycle_dim <= prev_z);
        CHECK(r.h2_dim <= prev_h);
        prev_z = r.cocycle_dim;
        prev_h = r.h2_dim;
      }
    }
  for (std::int64_t m = 4; m <= 8; ++m)
    CHECK(cf::h2_report(witt, Module::Trivial, 0, 6, m).h2_dim == 1);
}

TEST_CASE("linear solve reproduces coboundaries exactly") {
  auto witt = AlgebraSpec::witt();
  auto vir = AlgebraSpec::virasoro();
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    for (const auto &alg : {witt, vir}) {
      cf::Rng rng(seed);
      cf::RandomCochainOptions o;
      o.radius = 7;
      o.degrees = {static_cast<std::int64_t>(seed % 3) - 1};
      auto psi = cf::delta1(cf::random_one_cochain(alg, o, rng), alg);
      auto sol = cf::is_coboundary_solve(psi, alg);
      REQUIRE(sol.feasible());
      CHECK(sol.witness.empty());
      CHECK(cf::delta1(*sol.phi, alg) == psi);
    }
  }
}

TEST_CASE("the trivial Witt cocycle has an infeasibility witness") {
  auto witt = AlgebraSpec::witt();
  auto omega = diagonal_central(8, [](std::int64_t n) { return q(n * n * n - n, 12); });
  auto sol = cf::is_coboundary_solve(omega, witt, Module::Trivial);
  REQUIRE_FALSE(sol.feasible());
  REQUIRE_FALSE(sol.witness.empty());
  CHECK(sol.contradiction != Scalar());

  // Independent check: the weights annihilate every column of delta1 and
  // pair with psi to the contradiction.
  cf::PairCoordinates pairs(witt, Module::Trivial, 0, 8);
  cf::PointCoordinates points(witt, Module::Trivial, 0, 8);
  auto images = cf::coboundary_images(witt, Module::Trivial, pairs, points);
  auto rhs = pairs.encode(omega);
  Scalar paired;
  for (const auto &w : sol.witness) {
    auto col = pairs.find(w.coordinate);
    REQUIRE(col.has_value());
    paired += w.weight * cf::entry(rhs, *col);
  }
  CHECK(paired == sol.contradiction);
  for (const auto &image : images) {
    Scalar s;
    for (const auto &w : sol.witness) s += w.weight * cf::entry(image, *pairs.find(w.coordinate));
    CHECK(s == Scalar());
  }
  // With an n-term added the cocycle stays non-trivial.
  auto shifted = omega + diagonal_central(8, [](std::int64_t n) { return q(5 * n); });
  CHECK_FALSE(cf::is_coboundary_solve(shifted, witt, Module::Trivial).feasible());
  // The n-term alone is the coboundary of phi(e_0) = 5/2 t.
  auto linear = cf::is_coboundary_solve(diagonal_central(8, [](std::int64_t n) { return q(5 * n); }),
                                        witt, Module::Trivial);
  REQUIRE(linear.feasible());
  CHECK((*linear.phi)(e(0)) == T(q(5, 2)));
}

TEST_CASE("adjoint perturbations are detected by the solver") {
  auto witt = AlgebraSpec::witt();
  auto psi = cf::delta1(diagonal(6, [](std::int64_t i) { return q(i * i); }), witt);
  psi.set(e(-1), e(2), psi(e(-1), e(2)) + E(1));
  auto sol = cf::is_coboundary_solve(psi, witt);
  CHECK_FALSE(sol.feasible());
  CHECK(sol.equations > 0);
  CHECK(sol.unknowns == 13);
}

TEST_CASE("mixed-degree coboundaries are solved componentwise") {
  auto vir = AlgebraSpec::virasoro();
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto psi = cf::delta1(random_phi(vir, 7, 300 + seed), vir);
    auto sol = cf::is_coboundary_solve(psi, vir);
    REQUIRE(sol.feasible());
    CHECK(cf::delta1(*sol.phi, vir) == psi);
  }
  auto witt = AlgebraSpec::witt();
  auto psi = cf::delta1(random_phi(witt, 7, 5), witt);
  psi.set(e(1), e(3), psi(e(1), e(3)) + E(5));
  CHECK_FALSE(cf::is_coboundary_solve(psi, witt).feasible());
}

TEST_CASE("radius 2 cocycle basis satisfies every equation") {
  auto witt = AlgebraSpec::witt();
  auto sys = cf::cocycle_system(witt, Module::Adjoint, 0, 2);
  auto space = cf::nullspace(sys);
  cf::PairCoordinates coords(witt, Module::Adjoint, 0, 2);
  CHECK(space.ambient == coords.size());
  CHECK(cf::rank(sys) + space.dimension() == sys.column_count());
  for (const auto &v : space.vectors) {
    for (const auto &row : sys.rows) CHECK(cf::dot(row, v) == Scalar());
    CHECK(cf::delta2_residual(coords.decode(v), witt).ok());
  }
}

TEST_CASE("solver examples from the defining cases") {
  auto vir = AlgebraSpec::virasoro();
  auto zero = cf::is_coboundary_solve(TwoCochain(Window{6}), vir);
  REQUIRE(zero.feasible());
  CHECK(zero.phi->values().empty());

  auto sol = cf::is_coboundary_solve(cf::central_cocycle(vir, 8), vir);
  REQUIRE(sol.feasible());
  CHECK(cf::delta1(*sol.phi, vir) == cf::central_cocycle(vir, 8));
  // phi is unique up to the inner derivation phi(e_i) = i e_i.
  Scalar c = (*sol.phi)(e(1)).coefficient(e(1));
  CHECK((*sol.phi)(t) == T(q(-1)));
  for (std::int64_t i = -8; i <= 8; ++i) CHECK((*sol.phi)(e(i)) == E(i, c * q(i)));
}
