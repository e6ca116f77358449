#include "cochain_forge/acceptance.hpp"

#include "cochain_forge/cli.hpp"
#include "cochain_forge/error.hpp"
#include "cochain_forge/json_io.hpp"
#include "cochain_forge/oracle.hpp"
#include "cochain_forge/random.hpp"
#include "cochain_forge/trivialize.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

namespace cochain_forge {

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string &why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Spec {
  const char *title;
  double limit;
};

constexpr Spec kSpecs[kCriterionCount] = {
    {"jacobi-exactness", 5},     {"delta-squared-zero", 30},
    {"witt-round-trip", 60},     {"oracle-h2-dimensions", 120},
    {"non-splitting", 30},       {"virasoro-round-trip", 120},
    {"oracle-cross-check", 120}, {"negative-controls", 30},
};

Rng seeded(const AcceptanceOptions &opts, int criterion, std::size_t sample) {
  return Rng(opts.seed + 1000003ULL * static_cast<std::uint64_t>(criterion) + sample);
}

std::string seed_note(std::size_t sample) { return "sample " + std::to_string(sample) + ": "; }

Outcome jacobi_exactness() {
  Outcome out;
  std::size_t checked = 0;
  for (const auto &alg : {AlgebraSpec::witt(), AlgebraSpec::virasoro()}) {
    auto basis = alg.window_basis(12);
    for (BasisIndex x : basis)
      for (BasisIndex y : basis)
        for (BasisIndex z : basis) {
          ++checked;
          auto r = jacobi_residual(x, y, z, alg);
          if (!r.is_zero())
            out.fail(alg.name() + " (" + x.str() + "," + y.str() + "," + z.str() +
                     ") gives " + r.str());
        }
  }
  if (out.ok) out.detail = std::to_string(checked) + " ordered triples, every residual zero";
  return out;
}

Outcome delta_squared(const AcceptanceOptions &opts) {
  Outcome out;
  std::size_t triples = 0;
  for (const auto &alg : {AlgebraSpec::witt(), AlgebraSpec::virasoro()})
    for (std::size_t s = 0; s < opts.samples; ++s) {
      Rng rng = seeded(opts, 2, s);
      RandomCochainOptions o;
      o.radius = 8;
      o.degrees = random_degree_mix(rng, 3);
      OneCochain phi = random_one_cochain(alg, o, rng);
      auto report = delta2_residual(delta1(phi, alg), alg);
      triples += report.evaluable_triples;
      if (!report.ok())
        out.fail(alg.name() + " " + seed_note(s) + "residual at " +
                 report.nonzero.front().triple.str());
    }
  if (out.ok)
    out.detail = std::to_string(2 * opts.samples) + " cochains, " + std::to_string(triples) +
                 " evaluable triples, all zero";
  return out;
}

// Shared by the Witt and Virasoro round trips.
Outcome round_trip(const AcceptanceOptions &opts, const AlgebraSpec &alg, int criterion) {
  constexpr std::int64_t kInner = 5;
  Outcome out;
  std::int64_t min_certified = std::numeric_limits<std::int64_t>::max();
  for (std::size_t s = 0; s < opts.samples; ++s) {
    Rng rng = seeded(opts, criterion, s);
    RandomCochainOptions o;
    o.radius = 10;
    o.degrees = random_degree_mix(rng, 3);
    OneCochain phi0 = random_one_cochain(alg, o, rng);
    TwoCochain psi = delta1(phi0, alg);
    try {
      auto res = trivialize(psi, alg);
      min_certified = std::min(min_certified, res.certified.radius);
      if (res.certified.radius < kInner) {
        out.fail(seed_note(s) + "certified radius " + std::to_string(res.certified.radius));
        continue;
      }
      if (!coboundary_defect(psi, res.phi, alg, kInner).is_zero())
        out.fail(seed_note(s) + "delta1(phi) differs from psi on radius 5");
      if (alg.kind() == AlgebraKind::Witt) {
        Scalar c = (res.phi(e(1)) - phi0(e(1))).coefficient(e(1));
        for (std::int64_t i = -kInner; i <= kInner; ++i)
          if ((res.phi(e(i)) - phi0(e(i))).coefficient(e(i)) != c * Scalar(i))
            out.fail(seed_note(s) + "degree-0 discrepancy at e:" + std::to_string(i) +
                     " is not i*constant");
      } else {
        for (const char *tag :
             {stage::center_cleanup, stage::witt_lift, stage::central_valued}) {
          bool seen = false;
          for (const auto &cert : res.stages)
            if (cert.stage.rfind(tag, 0) == 0) {
              seen = true;
              if (!cert.passed) out.fail(seed_note(s) + "stage " + cert.stage + " failed");
            }
          if (!seen) out.fail(seed_note(s) + "no certificate for stage " + tag);
        }
      }
    } catch (const Error &err) {
      out.fail(seed_note(s) + err.what());
    }
  }
  if (out.ok)
    out.detail = std::to_string(opts.samples) + " seeds exact on radius 5, min certified radius " +
                 std::to_string(min_certified);
  return out;
}

std::string dims(const H2Report &r) {
  return "(" + std::to_string(r.cocycle_dim) + "," + std::to_string(r.coboundary_dim) + "," +
         std::to_string(r.h2_dim) + ")";
}

Outcome h2_dimensions() {
  Outcome out;
  auto wk = h2_report(AlgebraSpec::witt(), Module::Trivial, 0, 8, 4);
  if (wk.cocycle_dim != 2 || wk.coboundary_dim != 1 || wk.h2_dim != 1)
    out.fail("H2(W;K) restricted dims " + dims(wk) + ", expected (2,1,1)");
  Scalar ratio;
  if (wk.representatives.size() == 1) {
    const auto &rep = wk.representatives.front();
    ratio = rep(e(2), e(-2)).coefficient(central_t()) / Scalar(6);
    if (ratio.is_zero()) out.fail("H2(W;K) representative vanishes at n = 2");
    for (std::int64_t n = 1; n <= 8; ++n)
      if (rep(e(n), e(-n)).coefficient(central_t()) != ratio * Scalar(n * n * n - n))
        out.fail("H2(W;K) representative is not proportional to n^3 - n at n = " +
                 std::to_string(n));
  } else {
    out.fail("expected one H2(W;K) representative");
  }
  auto ww = h2_report(AlgebraSpec::witt(), Module::Adjoint, 0, 8, 4);
  if (ww.h2_dim != 0) out.fail("H2(W;W) restricted dims " + dims(ww));
  auto vv = h2_report(AlgebraSpec::virasoro(), Module::Adjoint, 0, 8, 4);
  if (vv.h2_dim != 0) out.fail("H2(V;V) restricted dims " + dims(vv));
  if (out.ok)
    out.detail = "W;K " + dims(wk) + " rep = " + ratio.str() + "*(n^3-n), W;W " + dims(ww) +
                 ", V;V " + dims(vv);
  return out;
}

Outcome non_splitting() {
  Outcome out;
  const auto witt = AlgebraSpec::witt();
  TwoCochain omega_w = central_cocycle(witt, 8);
  auto sol = is_coboundary_solve(omega_w, witt, Module::Trivial);
  if (sol.feasible()) {
    out.fail("omega is a coboundary with trivial coefficients");
  } else {
    // Check the witness against delta1 of every unit 1-cochain.
    PointCoordinates points(witt, Module::Trivial, 0, 8);
    for (const auto &unit : points.columns()) {
      OneCochain phi(Window{8});
      phi.set(unit.x, Element::basis(unit.value));
      TwoCochain d = delta1(phi, witt, Module::Trivial);
      Scalar lhs;
      for (const auto &t : sol.witness)
        lhs += t.weight * d(t.coordinate.x, t.coordinate.y).coefficient(t.coordinate.value);
      if (!lhs.is_zero()) out.fail("witness does not annihilate " + unit.label());
    }
    Scalar rhs;
    for (const auto &t : sol.witness)
      rhs += t.weight * omega_w(t.coordinate.x, t.coordinate.y).coefficient(t.coordinate.value);
    if (rhs.is_zero() || rhs != sol.contradiction) out.fail("witness right-hand side is not a contradiction");
  }

  const auto vir = AlgebraSpec::virasoro();
  TwoCochain omega_v = central_cocycle(vir, 8);
  try {
    auto res = trivialize_virasoro(omega_v);
    for (const auto &[idx, v] : res.phi.values()) {
      Element expected = idx.is_central() ? Element::basis(central_t(), Scalar(-1)) : Element();
      if (v != expected) out.fail("phi(" + idx.str() + ") = " + v.str());
    }
    if (res.phi(central_t()) != Element::basis(central_t(), Scalar(-1)))
      out.fail("phi(t) = " + res.phi(central_t()).str() + ", expected -t");
    if (!coboundary_defect(omega_v, res.phi, vir, 8).is_zero())
      out.fail("delta1(phi) != omega on radius 8");
  } catch (const Error &err) {
    out.fail(err.what());
  }
  if (out.ok)
    out.detail = "W;K infeasible, witness of " + std::to_string(sol.witness.size()) +
                 " equations gives 0 = " + sol.contradiction.str() + "; V;V phi(t) = -t";
  return out;
}

Outcome cross_check() {
  Outcome out;
  std::size_t vectors = 0;
  std::int64_t min_certified = std::numeric_limits<std::int64_t>::max();
  for (const auto &alg : {AlgebraSpec::witt(), AlgebraSpec::virasoro()}) {
    PairCoordinates big(alg, Module::Adjoint, 0, 12), small(alg, Module::Adjoint, 0, 8);
    std::vector<std::optional<std::size_t>> column_map;
    for (const auto &c : big.columns()) column_map.push_back(small.find(c));
    auto restricted =
        project(windowed_cocycle_space(alg, Module::Adjoint, 0, 12), column_map, small.size());
    for (const auto &v : restricted.vectors) {
      ++vectors;
      TwoCochain psi = small.decode(v);
      std::string where = alg.name() + " basis vector " + std::to_string(vectors) + ": ";
      try {
        auto res = trivialize(psi, alg);
        std::int64_t r = res.certified.radius;
        min_certified = std::min(min_certified, r);
        if (!coboundary_defect(psi, res.phi, alg, r).is_zero())
          out.fail(where + "constructive phi does not reproduce psi");
        auto sol = is_coboundary_solve(psi, alg, Module::Adjoint);
        if (!sol.feasible()) {
          out.fail(where + "linear solver reports infeasible");
          continue;
        }
        if (!coboundary_defect(psi, *sol.phi, alg, 8).is_zero())
          out.fail(where + "solver phi does not reproduce psi");
        OneCochain diff = res.phi - *sol.phi;
        if (!coboundary_defect(TwoCochain(Window{r}), diff, alg, r).is_zero())
          out.fail(where + "difference is not in the kernel of delta1");
      } catch (const Error &err) {
        out.fail(where + err.what());
      }
    }
  }
  if (out.ok)
    out.detail = std::to_string(vectors) +
                 " restricted basis vectors agree, min certified radius " +
                 std::to_string(min_certified);
  return out;
}

// Error kind and stage tag from running f; nullopt if it did not throw.
template <class F> std::optional<std::pair<ErrorKind, std::string>> caught(F &&f) {
  try {
    f();
  } catch (const Error &err) {
    return std::pair{err.kind(), err.stage()};
  }
  return std::nullopt;
}

int cli_trivialize(const TwoCochain &psi, const AlgebraSpec &alg, const std::string &name) {
  auto path = std::filesystem::temp_directory_path() /
              ("cochain-forge-control-" + name + "-" +
               std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()) +
               ".json");
  {
    std::ofstream f(path);
    f << to_json(psi, alg).dump(2) << "\n";
  }
  CommandConfig cfg;
  cfg.subcommand = "trivialize";
  cfg.input = path.string();
  std::ostringstream sink_out, sink_err;
  int code = run(cfg, sink_out, sink_err);
  std::filesystem::remove(path);
  return code;
}

Outcome negative_controls(const AcceptanceOptions &opts) {
  Outcome out;
  const auto witt = AlgebraSpec::witt();
  const auto vir = AlgebraSpec::virasoro();
  std::vector<std::string> notes;

  auto expect = [&](const std::string &name, auto &&f, ErrorKind kind, const char *tag) {
    auto got = caught(f);
    if (!got)
      out.fail(name + " was accepted");
    else if (got->first != kind || got->second != tag)
      out.fail(name + " rejected as [" + got->second + "] " + to_string(got->first) +
               ", expected [" + tag + "] " + to_string(kind));
    else
      notes.push_back(name + " -> [" + tag + "] " + to_string(kind));
  };

  // A coboundary with one corrupted entry.
  Rng rng = seeded(opts, 8, 0);
  RandomCochainOptions o;
  o.radius = 10;
  TwoCochain noncocycle = delta1(random_one_cochain(witt, o, rng), witt);
  noncocycle.set(e(2), e(3), noncocycle(e(2), e(3)) + Element::basis(e(5)));
  expect("non-cocycle", [&] { trivialize_witt(noncocycle); }, ErrorKind::NotACocycle,
         stage::cocycle_check);

  // Level one must vanish before propagation.
  TwoCochain level1(Window{10});
  level1.set(e(3), e(1), Element::basis(e(4)));
  expect("psi'_{3,1} != 0", [&] { witt_level_propagate(level1); }, ErrorKind::Contract,
         stage::level_propagate);

  // A non-central value in the central-valued stage.
  TwoCochain hat = central_cocycle(vir, 8);
  hat.set(e(2), e(3), Element::basis(e(5)));
  expect("non-central psi-hat", [&] { trivialize_central_valued(hat); }, ErrorKind::Contract,
         stage::central_valued);

  // None of them may pass the command line pipeline.
  int codes[] = {cli_trivialize(noncocycle, witt, "a"), cli_trivialize(level1, witt, "b"),
                 cli_trivialize(hat, vir, "c")};
  for (int c : codes)
    if (c == exit_code::verified) out.fail("a corrupted input exited 0 through the CLI");
  if (out.ok) {
    for (const auto &n : notes) out.detail += (out.detail.empty() ? "" : "; ") + n;
    out.detail += "; CLI exits " + std::to_string(codes[0]) + "," + std::to_string(codes[1]) +
                  "," + std::to_string(codes[2]);
  }
  return out;
}

} // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions &opts) {
  if (id < 1 || id > kCriterionCount)
    throw Error(ErrorKind::Contract, "no acceptance criterion " + std::to_string(id));
  CriterionResult r;
  r.id = id;
  r.title = kSpecs[id - 1].title;
  r.limit_seconds = kSpecs[id - 1].limit;
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    switch (id) {
    case 1: o = jacobi_exactness(); break;
    case 2: o = delta_squared(opts); break;
    case 3: o = round_trip(opts, AlgebraSpec::witt(), 3); break;
    case 4: o = h2_dimensions(); break;
    case 5: o = non_splitting(); break;
    case 6: o = round_trip(opts, AlgebraSpec::virasoro(), 6); break;
    case 7: o = cross_check(); break;
    case 8: o = negative_controls(opts); break;
    }
  } catch (const std::exception &ex) {
    o.fail(std::string("unexpected error: ") + ex.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.passed = o.ok && r.seconds <= r.limit_seconds;
  r.detail = o.detail;
  if (o.ok && !r.passed) r.detail += " (time limit exceeded)";
  return r;
}

std::vector<CriterionResult>
run_acceptance(const AcceptanceOptions &opts, const std::vector<int> &ids,
               const std::function<void(const CriterionResult &)> &on_result) {
  std::vector<int> todo = ids;
  if (todo.empty())
    for (int i = 1; i <= kCriterionCount; ++i) todo.push_back(i);
  std::vector<CriterionResult> out;
  for (int id : todo) {
    out.push_back(run_criterion(id, opts));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult &r) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << " " << r.title << " ("
     << r.seconds << " s, limit " << static_cast<int>(r.limit_seconds) << " s): " << r.detail;
  return os.str();
}

} // namespace cochain_forge
