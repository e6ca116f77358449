#include "cochain_forge/cli.hpp"

#include "cochain_forge/acceptance.hpp"
#include "cochain_forge/error.hpp"
#include "cochain_forge/json_io.hpp"
#include "cochain_forge/random.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <limits>

namespace cochain_forge {

namespace {

Module module_of(const std::string &coeffs) {
  if (coeffs == "adjoint") return Module::Adjoint;
  if (coeffs == "trivial") return Module::Trivial;
  throw Error(ErrorKind::Contract, "unknown coefficient module '" + coeffs + "'");
}

AlgebraSpec select_algebra(const std::string &flag, const std::string &declared) {
  if (flag.empty()) {
    if (declared == "witt" || declared == "virasoro") return resolve_algebra(declared);
    throw Error(ErrorKind::Contract,
                "input declares algebra '" + declared + "'; pass --algebra with its file");
  }
  AlgebraSpec alg = resolve_algebra(flag);
  if (alg.name() != declared)
    throw Error(ErrorKind::Contract, "--algebra is " + alg.name() +
                                         " but the input declares '" + declared + "'");
  return alg;
}

AlgebraSpec required_algebra(const CommandConfig &cfg) {
  if (cfg.algebra.empty()) throw Error(ErrorKind::Contract, "--algebra is required");
  return resolve_algebra(cfg.algebra);
}

struct Input {
  AlgebraSpec alg;
  TwoCochain psi;
};

Input load_two_cochain(const CommandConfig &cfg, Module module) {
  if (cfg.input.empty()) throw Error(ErrorKind::Contract, "--in is required");
  auto loaded = two_cochain_from_json(read_json_file(cfg.input));
  Input in{select_algebra(cfg.algebra, loaded.algebra), std::move(loaded.cochain)};
  validate(in.psi, in.alg, module);
  return in;
}

// Keeps the entries on pairs evaluable within the smaller window.
TwoCochain restrict_to(const TwoCochain &psi, const AlgebraSpec &alg, std::int64_t radius) {
  TwoCochain out(Window{radius});
  for (const auto &[p, v] : psi.entries())
    if (pair_evaluable(alg, out.window(), p.first, p.second)) out.set(p.first, p.second, v);
  return out;
}

void emit(const CommandConfig &cfg, std::ostream &out, const std::string &text) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f) throw Error(ErrorKind::Contract, "cannot write " + cfg.output);
  f << text;
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

std::string describe(const TwoCochain &psi, const std::string &indent) {
  std::string s;
  for (const auto &[p, v] : psi.entries())
    s += indent + "(" + p.first.str() + ", " + p.second.str() + ") -> " + v.str() + "\n";
  return s;
}

std::string describe(const OneCochain &phi, const std::string &indent) {
  std::string s;
  for (const auto &[idx, v] : phi.values()) s += indent + idx.str() + " -> " + v.str() + "\n";
  return s;
}

int cmd_jacobi(const CommandConfig &cfg, std::ostream &out) {
  AlgebraSpec alg = required_algebra(cfg);
  std::int64_t radius = cfg.radius.value_or(12);
  auto basis = alg.window_basis(radius);
  std::size_t triples = 0;
  Json nonzero = Json::array();
  std::string lines;
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b)
      for (std::size_t c = b + 1; c < basis.size(); ++c) {
        ++triples;
        Element r = jacobi_residual(basis[a], basis[b], basis[c], alg);
        if (r.is_zero()) continue;
        Triple t{basis[a], basis[b], basis[c]};
        nonzero.push_back({{"triple", {t.x.str(), t.y.str(), t.z.str()}}, {"value", to_json(r)}});
        lines += "  " + t.str() + " -> " + r.str() + "\n";
      }
  if (cfg.format == "json") {
    Json j;
    j["algebra"] = alg.name();
    j["radius"] = radius;
    j["triples"] = triples;
    j["nonzero"] = nonzero;
    emit(cfg, out, dump(j));
  } else {
    emit(cfg, out,
         alg.name() + " radius " + std::to_string(radius) + ": " + std::to_string(triples) +
             " triples, " + std::to_string(nonzero.size()) + " nonzero Jacobi residuals\n" +
             lines);
  }
  return nonzero.empty() ? exit_code::verified : exit_code::failed;
}

int cmd_check_cocycle(const CommandConfig &cfg, std::ostream &out) {
  Module module = module_of(cfg.coeffs);
  auto in = load_two_cochain(cfg, module);
  auto report = delta2_residual(in.psi, in.alg, module);
  if (cfg.format == "json") {
    Json j;
    j["algebra"] = in.alg.name();
    j["coefficients"] = cfg.coeffs;
    j["radius"] = in.psi.window().radius;
    Json body = to_json(report);
    for (auto &[k, v] : body.items()) j[k] = v;
    emit(cfg, out, dump(j));
  } else {
    std::string s = "evaluable triples: " + std::to_string(report.evaluable_triples) + "\n";
    s += "certified radius: " +
         (report.certified ? std::to_string(report.certified->radius) : std::string("none")) +
         "\n";
    s += "nonzero residuals: " + std::to_string(report.nonzero.size()) + "\n";
    for (const auto &r : report.nonzero)
      s += "  " + r.triple.str() + " -> " + r.value.str() + " [" + r.note + "]\n";
    emit(cfg, out, s);
  }
  return report.ok() ? exit_code::verified : exit_code::failed;
}

int cmd_trivialize(const CommandConfig &cfg, std::ostream &out) {
  if (module_of(cfg.coeffs) != Module::Adjoint)
    throw Error(ErrorKind::Contract, "trivialize works with adjoint coefficients");
  auto in = load_two_cochain(cfg, Module::Adjoint);
  TwoCochain psi = in.psi;
  if (cfg.radius) {
    if (*cfg.radius > psi.window().radius)
      throw Error(ErrorKind::Contract, "--radius " + std::to_string(*cfg.radius) +
                                           " exceeds the input radius " +
                                           std::to_string(psi.window().radius));
    psi = restrict_to(psi, in.alg, *cfg.radius);
  }
  auto result = trivialize(psi, in.alg);
  if (cfg.format == "json") {
    emit(cfg, out, dump(to_json(result, in.alg)));
  } else {
    std::string s = "certified radius: " + std::to_string(result.certified.radius) + "\nphi:\n" +
                    describe(result.phi, "  ") + "stages:\n";
    for (const auto &st : result.stages)
      s += "  " + st.stage + " degree " + std::to_string(st.degree) + " radius " +
           std::to_string(st.certified.radius) + (st.passed ? " ok" : " FAILED") + "\n";
    emit(cfg, out, s);
  }
  return exit_code::verified;
}

int cmd_h2(const CommandConfig &cfg, std::ostream &out) {
  AlgebraSpec alg = required_algebra(cfg);
  Module module = module_of(cfg.coeffs);
  if (!cfg.radius) throw Error(ErrorKind::Contract, "--radius is required");
  auto report = h2_report(alg, module, cfg.degree, *cfg.radius, cfg.margin);
  if (cfg.format == "json") {
    Json j = to_json(report, alg);
    j["algebra"] = alg.name();
    j["coefficients"] = cfg.coeffs;
    emit(cfg, out, dump(j));
  } else {
    std::string s = alg.name() + ", " + cfg.coeffs + " coefficients, degree " +
                    std::to_string(cfg.degree) + ", radius " + std::to_string(*cfg.radius) +
                    " (solved at " + std::to_string(*cfg.radius + cfg.margin) + ")\n";
    s += "cocycle_dim " + std::to_string(report.cocycle_dim) + "\n";
    s += "coboundary_dim " + std::to_string(report.coboundary_dim) + "\n";
    s += "h2_dim " + std::to_string(report.h2_dim) + "\n";
    for (std::size_t k = 0; k < report.representatives.size(); ++k)
      s += "representative " + std::to_string(k + 1) + ":\n" +
           describe(report.representatives[k], "  ");
    emit(cfg, out, s);
  }
  return exit_code::verified;
}

int cmd_is_coboundary(const CommandConfig &cfg, std::ostream &out) {
  Module module = module_of(cfg.coeffs);
  auto in = load_two_cochain(cfg, module);
  auto sol = is_coboundary_solve(in.psi, in.alg, module);
  if (cfg.format == "json") {
    emit(cfg, out, dump(to_json(sol, in.alg)));
  } else {
    std::string s = std::to_string(sol.equations) + " equations, " +
                    std::to_string(sol.unknowns) + " unknowns: ";
    if (sol.feasible()) {
      s += "feasible\nphi:\n" + describe(*sol.phi, "  ");
    } else {
      s += "infeasible\nwitness (sum gives 0 = " + sol.contradiction.str() + "):\n";
      for (const auto &t : sol.witness)
        s += "  " + t.weight.str() + " * [" + t.coordinate.label() + "]\n";
    }
    emit(cfg, out, s);
  }
  if (cfg.expect == "any") return exit_code::verified;
  bool want = cfg.expect == "feasible";
  return sol.feasible() == want ? exit_code::verified : exit_code::failed;
}

int cmd_random_coboundary(const CommandConfig &cfg, std::ostream &out) {
  AlgebraSpec alg = required_algebra(cfg);
  Module module = module_of(cfg.coeffs);
  Rng rng(cfg.seed);
  RandomCochainOptions opts;
  opts.radius = cfg.radius.value_or(10);
  opts.module = module;
  opts.degrees = cfg.degrees.empty() ? random_degree_mix(rng, cfg.max_degree) : cfg.degrees;
  OneCochain phi0 = random_one_cochain(alg, opts, rng);
  TwoCochain psi = delta1(phi0, alg, module);
  if (!cfg.phi_output.empty()) {
    std::ofstream f(cfg.phi_output, std::ios::binary);
    if (!f) throw Error(ErrorKind::Contract, "cannot write " + cfg.phi_output);
    f << dump(to_json(phi0, alg));
  }
  emit(cfg, out, dump(to_json(psi, alg)));
  return exit_code::verified;
}

int cmd_selftest(const CommandConfig &cfg, std::ostream &out) {
  AcceptanceOptions opts;
  opts.seed = cfg.seed;
  opts.samples = cfg.samples;
  bool text = cfg.format != "json" && cfg.output.empty();
  auto results = run_acceptance(opts, cfg.criteria, [&](const CriterionResult &r) {
    if (text) out << format_result(r) << std::endl;
  });
  bool all = std::all_of(results.begin(), results.end(),
                         [](const CriterionResult &r) { return r.passed; });
  if (cfg.format == "json") {
    Json items = Json::array();
    for (const auto &r : results)
      items.push_back({{"id", r.id},
                       {"title", r.title},
                       {"passed", r.passed},
                       {"detail", r.detail},
                       {"limit_seconds", r.limit_seconds}});
    emit(cfg, out, dump({{"passed", all}, {"criteria", items}}));
  } else if (!text) {
    std::string s;
    for (const auto &r : results) s += format_result(r) + "\n";
    emit(cfg, out, s);
  }
  return all ? exit_code::verified : exit_code::failed;
}

} // namespace

int run(const CommandConfig &cfg, std::ostream &out, std::ostream &err) {
  try {
    const std::string &c = cfg.subcommand;
    if (c == "jacobi") return cmd_jacobi(cfg, out);
    if (c == "check-cocycle") return cmd_check_cocycle(cfg, out);
    if (c == "trivialize") return cmd_trivialize(cfg, out);
    if (c == "h2") return cmd_h2(cfg, out);
    if (c == "is-coboundary") return cmd_is_coboundary(cfg, out);
    if (c == "random-coboundary") return cmd_random_coboundary(cfg, out);
    if (c == "selftest") return cmd_selftest(cfg, out);
    err << "error: unknown subcommand '" << c << "'\n";
    return exit_code::malformed;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
    case ErrorKind::NotACocycle:
    case ErrorKind::CertificationFailure: return exit_code::failed;
    default: return exit_code::malformed;
    }
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return exit_code::malformed;
  }
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact Witt/Virasoro 2-cocycle computations", "cochain-forge"};
  app.require_subcommand(1, 1);
  CommandConfig cfg;
  std::int64_t radius = 0;
  CLI::Option *radius_opt = nullptr;

  auto common = [&](CLI::App *sub) {
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", cfg.output, "Write the report to this file");
  };
  auto algebra = [&](CLI::App *sub) {
    sub->add_option("--algebra", cfg.algebra, "witt, virasoro, or a custom algebra JSON file");
  };
  auto coeffs = [&](CLI::App *sub) {
    sub->add_option("--coeffs", cfg.coeffs, "Coefficient module")
        ->check(CLI::IsMember({"adjoint", "trivial"}));
  };
  auto input = [&](CLI::App *sub) {
    sub->add_option("--in", cfg.input, "2-cochain JSON file")->required();
  };
  constexpr auto big = std::numeric_limits<std::int64_t>::max();

  auto *jacobi = app.add_subcommand("jacobi", "Check the Jacobi identity on a window");
  algebra(jacobi);
  jacobi->add_option("--radius", radius, "Window radius (default 12)")->check(CLI::Range(std::int64_t{0}, big));
  common(jacobi);

  auto *check = app.add_subcommand("check-cocycle", "Report cocycle residuals of a 2-cochain");
  input(check);
  algebra(check);
  coeffs(check);
  common(check);

  auto *triv = app.add_subcommand("trivialize", "Write a 1-cochain phi with delta phi = psi");
  input(triv);
  algebra(triv);
  triv->add_option("--radius", radius, "Restrict the input to this radius (>= 3)")
      ->check(CLI::Range(std::int64_t{3}, big));
  common(triv);

  auto *h2 = app.add_subcommand("h2", "Windowed second cohomology dimensions");
  algebra(h2);
  coeffs(h2);
  h2->add_option("--degree", cfg.degree, "Degree of the homogeneous cochains");
  h2->add_option("--radius", radius, "Inner radius N")
      ->required()
      ->check(CLI::Range(std::int64_t{0}, big));
  h2->add_option("--margin", cfg.margin, "Margin M (>= 4)")->check(CLI::Range(std::int64_t{4}, big));
  common(h2);

  auto *cob = app.add_subcommand("is-coboundary", "Solve delta phi = psi exactly");
  input(cob);
  algebra(cob);
  coeffs(cob);
  cob->add_option("--expect", cfg.expect, "Outcome that counts as verified")
      ->check(CLI::IsMember({"feasible", "infeasible", "any"}));
  common(cob);

  auto *rnd = app.add_subcommand("random-coboundary", "Write delta phi0 for a seeded random phi0");
  algebra(rnd);
  coeffs(rnd);
  rnd->add_option("--radius", radius, "Window radius (default 10, >= 3)")
      ->check(CLI::Range(std::int64_t{3}, big));
  rnd->add_option("--seed", cfg.seed, "Random seed");
  rnd->add_option("--degrees", cfg.degrees, "Degrees of phi0, comma separated")->delimiter(',');
  rnd->add_option("--max-degree", cfg.max_degree, "Bound for a random degree mix")
      ->check(CLI::Range(std::int64_t{0}, std::int64_t{16}));
  rnd->add_option("--phi-out", cfg.phi_output, "Also write phi0 to this file");
  common(rnd);

  auto *self = app.add_subcommand("selftest", "Run the acceptance suite");
  self->add_option("--seed", cfg.seed, "Base seed")->default_val(AcceptanceOptions{}.seed);
  self->add_option("--samples", cfg.samples, "Random samples per property")
      ->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
  self->add_option("--criteria", cfg.criteria, "Subset of criteria, comma separated")
      ->delimiter(',')
      ->check(CLI::Range(1, kCriterionCount));
  common(self);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    app.exit(e, out, err);
    return exit_code::malformed;
  }

  CLI::App *chosen = app.get_subcommands().front();
  cfg.subcommand = chosen->get_name();
  radius_opt = chosen->get_option_no_throw("--radius");
  if (radius_opt && radius_opt->count() > 0) cfg.radius = radius;
  return run(cfg, out, err);
}

} // namespace cochain_forge
