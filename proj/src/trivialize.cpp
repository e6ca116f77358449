#include "cochain_forge/trivialize.hpp"

#include "cochain_forge/error.hpp"

#include <algorithm>
#include <set>

namespace cochain_forge {

namespace {

TwoCochain restrict_evaluable(const TwoCochain &psi, const AlgebraSpec &alg,
                              std::int64_t radius) {
  TwoCochain out(Window{std::min(radius, psi.window().radius)});
  for (const auto &[p, v] : psi.entries())
    if (pair_evaluable(alg, out.window(), p.first, p.second))
      out.set(p.first, p.second, v);
  return out;
}

std::string describe_first(const TwoCochain &defect) {
  const auto &[p, v] = *defect.entries().begin();
  return "(" + p.first.str() + ", " + p.second.str() + ") -> " + v.str();
}

void require_degree(const TwoCochain &psi, std::int64_t d, const char *where) {
  auto deg = homogeneous_degree(psi);
  if (deg && *deg != d)
    throw Error(ErrorKind::Contract,
                "expected a degree-" + std::to_string(d) + " cochain, got degree " +
                    std::to_string(*deg),
                where);
}

void check_cocycle(const TwoCochain &psi, const AlgebraSpec &alg) {
  auto report = delta2_residual(psi, alg);
  if (!report.ok())
    throw Error(ErrorKind::NotACocycle,
                "cocycle condition fails at " + report.nonzero.front().triple.str() +
                    " with residual " + report.nonzero.front().value.str() + " (" +
                    std::to_string(report.nonzero.size()) + " failing triples)",
                stage::cocycle_check);
}

Error restage(const Error &err, const std::string &prefix) {
  std::string msg = err.what();
  // Drop the "[stage] " prefix of the inner message.
  if (!err.stage().empty() && msg.rfind("[" + err.stage() + "] ", 0) == 0)
    msg = msg.substr(err.stage().size() + 3);
  if (auto colon = msg.find(": "); colon != std::string::npos) msg = msg.substr(colon + 2);
  return Error(err.kind(), msg,
               err.stage().empty() ? prefix : prefix + "/" + err.stage());
}

// ---------------------------------------------------------------------------
// Degree-zero Witt coefficient access: psi(e_i, e_j) = psi_{i,j} e_{i+j}.

class WittCoefficients {
public:
  explicit WittCoefficients(const TwoCochain &psi, const char *where) : psi_(psi) {
    for (const auto &[p, v] : psi.entries()) {
      if (p.first.is_central() || p.second.is_central())
        throw Error(ErrorKind::Contract, "pair involving t in a Witt cochain", where);
      BasisIndex target = e(p.first.n() + p.second.n());
      for (const auto &[idx, c] : v.terms())
        if (idx != target)
          throw Error(ErrorKind::Contract,
                      "value at (" + p.first.str() + ", " + p.second.str() +
                          ") is not of degree-0 coefficient form",
                      where);
    }
  }

  std::int64_t radius() const { return psi_.window().radius; }

  bool known(std::int64_t i, std::int64_t j) const {
    std::int64_t n = radius();
    if (std::abs(i) > n || std::abs(j) > n) return false;
    return i == j || std::abs(i + j) <= n;
  }

  Scalar operator()(std::int64_t i, std::int64_t j) const {
    return psi_(e(i), e(j)).coefficient(e(i + j));
  }

private:
  const TwoCochain &psi_;
};

// Linear form of the degree-zero cocycle condition at (i, j, k) over
// canonical pairs (a < b):
//   (j-i) psi_{i+j,k} - (k-i) psi_{i+k,j} + (k-j) psi_{j+k,i}
//   - (j+k-i) psi_{j,k} + (i+k-j) psi_{i,k} - (i+j-k) psi_{i,j}
using PairKey = std::pair<std::int64_t, std::int64_t>;

std::map<PairKey, Scalar> witt_triple_form(std::int64_t i, std::int64_t j,
                                           std::int64_t k) {
  std::map<PairKey, Scalar> form;
  auto add = [&](std::int64_t a, std::int64_t b, std::int64_t coeff) {
    if (a == b || coeff == 0) return;
    if (a > b) {
      std::swap(a, b);
      coeff = -coeff;
    }
    auto &slot = form[{a, b}];
    slot += Scalar(coeff);
    if (slot.is_zero()) form.erase({a, b});
  };
  add(i + j, k, j - i);
  add(i + k, j, -(k - i));
  add(j + k, i, k - j);
  add(j, k, -(j + k - i));
  add(i, k, i + k - j);
  add(i, j, -(i + j - k));
  return form;
}

PairKey canonical(std::int64_t a, std::int64_t b) {
  return a < b ? PairKey{a, b} : PairKey{b, a};
}

class LevelDerivation {
public:
  explicit LevelDerivation(const WittCoefficients &psi) : psi_(psi) {}

  void assume(std::int64_t a, std::int64_t b) { certified_.insert(canonical(a, b)); }

  bool certified(std::int64_t a, std::int64_t b) const {
    return a == b || certified_.contains(canonical(a, b));
  }

  // Uses the cocycle equation at (i, j, k) to pin the coefficient of the
  // target pair, assuming every other pair in the equation is already zero.
  void derive(std::int64_t i, std::int64_t j, std::int64_t k, std::int64_t ta,
              std::int64_t tb, const std::string &label) {
    if (ta == tb || certified(ta, tb) || flagged_.contains(canonical(ta, tb))) return;
    if (!psi_.known(ta, tb)) return;
    auto form = witt_triple_form(i, j, k);
    auto target = canonical(ta, tb);
    auto it = form.find(target);
    if (it == form.end()) return;
    Scalar residual;
    for (const auto &[pair, coeff] : form) {
      if (!psi_.known(pair.first, pair.second)) return;
      if (pair != target && !certified(pair.first, pair.second)) return;
      residual += coeff * psi_(pair.first, pair.second);
    }
    ++report_.evaluable_triples;
    if (residual.is_zero()) {
      certified_.insert(target);
      return;
    }
    flagged_.insert(target);
    report_.nonzero.push_back(
        {Triple{e(i), e(j), e(k)}, Element::basis(e(i + j + k), residual),
         label + ": psi(" + std::to_string(target.first) + "," +
             std::to_string(target.second) + ") derived 0, stored " +
             psi_(target.first, target.second).str()});
  }

  ResidualReport finish() {
    std::int64_t n = psi_.radius();
    std::int64_t best = -1;
    for (std::int64_t r = 0; r <= n; ++r) {
      bool all = true;
      for (std::int64_t a = -r; a <= r && all; ++a)
        for (std::int64_t b = a + 1; b <= r && all; ++b)
          if (std::abs(a + b) <= r && !certified(a, b)) all = false;
      if (!all) break;
      best = r;
    }
    if (best >= 0) report_.certified = Window{best};
    return std::move(report_);
  }

private:
  const WittCoefficients &psi_;
  std::set<PairKey> certified_;
  std::set<PairKey> flagged_;
  ResidualReport report_;
};

} // namespace

// ---------------------------------------------------------------------------

TwoCochain coboundary_defect(const TwoCochain &psi, const OneCochain &phi,
                             const AlgebraSpec &alg, std::int64_t radius) {
  std::int64_t r = std::min({radius, psi.window().radius, phi.window().radius});
  return restrict_evaluable(psi, alg, r) - delta1(phi.restricted(r), alg);
}

TrivializationResult reduce_nonzero_degree(const TwoCochain &psi, std::int64_t d,
                                           const AlgebraSpec &alg) {
  if (d == 0)
    throw Error(ErrorKind::Contract, "degree reduction needs d != 0", stage::reduce_degree);
  auto grading = alg.grading_element();
  if (!grading)
    throw Error(ErrorKind::Contract, "algebra has no grading element",
                stage::reduce_degree);
  validate(psi, alg);
  require_degree(psi, d, stage::reduce_degree);

  const Window window = psi.window();
  std::int64_t inner = window.radius - std::abs(d) - 1;
  if (inner < 0)
    throw Error(ErrorKind::InsufficientWindow,
                "radius " + std::to_string(window.radius) + " too small for degree " +
                    std::to_string(d),
                stage::reduce_degree);

  OneCochain phi(window);
  for (BasisIndex x : alg.window_basis(window.radius)) {
    Element value;
    bool evaluable = true;
    for (const auto &[g, c] : grading->terms()) {
      if (!pair_evaluable(alg, window, x, g)) {
        evaluable = false;
        break;
      }
      value += psi(x, g) * c;
    }
    if (evaluable) phi.set(x, value * Scalar(1, d));
  }

  TrivializationResult result{phi, Window{inner}, {}, {}};
  result.residual = coboundary_defect(psi, phi, alg, inner);
  if (!result.residual.is_zero())
    throw Error(ErrorKind::NotACocycle,
                "degree-" + std::to_string(d) + " residual is nonzero at " +
                    describe_first(result.residual),
                stage::reduce_degree);
  result.stages.push_back({stage::reduce_degree, d, Window{inner}, true});
  return result;
}

OneCochain witt_step1(const TwoCochain &psi) {
  WittCoefficients c(psi, stage::witt_step1);
  const std::int64_t n = c.radius();
  if (n < 3)
    throw Error(ErrorKind::InsufficientWindow,
                "step one needs radius >= 3, got " + std::to_string(n), stage::witt_step1);

  std::map<std::int64_t, Scalar> phi;
  phi[1] = Scalar();
  // (a) descending from phi_0 = -psi_{0,1}
  phi[0] = -c(0, 1);
  for (std::int64_t i = -1; i >= -n; --i)
    phi[i] = phi[i + 1] - c(i, 1) / Scalar(1 - i);
  // (b) phi_2 from the (-1, 2) coefficient
  phi[2] = -phi[-1] - c(-1, 2) / Scalar(3);
  // (c) ascending
  for (std::int64_t i = 2; i + 1 <= n; ++i) phi[i + 1] = phi[i] + c(i, 1) / Scalar(1 - i);

  OneCochain out(psi.window());
  for (const auto &[i, v] : phi) out.set(e(i), Element::basis(e(i), v));
  return out;
}

ResidualReport witt_level_propagate(const TwoCochain &psi_prime) {
  WittCoefficients c(psi_prime, stage::level_propagate);
  const std::int64_t n = c.radius();

  for (std::int64_t i = -n; i <= n; ++i)
    if (c.known(i, 1) && !c(i, 1).is_zero())
      throw Error(ErrorKind::Contract,
                  "precondition psi'_{i,1} = 0 violated at i = " + std::to_string(i) +
                      " (value " + c(i, 1).str() + ")",
                  stage::level_propagate);
  if (c.known(-1, 2) && !c(-1, 2).is_zero())
    throw Error(ErrorKind::Contract,
                "precondition psi'_{-1,2} = 0 violated (value " + c(-1, 2).str() + ")",
                stage::level_propagate);

  LevelDerivation run(c);
  for (std::int64_t i = -n; i <= n; ++i)
    if (c.known(i, 1)) run.assume(i, 1);
  if (c.known(-1, 2)) run.assume(-1, 2);

  // m = 0: triple (i, 1, 0) links psi_{i+1,0} and psi_{i,0}.
  for (std::int64_t i = -1; i >= -n; --i) run.derive(i, 1, 0, i, 0, "level 0");
  run.derive(0, -1, 2, 2, 0, "level 0");
  for (std::int64_t i = 2; i <= n; ++i) run.derive(i, 1, 0, i + 1, 0, "level 0");

  // m = -1: triple (i, 1, -1).
  for (std::int64_t i = 0; i >= -n; --i) run.derive(i, 1, -1, i, -1, "level -1");
  for (std::int64_t i = 2; i <= n; ++i) run.derive(i, 1, -1, i + 1, -1, "level -1");

  // m = -2: triple (i, 1, -2); psi_{2,-2} and psi_{3,-2} stay open.
  for (std::int64_t i = 0; i >= -n; --i) run.derive(i, 1, -2, i, -2, "level -2");
  for (std::int64_t i = 3; i <= n; ++i) run.derive(i, 1, -2, i + 1, -2, "level -2");

  // m = 2: triple (i, -1, 2); psi_{-3,2} stays open.
  for (std::int64_t i = 0; i <= n; ++i) run.derive(i, -1, 2, i, 2, "level 2");
  for (std::int64_t i = -3; i >= -n; --i) run.derive(i, -1, 2, i - 1, 2, "level 2");

  // Closing triple (2, -2, 4) fixes psi_{2,-2}; the two open neighbours follow.
  run.derive(2, -2, 4, 2, -2, "level 2/-2 closing");
  run.derive(2, 1, -2, 3, -2, "level -2");
  run.derive(-2, -1, 2, -3, 2, "level 2");

  // m < -2: triple (i, -1, k) gives level k-1 from levels k and -1.
  for (std::int64_t k = -2; k - 1 >= -n; --k)
    for (std::int64_t i = -n; i <= n; ++i)
      run.derive(i, -1, k, k - 1, i, "level " + std::to_string(k - 1));

  // m > 2: triple (i, 1, k) gives level k+1 from level k.
  for (std::int64_t k = 2; k + 1 <= n; ++k)
    for (std::int64_t i = -n; i <= n; ++i)
      run.derive(i, 1, k, k + 1, i, "level " + std::to_string(k + 1));

  return run.finish();
}

TrivializationResult trivialize_witt(const TwoCochain &psi) {
  const AlgebraSpec alg = AlgebraSpec::witt();
  validate(psi, alg);
  const std::int64_t n = psi.window().radius;
  if (n < kMinDegreeZeroRadius)
    throw Error(ErrorKind::InsufficientWindow,
                "degree-zero certification needs radius >= " +
                    std::to_string(kMinDegreeZeroRadius) + ", got " + std::to_string(n),
                stage::cocycle_check);
  check_cocycle(psi, alg);

  auto parts = degree_decompose(psi);
  TrivializationResult result{OneCochain(psi.window()), psi.window(), {}, {}};
  std::int64_t certified = n;

  for (const auto &[d, part] : parts) {
    if (d == 0) continue;
    auto r = reduce_nonzero_degree(part, d, alg);
    result.phi += r.phi;
    certified = std::min(certified, r.certified.radius);
    result.stages.insert(result.stages.end(), r.stages.begin(), r.stages.end());
  }

  TwoCochain part0 = parts.contains(0) ? parts.at(0) : TwoCochain(psi.window());
  OneCochain phi0 = witt_step1(part0);
  result.stages.push_back({stage::witt_step1, 0, psi.window(), true});
  TwoCochain psi_prime = part0 - delta1(phi0, alg);
  auto levels = witt_level_propagate(psi_prime);
  if (!levels.ok())
    throw Error(ErrorKind::NotACocycle,
                levels.nonzero.front().note + " at triple " +
                    levels.nonzero.front().triple.str(),
                stage::level_propagate);
  if (!levels.certified)
    throw Error(ErrorKind::CertificationFailure, "no window could be certified",
                stage::level_propagate);
  certified = std::min(certified, levels.certified->radius);
  result.stages.push_back({stage::level_propagate, 0, *levels.certified, true});
  result.phi += phi0;

  result.certified = Window{certified};
  result.residual = coboundary_defect(psi, result.phi, alg, certified);
  if (!result.residual.is_zero())
    throw Error(ErrorKind::CertificationFailure,
                "psi - delta phi is nonzero at " + describe_first(result.residual),
                stage::final_check);
  result.stages.push_back({stage::final_check, 0, result.certified, true});
  return result;
}

CenterCleanupReport virasoro_center_cleanup(const TwoCochain &psi) {
  const AlgebraSpec alg = AlgebraSpec::virasoro();
  validate(psi, alg);
  require_degree(psi, 0, stage::center_cleanup);
  const std::int64_t n = psi.window().radius;
  if (n < 2)
    throw Error(ErrorKind::InsufficientWindow, "center cleanup needs radius >= 2",
                stage::center_cleanup);

  CenterCleanupReport out;
  Scalar a = psi(e(1), central_t()).coefficient(e(1));
  out.phi = OneCochain(psi.window());
  out.phi.set(central_t(), Element::basis(e(0), a));
  out.cleaned = psi - delta1(out.phi, alg);

  for (std::int64_t k = -n; k <= n; ++k)
    out.a[k] = out.cleaned(e(k), central_t()).coefficient(e(k));
  out.b = out.cleaned(e(0), central_t()).coefficient(central_t());

  // (m - n)(a_{n+m} - a_m - a_n) = 0 at m = 1 for every n, and at (m, n) = (2, -2).
  auto relation = [&](std::int64_t m, std::int64_t k) {
    if (!out.a.contains(k + m)) return;
    Scalar value = Scalar(m - k) * (out.a[k + m] - out.a[m] - out.a[k]);
    if (!value.is_zero())
      throw Error(ErrorKind::NotACocycle,
                  "(m-n)(a_{n+m}-a_m-a_n) = " + value.str() + " at m = " +
                      std::to_string(m) + ", n = " + std::to_string(k),
                  stage::center_cleanup);
  };
  if (!out.a[1].is_zero())
    throw Error(ErrorKind::CertificationFailure, "a_1 did not vanish",
                stage::center_cleanup);
  for (std::int64_t k = -n; k <= n; ++k) relation(1, k);
  relation(2, -2);

  for (BasisIndex x : alg.window_basis(n)) {
    Element v = out.cleaned(x, central_t()).non_central_part();
    if (!v.is_zero())
      throw Error(ErrorKind::NotACocycle,
                  "cleaned(" + x.str() + ", t) keeps non-central part " + v.str(),
                  stage::center_cleanup);
  }
  return out;
}

WittLiftResult virasoro_witt_lift(const TwoCochain &cleaned) {
  const AlgebraSpec alg = AlgebraSpec::virasoro();
  validate(cleaned, alg);
  for (BasisIndex x : alg.window_basis(cleaned.window().radius))
    if (!cleaned(x, central_t()).non_central_part().is_zero())
      throw Error(ErrorKind::Contract,
                  "cleaned(" + x.str() + ", t) is not central; run center cleanup first",
                  stage::witt_lift);

  WittLiftResult out;
  try {
    out.witt = trivialize_witt(project_to_witt(cleaned));
  } catch (const Error &err) {
    throw restage(err, stage::witt_lift);
  }
  out.phi = out.witt.phi;
  const std::int64_t r = out.witt.certified.radius;
  out.psi_hat =
      restrict_evaluable(cleaned - delta1(out.phi, alg), alg, r);
  for (const auto &[p, v] : out.psi_hat.entries())
    if (!v.non_central_part().is_zero())
      throw Error(ErrorKind::CertificationFailure,
                  "lifted residual at (" + p.first.str() + ", " + p.second.str() +
                      ") has non-central part " + v.non_central_part().str(),
                  stage::witt_lift);
  return out;
}

TrivializationResult trivialize_central_valued(const TwoCochain &psi_hat) {
  const AlgebraSpec alg = AlgebraSpec::virasoro();
  validate(psi_hat, alg);
  const std::int64_t n = psi_hat.window().radius;
  for (const auto &[p, v] : psi_hat.entries())
    if (!v.non_central_part().is_zero())
      throw Error(ErrorKind::Contract,
                  "value at (" + p.first.str() + ", " + p.second.str() +
                      ") is not a multiple of t",
                  stage::central_valued);
  if (n < 2)
    throw Error(ErrorKind::InsufficientWindow, "central stage needs radius >= 2",
                stage::central_valued);

  auto coeff = [](const TwoCochain &c, BasisIndex x, BasisIndex y) {
    return c(x, y).coefficient(central_t());
  };
  const BasisIndex t = central_t();

  // psi(x, t) = 0: triples (e_i, e_0, t) for i != 0 and (e_-1, e_1, t).
  for (std::int64_t i = -n; i <= n; ++i) {
    Triple tr = i == 0 ? Triple{e(-1), e(1), t} : Triple{e(i), e(0), t};
    auto res = cocycle_residual_at(psi_hat, alg, tr);
    if ((res && !res->is_zero()) || !psi_hat(e(i), t).is_zero())
      throw Error(ErrorKind::NotACocycle,
                  "psi(" + e(i).str() + ", t) = " + psi_hat(e(i), t).str() +
                      " must vanish for a central-valued cocycle",
                  stage::central_valued);
  }

  OneCochain phi(psi_hat.window());
  for (std::int64_t i = -n; i <= n; ++i)
    if (i != 0) phi.set(e(i), Element::basis(t, -coeff(psi_hat, e(i), e(0)) / Scalar(i)));
  Scalar phi0 = -coeff(psi_hat, e(1), e(-1)) / Scalar(2);
  phi.set(e(0), Element::basis(t, phi0));
  Scalar c = Scalar(-2) * coeff(psi_hat, e(2), e(-2)) - Scalar(8) * phi0;
  phi.set(t, Element::basis(t, c));

  TwoCochain reduced = psi_hat - delta1(phi, alg);

  // Re-derive that the normalized cocycle vanishes.
  std::set<BasisPair> certified;
  auto mark = [&](BasisIndex x, BasisIndex y, const Triple *tr) {
    if (tr) {
      auto res = cocycle_residual_at(reduced, alg, *tr);
      if (!res) return;
      if (!res->is_zero())
        throw Error(ErrorKind::NotACocycle,
                    "cocycle condition fails at " + tr->str() + ": " + res->str(),
                    stage::central_valued);
    }
    if (!reduced(x, y).is_zero())
      throw Error(ErrorKind::CertificationFailure,
                  "normalized cocycle is nonzero at (" + x.str() + ", " + y.str() +
                      "): " + reduced(x, y).str(),
                  stage::central_valued);
    certified.insert(x < y ? BasisPair{x, y} : BasisPair{y, x});
  };
  auto is_certified = [&](BasisIndex x, BasisIndex y) {
    return x == y || certified.contains(x < y ? BasisPair{x, y} : BasisPair{y, x});
  };
  for (std::int64_t i = -n; i <= n; ++i) {
    mark(e(i), t, nullptr);
    if (i != 0) mark(e(i), e(0), nullptr);
  }
  mark(e(1), e(-1), nullptr);
  mark(e(2), e(-2), nullptr);
  for (std::int64_t i = -n; i <= n; ++i)
    for (std::int64_t j = -n; j <= n; ++j) {
      if (j == -i || i == j || i == 0 || j == 0) continue;
      if (!pair_evaluable(alg, reduced.window(), e(i), e(j))) continue;
      if (!is_certified(e(i + j), e(0))) continue;
      Triple tr{e(i), e(j), e(0)};
      mark(e(i), e(j), &tr);
    }
  for (std::int64_t k = 3; k <= n; ++k) {
    if (!is_certified(e(1), e(-1)) || !is_certified(e(k - 1), e(-(k - 1)))) break;
    Triple tr{e(k), e(-(k - 1)), e(-1)};
    if (!cocycle_residual_at(reduced, alg, tr)) break;
    mark(e(k), e(-k), &tr);
  }

  std::int64_t best = -1;
  for (std::int64_t r = 0; r <= n; ++r) {
    bool all = true;
    for (const auto &[x, y] : evaluable_pairs(alg, Window{r}))
      if (!is_certified(x, y)) {
        all = false;
        break;
      }
    if (!all) break;
    best = r;
  }
  if (best < 0)
    throw Error(ErrorKind::CertificationFailure, "no window could be certified",
                stage::central_valued);

  TrivializationResult result{phi, Window{best}, {}, {}};
  result.residual = coboundary_defect(psi_hat, phi, alg, best);
  if (!result.residual.is_zero())
    throw Error(ErrorKind::CertificationFailure,
                "psi - delta phi is nonzero at " + describe_first(result.residual),
                stage::central_valued);
  result.stages.push_back({stage::central_valued, 0, Window{best}, true});
  return result;
}

TrivializationResult trivialize_virasoro(const TwoCochain &psi) {
  const AlgebraSpec alg = AlgebraSpec::virasoro();
  validate(psi, alg);
  const std::int64_t n = psi.window().radius;
  if (n < kMinDegreeZeroRadius)
    throw Error(ErrorKind::InsufficientWindow,
                "degree-zero certification needs radius >= " +
                    std::to_string(kMinDegreeZeroRadius) + ", got " + std::to_string(n),
                stage::cocycle_check);
  check_cocycle(psi, alg);

  auto parts = degree_decompose(psi);
  TrivializationResult result{OneCochain(psi.window()), psi.window(), {}, {}};
  std::int64_t certified = n;

  for (const auto &[d, part] : parts) {
    if (d == 0) continue;
    auto r = reduce_nonzero_degree(part, d, alg);
    result.phi += r.phi;
    certified = std::min(certified, r.certified.radius);
    result.stages.insert(result.stages.end(), r.stages.begin(), r.stages.end());
  }

  TwoCochain part0 = parts.contains(0) ? parts.at(0) : TwoCochain(psi.window());
  auto cleanup = virasoro_center_cleanup(part0);
  result.stages.push_back({stage::center_cleanup, 0, psi.window(), true});

  auto lift = virasoro_witt_lift(cleanup.cleaned);
  for (auto s : lift.witt.stages) {
    s.stage = std::string(stage::witt_lift) + "/" + s.stage;
    result.stages.push_back(s);
  }
  certified = std::min(certified, lift.witt.certified.radius);

  auto central = trivialize_central_valued(lift.psi_hat);
  result.stages.insert(result.stages.end(), central.stages.begin(), central.stages.end());
  certified = std::min(certified, central.certified.radius);

  result.phi += cleanup.phi;
  result.phi += lift.phi;
  result.phi += central.phi;

  result.certified = Window{certified};
  result.residual = coboundary_defect(psi, result.phi, alg, certified);
  if (!result.residual.is_zero())
    throw Error(ErrorKind::CertificationFailure,
                "psi - delta phi is nonzero at " + describe_first(result.residual),
                stage::final_check);
  result.stages.push_back({stage::final_check, 0, result.certified, true});
  return result;
}

TrivializationResult trivialize(const TwoCochain &psi, const AlgebraSpec &alg) {
  switch (alg.kind()) {
  case AlgebraKind::Witt: return trivialize_witt(psi);
  case AlgebraKind::Virasoro: return trivialize_virasoro(psi);
  case AlgebraKind::Custom: break;
  }
  throw Error(ErrorKind::Contract,
              "the full trivialization pipeline covers the Witt and Virasoro algebras");
}

} // namespace cochain_forge
