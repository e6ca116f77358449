#include "cochain_forge/cochain.hpp"

#include "cochain_forge/error.hpp"
#include "cochain_forge/parallel.hpp"

#include <algorithm>

namespace cochain_forge {

const char *to_string(Module m) noexcept {
  return m == Module::Adjoint ? "adjoint" : "trivial";
}

bool Window::contains(const Element &x) const {
  return std::all_of(x.terms().begin(), x.terms().end(),
                     [this](const auto &kv) { return contains(kv.first); });
}

std::string Triple::str() const {
  return "(" + x.str() + ", " + y.str() + ", " + z.str() + ")";
}

// ---------------------------------------------------------------------------
// OneCochain

Element OneCochain::operator()(BasisIndex idx) const {
  if (!window_.contains(idx))
    throw Error(ErrorKind::OutOfWindow,
                idx.str() + " is outside the 1-cochain window of radius " +
                    std::to_string(window_.radius));
  auto it = values_.find(idx);
  return it == values_.end() ? Element{} : it->second;
}

Element OneCochain::apply(const Element &x) const {
  Element out;
  for (const auto &[idx, c] : x.terms()) out += (*this)(idx) * c;
  return out;
}

void OneCochain::set(BasisIndex idx, Element value) {
  if (!window_.contains(idx))
    throw Error(ErrorKind::OutOfWindow,
                idx.str() + " is outside the 1-cochain window of radius " +
                    std::to_string(window_.radius));
  if (value.is_zero())
    values_.erase(idx);
  else
    values_[idx] = std::move(value);
}

OneCochain OneCochain::restricted(std::int64_t radius) const {
  OneCochain out(Window{std::min(radius, window_.radius)});
  for (const auto &[idx, v] : values_)
    if (out.window_.contains(idx)) out.values_.emplace(idx, v);
  return out;
}

OneCochain &OneCochain::operator+=(const OneCochain &rhs) {
  if (rhs.window_.radius < window_.radius) *this = restricted(rhs.window_.radius);
  for (const auto &[idx, v] : rhs.values_)
    if (window_.contains(idx)) set(idx, (*this)(idx) + v);
  return *this;
}

OneCochain &OneCochain::operator-=(const OneCochain &rhs) {
  if (rhs.window_.radius < window_.radius) *this = restricted(rhs.window_.radius);
  for (const auto &[idx, v] : rhs.values_)
    if (window_.contains(idx)) set(idx, (*this)(idx) - v);
  return *this;
}

// ---------------------------------------------------------------------------
// TwoCochain

Element TwoCochain::operator()(BasisIndex x, BasisIndex y) const {
  if (x == y) return {};
  bool flip = y < x;
  auto it = entries_.find(flip ? BasisPair{y, x} : BasisPair{x, y});
  if (it == entries_.end()) return {};
  return flip ? -it->second : it->second;
}

void TwoCochain::set(BasisIndex x, BasisIndex y, Element value) {
  if (!window_.contains(x) || !window_.contains(y))
    throw Error(ErrorKind::OutOfWindow, "pair (" + x.str() + ", " + y.str() +
                                            ") is outside the 2-cochain window");
  if (x == y) {
    if (!value.is_zero())
      throw Error(ErrorKind::Contract,
                  "alternating cochain must vanish on (" + x.str() + ", " + x.str() + ")");
    return;
  }
  bool flip = y < x;
  BasisPair key = flip ? BasisPair{y, x} : BasisPair{x, y};
  if (value.is_zero()) {
    entries_.erase(key);
    return;
  }
  entries_[key] = flip ? -value : std::move(value);
}

TwoCochain TwoCochain::restricted(std::int64_t radius) const {
  TwoCochain out(Window{std::min(radius, window_.radius)});
  for (const auto &[p, v] : entries_)
    if (out.window_.contains(p.first) && out.window_.contains(p.second))
      out.entries_.emplace(p, v);
  return out;
}

TwoCochain &TwoCochain::operator+=(const TwoCochain &rhs) {
  if (rhs.window_.radius < window_.radius) *this = restricted(rhs.window_.radius);
  for (const auto &[p, v] : rhs.entries_)
    if (window_.contains(p.first) && window_.contains(p.second))
      set(p.first, p.second, (*this)(p.first, p.second) + v);
  return *this;
}

TwoCochain &TwoCochain::operator-=(const TwoCochain &rhs) {
  if (rhs.window_.radius < window_.radius) *this = restricted(rhs.window_.radius);
  for (const auto &[p, v] : rhs.entries_)
    if (window_.contains(p.first) && window_.contains(p.second))
      set(p.first, p.second, (*this)(p.first, p.second) - v);
  return *this;
}

// ---------------------------------------------------------------------------
// Evaluable region and validation

bool pair_evaluable(const AlgebraSpec &alg, Window w, BasisIndex x, BasisIndex y) {
  if (!alg.contains(x) || !alg.contains(y)) return false;
  if (!w.contains(x) || !w.contains(y)) return false;
  return w.contains(alg.bracket(x, y));
}

std::vector<BasisPair> evaluable_pairs(const AlgebraSpec &alg, Window w) {
  std::vector<BasisPair> out;
  auto basis = alg.window_basis(w.radius);
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b)
      if (pair_evaluable(alg, w, basis[a], basis[b])) out.emplace_back(basis[a], basis[b]);
  return out;
}

namespace {

void validate_value(const Element &v, const AlgebraSpec &alg, Module module,
                    const std::string &where) {
  for (const auto &[idx, c] : v.terms()) {
    if (module == Module::Trivial) {
      if (!idx.is_central())
        throw Error(ErrorKind::Contract,
                    "trivial-module value at " + where + " must be a multiple of t");
    } else {
      alg.require(idx);
    }
  }
}

} // namespace

void validate(const TwoCochain &psi, const AlgebraSpec &alg, Module module) {
  for (const auto &[p, v] : psi.entries()) {
    alg.require(p.first);
    alg.require(p.second);
    std::string where = "(" + p.first.str() + ", " + p.second.str() + ")";
    if (!pair_evaluable(alg, psi.window(), p.first, p.second))
      throw Error(ErrorKind::OutOfWindow,
                  "entry " + where + " lies outside the evaluable region of radius " +
                      std::to_string(psi.window().radius));
    validate_value(v, alg, module, where);
  }
}

void validate(const OneCochain &phi, const AlgebraSpec &alg, Module module) {
  for (const auto &[idx, v] : phi.values()) {
    alg.require(idx);
    validate_value(v, alg, module, idx.str());
  }
}

Element act(const AlgebraSpec &alg, Module module, BasisIndex x, const Element &v) {
  if (module == Module::Trivial) return {};
  return bracket(Element::basis(x), v, alg);
}

// ---------------------------------------------------------------------------
// Coboundary operators

TwoCochain delta1(const OneCochain &phi, const AlgebraSpec &alg, Module module) {
  validate(phi, alg, module);
  TwoCochain out(phi.window());
  for (const auto &[x, y] : evaluable_pairs(alg, phi.window())) {
    Element value = phi.apply(alg.bracket(x, y)) - act(alg, module, x, phi(y)) +
                    act(alg, module, y, phi(x));
    out.set(x, y, std::move(value));
  }
  return out;
}

namespace {

// psi(u, z) for an element u; nullopt if some basis component is not evaluable.
std::optional<Element> apply_left(const TwoCochain &psi, const AlgebraSpec &alg,
                                  const Element &u, BasisIndex z) {
  Element out;
  for (const auto &[idx, c] : u.terms()) {
    if (idx != z && !pair_evaluable(alg, psi.window(), idx, z)) return std::nullopt;
    out += psi(idx, z) * c;
  }
  return out;
}

std::int64_t footprint(const AlgebraSpec &alg, const Triple &t) {
  std::int64_t r = std::max({t.x.radius(), t.y.radius(), t.z.radius()});
  for (const Element &b :
       {alg.bracket(t.x, t.y), alg.bracket(t.y, t.z), alg.bracket(t.z, t.x)})
    for (const auto &[idx, c] : b.terms()) r = std::max(r, idx.radius());
  return r;
}

} // namespace

std::optional<Element> cocycle_residual_at(const TwoCochain &psi, const AlgebraSpec &alg,
                                           const Triple &t, Module module) {
  const auto &[x, y, z] = t;
  Window w = psi.window();
  for (auto [a, b] : {BasisPair{y, z}, BasisPair{x, z}, BasisPair{x, y}})
    if (a != b && !pair_evaluable(alg, w, a, b)) return std::nullopt;
  auto t1 = apply_left(psi, alg, alg.bracket(x, y), z);
  auto t2 = apply_left(psi, alg, alg.bracket(y, z), x);
  auto t3 = apply_left(psi, alg, alg.bracket(z, x), y);
  if (!t1 || !t2 || !t3) return std::nullopt;
  return *t1 + *t2 + *t3 - act(alg, module, x, psi(y, z)) +
         act(alg, module, y, psi(x, z)) - act(alg, module, z, psi(x, y));
}

ResidualReport delta2_residual(const TwoCochain &psi, const AlgebraSpec &alg,
                               Module module) {
  validate(psi, alg, module);
  auto basis = alg.window_basis(psi.window().radius);
  std::vector<Triple> triples;
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b)
      for (std::size_t c = b + 1; c < basis.size(); ++c)
        triples.push_back({basis[a], basis[b], basis[c]});

  std::vector<std::optional<Element>> values(triples.size());
  parallel_for(triples.size(), [&](std::size_t i) {
    values[i] = cocycle_residual_at(psi, alg, triples[i], module);
  });

  ResidualReport report;
  std::int64_t certified = psi.window().radius;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    if (!values[i]) continue;
    ++report.evaluable_triples;
    if (values[i]->is_zero()) continue;
    certified = std::min(certified, footprint(alg, triples[i]) - 1);
    report.nonzero.push_back({triples[i], std::move(*values[i]), "cocycle condition"});
  }
  if (certified >= 0) report.certified = Window{certified};
  return report;
}

// ---------------------------------------------------------------------------
// Degree structure

std::map<std::int64_t, TwoCochain> degree_decompose(const TwoCochain &psi) {
  std::map<std::int64_t, TwoCochain> out;
  for (const auto &[p, v] : psi.entries())
    for (const auto &[idx, c] : v.terms()) {
      auto [it, inserted] =
          out.try_emplace(component_degree(p.first, p.second, idx), psi.window());
      it->second.set(p.first, p.second,
                     it->second(p.first, p.second) + Element::basis(idx, c));
    }
  return out;
}

std::optional<std::int64_t> homogeneous_degree(const TwoCochain &psi) {
  auto parts = degree_decompose(psi);
  if (parts.empty()) return std::nullopt;
  if (parts.size() > 1)
    throw Error(ErrorKind::Contract, "2-cochain is not degree-homogeneous (" +
                                         std::to_string(parts.size()) + " degrees)");
  return parts.begin()->first;
}

OneCochain normalize_one_cochain(const OneCochain &phi) {
  for (const auto &[idx, v] : phi.values()) {
    if (idx.is_central()) continue;
    for (const auto &[vi, c] : v.terms())
      if (vi != idx)
        throw Error(ErrorKind::Contract, "1-cochain is not of degree-0 coefficient form at " +
                                             idx.str());
  }
  Scalar phi1 = phi.window().contains(e(1)) ? phi(e(1)).coefficient(e(1)) : Scalar();
  OneCochain out(phi.window());
  for (std::int64_t n = -phi.window().radius; n <= phi.window().radius; ++n) {
    Scalar c = phi(e(n)).coefficient(e(n)) - Scalar(n) * phi1;
    out.set(e(n), Element::basis(e(n), c));
  }
  if (auto it = phi.values().find(central_t()); it != phi.values().end())
    out.set(central_t(), it->second);
  return out;
}

TwoCochain project_to_witt(const TwoCochain &psi) {
  TwoCochain out(psi.window());
  for (const auto &[p, v] : psi.entries()) {
    if (p.first.is_central() || p.second.is_central()) continue;
    out.set(p.first, p.second, v.non_central_part());
  }
  return out;
}

} // namespace cochain_forge
