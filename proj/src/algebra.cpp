#include "cochain_forge/algebra.hpp"

#include "cochain_forge/error.hpp"

#include <limits>
#include <map>
#include <utility>

namespace cochain_forge {

struct AlgebraSpec::CustomTable {
  std::set<std::int64_t> indices;
  bool center = false;
  // Canonical (x < y) pairs only.
  std::map<std::pair<BasisIndex, BasisIndex>, Element> brackets;
  std::optional<Element> grading_element;
};

AlgebraSpec AlgebraSpec::witt() { return AlgebraSpec(AlgebraKind::Witt, nullptr); }

AlgebraSpec AlgebraSpec::virasoro() {
  return AlgebraSpec(AlgebraKind::Virasoro, nullptr);
}

std::string AlgebraSpec::name() const {
  switch (kind_) {
  case AlgebraKind::Witt: return "witt";
  case AlgebraKind::Virasoro: return "virasoro";
  case AlgebraKind::Custom: return "custom";
  }
  return "custom";
}

bool AlgebraSpec::has_center() const {
  switch (kind_) {
  case AlgebraKind::Witt: return false;
  case AlgebraKind::Virasoro: return true;
  case AlgebraKind::Custom: return table_->center;
  }
  return false;
}

bool AlgebraSpec::contains(BasisIndex idx) const {
  if (idx.is_central()) return has_center();
  if (kind_ == AlgebraKind::Custom) return table_->indices.contains(idx.n());
  return true;
}

void AlgebraSpec::require(BasisIndex idx) const {
  if (contains(idx)) return;
  if (idx.is_central())
    throw Error(ErrorKind::InvalidBasis, "t is not a basis vector of the " + name() +
                                             " algebra");
  throw Error(ErrorKind::OutOfWindow,
              idx.str() + " lies outside the basis of the custom algebra");
}

Element AlgebraSpec::bracket(BasisIndex x, BasisIndex y) const {
  require(x);
  require(y);
  if (x == y) return {};
  switch (kind_) {
  case AlgebraKind::Witt:
    return Element::basis(e(x.n() + y.n()), Scalar(y.n() - x.n()));
  case AlgebraKind::Virasoro: {
    if (x.is_central() || y.is_central()) return {};
    Element r = Element::basis(e(x.n() + y.n()), Scalar(y.n() - x.n()));
    r.add_term(central_t(), -central_term(x.n(), y.n()));
    return r;
  }
  case AlgebraKind::Custom: {
    bool flip = y < x;
    auto key = flip ? std::pair{y, x} : std::pair{x, y};
    auto it = table_->brackets.find(key);
    if (it == table_->brackets.end()) return {};
    return flip ? -it->second : it->second;
  }
  }
  return {};
}

std::vector<BasisIndex> AlgebraSpec::basis_of_degree(std::int64_t k) const {
  std::vector<BasisIndex> out;
  if (contains(e(k))) out.push_back(e(k));
  if (k == 0 && has_center()) out.push_back(central_t());
  return out;
}

std::vector<BasisIndex> AlgebraSpec::window_basis(std::int64_t radius) const {
  std::vector<BasisIndex> out;
  if (kind_ == AlgebraKind::Custom) {
    for (auto n : table_->indices)
      if (n >= -radius && n <= radius) out.push_back(e(n));
  } else {
    for (std::int64_t n = -radius; n <= radius; ++n) out.push_back(e(n));
  }
  if (has_center()) out.push_back(central_t());
  return out;
}

std::optional<Element> AlgebraSpec::grading_element() const {
  if (kind_ == AlgebraKind::Custom) return table_->grading_element;
  return Element::basis(e(0));
}

AlgebraSpec AlgebraSpec::custom(const CustomStructure &structure) {
  auto table = std::make_shared<CustomTable>();
  table->indices = structure.indices;
  table->center = structure.center;
  AlgebraSpec alg(AlgebraKind::Custom, table);

  for (const auto &[x, y, value] : structure.brackets) {
    alg.require(x);
    alg.require(y);
    for (const auto &[idx, c] : value.terms()) {
      if (!alg.contains(idx))
        throw Error(ErrorKind::OutOfWindow, "bracket [" + x.str() + ", " + y.str() +
                                                "] leaves the algebra window at " +
                                                idx.str());
      if (idx.degree() != x.degree() + y.degree())
        throw Error(ErrorKind::Contract, "bracket [" + x.str() + ", " + y.str() +
                                             "] is not graded");
    }
    if (x == y) {
      if (!value.is_zero())
        throw Error(ErrorKind::Contract,
                    "bracket [" + x.str() + ", " + x.str() + "] must vanish");
      continue;
    }
    if ((x.is_central() || y.is_central()) && !value.is_zero())
      throw Error(ErrorKind::Contract, "t must be central");
    bool flip = y < x;
    auto key = flip ? std::pair{y, x} : std::pair{x, y};
    Element canonical = flip ? -value : value;
    auto [it, inserted] = table->brackets.try_emplace(key, canonical);
    if (!inserted && it->second != canonical)
      throw Error(ErrorKind::Contract, "bracket table is not antisymmetric at [" +
                                           x.str() + ", " + y.str() + "]");
  }
  std::erase_if(table->brackets, [](const auto &kv) { return kv.second.is_zero(); });

  if (structure.grading_element) {
    const Element &g = *structure.grading_element;
    for (const auto &[idx, c] : g.terms()) alg.require(idx);
    for (const auto &x : alg.window_basis(std::numeric_limits<std::int64_t>::max())) {
      Element expected = Element::basis(x, Scalar(x.degree()));
      if (cochain_forge::bracket(g, Element::basis(x), alg) != expected)
        throw Error(ErrorKind::Contract, "grading element does not act by degree on " +
                                             x.str());
    }
    table->grading_element = g;
  }
  return alg;
}

Element bracket(const Element &x, const Element &y, const AlgebraSpec &alg) {
  Element out;
  for (const auto &[i, a] : x.terms())
    for (const auto &[j, b] : y.terms()) {
      Element term = alg.bracket(i, j);
      if (!term.is_zero()) out += term * (a * b);
    }
  return out;
}

Scalar central_term(std::int64_t n, std::int64_t m) {
  if (m != -n) return {};
  return Scalar(n * n * n - n, 12);
}

Element jacobi_residual(BasisIndex x, BasisIndex y, BasisIndex z,
                        const AlgebraSpec &alg) {
  Element bx = Element::basis(x), by = Element::basis(y), bz = Element::basis(z);
  return bracket(alg.bracket(x, y), bz, alg) + bracket(alg.bracket(y, z), bx, alg) +
         bracket(alg.bracket(z, x), by, alg);
}

PerfectnessWitness perfectness_witness(std::int64_t n) {
  if (n == 0) return {Element::basis(e(-1)), Element::basis(e(1)), Scalar(1, 2)};
  return {Element::basis(e(0)), Element::basis(e(n)), Scalar(1, n)};
}

} // namespace cochain_forge
