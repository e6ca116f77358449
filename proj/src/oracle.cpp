#include "cochain_forge/oracle.hpp"

#include "cochain_forge/error.hpp"
#include "cochain_forge/parallel.hpp"

#include <algorithm>
#include <set>

namespace cochain_forge {

namespace {

// Basis vectors allowed as values of a degree-k component.
std::vector<BasisIndex> value_basis(const AlgebraSpec &alg, Module module, std::int64_t k) {
  if (module == Module::Trivial) return k == 0 ? std::vector{central_t()} : std::vector<BasisIndex>{};
  return alg.basis_of_degree(k);
}

bool usable(const AlgebraSpec &alg, std::int64_t radius, BasisIndex a, BasisIndex b) {
  if (a.radius() > radius || b.radius() > radius) return false;
  Element ab = alg.bracket(a, b);
  for (const auto &[idx, c] : ab.terms())
    if (idx.radius() > radius) return false;
  return true;
}

Element module_action(const AlgebraSpec &alg, Module module, BasisIndex x, BasisIndex v) {
  if (module == Module::Trivial) return {};
  return alg.bracket(x, v);
}

std::int64_t shell(BasisIndex a, BasisIndex b) { return std::max(a.radius(), b.radius()); }

SparseVector to_sparse(const std::map<std::size_t, Scalar> &m) {
  SparseVector out;
  for (const auto &[c, x] : m)
    if (!x.is_zero()) out.emplace_back(c, x);
  return out;
}

// Canonical pair lookup shared by the system builders.
class PairTable {
public:
  PairTable(const AlgebraSpec &alg, const PairCoordinates &coords) {
    for (std::size_t k = 0; k < coords.size(); ++k) {
      const auto &c = coords.columns()[k];
      by_pair_[{c.x, c.y}].push_back(k);
    }
    auto basis = alg.window_basis(coords.radius());
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = a + 1; b < basis.size(); ++b)
        if (usable(alg, coords.radius(), basis[a], basis[b])) by_pair_[{basis[a], basis[b]}];
  }

  // Columns of the canonical pair; nullptr when the pair is not evaluable.
  const std::vector<std::size_t> *columns(BasisIndex a, BasisIndex b) const {
    auto it = by_pair_.find(a < b ? BasisPair{a, b} : BasisPair{b, a});
    return it == by_pair_.end() ? nullptr : &it->second;
  }

private:
  std::map<BasisPair, std::vector<std::size_t>> by_pair_;
};

} // namespace

std::string PairCoordinate::label() const {
  return "psi[" + x.str() + "," + y.str() + "]." + value.str();
}

std::string PointCoordinate::label() const { return "phi[" + x.str() + "]." + value.str(); }

PairCoordinates::PairCoordinates(const AlgebraSpec &alg, Module module, std::int64_t degree,
                                 std::int64_t radius)
    : degree_(degree), radius_(radius) {
  auto basis = alg.window_basis(radius);
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      BasisIndex x = basis[a], y = basis[b];
      if (!usable(alg, radius, x, y)) continue;
      for (BasisIndex v : value_basis(alg, module, x.degree() + y.degree() + degree))
        columns_.push_back({x, y, v});
    }
  std::stable_sort(columns_.begin(), columns_.end(),
                   [](const PairCoordinate &p, const PairCoordinate &q) {
                     return shell(p.x, p.y) < shell(q.x, q.y);
                   });
  for (std::size_t k = 0; k < columns_.size(); ++k) index_.emplace(columns_[k], k);
}

std::vector<std::string> PairCoordinates::labels() const {
  std::vector<std::string> out;
  for (const auto &c : columns_) out.push_back(c.label());
  return out;
}

std::optional<std::size_t> PairCoordinates::find(const PairCoordinate &c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SparseVector PairCoordinates::encode(const TwoCochain &psi) const {
  std::map<std::size_t, Scalar> out;
  for (const auto &[p, v] : psi.entries())
    for (const auto &[idx, c] : v.terms()) {
      auto k = find({p.first, p.second, idx});
      if (!k)
        throw Error(ErrorKind::Contract, "component " + idx.str() + " of psi(" + p.first.str() +
                                             "," + p.second.str() +
                                             ") lies outside the degree-" +
                                             std::to_string(degree_) + " coordinates");
      out[*k] += c;
    }
  return to_sparse(out);
}

TwoCochain PairCoordinates::decode(const SparseVector &v) const {
  TwoCochain psi(Window{radius_});
  for (const auto &[k, x] : v) {
    const auto &c = columns_.at(k);
    psi.set(c.x, c.y, psi(c.x, c.y) + Element::basis(c.value, x));
  }
  return psi;
}

PointCoordinates::PointCoordinates(const AlgebraSpec &alg, Module module, std::int64_t degree,
                                   std::int64_t radius)
    : radius_(radius) {
  for (BasisIndex x : alg.window_basis(radius))
    for (BasisIndex v : value_basis(alg, module, x.degree() + degree)) columns_.push_back({x, v});
}

std::vector<std::string> PointCoordinates::labels() const {
  std::vector<std::string> out;
  for (const auto &c : columns_) out.push_back(c.label());
  return out;
}

OneCochain PointCoordinates::decode(const SparseVector &v) const {
  OneCochain phi(Window{radius_});
  for (const auto &[k, x] : v) {
    const auto &c = columns_.at(k);
    Element cur = phi.values().contains(c.x) ? phi.values().at(c.x) : Element();
    phi.set(c.x, cur + Element::basis(c.value, x));
  }
  return phi;
}

LinearSystem cocycle_system(const AlgebraSpec &alg, Module module, std::int64_t degree,
                            std::int64_t radius) {
  PairCoordinates coords(alg, module, degree, radius);
  PairTable table(alg, coords);
  const auto &cols = coords.columns();

  auto basis = alg.window_basis(radius);
  std::vector<Triple> triples;
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b)
      for (std::size_t c = b + 1; c < basis.size(); ++c)
        triples.push_back({basis[a], basis[b], basis[c]});

  using Rows = std::vector<std::pair<std::string, SparseVector>>;
  std::vector<Rows> per_triple(triples.size());

  parallel_for(triples.size(), [&](std::size_t n) {
    const auto &[x, y, z] = triples[n];
    std::map<BasisIndex, std::map<std::size_t, Scalar>> acc;

    // coeff * psi(a, b), read through antisymmetry.
    auto bracket_term = [&](BasisIndex a, BasisIndex b, const Scalar &coeff) {
      if (a == b) return true;
      const auto *ks = table.columns(a, b);
      if (!ks) return false;
      Scalar s = a < b ? coeff : -coeff;
      for (std::size_t k : *ks) acc[cols[k].value][k] += s;
      return true;
    };
    // coeff * w . psi(a, b)
    auto action_term = [&](BasisIndex w, BasisIndex a, BasisIndex b, const Scalar &coeff) {
      const auto *ks = table.columns(a, b);
      if (!ks) return false;
      Scalar s = a < b ? coeff : -coeff;
      for (std::size_t k : *ks) {
        Element wv = module_action(alg, module, w, cols[k].value);
        for (const auto &[out, c] : wv.terms()) acc[out][k] += s * c;
      }
      return true;
    };

    bool ok = true;
    for (auto [a, b, o] : {std::tuple{x, y, z}, std::tuple{y, z, x}, std::tuple{z, x, y}}) {
      Element ab = alg.bracket(a, b);
      for (const auto &[u, c] : ab.terms()) ok = ok && bracket_term(u, o, c);
    }
    ok = ok && action_term(x, y, z, Scalar(-1));
    ok = ok && action_term(y, x, z, Scalar(1));
    ok = ok && action_term(z, x, y, Scalar(-1));
    if (!ok) return;

    for (const auto &[out, m] : acc) {
      auto row = to_sparse(m);
      if (!row.empty())
        per_triple[n].emplace_back("d2(" + x.str() + "," + y.str() + "," + z.str() + ")." +
                                       out.str(),
                                   std::move(row));
    }
  });

  LinearSystem sys;
  sys.columns = coords.labels();
  for (auto &rows : per_triple)
    for (auto &[label, row] : rows) {
      sys.row_labels.push_back(std::move(label));
      sys.rows.push_back(std::move(row));
    }
  return sys;
}

SubspaceBasis windowed_cocycle_space(const AlgebraSpec &alg, Module module,
                                     std::int64_t degree, std::int64_t radius) {
  if (radius < 0) throw Error(ErrorKind::Contract, "radius must be nonnegative");
  return nullspace(cocycle_system(alg, module, degree, radius));
}

std::vector<SparseVector> coboundary_images(const AlgebraSpec &alg, Module module,
                                            const PairCoordinates &pairs,
                                            const PointCoordinates &points) {
  std::vector<SparseVector> images(points.size());
  parallel_for(points.size(), [&](std::size_t k) {
    const auto &[x, v] = points.columns()[k];
    std::map<std::size_t, Scalar> acc;
    auto add = [&](BasisIndex a, BasisIndex b, const Element &value) {
      for (const auto &[idx, c] : value.terms()) {
        auto col = pairs.find({a, b, idx});
        if (!col)
          throw Error(ErrorKind::Contract,
                      "coboundary component " + idx.str() + " at (" + a.str() + "," + b.str() +
                          ") has no coordinate");
        acc[*col] += c;
      }
    };
    std::set<BasisPair> seen;
    for (const auto &col : pairs.columns()) {
      BasisPair p{col.x, col.y};
      if (!seen.insert(p).second) continue;
      auto [a, b] = p;
      // phi([a,b]) - a.phi(b) + b.phi(a) with phi = (x -> v).
      Element value = Element::basis(v, alg.bracket(a, b).coefficient(x));
      if (b == x) value -= module_action(alg, module, a, v);
      if (a == x) value += module_action(alg, module, b, v);
      add(a, b, value);
    }
    images[k] = to_sparse(acc);
  });
  return images;
}

SubspaceBasis windowed_coboundary_space(const AlgebraSpec &alg, Module module,
                                        std::int64_t degree, std::int64_t radius) {
  if (radius < 0) throw Error(ErrorKind::Contract, "radius must be nonnegative");
  PairCoordinates pairs(alg, module, degree, radius);
  PointCoordinates points(alg, module, degree, radius);
  return span(coboundary_images(alg, module, pairs, points), pairs.size());
}

H2Report h2_report(const AlgebraSpec &alg, Module module, std::int64_t degree,
                   std::int64_t inner_radius, std::int64_t margin) {
  if (margin < 4) throw Error(ErrorKind::Contract, "margin must be at least 4");
  if (inner_radius < 0) throw Error(ErrorKind::Contract, "radius must be nonnegative");
  std::int64_t outer = inner_radius + margin;

  PairCoordinates big(alg, module, degree, outer);
  PairCoordinates small(alg, module, degree, inner_radius);
  PointCoordinates points(alg, module, degree, outer);

  std::vector<std::optional<std::size_t>> column_map;
  for (const auto &c : big.columns()) column_map.push_back(small.find(c));

  SubspaceBasis z = nullspace(cocycle_system(alg, module, degree, outer));
  SubspaceBasis b = span(coboundary_images(alg, module, big, points), big.size());

  H2Report report;
  report.degree = degree;
  report.inner_radius = inner_radius;
  report.margin = margin;
  report.cocycles = project(z, column_map, small.size());
  SubspaceBasis bn = project(b, column_map, small.size());
  report.cocycle_dim = report.cocycles.dimension();
  report.coboundary_dim = bn.dimension();
  if (!is_subspace(bn, report.cocycles))
    throw Error(ErrorKind::CertificationFailure, "restricted coboundaries are not cocycles",
                "oracle");
  report.h2_dim = report.cocycle_dim - report.coboundary_dim;

  // Rows of the cocycle echelon whose pivot is not a coboundary pivot; they
  // vanish on every coboundary pivot column.
  std::set<std::size_t> bpivots;
  for (const auto &v : bn.vectors) bpivots.insert(v.front().first);
  for (const auto &v : report.cocycles.vectors)
    if (!bpivots.contains(v.front().first)) {
      report.representative_vectors.push_back(v);
      report.representatives.push_back(small.decode(v));
    }
  return report;
}

namespace {

CoboundarySolution solve_homogeneous(const TwoCochain &psi, const AlgebraSpec &alg,
                                     Module module, std::int64_t degree) {
  std::int64_t radius = psi.window().radius;
  PairCoordinates pairs(alg, module, degree, radius);
  PointCoordinates points(alg, module, degree, radius);
  auto images = coboundary_images(alg, module, pairs, points);

  // Transpose: one equation per pair coordinate.
  std::vector<std::map<std::size_t, Scalar>> rows(pairs.size());
  for (std::size_t k = 0; k < images.size(); ++k)
    for (const auto &[r, x] : images[k]) rows[r][k] = x;

  LinearSystem sys;
  sys.columns = points.labels();
  sys.row_labels = pairs.labels();
  for (const auto &m : rows) sys.rows.push_back(to_sparse(m));

  std::vector<Scalar> rhs(pairs.size());
  for (const auto &[r, x] : pairs.encode(psi)) rhs[r] = x;

  CoboundarySolution out;
  out.equations = sys.rows.size();
  out.unknowns = sys.column_count();
  auto result = solve(sys, rhs);
  if (result.solution) {
    out.phi = points.decode(*result.solution);
  } else {
    for (const auto &[r, w] : result.witness->weights)
      out.witness.push_back({pairs.columns()[r], w});
    out.contradiction = result.witness->contradiction;
  }
  return out;
}

} // namespace

CoboundarySolution is_coboundary_solve(const TwoCochain &psi, const AlgebraSpec &alg,
                                       Module module) {
  validate(psi, alg, module);
  auto components = degree_decompose(psi);
  if (components.empty()) return solve_homogeneous(psi, alg, module, 0);

  // delta1 preserves degree, so each component is solved on its own; the
  // first infeasible one supplies the witness.
  CoboundarySolution out;
  out.phi = OneCochain(psi.window());
  for (const auto &[degree, component] : components) {
    auto part = solve_homogeneous(component, alg, module, degree);
    out.equations += part.equations;
    out.unknowns += part.unknowns;
    if (!part.feasible()) {
      part.equations = out.equations;
      part.unknowns = out.unknowns;
      return part;
    }
    *out.phi += *part.phi;
  }
  return out;
}

} // namespace cochain_forge
