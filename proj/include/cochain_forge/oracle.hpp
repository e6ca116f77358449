#pragma once

#include "cochain_forge/cochain.hpp"
#include "cochain_forge/linalg.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace cochain_forge {

/// One unknown of a degree-homogeneous 2-cochain: the coefficient of `value`
/// in psi(x, y), x < y.
struct PairCoordinate {
  BasisIndex x, y, value;
  std::string label() const;
  friend auto operator<=>(const PairCoordinate &, const PairCoordinate &) = default;
};

/// One unknown of a degree-homogeneous 1-cochain: the coefficient of `value`
/// in phi(x).
struct PointCoordinate {
  BasisIndex x, value;
  std::string label() const;
};

/// Coordinates of the degree-d 2-cochains on the evaluable pairs of a window.
/// Columns are in shell order: pairs with smaller max |index| first.
class PairCoordinates {
public:
  PairCoordinates(const AlgebraSpec &alg, Module module, std::int64_t degree,
                  std::int64_t radius);

  std::size_t size() const { return columns_.size(); }
  const std::vector<PairCoordinate> &columns() const { return columns_; }
  std::vector<std::string> labels() const;
  std::optional<std::size_t> find(const PairCoordinate &c) const;
  std::int64_t radius() const { return radius_; }
  std::int64_t degree() const { return degree_; }

  /// Throws Contract when psi has a component outside these coordinates.
  SparseVector encode(const TwoCochain &psi) const;
  TwoCochain decode(const SparseVector &v) const;

private:
  std::int64_t degree_;
  std::int64_t radius_;
  std::vector<PairCoordinate> columns_;
  std::map<PairCoordinate, std::size_t> index_;
};

/// Coordinates of the degree-d 1-cochains on a window.
class PointCoordinates {
public:
  PointCoordinates(const AlgebraSpec &alg, Module module, std::int64_t degree,
                   std::int64_t radius);

  std::size_t size() const { return columns_.size(); }
  const std::vector<PointCoordinate> &columns() const { return columns_; }
  std::vector<std::string> labels() const;
  OneCochain decode(const SparseVector &v) const;

private:
  std::int64_t radius_;
  std::vector<PointCoordinate> columns_;
};

/// Linearized cocycle condition: one row per output component of the
/// six-term sum at each evaluable triple.
LinearSystem cocycle_system(const AlgebraSpec &alg, Module module, std::int64_t degree,
                            std::int64_t radius);

SubspaceBasis windowed_cocycle_space(const AlgebraSpec &alg, Module module,
                                     std::int64_t degree, std::int64_t radius);

/// Image of delta1 on degree-d 1-cochains, in the cocycle coordinates.
SubspaceBasis windowed_coboundary_space(const AlgebraSpec &alg, Module module,
                                        std::int64_t degree, std::int64_t radius);

/// Columns of delta1 on unit 1-cochains: images[k] = delta1(unit k).
std::vector<SparseVector> coboundary_images(const AlgebraSpec &alg, Module module,
                                            const PairCoordinates &pairs,
                                            const PointCoordinates &points);

struct H2Report {
  std::int64_t degree = 0;
  std::int64_t inner_radius = 0;
  std::int64_t margin = 0;
  std::size_t cocycle_dim = 0;
  std::size_t coboundary_dim = 0;
  std::size_t h2_dim = 0;
  /// Restricted cocycle space in inner-window coordinates.
  SubspaceBasis cocycles;
  /// Canonical quotient representatives, as vectors and as cochains.
  std::vector<SparseVector> representative_vectors;
  std::vector<TwoCochain> representatives;
};

/// Solves at radius N + M and restricts both spaces to the pairs evaluable
/// on radius N.
H2Report h2_report(const AlgebraSpec &alg, Module module, std::int64_t degree,
                   std::int64_t inner_radius, std::int64_t margin);

/// weight * (equation "delta1(phi) = psi" at one pair coordinate).
struct WitnessTerm {
  PairCoordinate coordinate;
  Scalar weight;
};

struct CoboundarySolution {
  std::optional<OneCochain> phi;
  /// For infeasible systems: sum of weight * equation reads 0 = contradiction.
  std::vector<WitnessTerm> witness;
  Scalar contradiction;
  std::size_t equations = 0;
  std::size_t unknowns = 0;

  bool feasible() const { return phi.has_value(); }
};

/// Solves delta1(phi) = psi on psi's window, one degree component at a time.
CoboundarySolution is_coboundary_solve(const TwoCochain &psi, const AlgebraSpec &alg,
                                       Module module = Module::Adjoint);

} // namespace cochain_forge
