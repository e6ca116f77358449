#pragma once

#include "cochain_forge/element.hpp"

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace cochain_forge {

enum class AlgebraKind { Witt, Virasoro, Custom };

/// Structure constants for a user-supplied finite-dimensional graded algebra.
/// Basis is {e_n : n in indices} plus t when `center` is set. Pairs absent
/// from `brackets` bracket to zero.
struct CustomStructure {
  std::set<std::int64_t> indices;
  bool center = false;
  std::vector<std::tuple<BasisIndex, BasisIndex, Element>> brackets;
  std::optional<Element> grading_element;
};

/// A graded Lie algebra over the rationals: Witt, Virasoro, or a custom table.
/// Cheap to copy; custom tables are shared.
class AlgebraSpec {
public:
  static AlgebraSpec witt();
  static AlgebraSpec virasoro();
  /// Validates antisymmetry, grading, window closure and, when a grading
  /// element is given, the internally-graded condition [g, x] = deg(x) x.
  static AlgebraSpec custom(const CustomStructure &structure);

  AlgebraKind kind() const { return kind_; }
  /// "witt", "virasoro" or "custom".
  std::string name() const;
  bool has_center() const;

  /// True when idx is a basis vector of this algebra.
  bool contains(BasisIndex idx) const;
  /// Throws InvalidBasis (t without a center) or OutOfWindow (custom index
  /// outside the declared basis).
  void require(BasisIndex idx) const;

  Element bracket(BasisIndex x, BasisIndex y) const;

  /// Basis vectors of degree k.
  std::vector<BasisIndex> basis_of_degree(std::int64_t k) const;
  /// Basis vectors with |n| <= radius, in BasisIndex order (t last).
  std::vector<BasisIndex> window_basis(std::int64_t radius) const;

  /// The element whose adjoint eigenspaces are the graded pieces (e_0 for
  /// Witt and Virasoro), if any.
  std::optional<Element> grading_element() const;

private:
  struct CustomTable;

  AlgebraSpec(AlgebraKind kind, std::shared_ptr<const CustomTable> table)
      : kind_(kind), table_(std::move(table)) {}

  AlgebraKind kind_;
  std::shared_ptr<const CustomTable> table_;
};

/// Bilinear extension of the structure constants.
Element bracket(const Element &x, const Element &y, const AlgebraSpec &alg);

/// The Virasoro defining cocycle (n^3 - n)/12 * delta_{n,-m}.
Scalar central_term(std::int64_t n, std::int64_t m);

/// [[x,y],z] + [[y,z],x] + [[z,x],y].
Element jacobi_residual(BasisIndex x, BasisIndex y, BasisIndex z,
                        const AlgebraSpec &alg);

/// scale * [left, right] == e_n.
struct PerfectnessWitness {
  Element left;
  Element right;
  Scalar scale;
};

PerfectnessWitness perfectness_witness(std::int64_t n);

} // namespace cochain_forge
