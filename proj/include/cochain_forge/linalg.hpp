#pragma once

#include "cochain_forge/scalar.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cochain_forge {

/// Sparse rational vector: (column, value) pairs sorted by column, no zeros.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

/// a + s*b.
SparseVector axpy(const SparseVector &a, const Scalar &s, const SparseVector &b);
Scalar dot(const SparseVector &a, const SparseVector &b);
Scalar entry(const SparseVector &v, std::size_t column);

struct LinearSystem {
  std::vector<std::string> columns;
  std::vector<SparseVector> rows;
  std::vector<std::string> row_labels;

  std::size_t column_count() const { return columns.size(); }
};

/// A subspace of K^ambient given by its reduced row echelon basis.
struct SubspaceBasis {
  std::size_t ambient = 0;
  std::vector<SparseVector> vectors;

  std::size_t dimension() const { return vectors.size(); }
  friend bool operator==(const SubspaceBasis &, const SubspaceBasis &) = default;
};

/// Incremental Gauss-Jordan elimination. Rows are kept normalized (pivot 1)
/// and every pivot column is cleared from every other row.
class RowEchelon {
public:
  explicit RowEchelon(std::size_t ambient) : ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t rank() const { return rows_.size(); }
  /// v minus its projection on the current pivots.
  SparseVector reduce(const SparseVector &v) const;
  /// Adds v to the row space; false when v was already dependent.
  bool insert(const SparseVector &v);
  bool is_pivot(std::size_t column) const { return rows_.contains(column); }
  const std::map<std::size_t, SparseVector> &rows() const { return rows_; }
  SubspaceBasis basis() const;

private:
  std::size_t ambient_;
  std::map<std::size_t, SparseVector> rows_;
};

/// Canonical basis of span(vectors).
SubspaceBasis span(const std::vector<SparseVector> &vectors, std::size_t ambient);

/// Exact basis of {x : row . x = 0 for every row}.
SubspaceBasis nullspace(const LinearSystem &system);

/// Rank of the row space.
std::size_t rank(const LinearSystem &system);

bool contains(const SubspaceBasis &space, const SparseVector &v);
bool is_subspace(const SubspaceBasis &inner, const SubspaceBasis &outer);

/// Maps each column through `column_map` (nullopt drops it) and returns the
/// span of the images.
SubspaceBasis project(const SubspaceBasis &space,
                      const std::vector<std::optional<std::size_t>> &column_map,
                      std::size_t new_ambient);

/// sum_r weights[r] * row_r == 0 while sum_r weights[r] * rhs_r == contradiction != 0.
struct InconsistencyWitness {
  SparseVector weights;
  Scalar contradiction;
};

struct SolveResult {
  std::optional<SparseVector> solution;
  std::optional<InconsistencyWitness> witness;

  bool feasible() const { return solution.has_value(); }
};

/// Solves system . x = rhs exactly (free variables set to zero), or returns
/// the row combination exposing the inconsistency.
SolveResult solve(const LinearSystem &system, const std::vector<Scalar> &rhs);

} // namespace cochain_forge
