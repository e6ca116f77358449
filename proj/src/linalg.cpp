#include "cochain_forge/linalg.hpp"

#include "cochain_forge/error.hpp"

#include <algorithm>

namespace cochain_forge {

SparseVector axpy(const SparseVector &a, const Scalar &s, const SparseVector &b) {
  if (s.is_zero()) return a;
  SparseVector out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, s * ib->second);
      ++ib;
    } else {
      Scalar v = ia->second + s * ib->second;
      if (!v.is_zero()) out.emplace_back(ia->first, std::move(v));
      ++ia;
      ++ib;
    }
  }
  return out;
}

Scalar dot(const SparseVector &a, const SparseVector &b) {
  Scalar out;
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first)
      ++ia;
    else if (ib->first < ia->first)
      ++ib;
    else {
      out += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  return out;
}

Scalar entry(const SparseVector &v, std::size_t column) {
  auto it = std::lower_bound(v.begin(), v.end(), column,
                             [](const auto &p, std::size_t c) { return p.first < c; });
  return it != v.end() && it->first == column ? it->second : Scalar();
}

namespace {

void scale(SparseVector &v, const Scalar &s) {
  for (auto &[c, x] : v) x *= s;
}

} // namespace

SparseVector RowEchelon::reduce(const SparseVector &v) const {
  SparseVector out = v;
  // Rows are reduced, so subtracting one never reintroduces another pivot;
  // collect the factors up front.
  std::vector<std::pair<std::size_t, Scalar>> factors;
  for (const auto &[c, x] : v)
    if (rows_.contains(c)) factors.emplace_back(c, x);
  for (const auto &[c, x] : factors) out = axpy(out, -x, rows_.at(c));
  return out;
}

bool RowEchelon::insert(const SparseVector &v) {
  for (const auto &[c, x] : v)
    if (c >= ambient_) throw Error(ErrorKind::Contract, "vector exceeds ambient dimension");
  SparseVector r = reduce(v);
  if (r.empty()) return false;
  std::size_t pivot = r.front().first;
  scale(r, Scalar(1) / r.front().second);
  for (auto &[p, row] : rows_) {
    Scalar f = entry(row, pivot);
    if (!f.is_zero()) row = axpy(row, -f, r);
  }
  rows_.emplace(pivot, std::move(r));
  return true;
}

SubspaceBasis RowEchelon::basis() const {
  SubspaceBasis out{ambient_, {}};
  for (const auto &[p, row] : rows_) out.vectors.push_back(row);
  return out;
}

SubspaceBasis span(const std::vector<SparseVector> &vectors, std::size_t ambient) {
  RowEchelon ech(ambient);
  for (const auto &v : vectors) ech.insert(v);
  return ech.basis();
}

SubspaceBasis nullspace(const LinearSystem &system) {
  RowEchelon ech(system.column_count());
  for (const auto &row : system.rows) ech.insert(row);
  std::vector<SparseVector> kernel;
  for (std::size_t f = 0; f < system.column_count(); ++f) {
    if (ech.is_pivot(f)) continue;
    SparseVector v;
    for (const auto &[p, row] : ech.rows()) {
      Scalar x = entry(row, f);
      if (!x.is_zero()) v.emplace_back(p, -x);
    }
    v.emplace_back(f, Scalar(1));
    std::sort(v.begin(), v.end(),
              [](const auto &a, const auto &b) { return a.first < b.first; });
    kernel.push_back(std::move(v));
  }
  return span(kernel, system.column_count());
}

std::size_t rank(const LinearSystem &system) {
  RowEchelon ech(system.column_count());
  for (const auto &row : system.rows) ech.insert(row);
  return ech.rank();
}

bool contains(const SubspaceBasis &space, const SparseVector &v) {
  RowEchelon ech(space.ambient);
  for (const auto &b : space.vectors) ech.insert(b);
  return ech.reduce(v).empty();
}

bool is_subspace(const SubspaceBasis &inner, const SubspaceBasis &outer) {
  RowEchelon ech(outer.ambient);
  for (const auto &b : outer.vectors) ech.insert(b);
  return std::all_of(inner.vectors.begin(), inner.vectors.end(),
                     [&](const SparseVector &v) { return ech.reduce(v).empty(); });
}

SubspaceBasis project(const SubspaceBasis &space,
                      const std::vector<std::optional<std::size_t>> &column_map,
                      std::size_t new_ambient) {
  std::vector<SparseVector> images;
  for (const auto &v : space.vectors) {
    SparseVector w;
    for (const auto &[c, x] : v)
      if (c < column_map.size() && column_map[c]) w.emplace_back(*column_map[c], x);
    std::sort(w.begin(), w.end(),
              [](const auto &a, const auto &b) { return a.first < b.first; });
    images.push_back(std::move(w));
  }
  return span(images, new_ambient);
}

SolveResult solve(const LinearSystem &system, const std::vector<Scalar> &rhs) {
  if (rhs.size() != system.rows.size())
    throw Error(ErrorKind::Contract, "right-hand side size mismatch");

  struct Row {
    SparseVector coeffs;
    Scalar rhs;
    SparseVector combo; // weights over original rows
  };
  std::map<std::size_t, Row> pivots;

  for (std::size_t r = 0; r < system.rows.size(); ++r) {
    Row row{system.rows[r], rhs[r], SparseVector{{r, Scalar(1)}}};
    std::vector<std::pair<std::size_t, Scalar>> factors;
    for (const auto &[c, x] : row.coeffs)
      if (pivots.contains(c)) factors.emplace_back(c, x);
    for (const auto &[c, x] : factors) {
      const Row &p = pivots.at(c);
      row.coeffs = axpy(row.coeffs, -x, p.coeffs);
      row.rhs -= x * p.rhs;
      row.combo = axpy(row.combo, -x, p.combo);
    }
    if (row.coeffs.empty()) {
      if (!row.rhs.is_zero())
        return SolveResult{std::nullopt, InconsistencyWitness{row.combo, row.rhs}};
      continue;
    }
    std::size_t pivot = row.coeffs.front().first;
    Scalar inv = Scalar(1) / row.coeffs.front().second;
    scale(row.coeffs, inv);
    row.rhs *= inv;
    scale(row.combo, inv);
    for (auto &[c, other] : pivots) {
      Scalar f = entry(other.coeffs, pivot);
      if (f.is_zero()) continue;
      other.coeffs = axpy(other.coeffs, -f, row.coeffs);
      other.rhs -= f * row.rhs;
      other.combo = axpy(other.combo, -f, row.combo);
    }
    pivots.emplace(pivot, std::move(row));
  }

  SparseVector x;
  for (const auto &[p, row] : pivots)
    if (!row.rhs.is_zero()) x.emplace_back(p, row.rhs);
  return SolveResult{std::move(x), std::nullopt};
}

} // namespace cochain_forge
