#pragma once

#include "cochain_forge/algebra.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cochain_forge {

/// Coefficient module for cochains: the algebra acting on itself, or the
/// trivial module K. Trivial-module values are stored as multiples of t.
enum class Module { Adjoint, Trivial };

const char *to_string(Module m) noexcept;

/// Index window {e_n : |n| <= radius}; t is always inside.
struct Window {
  std::int64_t radius = 0;

  bool contains(BasisIndex idx) const { return idx.radius() <= radius; }
  bool contains(const Element &x) const;
  friend bool operator==(Window, Window) = default;
};

using BasisPair = std::pair<BasisIndex, BasisIndex>;

struct Triple {
  BasisIndex x, y, z;
  std::string str() const;
  friend bool operator==(const Triple &, const Triple &) = default;
};

/// Linear map on the basis vectors of a window. Missing entries are zero.
class OneCochain {
public:
  explicit OneCochain(Window window = {}) : window_(window) {}

  Window window() const { return window_; }
  /// Throws OutOfWindow when idx lies outside the window.
  Element operator()(BasisIndex idx) const;
  /// Linear extension; throws OutOfWindow for out-of-window components.
  Element apply(const Element &x) const;
  void set(BasisIndex idx, Element value);
  const std::map<BasisIndex, Element> &values() const { return values_; }

  OneCochain restricted(std::int64_t radius) const;

  OneCochain &operator+=(const OneCochain &rhs);
  OneCochain &operator-=(const OneCochain &rhs);
  friend OneCochain operator+(OneCochain a, const OneCochain &b) { return a += b; }
  friend OneCochain operator-(OneCochain a, const OneCochain &b) { return a -= b; }
  friend bool operator==(const OneCochain &, const OneCochain &) = default;

private:
  Window window_;
  std::map<BasisIndex, Element> values_;
};

/// Alternating bilinear map on basis pairs of a window. Stored on canonical
/// pairs (x < y); the reversed pair reads the negated value.
class TwoCochain {
public:
  explicit TwoCochain(Window window = {}) : window_(window) {}

  Window window() const { return window_; }
  /// psi(x, y) with antisymmetry applied; zero when absent or x == y.
  Element operator()(BasisIndex x, BasisIndex y) const;
  /// Stores psi(x, y) (and implicitly psi(y, x) = -value). Throws Contract for
  /// a nonzero diagonal value and OutOfWindow for indices outside the window.
  void set(BasisIndex x, BasisIndex y, Element value);
  const std::map<BasisPair, Element> &entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  TwoCochain restricted(std::int64_t radius) const;

  TwoCochain &operator+=(const TwoCochain &rhs);
  TwoCochain &operator-=(const TwoCochain &rhs);
  friend TwoCochain operator+(TwoCochain a, const TwoCochain &b) { return a += b; }
  friend TwoCochain operator-(TwoCochain a, const TwoCochain &b) { return a -= b; }
  friend bool operator==(const TwoCochain &, const TwoCochain &) = default;

private:
  Window window_;
  std::map<BasisPair, Element> entries_;
};

/// The pair (x, y) can be evaluated on a window when x, y and every basis
/// vector of [x, y] lie inside it.
bool pair_evaluable(const AlgebraSpec &alg, Window w, BasisIndex x, BasisIndex y);

/// All canonical evaluable pairs (x < y) of a window.
std::vector<BasisPair> evaluable_pairs(const AlgebraSpec &alg, Window w);

/// Checks that every entry lies on an evaluable pair with indices valid for
/// the algebra, and (for the trivial module) that values are multiples of t.
void validate(const TwoCochain &psi, const AlgebraSpec &alg,
              Module module = Module::Adjoint);
void validate(const OneCochain &phi, const AlgebraSpec &alg,
              Module module = Module::Adjoint);

/// Module action x . v.
Element act(const AlgebraSpec &alg, Module module, BasisIndex x, const Element &v);

/// (delta phi)(x, y) = phi([x,y]) - x.phi(y) + y.phi(x) on every evaluable pair.
TwoCochain delta1(const OneCochain &phi, const AlgebraSpec &alg,
                  Module module = Module::Adjoint);

/// Six-term coboundary of psi at one triple, or nullopt when some required
/// pair argument is not evaluable on psi's window.
std::optional<Element> cocycle_residual_at(const TwoCochain &psi, const AlgebraSpec &alg,
                                           const Triple &triple,
                                           Module module = Module::Adjoint);

struct Residual {
  Triple triple;
  Element value;
  std::string note;
};

struct ResidualReport {
  std::size_t evaluable_triples = 0;
  std::vector<Residual> nonzero;
  /// Largest window on which every evaluable check passed; empty if none.
  std::optional<Window> certified;

  bool ok() const { return nonzero.empty(); }
};

/// Evaluates the cocycle condition on every evaluable triple x < y < z.
ResidualReport delta2_residual(const TwoCochain &psi, const AlgebraSpec &alg,
                               Module module = Module::Adjoint);

/// Degree of a value component v in psi(x, y): deg v - deg x - deg y.
inline std::int64_t component_degree(BasisIndex x, BasisIndex y, BasisIndex v) {
  return v.degree() - x.degree() - y.degree();
}

/// Splits psi into degree-homogeneous components (zero components omitted).
std::map<std::int64_t, TwoCochain> degree_decompose(const TwoCochain &psi);

/// Degree of a nonzero homogeneous cochain; nullopt for zero, Contract error
/// when psi mixes degrees.
std::optional<std::int64_t> homogeneous_degree(const TwoCochain &psi);

/// phi'_i = phi_i - i*phi_1 for a degree-zero phi(e_i) = phi_i e_i. Values on
/// t are carried over unchanged.
OneCochain normalize_one_cochain(const OneCochain &phi);

/// Drops t: pairs involving t and t-components of values.
TwoCochain project_to_witt(const TwoCochain &psi);

} // namespace cochain_forge
