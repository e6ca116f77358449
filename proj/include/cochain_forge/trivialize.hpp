#pragma once

#include "cochain_forge/cochain.hpp"

#include <map>
#include <string>
#include <vector>

namespace cochain_forge {

/// Pipeline stage tags carried by errors and certificates.
namespace stage {
inline constexpr const char *cocycle_check = "cocycle-check";
inline constexpr const char *reduce_degree = "reduce-degree";
inline constexpr const char *witt_step1 = "witt-step1";
inline constexpr const char *level_propagate = "level-propagate";
inline constexpr const char *center_cleanup = "center-cleanup";
inline constexpr const char *witt_lift = "witt-lift";
inline constexpr const char *central_valued = "central-valued";
inline constexpr const char *final_check = "final";
} // namespace stage

/// Smallest window on which degree-zero certification is attempted.
inline constexpr std::int64_t kMinDegreeZeroRadius = 8;

struct StageCertificate {
  std::string stage;
  std::int64_t degree = 0;
  Window certified;
  bool passed = false;
};

/// phi together with the window on which delta1(phi) == psi was checked
/// exactly. `residual` holds psi - delta1(phi) on that window and is empty for
/// every successful result.
struct TrivializationResult {
  OneCochain phi;
  Window certified;
  TwoCochain residual;
  std::vector<StageCertificate> stages;
};

/// psi - delta1(phi) restricted to the evaluable pairs of `radius`.
TwoCochain coboundary_defect(const TwoCochain &psi, const OneCochain &phi,
                             const AlgebraSpec &alg, std::int64_t radius);

/// Degree d != 0: phi(x) = psi(x, g)/d with g the grading element. Certifies
/// on radius N - |d| - 1.
TrivializationResult reduce_nonzero_degree(const TwoCochain &psi, std::int64_t d,
                                           const AlgebraSpec &alg);

/// Witt degree zero, step one: builds phi (phi_1 = 0) with
/// (psi - delta phi)_{i,1} = 0 for every evaluable i and (psi - delta phi)_{-1,2} = 0.
OneCochain witt_step1(const TwoCochain &psi);

/// Re-derives, level by level, that a degree-zero Witt cocycle with vanishing
/// level 1 and (-1,2) coefficient is zero. Every equation used is evaluated
/// on the stored values; a mismatch is reported with its level. Throws
/// Contract when a level-1 or (-1,2) coefficient is nonzero.
ResidualReport witt_level_propagate(const TwoCochain &psi_prime);

/// Full Witt pipeline: degree split, nonzero-degree reduction, step one and
/// level propagation for degree zero.
TrivializationResult trivialize_witt(const TwoCochain &psi);

struct CenterCleanupReport {
  OneCochain phi;
  TwoCochain cleaned;
  /// a_n: e_n-coefficient of cleaned(e_n, t); all zero on success.
  std::map<std::int64_t, Scalar> a;
  /// t-coefficient of cleaned(e_0, t). Tracked only.
  Scalar b;
};

/// Degree-zero Virasoro cocycle: phi(t) = a e_0 with a read from psi(e_1, t),
/// so that cleaned(x, t) is central for every x.
CenterCleanupReport virasoro_center_cleanup(const TwoCochain &psi);

struct WittLiftResult {
  OneCochain phi;
  /// cleaned - delta1(phi), restricted to the certified window; values in K t.
  TwoCochain psi_hat;
  TrivializationResult witt;
};

/// Trivializes the W x W projection of a cleaned cocycle and lifts the
/// trivializer to V with phi(t) = 0.
WittLiftResult virasoro_witt_lift(const TwoCochain &cleaned);

/// psi_hat with values in K t: phi(e_i) = phi_i t, phi(t) = c t normalizing
/// psi_hat(e_i,e_0), psi_hat(e_1,e_-1) and psi_hat(e_2,e_-2) to zero.
TrivializationResult trivialize_central_valued(const TwoCochain &psi_hat);

/// Full Virasoro pipeline.
TrivializationResult trivialize_virasoro(const TwoCochain &psi);

/// Dispatches on the algebra kind (Witt or Virasoro).
TrivializationResult trivialize(const TwoCochain &psi, const AlgebraSpec &alg);

} // namespace cochain_forge
