#pragma once

#include <optional>
#include <string>
#include <vector>

#include "radiok/core.hpp"
#include "radiok/oracle_types.hpp"

// Maps (n, k) to the best proven knowledge about rn_k(C_n): an exact value
// with theorem provenance, or proven lower/upper bounds where the theory
// leaves a gap.

namespace radiok {

enum class RnKind { Exact, Bounds };

struct RnStatus {
  RnKind kind = RnKind::Bounds;
  u64 value = 0;  // meaningful only for Exact (then value == lower == upper)
  u64 lower = 0;
  std::optional<u64> upper;  // absent when no finite upper bound is proven
  std::string provenance;
  bool construction_available = false;

  bool exact() const { return kind == RnKind::Exact; }
};

/// Applies the theorem rules in priority order:
///   k >= n-3            -> Exact (Thm 3.2 closed form)
///   same parity         -> Exact LB (Thm 3.4, case from classify)
///   k = d               -> Exact LB (rn_d, prior work)
///   k = d+1             -> Exact (Thm 5.1 piecewise)
///   n even, k odd       -> Cor 4.4 / Thm 4.3 sharpness exact, else
///                          Bounds [LB + ceil(p/2) - 1, LB + p - 1]
///   n odd, k even       -> Thm 4.6 / Thm 4.5 exact, else
///                          Bounds [LB + ceil(p/2) - 1, unknown]
RnStatus resolve(u64 n, u64 k);

/// The exact rn_{d+1}(C_n) piecewise formula (prior work). Requires n >= 4;
/// with n = 4q + r:
///   r = 0: LB if q even, else LB + 1
///   r = 1, 2: LB
///   r = 3: LB if q != 2 and q is not a multiple of 3, else LB + 1
u64 rn_d_plus_1_reference(u64 n);

struct AuditEntry {
  u64 n = 0, k = 0;
  std::string detail;
};

struct AuditReport {
  u64 n_max = 0;
  u64 oracle_n_max = 0;
  u64 instances_checked = 0;
  std::vector<AuditEntry> contradictions;

  bool clean() const { return contradictions.empty(); }
};

/// Sweeps every (n, k) with 3 <= n <= n_max, d <= k <= n+3 and checks:
/// resolve's Exact values satisfy every applicable bound rule, the k = d+1
/// reference agrees with resolve, constructions (when available) verify and
/// achieve the claimed value, and (for n <= oracle_n_max) the exhaustive
/// oracle confirms Exact values and bound containment. Contradictions are
/// report entries, never exceptions.
AuditReport consistency_audit(u64 n_max, u64 oracle_n_max = 0,
                              const OracleBudget& budget = {});

}  // namespace radiok
