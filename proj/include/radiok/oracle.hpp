#pragma once

#include <optional>
#include <vector>

#include "radiok/labeling.hpp"
#include "radiok/oracle_types.hpp"

// Exact computation of rn_k(C_n) at small n by branch-and-bound over vertex
// orderings. Per-ordering labels come from the greedy minimal labeling,
// which is exact for k >= floor(n/2), so the infinite label space collapses
// to (n-1)!/2 discrete candidates. This is the independent ground truth the
// test suite and the conjecture scanner check everything else against.

namespace radiok {

struct OracleResult {
  bool complete = false;  // false: a budget limit stopped the search
  u64 value = 0;          // the exact optimum when complete
  std::optional<Labeling> witness;  // lex-smallest optimal ordering when complete
  u64 lower_bound = 0;              // LB(n, k)
  std::optional<u64> best_upper;    // best span seen so far (== value when complete)
  u64 nodes = 0;
};

/// Exhaustive search with x_0 = 0 and x_1 <= floor(n/2) (rotation and
/// reflection of C_n preserve rn_k). Deterministic: the completed result,
/// including the witness, is identical for any thread count. Requires
/// k >= floor(n/2); practical up to n around 14.
OracleResult exact_rn(u64 n, u64 k, const OracleBudget& budget = {});

/// Admissible completion bound: with r gaps still to place,
///   partial_span + floor(r/2)*phi(n,k) + (r mod 2)*(k+1-floor(n/2)).
/// Never exceeds the cost of any true completion; at the root
/// (placed = 1, remaining = n-1) it reproduces LB(n, k).
u64 admissible_remaining_bound(u64 placed, u64 remaining, u64 partial_span, u64 n, u64 k);

enum class ScanVerdict { Match, Mismatch, Inconclusive };

const char* to_string(ScanVerdict v);

/// One conjecture-scan row: n even, k odd, d <= k < n-3, n/2 in <h>;
/// conjectured = LB(n,k) + p - 1 with p = gcd(n, h).
struct ScanRow {
  u64 n = 0, k = 0, h = 0, p = 0;
  u64 lb_value = 0;
  u64 conjectured = 0;
  std::optional<u64> oracle_value;
  ScanVerdict verdict = ScanVerdict::Inconclusive;
};

/// Scans every qualifying (n, k) with n in [n_lo, n_hi] and certifies each
/// row with the oracle (Inconclusive when the budget runs out). Rows where
/// d is not in <h> are excluded: the sharp lower bound already settles them.
std::vector<ScanRow> scan_conjecture(u64 n_lo, u64 n_hi, const OracleBudget& budget = {});

}  // namespace radiok
