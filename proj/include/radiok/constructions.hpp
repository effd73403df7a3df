#pragma once

#include <optional>
#include <stdexcept>

#include "radiok/labeling.hpp"

// Explicit optimal (or best-known) labelings of C_n, one builder per
// theorem case. Every builder materializes its piecewise jump schedule,
// walks it, and self-validates the result (permutation + radio condition
// + claimed span) before returning; a failure raises ConstructionError
// with the materialized schedule attached instead of silently emitting a
// wrong certificate.

namespace radiok {

enum class CaseId {
  T32_ODD,   // k >= n-3, n odd: constant-diameter jumps
  T32_EVEN,  // k >= n-3, n even: alternating d, d-1
  T34_C1,    // n, k both even: one or two cosets of <h> at a time
  T34_C21,   // n, k both odd, Phi even: constant z with coset hops z+1
  T34_C221,  // n, k both odd, Phi odd, gcd(n,h) = 1: constant z
  T34_C222,  // n, k both odd, Phi odd, gcd(n,h) = c > 1: paired cosets
  T43,       // n even, k odd: span LB + gcd(d,h) - 1
  T45,       // n odd, k even, gcd(n,h) = 1, h odd: span LB
  T46        // n odd, k even, h | n: span LB + (h-1)/2
};

const char* to_string(CaseId id);

/// Theorem-specific decomposition parameters. Unused fields stay 0.
struct CaseParams {
  CaseId case_id = CaseId::T32_ODD;
  u64 q = 0, m = 0, t = 0;  // n = 4q + t (t = n mod 4); k per-case decomposition
  u64 h = 0;                // case gap
  u64 z = 0;                // half-jump ceil((d+q+m+1)/2), same-parity Case 2
  u64 s = 0;                // n / gcd(n, z), Case 2.1
  u64 c = 0;                // gcd(n, h), Case 2.2.2
  u64 p_star = 0;           // gcd(d, h), T34_C1 and T43
};

/// Maps (n, k) to exactly one covered case, or nullopt for the
/// parity-mismatch gaps the theorems leave open (n odd, k even with
/// 1 < gcd(n,h) and h not dividing n, or gcd(n,h) = 1 with h even).
/// Precedence: T32 > T34 > T46 > T45 > T43.
std::optional<CaseParams> classify(u64 n, u64 k);

/// Self-validation failure: the built labeling was not a permutation, not
/// a radio-k-labeling, or missed its claimed span. Signals a construction
/// defect; the message carries the materialized jump schedule.
struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Labeling build_T32(u64 n, u64 k);
Labeling build_T34(u64 n, u64 k, const CaseParams& params);
Labeling build_T43(u64 n, u64 k, const CaseParams& params);
Labeling build_T45(u64 n, u64 k);
Labeling build_T46(u64 n, u64 k, const CaseParams& params);

/// The span each case's labeling is proven to achieve.
u64 expected_span(u64 n, u64 k, const CaseParams& params);

/// Builds via the given case parameters.
Labeling build_labeling(u64 n, u64 k, const CaseParams& params);

/// classify + build; nullopt when (n, k) is not covered by any theorem.
std::optional<Labeling> build_labeling(u64 n, u64 k);

}  // namespace radiok
