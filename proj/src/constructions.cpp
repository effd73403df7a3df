#include "radiok/constructions.hpp"

#include <cassert>
#include <numeric>
#include <string>
#include <utility>

#include "radiok/jumps.hpp"
#include "radiok/verifier.hpp"

namespace radiok {

const char* to_string(CaseId id) {
  switch (id) {
    case CaseId::T32_ODD: return "Thm 3.2 (odd)";
    case CaseId::T32_EVEN: return "Thm 3.2 (even)";
    case CaseId::T34_C1: return "Thm 3.4 Case 1";
    case CaseId::T34_C21: return "Thm 3.4 Case 2.1";
    case CaseId::T34_C221: return "Thm 3.4 Case 2.2.1";
    case CaseId::T34_C222: return "Thm 3.4 Case 2.2.2";
    case CaseId::T43: return "Thm 4.3";
    case CaseId::T45: return "Thm 4.5";
    case CaseId::T46: return "Thm 4.6";
  }
  return "?";
}

namespace {

[[noreturn]] void construction_failure(u64 n, u64 k, CaseId id, const std::string& reason,
                                       const std::vector<u64>& jumps) {
  throw ConstructionError(std::string(to_string(id)) + " failed for n=" + std::to_string(n) +
                          " k=" + std::to_string(k) + ": " + reason +
                          "; schedule=" + format_schedule(jumps));
}

// Walks the schedule, attaches prefix-sum labels, and checks everything a
// correct construction must satisfy. Full pairwise verification is run up
// to n = 300; beyond that the equivalent reduced check keeps this O(n).
Labeling assemble(u64 n, u64 k, CaseId id, const std::vector<u64>& jumps,
                  const std::vector<u64>& gaps, u64 claimed_span) {
  assert(jumps.size() == n - 1 && gaps.size() == n - 1);
  const GeneratedWalk walk = walk_jumps(jumps, n);
  if (!walk.is_permutation)
    construction_failure(n, k, id, "jump sequence is not a permutation", jumps);

  Labeling lab;
  lab.n = n;
  lab.k = k;
  lab.order = walk.terms;
  lab.labels.assign(n, 0);
  for (u64 i = 0; i + 1 < n; ++i) lab.labels[i + 1] = lab.labels[i] + gaps[i];
  lab.provenance = to_string(id);

  if (lab.span() != claimed_span)
    construction_failure(n, k, id,
                         "span " + std::to_string(lab.span()) + " != claimed " +
                             std::to_string(claimed_span),
                         jumps);
  const Verdict reduced = verify_reduced(lab);
  if (!reduced.valid) {
    const Violation& w = *reduced.witness;
    construction_failure(n, k, id,
                         "radio condition fails at pair (" + std::to_string(w.u) + "," +
                             std::to_string(w.v) + ") need " + std::to_string(w.required) +
                             " got " + std::to_string(w.actual),
                         jumps);
  }
  if (n <= 300 && !verify_full(lab).valid)
    construction_failure(n, k, id, "full pairwise verification failed", jumps);
  return lab;
}

u64 ceil_half(u64 a) { return (a + 1) / 2; }

}  // namespace

std::optional<CaseParams> classify(u64 n, u64 k) {
  require_instance(n, k);
  const u64 d = n / 2;
  CaseParams p;
  p.t = n % 4;
  p.q = n / 4;

  if (k + 3 >= n) {
    p.case_id = n % 2 == 1 ? CaseId::T32_ODD : CaseId::T32_EVEN;
    p.t = 0;
    p.q = 0;
    return p;
  }

  if (n % 2 == k % 2) {
    if (n % 2 == 0) {
      // Case 1: n = 4q+t, k = 2q+2m+t, t in {0,2}, 0 <= m < q-1.
      p.case_id = CaseId::T34_C1;
      p.m = (k - 2 * p.q - p.t) / 2;
      p.h = p.q - p.m - 1;
      p.p_star = std::gcd(d, p.h);
      assert(p.m + 1 < p.q && 4 * p.q + p.t == n && 2 * p.q + 2 * p.m + p.t == k);
      return p;
    }
    // Case 2: n = 4q+1 or 4q+3, k = 2q+2m+1.
    p.m = (k - 2 * p.q - 1) / 2;
    assert(2 * p.q + 2 * p.m + 1 == k);
    assert(p.t == 3 ? p.m <= p.q - 1 : p.m <= p.q - 2);
    p.z = ceil_half(d + p.q + p.m + 1);
    const u64 big_phi = phi(n, k);
    if (big_phi % 2 == 0) {
      p.case_id = CaseId::T34_C21;
      p.s = n / std::gcd(n, p.z);
      return p;
    }
    p.h = n - 2 * p.z;
    p.c = std::gcd(n, p.h);
    p.case_id = p.c == 1 ? CaseId::T34_C221 : CaseId::T34_C222;
    return p;
  }

  // Parity mismatch with k < n-3, so h = (n-k-1)/2 >= 2.
  p.h = (n - k - 1) / 2;
  if (n % 2 == 0) {
    p.case_id = CaseId::T43;
    p.m = (k - 2 * p.q - 1) / 2;
    p.p_star = std::gcd(d, p.h);
    return p;
  }
  if (n % p.h == 0) {
    // T46: n = 4q+i, k = 2q+2m+i-1, i in {1,3}, h = q-m, 0 <= m <= q-2.
    p.case_id = CaseId::T46;
    p.m = (k + 1 - 2 * p.q - p.t) / 2;
    assert(p.q - p.m == p.h && p.m + 2 <= p.q);
    return p;
  }
  if (std::gcd(n, p.h) == 1 && p.h % 2 == 1) {
    p.case_id = CaseId::T45;
    return p;
  }
  return std::nullopt;  // the theorems give no construction here
}

u64 expected_span(u64 n, u64 k, const CaseParams& params) {
  switch (params.case_id) {
    case CaseId::T32_ODD: return (n - 1) / 2 * (2 * k + 3 - n);
    case CaseId::T32_EVEN: return (n - 2) / 2 * (2 * k + 3 - n) + k - n / 2 + 1;
    case CaseId::T34_C1:
    case CaseId::T34_C21:
    case CaseId::T34_C221:
    case CaseId::T34_C222:
    case CaseId::T45: return lb(n, k);
    case CaseId::T43: return lb(n, k) + params.p_star - 1;
    case CaseId::T46: return lb(n, k) + (params.h - 1) / 2;
  }
  throw std::invalid_argument("expected_span: unknown case");
}

Labeling build_T32(u64 n, u64 k) {
  require_instance(n, k);
  if (k + 3 < n) throw std::invalid_argument("build_T32: requires k >= n-3");
  const u64 d = n / 2;
  std::vector<u64> jumps(n - 1), gaps(n - 1);
  if (n % 2 == 1) {
    for (u64 i = 0; i + 1 < n; ++i) {
      jumps[i] = d;
      gaps[i] = k + 1 - d;
    }
    CaseParams p;
    p.case_id = CaseId::T32_ODD;
    return assemble(n, k, p.case_id, jumps, gaps, expected_span(n, k, p));
  }
  for (u64 i = 0; i + 1 < n; ++i) {
    jumps[i] = i % 2 == 0 ? d : d - 1;
    gaps[i] = i % 2 == 0 ? k + 1 - d : k + 2 - d;
  }
  CaseParams p;
  p.case_id = CaseId::T32_EVEN;
  return assemble(n, k, p.case_id, jumps, gaps, expected_span(n, k, p));
}

Labeling build_T34(u64 n, u64 k, const CaseParams& params) {
  require_instance(n, k);
  if (n % 2 != k % 2 || k + 3 >= n)
    throw std::invalid_argument("build_T34: requires same parity and k <= n-3");
  const u64 d = n / 2;
  const u64 big_phi = phi(n, k);
  std::vector<u64> jumps(n - 1), gaps(n - 1);

  switch (params.case_id) {
    case CaseId::T34_C1: {
      // Alternate d with d-h, stepping down to d-h-1 at i = (n/p*)x - 1 to
      // enter the next coset (or coset pair) of Z_n/<h>.
      const u64 block = n / params.p_star;
      const u64 f_even = 2 * params.m + 1 + params.t / 2;
      const u64 f_odd = params.q + params.m + 1 + params.t / 2;
      for (u64 i = 0; i + 1 < n; ++i) {
        if (i % 2 == 0) {
          jumps[i] = d;
          gaps[i] = f_even;
        } else {
          jumps[i] = (i + 1) % block == 0 ? d - params.h - 1 : d - params.h;
          gaps[i] = f_odd;
        }
      }
      break;
    }
    case CaseId::T34_C21: {
      // Constant z within a coset of <z>; z+1 hops into the next coset.
      for (u64 i = 0; i + 1 < n; ++i) {
        jumps[i] = (i + 1) % params.s == 0 ? params.z + 1 : params.z;
        gaps[i] = big_phi / 2;
      }
      break;
    }
    case CaseId::T34_C221: {
      for (u64 i = 0; i + 1 < n; ++i) {
        jumps[i] = params.z;
        gaps[i] = i % 2 == 0 ? big_phi / 2 : ceil_half(big_phi);
      }
      break;
    }
    case CaseId::T34_C222: {
      // Pairs of cosets of Z_n/<c> via (d, d-h+1); d-h drops into the next
      // pair; the final coset is walked with constant (n-h)/2.
      const u64 nc = n / params.c;
      const u64 f_even = k + 1 - d;
      const u64 f_odd = big_phi - f_even;
      assert(params.z == (n - params.h) / 2);
      for (u64 i = 0; i + 1 < n; ++i) {
        if (i < n - nc) {
          if (i % 2 == 0) {
            jumps[i] = d;
            gaps[i] = f_even;
          } else {
            jumps[i] = (i + 1) % (2 * nc) == 0 ? d - params.h : d - params.h + 1;
            gaps[i] = f_odd;
          }
        } else {
          jumps[i] = params.z;
          gaps[i] = i % 2 == 0 ? big_phi / 2 : ceil_half(big_phi);
        }
      }
      break;
    }
    default: throw std::invalid_argument("build_T34: params are not a Thm 3.4 case");
  }
  return assemble(n, k, params.case_id, jumps, gaps, expected_span(n, k, params));
}

Labeling build_T43(u64 n, u64 k, const CaseParams& params) {
  require_instance(n, k);
  if (n % 2 != 0 || k % 2 != 1 || k + 3 >= n)
    throw std::invalid_argument("build_T43: requires n even, k odd, k < n-3");
  const u64 d = n / 2;
  const u64 block = n / params.p_star;  // switch indices i = (n/p*)x - 1
  std::vector<u64> jumps(n - 1), gaps(n - 1);
  for (u64 i = 0; i + 1 < n; ++i) {
    if (i % 2 == 0) {
      jumps[i] = d;
      gaps[i] = k + 1 - d;
    } else if ((i + 1) % block == 0) {
      jumps[i] = d - params.h - 1;
      gaps[i] = d - params.h + 1;
    } else {
      jumps[i] = d - params.h;
      gaps[i] = d - params.h;
    }
  }
  return assemble(n, k, CaseId::T43, jumps, gaps, expected_span(n, k, params));
}

Labeling build_T45(u64 n, u64 k) {
  require_instance(n, k);
  if (n % 2 != 1 || k % 2 != 0 || k + 3 >= n)
    throw std::invalid_argument("build_T45: requires n odd, k even, k < n-3");
  const u64 h = (n - k - 1) / 2;
  if (std::gcd(n, h) != 1 || h % 2 == 0)
    throw std::invalid_argument("build_T45: requires gcd(n,h) = 1 and h odd");
  const u64 big_phi = phi(n, k);  // k+1-h, even here
  std::vector<u64> jumps(n - 1, (n - h) / 2), gaps(n - 1, big_phi / 2);
  CaseParams p;
  p.case_id = CaseId::T45;
  p.h = h;
  return assemble(n, k, CaseId::T45, jumps, gaps, expected_span(n, k, p));
}

Labeling build_T46(u64 n, u64 k, const CaseParams& params) {
  require_instance(n, k);
  if (n % 2 != 1 || k % 2 != 0 || k + 3 >= n)
    throw std::invalid_argument("build_T46: requires n odd, k even, k < n-3");
  if (params.h == 0 || n % params.h != 0)
    throw std::invalid_argument("build_T46: requires h | n");
  const u64 d = n / 2;
  const u64 big_phi = phi(n, k);
  const u64 nh = n / params.h;
  const u64 f_even = k + 1 - d;
  const u64 f_odd = big_phi - f_even;  // = d - h
  std::vector<u64> jumps(n - 1), gaps(n - 1);
  for (u64 i = 0; i + 1 < n; ++i) {
    if (i < n - nh) {
      if (i % 2 == 0) {
        jumps[i] = d;
        gaps[i] = f_even;
      } else if ((i + 1) % (2 * nh) == 0) {
        jumps[i] = d - params.h;
        gaps[i] = f_odd + 1;  // the +1 per coset-pair switch is the span excess
      } else {
        jumps[i] = d - params.h + 1;
        gaps[i] = f_odd;
      }
    } else {
      jumps[i] = (n - params.h) / 2;
      gaps[i] = i % 2 == 0 ? big_phi / 2 : ceil_half(big_phi);  // Phi is even: both Phi/2
    }
  }
  return assemble(n, k, CaseId::T46, jumps, gaps, expected_span(n, k, params));
}

Labeling build_labeling(u64 n, u64 k, const CaseParams& params) {
  switch (params.case_id) {
    case CaseId::T32_ODD:
    case CaseId::T32_EVEN: return build_T32(n, k);
    case CaseId::T34_C1:
    case CaseId::T34_C21:
    case CaseId::T34_C221:
    case CaseId::T34_C222: return build_T34(n, k, params);
    case CaseId::T43: return build_T43(n, k, params);
    case CaseId::T45: return build_T45(n, k);
    case CaseId::T46: return build_T46(n, k, params);
  }
  throw std::invalid_argument("build_labeling: unknown case");
}

std::optional<Labeling> build_labeling(u64 n, u64 k) {
  const auto params = classify(n, k);
  if (!params) return std::nullopt;
  return build_labeling(n, k, *params);
}

}  // namespace radiok
