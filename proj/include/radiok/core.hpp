#pragma once

#include <cstdint>
#include <vector>

// Integer and modular arithmetic on Z_n used throughout: cycle distances,
// cyclic subgroups and their cosets, the Phi/LB lower-bound machinery, and
// the gcd identities the labeling constructions rely on. Everything is
// 64-bit unsigned integer arithmetic; there is no floating point anywhere
// in this library.

namespace radiok {

using u64 = std::uint64_t;

// Input caps. With n <= 1e6 and k <= 3e6, every intermediate quantity
// (3k+3, phi*n, the closed-form spans) stays far below 2^64.
inline constexpr u64 kMaxVertices = 1'000'000;
inline constexpr u64 kMaxLevel = 3'000'000;

enum class ParityClass { SameParity, EvenOdd, OddEven };

const char* to_string(ParityClass pc);

/// The problem instance (n, k) with derived quantities.
/// Requires n >= 3 and k >= floor(n/2); the theory starts at k = diameter.
struct CycleInstance {
  u64 n = 0;
  u64 k = 0;
  u64 d = 0;  // diameter = floor(n/2)
  ParityClass parity_class = ParityClass::SameParity;

  static CycleInstance make(u64 n, u64 k);
};

/// Throws std::invalid_argument unless n >= 3, k >= floor(n/2) and both
/// are within the input caps.
void require_instance(u64 n, u64 k);

/// Distance between residues u and v on the cycle C_n:
/// min(|u-v| mod n, n - |u-v| mod n). Requires u, v < n.
u64 cycle_distance(u64 u, u64 v, u64 n);

/// phi(n,k) = ceil((3k+3-n)/2), the minimum combined label gap over any
/// two consecutive steps. Requires k >= floor(n/2).
u64 phi(u64 n, u64 k);

/// The parity-dependent lower bound for rn_k(C_n):
///   n even: phi(n,k)*(n-2)/2 + k - n/2 + 1
///   n odd:  phi(n,k)*(n-1)/2
u64 lb(u64 n, u64 k);

/// Cyclic subgroup <g> of Z_n with O(1) membership after construction.
struct Subgroup {
  u64 n = 0;
  u64 generator = 0;
  u64 order = 0;               // n / gcd(n, generator)
  std::vector<u64> elements;   // t*g mod n for t in [0, order), all distinct
  std::vector<char> member;    // indexed by residue

  bool contains(u64 x) const { return x < n && member[x] != 0; }
};

/// Builds <g> in Z_n. Requires g < n. gcd(n, 0) = n, so <0> = {0}.
Subgroup subgroup(u64 n, u64 g);

enum class HalvingKind { Half, Double };

/// gcd(n, h*) vs gcd(n/2, h*) for even n:
///   Half:   n/2 in <h*>, gcd(n,h*) = gcd(n/2,h*)
///   Double: n/2 not in <h*>, gcd(n,h*) = 2*gcd(n/2,h*)
struct HalvingClassification {
  HalvingKind kind = HalvingKind::Half;
  u64 gcd_full = 0;   // gcd(n, h*)
  u64 gcd_half = 0;   // gcd(n/2, h*)
  bool half_in_subgroup = false;
};

/// Requires n even and 0 < h_star < n.
HalvingClassification gcd_halving_classify(u64 n, u64 h_star);

/// Parity-mismatch gap data: h = (n-k-1)/2 with p = gcd(n,h), p* = gcd(d,h)
/// and whether the diameter lies in <h>. Defined only when n and k have
/// different parities and k < n-3 (so h >= 2).
struct MismatchGap {
  u64 h = 0;
  u64 p = 0;       // gcd(n, h)
  u64 p_star = 0;  // gcd(d, h)
  bool d_in_H = false;

  static MismatchGap of(u64 n, u64 k);
};

}  // namespace radiok
