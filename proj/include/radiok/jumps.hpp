#pragma once

#include <functional>
#include <string>
#include <vector>

#include "radiok/core.hpp"

// Jump sequences on Z_n: the walk gen_n(j) generated by a periodic jump
// sequence, its support S_n(j), permutation detection, the two-jump coset
// size bound, and evaluation of per-index jump rules (the piecewise
// schedules the labeling constructions are built from).

namespace radiok {

/// A periodic jump sequence: each entry in [1, floor(n/2)].
struct JumpSequence {
  std::vector<u64> jumps;
  u64 n = 0;
};

/// Validates ranges and returns the sequence. Throws std::invalid_argument
/// on an empty list or an out-of-range jump.
JumpSequence make_jump_sequence(std::vector<u64> jumps, u64 n);

/// The walk a_0 = 0, a_m = sum of the first m jumps (indices mod t,
/// sums mod n), of length exactly n (n-1 jumps taken).
struct GeneratedWalk {
  std::vector<u64> terms;    // length n, terms[0] == 0
  std::vector<u64> support;  // distinct residues visited, ascending
  bool is_permutation = false;
};

GeneratedWalk generate(const JumpSequence& seq);

/// Size bound for a two-jump sequence (j0, j1): with h = n - (j0 + j1) and
/// H = <h>, |S_n((j0,j1))| <= |H| if j0 in H, else <= 2|H|.
struct CosetBound {
  u64 h = 0;
  u64 subgroup_order = 0;
  u64 bound = 0;
  bool attained = false;  // |S_n((j0,j1))| == bound
};

CosetBound coset_bound_check(u64 j0, u64 j1, u64 n);

/// A jump rule as a total function of the step index i in [0, n-2].
using JumpRule = std::function<u64(u64)>;

/// Evaluates the rule at every step and validates each value against
/// [1, floor(n/2)]. The materialized list is what --trace dumps.
std::vector<u64> materialize_schedule(const JumpRule& rule, u64 n);

/// Walks an explicit list of n-1 jumps starting at 0.
GeneratedWalk walk_jumps(const std::vector<u64>& jumps, u64 n);

/// generate() for a per-index rule: materializes, then walks.
GeneratedWalk explicit_order(const JumpRule& rule, u64 n);

/// Comma-separated integer list, e.g. "8,6,8,6,8,5,8".
std::string format_schedule(const std::vector<u64>& jumps);

}  // namespace radiok
