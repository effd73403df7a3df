#pragma once

#include <optional>

#include "radiok/labeling.hpp"

// Deciding whether a labeling is a valid radio-k-labeling, either by the
// full O(n^2) pairwise definition or by the reduced characterization that
// checks only the 2n-3 consecutive and skip-one constraints (the two are
// equivalent for k >= floor(n/2)), plus the greedy that produces the
// pointwise-minimal labels for a fixed vertex ordering.

namespace radiok {

/// A violated pair: order positions i < j, vertices u = x_i, v = x_j,
/// the required gap k - d(u,v) + 1 and the actual gap |f(u) - f(v)|.
struct Violation {
  u64 i = 0, j = 0;
  u64 u = 0, v = 0;
  u64 required = 0;
  u64 actual = 0;
};

struct Verdict {
  bool valid = false;
  std::optional<Violation> witness;  // set when invalid

  explicit operator bool() const { return valid; }
};

/// Checks |f(u)-f(v)| >= k - d(u,v) + 1 for every pair. On failure the
/// witness is the violating pair with lexicographically smallest (i, j)
/// order positions. Throws std::invalid_argument on a malformed labeling.
Verdict verify_full(const Labeling& lab);

/// The reduced check: f_i >= k+1-d_i and f_i + f_{i+1} >= k+1-d(x_i,x_{i+2}).
/// Same verdict as verify_full for k >= floor(n/2); only 2n-3 inequalities.
Verdict verify_reduced(const Labeling& lab);

/// Greedy minimal labels for a fixed ordering: f(x_0) = 0 and
///   f(x_{i+1}) = max(f(x_i) + k+1-d_i, f(x_{i-1}) + k+1-d(x_{i-1},x_{i+1})).
/// The result is valid and pointwise <= any valid labeling with this order.
/// Requires k >= floor(n/2) and order a permutation of [0, n).
Labeling minimal_labels_for_order(std::vector<u64> order, u64 n, u64 k);

}  // namespace radiok
