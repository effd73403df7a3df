#pragma once

#include <string>
#include <vector>

#include "radiok/core.hpp"

namespace radiok {

/// A candidate radio-k-labeling of C_n in ordered form: the vertex visiting
/// order x_0..x_{n-1} together with the labels f(x_0) <= ... <= f(x_{n-1}),
/// normalized so f(x_0) = 0. The span is the last label. This is the
/// certificate every construction, the oracle witness, and the CLI
/// (de)serializers all share.
struct Labeling {
  u64 n = 0;
  u64 k = 0;
  std::vector<u64> order;
  std::vector<u64> labels;
  std::string provenance;

  u64 span() const { return labels.empty() ? 0 : labels.back(); }
};

/// Structural checks only (no radio condition): sizes match n, order is a
/// permutation of [0, n), labels start at 0 and are non-decreasing.
/// Throws std::invalid_argument describing the first defect found.
void validate_shape(const Labeling& lab);

/// Clockwise step sizes (x_{i+1} - x_i mod n) recovered from the order;
/// these are the jump sequence the labeling was walked with.
std::vector<u64> jumps_of(const Labeling& lab);

}  // namespace radiok
