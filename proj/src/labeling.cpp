#include "radiok/labeling.hpp"

#include <stdexcept>

namespace radiok {

void validate_shape(const Labeling& lab) {
  if (lab.n < 3) throw std::invalid_argument("labeling: n must be at least 3");
  if (lab.order.size() != lab.n)
    throw std::invalid_argument("labeling: order has " + std::to_string(lab.order.size()) +
                                " entries, expected n = " + std::to_string(lab.n));
  if (lab.labels.size() != lab.n)
    throw std::invalid_argument("labeling: labels has " + std::to_string(lab.labels.size()) +
                                " entries, expected n = " + std::to_string(lab.n));
  std::vector<char> seen(lab.n, 0);
  for (u64 v : lab.order) {
    if (v >= lab.n)
      throw std::invalid_argument("labeling: vertex " + std::to_string(v) + " out of range");
    if (seen[v])
      throw std::invalid_argument("labeling: duplicate vertex " + std::to_string(v));
    seen[v] = 1;
  }
  if (lab.labels[0] != 0) throw std::invalid_argument("labeling: first label must be 0");
  for (u64 i = 0; i + 1 < lab.n; ++i)
    if (lab.labels[i] > lab.labels[i + 1])
      throw std::invalid_argument("labeling: labels must be non-decreasing (position " +
                                  std::to_string(i + 1) + ")");
}

std::vector<u64> jumps_of(const Labeling& lab) {
  std::vector<u64> jumps(lab.n ? lab.n - 1 : 0);
  for (u64 i = 0; i + 1 < lab.n; ++i) {
    const u64 a = lab.order[i];
    const u64 b = lab.order[i + 1];
    jumps[i] = b >= a ? b - a : b + lab.n - a;
  }
  return jumps;
}

}  // namespace radiok
