#include "radiok/verifier.hpp"

#include <stdexcept>
#include <utility>

namespace radiok {

namespace {

u64 required_gap(u64 k, u64 dist) { return k + 1 > dist ? k + 1 - dist : 0; }

Verdict fail(u64 i, u64 j, const Labeling& lab, u64 required) {
  Verdict v;
  v.valid = false;
  v.witness = Violation{i, j, lab.order[i], lab.order[j], required, lab.labels[j] - lab.labels[i]};
  return v;
}

}  // namespace

Verdict verify_full(const Labeling& lab) {
  validate_shape(lab);
  for (u64 i = 0; i + 1 < lab.n; ++i) {
    for (u64 j = i + 1; j < lab.n; ++j) {
      const u64 need = required_gap(lab.k, cycle_distance(lab.order[i], lab.order[j], lab.n));
      if (lab.labels[j] - lab.labels[i] < need) return fail(i, j, lab, need);
    }
  }
  return Verdict{true, std::nullopt};
}

Verdict verify_reduced(const Labeling& lab) {
  validate_shape(lab);
  if (lab.k < lab.n / 2)
    throw std::invalid_argument("verify_reduced: requires k >= floor(n/2)");
  // Scanning (i, i+1) then (i, i+2) keeps the reported witness minimal
  // in (i, j) among the constraints this check inspects.
  for (u64 i = 0; i + 1 < lab.n; ++i) {
    const u64 need1 = required_gap(lab.k, cycle_distance(lab.order[i], lab.order[i + 1], lab.n));
    if (lab.labels[i + 1] - lab.labels[i] < need1) return fail(i, i + 1, lab, need1);
    if (i + 2 < lab.n) {
      const u64 need2 = required_gap(lab.k, cycle_distance(lab.order[i], lab.order[i + 2], lab.n));
      if (lab.labels[i + 2] - lab.labels[i] < need2) return fail(i, i + 2, lab, need2);
    }
  }
  return Verdict{true, std::nullopt};
}

Labeling minimal_labels_for_order(std::vector<u64> order, u64 n, u64 k) {
  require_instance(n, k);
  Labeling lab;
  lab.n = n;
  lab.k = k;
  lab.order = std::move(order);
  lab.labels.assign(n, 0);
  lab.provenance = "minimal-for-order";
  if (lab.order.size() != n) throw std::invalid_argument("minimal_labels_for_order: bad order size");
  std::vector<char> seen(n, 0);
  for (u64 v : lab.order) {
    if (v >= n || seen[v])
      throw std::invalid_argument("minimal_labels_for_order: order is not a permutation");
    seen[v] = 1;
  }
  for (u64 i = 0; i + 1 < n; ++i) {
    u64 next = lab.labels[i] + required_gap(k, cycle_distance(lab.order[i], lab.order[i + 1], n));
    if (i >= 1) {
      const u64 skip =
          lab.labels[i - 1] + required_gap(k, cycle_distance(lab.order[i - 1], lab.order[i + 1], n));
      if (skip > next) next = skip;
    }
    lab.labels[i + 1] = next;
  }
  return lab;
}

}  // namespace radiok
