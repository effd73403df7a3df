#include "radiok/jumps.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace radiok {

namespace {

void check_jump_range(u64 j, u64 n) {
  if (j < 1 || j > n / 2)
    throw std::invalid_argument("jump " + std::to_string(j) + " out of range [1, " +
                                std::to_string(n / 2) + "] for n = " + std::to_string(n));
}

GeneratedWalk walk_impl(const std::vector<u64>& terms, u64 n) {
  GeneratedWalk w;
  w.terms = terms;
  std::vector<char> seen(n, 0);
  for (u64 v : terms) {
    if (!seen[v]) {
      seen[v] = 1;
      w.support.push_back(v);
    }
  }
  std::sort(w.support.begin(), w.support.end());
  w.is_permutation = w.support.size() == n;
  return w;
}

}  // namespace

JumpSequence make_jump_sequence(std::vector<u64> jumps, u64 n) {
  if (n < 2) throw std::invalid_argument("jump sequence needs n >= 2");
  if (jumps.empty()) throw std::invalid_argument("jump sequence must be nonempty");
  for (u64 j : jumps) check_jump_range(j, n);
  return JumpSequence{std::move(jumps), n};
}

GeneratedWalk generate(const JumpSequence& seq) {
  const u64 n = seq.n;
  if (n < 2 || seq.jumps.empty()) throw std::invalid_argument("generate: malformed jump sequence");
  for (u64 j : seq.jumps) check_jump_range(j, n);
  const u64 t = seq.jumps.size();
  std::vector<u64> terms(n);
  terms[0] = 0;
  u64 pos = 0;
  for (u64 i = 0; i + 1 < n; ++i) {
    pos += seq.jumps[i % t];
    if (pos >= n) pos -= n;
    terms[i + 1] = pos;
  }
  return walk_impl(terms, n);
}

CosetBound coset_bound_check(u64 j0, u64 j1, u64 n) {
  if (n < 2) throw std::invalid_argument("coset_bound_check: n too small");
  check_jump_range(j0, n);
  check_jump_range(j1, n);
  CosetBound cb;
  cb.h = n - (j0 + j1);  // j0 + j1 <= n since both are <= n/2
  // <h> is the set of multiples of gcd(n, h); gcd(n, 0) = n gives <0> = {0}.
  const u64 g = std::gcd(n, cb.h);
  cb.subgroup_order = n / g;
  const bool j0_in_H = j0 % g == 0;
  cb.bound = j0_in_H ? cb.subgroup_order : 2 * cb.subgroup_order;
  const GeneratedWalk w = generate(JumpSequence{{j0, j1}, n});
  cb.attained = w.support.size() == cb.bound;
  return cb;
}

std::vector<u64> materialize_schedule(const JumpRule& rule, u64 n) {
  if (n < 2) throw std::invalid_argument("materialize_schedule: n too small");
  if (!rule) throw std::invalid_argument("materialize_schedule: empty rule");
  std::vector<u64> jumps(n - 1);
  for (u64 i = 0; i + 1 < n; ++i) {
    jumps[i] = rule(i);
    check_jump_range(jumps[i], n);
  }
  return jumps;
}

GeneratedWalk walk_jumps(const std::vector<u64>& jumps, u64 n) {
  if (n < 2 || jumps.size() != n - 1)
    throw std::invalid_argument("walk_jumps: need exactly n-1 jumps");
  std::vector<u64> terms(n);
  terms[0] = 0;
  u64 pos = 0;
  for (u64 i = 0; i + 1 < n; ++i) {
    check_jump_range(jumps[i], n);
    pos += jumps[i];
    if (pos >= n) pos -= n;
    terms[i + 1] = pos;
  }
  return walk_impl(terms, n);
}

GeneratedWalk explicit_order(const JumpRule& rule, u64 n) {
  return walk_jumps(materialize_schedule(rule, n), n);
}

std::string format_schedule(const std::vector<u64>& jumps) {
  std::string out;
  for (std::size_t i = 0; i < jumps.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(jumps[i]);
  }
  return out;
}

}  // namespace radiok
