#include "radiok/core.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace radiok {

const char* to_string(ParityClass pc) {
  switch (pc) {
    case ParityClass::SameParity: return "SameParity";
    case ParityClass::EvenOdd: return "EvenOdd";
    case ParityClass::OddEven: return "OddEven";
  }
  return "?";
}

void require_instance(u64 n, u64 k) {
  if (n < 3) throw std::invalid_argument("n must be at least 3, got " + std::to_string(n));
  if (n > kMaxVertices)
    throw std::invalid_argument("n exceeds the cap of " + std::to_string(kMaxVertices));
  if (k > kMaxLevel)
    throw std::invalid_argument("k exceeds the cap of " + std::to_string(kMaxLevel));
  if (k < n / 2)
    throw std::invalid_argument("k must be at least floor(n/2) = " + std::to_string(n / 2) +
                                ", got " + std::to_string(k));
}

CycleInstance CycleInstance::make(u64 n, u64 k) {
  require_instance(n, k);
  CycleInstance ci;
  ci.n = n;
  ci.k = k;
  ci.d = n / 2;
  if (n % 2 == k % 2) {
    ci.parity_class = ParityClass::SameParity;
  } else if (n % 2 == 0) {
    ci.parity_class = ParityClass::EvenOdd;
  } else {
    ci.parity_class = ParityClass::OddEven;
  }
  return ci;
}

u64 cycle_distance(u64 u, u64 v, u64 n) {
  if (u >= n || v >= n)
    throw std::invalid_argument("cycle_distance: vertex out of range [0, n)");
  const u64 diff = u > v ? u - v : v - u;
  return diff <= n - diff ? diff : n - diff;
}

u64 phi(u64 n, u64 k) {
  require_instance(n, k);
  // 3k+3-n > 0 whenever k >= floor(n/2) and n >= 3; ceil(a/2) = (a+1)/2.
  const u64 a = 3 * k + 3 - n;
  return (a + 1) / 2;
}

u64 lb(u64 n, u64 k) {
  const u64 p = phi(n, k);
  if (n % 2 == 0) return p * ((n - 2) / 2) + k - n / 2 + 1;
  return p * ((n - 1) / 2);
}

Subgroup subgroup(u64 n, u64 g) {
  if (n == 0 || g >= n) throw std::invalid_argument("subgroup: generator out of range [0, n)");
  Subgroup sg;
  sg.n = n;
  sg.generator = g;
  sg.order = n / std::gcd(n, g);
  sg.elements.reserve(sg.order);
  sg.member.assign(n, 0);
  u64 x = 0;
  for (u64 t = 0; t < sg.order; ++t) {
    sg.elements.push_back(x);
    sg.member[x] = 1;
    x += g;
    if (x >= n) x -= n;
  }
  return sg;
}

HalvingClassification gcd_halving_classify(u64 n, u64 h_star) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("gcd_halving_classify: n must be even");
  if (h_star == 0 || h_star >= n)
    throw std::invalid_argument("gcd_halving_classify: h* must satisfy 0 < h* < n");
  HalvingClassification hc;
  hc.gcd_full = std::gcd(n, h_star);
  hc.gcd_half = std::gcd(n / 2, h_star);
  // n/2 in <h*> iff gcd(n, h*) divides n/2.
  hc.half_in_subgroup = (n / 2) % hc.gcd_full == 0;
  hc.kind = hc.half_in_subgroup ? HalvingKind::Half : HalvingKind::Double;
  return hc;
}

MismatchGap MismatchGap::of(u64 n, u64 k) {
  require_instance(n, k);
  if (n % 2 == k % 2)
    throw std::invalid_argument("MismatchGap: n and k must have different parities");
  if (k + 3 >= n) throw std::invalid_argument("MismatchGap: requires k < n-3");
  MismatchGap g;
  g.h = (n - k - 1) / 2;
  g.p = std::gcd(n, g.h);
  g.p_star = std::gcd(n / 2, g.h);
  g.d_in_H = (n / 2) % g.p == 0;
  return g;
}

}  // namespace radiok
