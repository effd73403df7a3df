#include "radiok/dispatcher.hpp"

#include <numeric>

#include "radiok/constructions.hpp"
#include "radiok/oracle.hpp"

namespace radiok {

namespace {

u64 t32_closed_form(u64 n, u64 k) {
  if (n % 2 == 1) return (n - 1) / 2 * (2 * k + 3 - n);
  return (n - 2) / 2 * (2 * k + 3 - n) + k - n / 2 + 1;
}

RnStatus exact(u64 value, std::string provenance, bool construction) {
  RnStatus st;
  st.kind = RnKind::Exact;
  st.value = value;
  st.lower = value;
  st.upper = value;
  st.provenance = std::move(provenance);
  st.construction_available = construction;
  return st;
}

}  // namespace

RnStatus resolve(u64 n, u64 k) {
  require_instance(n, k);
  const u64 d = n / 2;

  if (k + 3 >= n) return exact(t32_closed_form(n, k), "Thm 3.2", true);

  const u64 base = lb(n, k);
  if (n % 2 == k % 2) {
    const auto params = classify(n, k);  // always one of the Thm 3.4 cases here
    return exact(base, to_string(params->case_id), true);
  }

  // Parity mismatch with k < n-3.
  const MismatchGap g = MismatchGap::of(n, k);
  const bool has_builder = classify(n, k).has_value();
  if (k == d) return exact(base, "rn_d [Li05]", has_builder);
  if (k == d + 1) return exact(rn_d_plus_1_reference(n), "Thm 5.1 [Ka17]", has_builder);

  const u64 prop42_lower = base + (g.p + 1) / 2 - 1;
  if (n % 2 == 0) {
    if (std::gcd(n / 2, g.h) == 1) return exact(base, "Cor 4.4", true);
    if (!g.d_in_H) return exact(prop42_lower, "Thm 4.3 sharpness", true);
    RnStatus st;
    st.kind = RnKind::Bounds;
    st.lower = prop42_lower;
    st.upper = base + g.p - 1;
    st.provenance = "Thm 4.3";
    st.construction_available = true;  // the T4.3 labeling certifies the upper bound
    return st;
  }

  if (n % g.h == 0) return exact(base + (g.h - 1) / 2, "Thm 4.6", true);
  if (std::gcd(n, g.h) == 1 && g.h % 2 == 1) return exact(base, "Thm 4.5", true);

  RnStatus st;
  st.kind = RnKind::Bounds;
  st.lower = prop42_lower;
  st.upper = std::nullopt;  // no finite upper bound proven in this gap
  st.provenance = "Prop 4.2";
  st.construction_available = false;
  return st;
}

u64 rn_d_plus_1_reference(u64 n) {
  if (n < 4) throw std::invalid_argument("rn_d_plus_1_reference: requires n >= 4");
  const u64 k = n / 2 + 1;
  const u64 base = lb(n, k);
  const u64 q = n / 4;
  switch (n % 4) {
    case 0: return q % 2 == 0 ? base : base + 1;
    case 1:
    case 2: return base;
    default: return (q != 2 && q % 3 != 0) ? base : base + 1;
  }
}

AuditReport consistency_audit(u64 n_max, u64 oracle_n_max, const OracleBudget& budget) {
  AuditReport rep;
  rep.n_max = n_max;
  rep.oracle_n_max = oracle_n_max;
  auto flag = [&rep](u64 n, u64 k, std::string detail) {
    rep.contradictions.push_back(AuditEntry{n, k, std::move(detail)});
  };

  for (u64 n = 3; n <= n_max; ++n) {
    const u64 d = n / 2;
    for (u64 k = d; k <= n + 3; ++k) {
      ++rep.instances_checked;
      const RnStatus st = resolve(n, k);
      const u64 base = lb(n, k);

      if (st.exact()) {
        if (st.lower != st.value || !st.upper || *st.upper != st.value)
          flag(n, k, "Exact status with inconsistent lower/upper");
      } else if (st.upper && *st.upper < st.lower) {
        flag(n, k, "upper bound below lower bound");
      }
      if (st.lower < base) flag(n, k, "lower bound below LB(n,k)");

      if (k + 3 >= n) {
        if (!st.exact() || st.value != t32_closed_form(n, k))
          flag(n, k, "k >= n-3 must be Exact at the Thm 3.2 closed form");
      } else if (n % 2 == k % 2) {
        if (!st.exact() || st.value != base) flag(n, k, "same parity must be Exact at LB (Thm 3.4)");
      } else {
        const MismatchGap g = MismatchGap::of(n, k);
        const u64 prop42_lower = base + (g.p + 1) / 2 - 1;
        if (st.exact()) {
          if (st.value < prop42_lower) flag(n, k, "Exact value below the Prop 4.2 lower bound");
          if (n % 2 == 0 && st.value > base + g.p - 1)
            flag(n, k, "Exact value above the Thm 4.3 upper bound");
        } else {
          if (st.lower != prop42_lower) flag(n, k, "Bounds lower differs from Prop 4.2");
          if (n % 2 == 0 && (!st.upper || *st.upper != base + g.p - 1))
            flag(n, k, "Bounds upper differs from Thm 4.3");
          if (n % 2 == 1 && st.upper) flag(n, k, "unexpected finite upper bound (n odd gap)");
        }
        if (k == d && (!st.exact() || st.value != base)) flag(n, k, "k = d must be Exact at LB");
      }
      if (n >= 4 && k == d + 1) {
        if (!st.exact() || st.value != rn_d_plus_1_reference(n))
          flag(n, k, "k = d+1 disagrees with the Thm 5.1 reference");
      }

      const auto params = classify(n, k);
      if (params.has_value() != st.construction_available)
        flag(n, k, "construction availability disagrees with classify");
      if (params) {
        try {
          const Labeling lab = build_labeling(n, k, *params);
          if (st.exact()) {
            if (lab.span() != st.value) flag(n, k, "construction span != Exact value");
          } else if (!st.upper || lab.span() != *st.upper) {
            flag(n, k, "construction span != Bounds upper");
          }
        } catch (const ConstructionError& e) {
          flag(n, k, std::string("construction self-validation failed: ") + e.what());
        }
      }

      if (n <= oracle_n_max) {
        const OracleResult r = exact_rn(n, k, budget);
        if (!r.complete) {
          flag(n, k, "oracle budget exceeded during audit");
        } else if (st.exact()) {
          if (r.value != st.value) flag(n, k, "oracle value != dispatcher Exact value");
        } else {
          if (r.value < st.lower) flag(n, k, "oracle value below dispatcher lower bound");
          if (st.upper && r.value > *st.upper) flag(n, k, "oracle value above dispatcher upper bound");
        }
      }
    }
  }
  return rep;
}

}  // namespace radiok
