#include "radiok/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "radiok/verifier.hpp"

namespace radiok {

const char* to_string(ScanVerdict v) {
  switch (v) {
    case ScanVerdict::Match: return "Match";
    case ScanVerdict::Mismatch: return "Mismatch";
    case ScanVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

u64 admissible_remaining_bound(u64 placed, u64 remaining, u64 partial_span, u64 n, u64 k) {
  require_instance(n, k);
  if (placed < 1 || placed + remaining != n)
    throw std::invalid_argument("admissible_remaining_bound: placed + remaining must equal n");
  return partial_span + (remaining / 2) * phi(n, k) + (remaining % 2) * (k + 1 - n / 2);
}

namespace {

using Clock = std::chrono::steady_clock;

// Incumbent = (value, branch index) packed into one atomic word; value gets
// 48 bits. A branch may prune an equal-to-incumbent subtree only when the
// incumbent came from a branch of index <= its own, which keeps the final
// (value, witness) identical to the single-threaded lexicographic DFS.
constexpr unsigned kBranchBits = 16;
constexpr u64 kBranchMask = (u64(1) << kBranchBits) - 1;
constexpr u64 kInfValue = (u64(1) << 47) - 1;

u64 pack(u64 value, u64 branch) { return (value << kBranchBits) | branch; }
u64 packed_value(u64 p) { return p >> kBranchBits; }
u64 packed_branch(u64 p) { return p & kBranchMask; }

struct Shared {
  u64 n = 0, k = 0, d = 0;
  u64 phi_value = 0;
  u64 unit = 0;  // k + 1 - d, the single leftover-gap bound
  std::vector<u64> dist;  // n*n cycle distance table

  std::atomic<u64> incumbent{pack(kInfValue, kBranchMask)};
  std::atomic<u64> nodes{0};
  std::atomic<bool> stop{false};
  u64 max_nodes = 0;
  u64 node_batch = 1;
  Clock::time_point deadline{};
  bool has_deadline = false;

  u64 distance(u64 a, u64 b) const { return dist[a * n + b]; }

  void offer(u64 value, u64 branch) {
    u64 cur = incumbent.load(std::memory_order_relaxed);
    const u64 mine = pack(value, branch);
    while (mine < cur &&
           !incumbent.compare_exchange_weak(cur, mine, std::memory_order_relaxed)) {
    }
  }

  // prune iff every completion has span >= the incumbent value and an
  // equal-value completion could not produce a lexicographically earlier
  // witness than the incumbent's branch already guarantees
  bool prune(u64 bound, u64 branch) const {
    const u64 cur = incumbent.load(std::memory_order_relaxed);
    const u64 value = packed_value(cur);
    if (bound > value) return true;
    return bound == value && packed_branch(cur) <= branch;
  }
};

struct BranchOutcome {
  u64 best = kInfValue;
  std::vector<u64> witness_order;
};

class BranchSearch {
 public:
  BranchSearch(Shared& shared, u64 branch_index)
      : sh_(shared), branch_(branch_index), order_(shared.n, 0), labels_(shared.n, 0),
        used_(shared.n, 0) {}

  BranchOutcome run(u64 first_vertex) {
    order_[0] = 0;
    used_[0] = 1;
    place(1, first_vertex);
    flush_nodes();
    return std::move(out_);
  }

 private:
  bool consume_node() {
    if (++pending_nodes_ >= sh_.node_batch) flush_nodes();
    return !sh_.stop.load(std::memory_order_relaxed);
  }

  void flush_nodes() {
    if (pending_nodes_ == 0) return;
    const u64 total = sh_.nodes.fetch_add(pending_nodes_, std::memory_order_relaxed) +
                      pending_nodes_;
    pending_nodes_ = 0;
    if (total > sh_.max_nodes || (sh_.has_deadline && Clock::now() > sh_.deadline))
      sh_.stop.store(true, std::memory_order_relaxed);
  }

  void place(u64 depth, u64 v) {
    if (!consume_node()) return;
    u64 f = labels_[depth - 1] + sh_.k + 1 - sh_.distance(order_[depth - 1], v);
    if (depth >= 2) {
      const u64 skip = labels_[depth - 2] + sh_.k + 1 - sh_.distance(order_[depth - 2], v);
      if (skip > f) f = skip;
    }
    const u64 remaining = sh_.n - depth - 1;
    const u64 bound = f + (remaining / 2) * sh_.phi_value + (remaining % 2) * sh_.unit;
    if (sh_.prune(bound, branch_)) return;

    order_[depth] = v;
    labels_[depth] = f;
    used_[v] = 1;
    if (depth + 1 == sh_.n) {
      if (f < out_.best) {
        out_.best = f;
        out_.witness_order = order_;
      }
      sh_.offer(f, branch_);
    } else {
      expand(depth + 1);
    }
    used_[v] = 0;
  }

  void expand(u64 depth) {
    // children in increasing vertex order: leaves are visited in
    // lexicographic order of the full orderings
    for (u64 v = 1; v < sh_.n; ++v) {
      if (used_[v]) continue;
      place(depth, v);
      if (sh_.stop.load(std::memory_order_relaxed)) return;
    }
  }

  Shared& sh_;
  u64 branch_;
  std::vector<u64> order_;
  std::vector<u64> labels_;
  std::vector<char> used_;
  BranchOutcome out_;
  u64 pending_nodes_ = 0;
};

unsigned pick_thread_count(unsigned requested, u64 branches) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  unsigned cap = requested != 0 ? requested : hw;
  if (const char* env = std::getenv("RADIOK_THREADS")) {
    char* end = nullptr;
    const unsigned long parsed = std::strtoul(env, &end, 10);
    if (end != env && parsed > 0) cap = std::min<unsigned>(cap, static_cast<unsigned>(parsed));
  }
  return static_cast<unsigned>(std::min<u64>(std::max(1u, cap), branches));
}

}  // namespace

OracleResult exact_rn(u64 n, u64 k, const OracleBudget& budget) {
  require_instance(n, k);
  if (n > 64) throw std::invalid_argument("exact_rn: n too large for exhaustive search");

  Shared sh;
  sh.n = n;
  sh.k = k;
  sh.d = n / 2;
  sh.phi_value = phi(n, k);
  sh.unit = k + 1 - sh.d;
  sh.dist.resize(n * n);
  for (u64 a = 0; a < n; ++a)
    for (u64 b = 0; b < n; ++b) sh.dist[a * n + b] = cycle_distance(a, b, n);
  sh.max_nodes = budget.max_nodes;
  sh.node_batch = std::max<u64>(1, std::min<u64>(4096, budget.max_nodes / 64));
  if (budget.max_seconds > 0) {
    sh.has_deadline = true;
    sh.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(budget.max_seconds));
  }

  // x_1 ranges over [1, d]: rotation fixes x_0 = 0 and reflection folds
  // x_1 > n/2 onto n - x_1.
  const u64 branches = sh.d;
  std::vector<BranchOutcome> outcomes(branches);
  const unsigned threads = pick_thread_count(budget.threads, branches);

  if (threads <= 1) {
    for (u64 b = 0; b < branches && !sh.stop.load(); ++b)
      outcomes[b] = BranchSearch(sh, b).run(b + 1);
  } else {
    std::atomic<u64> next{0};
    auto worker = [&] {
      for (;;) {
        const u64 b = next.fetch_add(1, std::memory_order_relaxed);
        if (b >= branches) return;
        outcomes[b] = BranchSearch(sh, b).run(b + 1);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  OracleResult res;
  res.lower_bound = lb(n, k);
  res.nodes = sh.nodes.load();
  res.complete = !sh.stop.load();

  u64 best = kInfValue;
  const std::vector<u64>* best_order = nullptr;
  for (const BranchOutcome& o : outcomes) {
    if (o.best < best) {  // branches are in x_1 order: first hit is lex-smallest
      best = o.best;
      best_order = &o.witness_order;
    }
  }
  if (best < kInfValue) {
    res.best_upper = best;
    if (res.complete) {
      res.value = best;
      Labeling w = minimal_labels_for_order(*best_order, n, k);
      w.provenance = "oracle";
      res.witness = std::move(w);
    }
  }
  return res;
}

std::vector<ScanRow> scan_conjecture(u64 n_lo, u64 n_hi, const OracleBudget& budget) {
  std::vector<ScanRow> rows;
  for (u64 n = std::max<u64>(n_lo, 4); n <= n_hi; ++n) {
    if (n % 2 != 0) continue;
    for (u64 k = n / 2; k + 3 < n; ++k) {
      if (k % 2 == 0) continue;
      const MismatchGap g = MismatchGap::of(n, k);
      if (!g.d_in_H) continue;  // sharp lower bound already settles these
      ScanRow row;
      row.n = n;
      row.k = k;
      row.h = g.h;
      row.p = g.p;
      row.lb_value = lb(n, k);
      row.conjectured = row.lb_value + g.p - 1;
      const OracleResult r = exact_rn(n, k, budget);
      if (r.complete) {
        row.oracle_value = r.value;
        row.verdict = r.value == row.conjectured ? ScanVerdict::Match : ScanVerdict::Mismatch;
      } else {
        row.verdict = ScanVerdict::Inconclusive;
      }
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace radiok
