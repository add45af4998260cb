#include "udom/pathdp.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace udom {

namespace {

constexpr int kF = 0;
constexpr int kFs = 1;
constexpr int kI = 2;
constexpr int kP = 3;
constexpr int kO = 4;
constexpr int kOs = 5;

constexpr std::uint64_t kParentLimit = std::uint64_t{1} << 26;

using Table = std::vector<std::int32_t>;
using Parents = std::vector<std::uint32_t>;

std::uint64_t pow_u64(std::uint64_t base, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

struct Neighbourhood {
  /// Bag positions adjacent to the introduced vertex.
  std::vector<int> pos;
};

struct Counts {
  int c[kDpLabels] = {0, 0, 0, 0, 0, 0};
  int f_pos = -1;    // some F neighbour
  int fs_pos = -1;   // some F* neighbour
  int p_pos = -1;    // some P neighbour
  int o_pos[64];     // O neighbours
  int o_count = 0;
  int os_pos[64];    // O* neighbours
  int os_count = 0;
};

Counts count_labels(std::uint64_t state, const Neighbourhood& nb, const std::vector<std::uint64_t>& pow6) {
  Counts k;
  for (int p : nb.pos) {
    const int d = static_cast<int>((state / pow6[static_cast<std::size_t>(p)]) % kDpLabels);
    ++k.c[d];
    if (d == kF) k.f_pos = p;
    if (d == kFs) k.fs_pos = p;
    if (d == kP) k.p_pos = p;
    if (d == kO) k.o_pos[k.o_count++] = p;
    if (d == kOs) k.os_pos[k.os_count++] = p;
  }
  return k;
}

struct Best {
  std::int32_t value = -1;
  std::uint32_t source = 0;
  void offer(std::int32_t v, std::uint64_t s) {
    if (v < 0) return;
    if (v > value || (v == value && s < source)) {
      value = v;
      source = static_cast<std::uint32_t>(s);
    }
  }
};

/// Target-driven introduce step; each target state reads only the old table.
std::uint64_t introduce_pull(const Table& old, Table& next, Parents* parents, int p, const Neighbourhood& nb,
                             const std::vector<std::uint64_t>& pow6, bool parallel) {
  const auto size = static_cast<std::int64_t>(pow6[static_cast<std::size_t>(p) + 1]);
  const std::uint64_t top = pow6[static_cast<std::size_t>(p)];
  std::uint64_t work = 0;
  auto body = [&](std::int64_t ti) -> std::uint64_t {
    const auto t = static_cast<std::uint64_t>(ti);
    const int lab = static_cast<int>(t / top);
    const std::uint64_t rest = t % top;
    const Counts k = count_labels(rest, nb, pow6);
    Best best;
    std::uint64_t looked = 0;
    const bool d_nbr = k.c[kF] + k.c[kFs] + k.c[kI] > 0;
    auto scan_x = [&](std::uint64_t base) {
      for (std::uint32_t mask = 0; mask < (1U << k.o_count); ++mask) {
        std::uint64_t src = base;
        for (int b = 0; b < k.o_count; ++b) {
          if (mask & (1U << b)) src += pow6[static_cast<std::size_t>(k.o_pos[b])];
        }
        ++looked;
        best.offer(old[src], src);
      }
    };
    switch (lab) {
      case kF:
        if (k.c[kI] == 0 && k.c[kOs] == 0 && k.c[kP] == 1) scan_x(rest + 2 * pow6[static_cast<std::size_t>(k.p_pos)]);
        break;
      case kFs:
        if (k.c[kI] == 0 && k.c[kP] == 0 && k.c[kOs] == 0) scan_x(rest);
        break;
      case kI:
        if (k.c[kI] + k.c[kF] + k.c[kFs] + k.c[kP] + k.c[kOs] == 0) scan_x(rest);
        break;
      case kP:
        if (k.c[kI] == 0 && k.c[kF] == 1 && k.c[kFs] == 0) {
          const std::uint64_t src = rest + pow6[static_cast<std::size_t>(k.f_pos)];
          ++looked;
          best.offer(old[src], src);
        }
        break;
      case kO:
        if (d_nbr) {
          ++looked;
          best.offer(old[rest], rest);
        }
        break;
      default:
        if (!d_nbr) {
          ++looked;
          best.offer(old[rest], rest);
        }
        break;
    }
    const bool in_d = lab == kF || lab == kFs || lab == kI;
    next[t] = best.value < 0 ? -1 : best.value + (in_d ? 1 : 0);
    if (parents != nullptr) (*parents)[t] = best.source;
    return looked;
  };
  if (parallel) {
#ifdef UDOM_HAVE_OPENMP
#pragma omp parallel for schedule(static) reduction(+ : work)
#endif
    for (std::int64_t t = 0; t < size; ++t) work += body(t);
  } else {
    for (std::int64_t t = 0; t < size; ++t) work += body(t);
  }
  return work;
}

/// Source-driven introduce step. Each feasible old state extends to each
/// label of the new vertex in exactly one way (or one per choice of private
/// neighbour for F). Iterating sources in increasing order and keeping only
/// strict improvements selects the same parent as introduce_pull.
std::uint64_t introduce_push(const Table& old, Table& next, Parents* parents, int p, const Neighbourhood& nb,
                             const std::vector<std::uint64_t>& pow6) {
  const std::uint64_t top = pow6[static_cast<std::size_t>(p)];
  std::fill(next.begin(), next.end(), -1);
  std::uint64_t work = 0;
  auto put = [&](std::uint64_t t, std::int32_t v, std::uint64_t s) {
    ++work;
    if (v > next[t]) {
      next[t] = v;
      if (parents != nullptr) (*parents)[t] = static_cast<std::uint32_t>(s);
    }
  };
  for (std::uint64_t s = 0; s < top; ++s) {
    const std::int32_t val = old[s];
    if (val < 0) continue;
    const Counts k = count_labels(s, nb, pow6);
    // Dominating v's O* neighbours turns them into O.
    std::uint64_t dominated = s;
    for (int b = 0; b < k.os_count; ++b) dominated -= pow6[static_cast<std::size_t>(k.os_pos[b])];
    if (k.c[kI] == 0 && k.c[kP] == 0) {
      for (int b = 0; b < k.os_count; ++b) {
        // x becomes v's private neighbour: O* -> P rather than O* -> O.
        const std::uint64_t t = dominated - pow6[static_cast<std::size_t>(k.os_pos[b])];
        put(t + kF * top, val + 1, s);
      }
      put(dominated + kFs * top, val + 1, s);
    }
    if (k.c[kI] + k.c[kF] + k.c[kFs] + k.c[kP] == 0) put(dominated + kI * top, val + 1, s);
    if (k.c[kI] == 0 && k.c[kF] == 0 && k.c[kFs] == 1) put(s - pow6[static_cast<std::size_t>(k.fs_pos)] + kP * top, val, s);
    const bool d_nbr = k.c[kF] + k.c[kFs] + k.c[kI] > 0;
    put(s + (d_nbr ? kO : kOs) * top, val, s);
  }
  return work;
}

/// Forgetting the vertex at position q; F* and O* sources are dropped.
std::uint64_t forget_step(const Table& old, Table& next, Parents* parents, int q, int new_size,
                          const std::vector<std::uint64_t>& pow6, bool parallel) {
  const auto size = static_cast<std::int64_t>(pow6[static_cast<std::size_t>(new_size)]);
  const std::uint64_t low = pow6[static_cast<std::size_t>(q)];
  std::uint64_t work = 0;
  auto body = [&](std::int64_t ti) -> std::uint64_t {
    const auto t = static_cast<std::uint64_t>(ti);
    const std::uint64_t lo = t % low;
    const std::uint64_t hi = t / low;
    Best best;
    for (int lab : {kF, kI, kP, kO}) {
      const std::uint64_t s = lo + static_cast<std::uint64_t>(lab) * low + hi * low * kDpLabels;
      best.offer(old[s], s);
    }
    next[t] = best.value;
    if (parents != nullptr) (*parents)[t] = best.source;
    return 4;
  };
  if (parallel) {
#ifdef UDOM_HAVE_OPENMP
#pragma omp parallel for schedule(static) reduction(+ : work)
#endif
    for (std::int64_t t = 0; t < size; ++t) work += body(t);
  } else {
    for (std::int64_t t = 0; t < size; ++t) work += body(t);
  }
  return work;
}

}  // namespace

DpResult dp_upper_domination(const Graph& g, const NicePathDecomposition& nd, const DpOptions& opts) {
  Stopwatch clock;
  if (auto problem = decomposition_violation(g, nd); !problem.empty()) {
    throw std::invalid_argument("decomposition does not cover the graph: " + problem);
  }
  int widest = 0;
  std::uint64_t parent_entries = 0;
  {
    int size = 0;
    for (const auto& s : nd.steps) {
      size += s.kind == NiceStep::Kind::introduce ? 1 : -1;
      widest = std::max(widest, size);
      parent_entries += pow_u64(kDpLabels, size);
    }
  }
  if (widest > opts.max_bag || widest > 12) {
    throw CapExceeded("bag of size " + std::to_string(widest) + " exceeds the cap of " + std::to_string(opts.max_bag));
  }
  if (opts.witness && parent_entries > kParentLimit) {
    throw CapExceeded("witness tables would need " + std::to_string(parent_entries) + " entries; run value-only");
  }

  std::vector<std::uint64_t> pow6(static_cast<std::size_t>(widest) + 2);
  for (std::size_t i = 0; i < pow6.size(); ++i) pow6[i] = pow_u64(kDpLabels, static_cast<int>(i));

  DpResult out;
  out.stats.max_bag = widest;
  const bool parallel = opts.exec == Exec::parallel;
  std::vector<Vertex> bag;
  std::vector<int> step_pos;
  std::vector<Parents> parents;
  Table table{0};
  for (const auto& step : nd.steps) {
    Table next;
    Parents par;
    std::uint64_t work = 0;
    int bag_for_bound = 0;
    if (step.kind == NiceStep::Kind::introduce) {
      const int p = static_cast<int>(bag.size());
      Neighbourhood nb;
      for (int j = 0; j < p; ++j) {
        if (g.adjacent(bag[static_cast<std::size_t>(j)], step.v)) nb.pos.push_back(j);
      }
      next.assign(pow6[static_cast<std::size_t>(p) + 1], -1);
      if (opts.witness) par.assign(next.size(), 0);
      Parents* pp = opts.witness ? &par : nullptr;
      work = parallel ? introduce_pull(table, next, pp, p, nb, pow6, true) : introduce_push(table, next, pp, p, nb, pow6);
      bag.push_back(step.v);
      step_pos.push_back(p);
      bag_for_bound = p + 1;
    } else {
      const auto it = std::find(bag.begin(), bag.end(), step.v);
      const int q = static_cast<int>(it - bag.begin());
      const int new_size = static_cast<int>(bag.size()) - 1;
      next.assign(pow6[static_cast<std::size_t>(new_size)], -1);
      if (opts.witness) par.assign(next.size(), 0);
      work = forget_step(table, next, opts.witness ? &par : nullptr, q, new_size, pow6, parallel);
      bag_for_bound = static_cast<int>(bag.size());
      bag.erase(it);
      step_pos.push_back(q);
    }
    std::uint64_t feasible = 0;
    for (auto v : next) feasible += v >= 0 ? 1 : 0;
    const std::uint64_t limit = pow_u64(7, bag_for_bound);
    if (feasible > pow_u64(7, static_cast<int>(bag.size())) || work > limit) ++out.stats.bound_violations;
    out.stats.feasible_states.push_back(feasible);
    out.stats.work.push_back(work);
    out.report.nodes_explored += work;
    table = std::move(next);
    if (opts.witness) parents.push_back(std::move(par));
  }

  out.report.value = table.at(0);
  out.report.witness = VertexSet(g.n());
  if (opts.witness) {
    std::uint32_t state = 0;
    for (std::size_t i = nd.steps.size(); i-- > 0;) {
      const std::uint32_t src = parents[i][state];
      const auto pos = static_cast<std::size_t>(step_pos[i]);
      if (nd.steps[i].kind == NiceStep::Kind::introduce) {
        const int lab = static_cast<int>((state / pow6[pos]) % kDpLabels);
        if (lab == kF || lab == kFs || lab == kI) out.report.witness.insert(nd.steps[i].v);
      } else {
        const int lab = static_cast<int>((src / pow6[pos]) % kDpLabels);
        if (lab == kFs || lab == kOs) ++out.stats.promise_violations;
      }
      state = src;
    }
  }
  out.report.elapsed = clock.elapsed();
  return out;
}

}  // namespace udom
