// Copyright 2026 chising contributors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include "chising/exact.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace chising {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::kOptimal: return "optimal";
    case SolveStatus::kHeuristic: return "heuristic";
    case SolveStatus::kCapped: return "capped";
    case SolveStatus::kError: return "error";
  }
  return "unknown";
}

double SolveReport::energy() const {
  if (!energy_num) return std::numeric_limits<double>::quiet_NaN();
  return static_cast<double>(*energy_num) / (gamma > 0 ? gamma : 1);
}

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

SolveReport brute_force(const IsingInstance& inst,
                        const BruteForceOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  SolveReport rep;
  rep.solver = "brute";
  rep.gamma = inst.gamma();

  std::vector<std::uint32_t> mat = inst.material_nodes();
  const int m = static_cast<int>(mat.size());
  if (m > opt.cap) {
    rep.status = SolveStatus::kCapped;
    rep.message = std::to_string(m) + " material spins exceed brute-force cap " +
                  std::to_string(opt.cap);
    rep.elapsed_ms = ms_since(t0);
    return rep;
  }

  std::vector<std::uint32_t> sub_of(inst.n(), 0);
  for (int i = 0; i < m; ++i) sub_of[mat[i]] = i;
  std::vector<std::int64_t> h(m);
  std::vector<std::vector<std::pair<int, std::int64_t>>> adj(m);
  for (int i = 0; i < m; ++i) h[i] = inst.field(mat[i]);
  for (const auto& e : inst.edges()) {
    int a = sub_of[e.u], b = sub_of[e.v];
    adj[a].push_back({b, e.num});
    adj[b].push_back({a, e.num});
  }

  std::vector<std::int8_t> s(m, -1);
  std::int64_t cur = 0;
  for (const auto& e : inst.edges()) cur += e.num;  // all spins -1
  for (int i = 0; i < m; ++i) cur -= h[i];
  std::int64_t best = cur;
  std::vector<std::int8_t> best_s = s;

  // Gray code: step t flips bit ctz(t), visiting all 2^m assignments.
  for (std::uint64_t t = 1; t < (1ull << m); ++t) {
    int i = std::countr_zero(t);
    std::int64_t local = h[i];
    for (const auto& [j, w] : adj[i]) local += w * s[j];
    cur -= 2 * s[i] * local;
    s[i] = -s[i];
    if (cur < best) {
      best = cur;
      best_s = s;
    }
  }

  rep.status = SolveStatus::kOptimal;
  rep.energy_num = best;
  rep.lower_bound_num = best;
  rep.spins.assign(inst.n(), 1);
  for (int i = 0; i < m; ++i) rep.spins[mat[i]] = best_s[i];
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

ConditionalProblem make_conditional(const IsingInstance& inst,
                                    std::span<const std::uint32_t> free_nodes,
                                    std::span<const std::int8_t> fixed_spins) {
  if (fixed_spins.size() != inst.n())
    throw std::invalid_argument("fixed spin vector must cover all nodes");
  for (std::size_t i = 0; i < fixed_spins.size(); ++i)
    if (fixed_spins[i] != 1 && fixed_spins[i] != -1)
      throw std::invalid_argument("spin " + std::to_string(i) + " is not +-1");
  for (std::size_t i = 0; i + 1 < free_nodes.size(); ++i)
    if (free_nodes[i] >= free_nodes[i + 1])
      throw std::invalid_argument("free node list must be strictly ascending");
  if (!free_nodes.empty() && free_nodes.back() >= inst.n())
    throw std::invalid_argument("free node out of range");

  std::vector<std::uint32_t> sub_of(inst.n(), ChimeraGraph::npos);
  for (std::size_t i = 0; i < free_nodes.size(); ++i)
    sub_of[free_nodes[i]] = static_cast<std::uint32_t>(i);

  ConditionalProblem cp;
  cp.sub = IsingInstance(static_cast<std::uint32_t>(free_nodes.size()),
                         inst.gamma());
  cp.sub_to_orig.assign(free_nodes.begin(), free_nodes.end());

  std::vector<std::int64_t> h(free_nodes.size());
  for (std::size_t i = 0; i < free_nodes.size(); ++i)
    h[i] = inst.field(free_nodes[i]);
  for (const auto& e : inst.edges()) {
    std::uint32_t a = sub_of[e.u], b = sub_of[e.v];
    if (a != ChimeraGraph::npos && b != ChimeraGraph::npos) {
      cp.sub.add_edge(a, b, e.num);
    } else if (a != ChimeraGraph::npos) {
      h[a] += e.num * fixed_spins[e.v];
    } else if (b != ChimeraGraph::npos) {
      h[b] += e.num * fixed_spins[e.u];
    } else {
      cp.constant_num += e.num * fixed_spins[e.u] * fixed_spins[e.v];
    }
  }
  for (std::uint32_t v = 0; v < inst.n(); ++v)
    if (sub_of[v] == ChimeraGraph::npos)
      cp.constant_num += inst.field(v) * fixed_spins[v];
  for (std::size_t i = 0; i < free_nodes.size(); ++i)
    cp.sub.set_field(static_cast<std::uint32_t>(i), h[i]);
  cp.sub.finalize();
  return cp;
}

SweepDecomposition build_sweep_with_order(
    const IsingInstance& inst, std::span<const std::uint32_t> order) {
  const std::uint32_t npos = ChimeraGraph::npos;
  std::vector<std::uint32_t> pos(inst.n(), npos);
  for (std::size_t t = 0; t < order.size(); ++t) {
    if (order[t] >= inst.n())
      throw std::invalid_argument("order contains out-of-range node " +
                                  std::to_string(order[t]));
    if (pos[order[t]] != npos)
      throw std::invalid_argument("order repeats node " +
                                  std::to_string(order[t]));
    pos[order[t]] = static_cast<std::uint32_t>(t);
  }
  for (auto v : inst.material_nodes())
    if (pos[v] == npos)
      throw std::invalid_argument("order misses material node " +
                                  std::to_string(v));
  for (const auto& e : inst.edges())
    if (e.num != 0 && (pos[e.u] == npos || pos[e.v] == npos))
      throw std::invalid_argument("order misses an edge endpoint");

  // A node leaves the boundary once the last of its neighbors has arrived.
  std::vector<std::uint32_t> drop_time(order.size());
  for (std::size_t t = 0; t < order.size(); ++t) drop_time[t] = static_cast<std::uint32_t>(t);
  for (const auto& e : inst.edges()) {
    if (e.num == 0) continue;
    std::uint32_t pu = pos[e.u], pv = pos[e.v];
    drop_time[pu] = std::max(drop_time[pu], pv);
    drop_time[pv] = std::max(drop_time[pv], pu);
  }
  std::vector<std::vector<std::uint32_t>> drops_at(order.size());
  for (std::size_t t = 0; t < order.size(); ++t)
    drops_at[drop_time[t]].push_back(static_cast<std::uint32_t>(t));

  SweepDecomposition dec;
  dec.order.assign(order.begin(), order.end());
  dec.steps.resize(order.size());
  std::vector<int> slot_of(order.size(), -1);
  std::vector<std::uint8_t> slot_used;
  int live = 0;
  for (std::size_t t = 0; t < order.size(); ++t) {
    SweepStep& st = dec.steps[t];
    st.node = order[t];
    int slot = 0;
    while (slot < static_cast<int>(slot_used.size()) && slot_used[slot]) ++slot;
    if (slot == static_cast<int>(slot_used.size())) slot_used.push_back(0);
    slot_used[slot] = 1;
    slot_of[t] = slot;
    st.slot = slot;
    ++live;
    std::sort(drops_at[t].begin(), drops_at[t].end());
    for (auto dt : drops_at[t]) {
      st.drop_nodes.push_back(order[dt]);
      st.drop_slots.push_back(slot_of[dt]);
      slot_used[slot_of[dt]] = 0;
      --live;
      if (dt == t) st.self_drop = true;
    }
    st.boundary_after = live;
    dec.width = std::max(dec.width, live);
  }
  return dec;
}

SweepDecomposition build_sweep(const IsingInstance& inst) {
  return build_sweep_with_order(inst, inst.material_nodes());
}

namespace {

// Rank of state x within the subset enumeration of mask (bits of x packed
// over the set bits of mask, low to high).
std::uint32_t pack_state(std::uint32_t x, std::uint32_t mask) {
  std::uint32_t r = 0;
  int out = 0;
  while (mask) {
    int b = std::countr_zero(mask);
    r |= ((x >> b) & 1u) << out;
    ++out;
    mask &= mask - 1;
  }
  return r;
}

struct DropRecord {
  int step;
  int slot;
  std::uint32_t mask_after;  // live slot mask after this drop
  std::vector<std::uint64_t> argmax_plus;  // bit = 1 when s = +1 won
};

}  // namespace

SolveReport solve_dp(const IsingInstance& inst, const SweepDecomposition& dec,
                     const DpOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  SolveReport rep;
  rep.solver = "sweep-dp";
  rep.gamma = inst.gamma();

  if (dec.width > opt.width_cap) {
    rep.status = SolveStatus::kCapped;
    rep.message = "sweep width " + std::to_string(dec.width) +
                  " exceeds cap " + std::to_string(opt.width_cap);
    rep.elapsed_ms = ms_since(t0);
    return rep;
  }
  if (!opt.tie_pref.empty() && opt.tie_pref.size() != inst.n())
    throw std::invalid_argument("tie_pref must be empty or cover all nodes");

  // Any partial-assignment energy is bounded by the total weight mass, so
  // checking it once up front rules out 64-bit overflow in the tables.
  std::uint64_t mass = 0;
  for (const auto& e : inst.edges()) mass += std::uint64_t(std::abs(e.num));
  for (std::uint32_t v = 0; v < inst.n(); ++v)
    mass += std::uint64_t(std::abs(inst.field(v)));
  if (mass > (std::uint64_t(1) << 62)) {
    rep.status = SolveStatus::kError;
    rep.message = "total weight mass risks 64-bit overflow";
    rep.elapsed_ms = ms_since(t0);
    return rep;
  }

  int slots = 0;
  for (const auto& st : dec.steps) slots = std::max(slots, st.slot + 1);
  if (slots > 30) {
    rep.status = SolveStatus::kCapped;
    rep.message = "boundary needs " + std::to_string(slots) + " slots";
    rep.elapsed_ms = ms_since(t0);
    return rep;
  }

  std::vector<std::int64_t> val(std::size_t(1) << slots, 0);
  std::vector<DropRecord> drops;
  std::vector<int> slot_node(slots, -1);  // instance node living in each slot
  std::uint32_t live = 0;

  auto enumerate = [](std::uint32_t mask, auto&& f) {
    std::uint32_t x = mask;
    while (true) {
      f(x);
      if (x == 0) break;
      x = (x - 1) & mask;
    }
  };

  for (std::size_t t = 0; t < dec.steps.size(); ++t) {
    if (opt.deadline && std::chrono::steady_clock::now() > *opt.deadline) {
      rep.status = SolveStatus::kError;
      rep.message = "deadline exceeded";
      rep.elapsed_ms = ms_since(t0);
      return rep;
    }
    const SweepStep& st = dec.steps[t];
    const std::uint32_t bit = 1u << st.slot;

    // Introduce: split every boundary state on the new node's spin.
    std::int64_t h = inst.field(st.node);
    // Couplings to live boundary nodes, as (slot bit, weight).
    std::vector<std::pair<std::uint32_t, std::int64_t>> terms;
    for (const auto& [nbr, w] : inst.incident(st.node)) {
      bool found = false;
      for (int sl = 0; sl < slots; ++sl)
        if (slot_node[sl] == static_cast<int>(nbr) && (live >> sl & 1)) {
          terms.push_back({1u << sl, w});
          found = true;
          break;
        }
      (void)found;  // neighbors introduced later contribute at their own step
    }
    enumerate(live, [&](std::uint32_t x) {
      std::int64_t delta = h;
      for (const auto& [nb, w] : terms) delta += (x & nb) ? w : -w;
      val[x | bit] = val[x] + delta;
      val[x] -= delta;
    });
    live |= bit;
    slot_node[st.slot] = static_cast<int>(st.node);

    // Drop: minimize out each finished node, keeping an argmin bit per
    // surviving state for solution recovery.
    for (std::size_t d = 0; d < st.drop_nodes.size(); ++d) {
      const std::uint32_t dbit = 1u << st.drop_slots[d];
      const std::uint32_t after = live & ~dbit;
      std::int8_t pref = opt.tie_pref.empty()
                             ? std::int8_t(1)
                             : opt.tie_pref[st.drop_nodes[d]];
      DropRecord rec;
      rec.step = static_cast<int>(t);
      rec.slot = st.drop_slots[d];
      rec.mask_after = after;
      rec.argmax_plus.assign(
          ((std::size_t(1) << std::popcount(after)) + 63) / 64, 0);
      std::uint32_t idx = 0;
      // Enumerate low-to-high over packed rank: iterate subsets of `after`
      // in the same order pack_state ranks them.
      for (std::uint32_t x = 0;; x = ((x | ~after) + 1) & after, ++idx) {
        std::int64_t lo = val[x], hi = val[x | dbit];
        bool plus = hi < lo || (hi == lo && pref > 0);
        if (plus) {
          val[x] = hi;
          rec.argmax_plus[idx >> 6] |= 1ull << (idx & 63);
        }
        if (x == after) break;
      }
      drops.push_back(std::move(rec));
      live = after;
      slot_node[st.drop_slots[d]] = -1;
    }
  }

  if (live != 0) throw std::logic_error("sweep left live boundary nodes");

  rep.energy_num = val[0];
  rep.lower_bound_num = val[0];
  rep.status = SolveStatus::kOptimal;

  // Backward pass: rebuild the optimal assignment from the drop bitmaps.
  rep.spins.assign(inst.n(), 1);
  std::uint32_t x = 0;
  auto drop_it = drops.rbegin();
  for (std::size_t ti = dec.steps.size(); ti-- > 0;) {
    const SweepStep& st = dec.steps[ti];
    for (std::size_t d = st.drop_nodes.size(); d-- > 0;) {
      const DropRecord& rec = *drop_it++;
      std::uint32_t idx = pack_state(x & rec.mask_after, rec.mask_after);
      bool plus = (rec.argmax_plus[idx >> 6] >> (idx & 63)) & 1;
      if (plus) x |= 1u << rec.slot;
    }
    rep.spins[st.node] = (x >> st.slot & 1) ? 1 : -1;
    x &= ~(1u << st.slot);
  }
  if (x != 0) throw std::logic_error("recovery left stray bits");

  rep.elapsed_ms = ms_since(t0);
  return rep;
}

SolveReport solve_exact(const IsingInstance& inst, const DpOptions& opt) {
  SweepDecomposition dec = build_sweep(inst);
  SolveReport rep = solve_dp(inst, dec, opt);
  rep.solver = "exact";
  return rep;
}

}  // namespace chising
