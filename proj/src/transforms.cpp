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

#include "chising/transforms.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace chising {

std::uint32_t MaxCutInstance::non_isolated_count() const {
  std::vector<std::uint8_t> mark(node_count, 0);
  for (const auto& e : edges) {
    mark[e.u] = 1;
    mark[e.v] = 1;
  }
  std::uint32_t c = 0;
  for (auto m : mark) c += m;
  return c;
}

MaxCutInstance ising_to_maxcut(const IsingInstance& inst) {
  MaxCutInstance mc;
  mc.gamma = inst.gamma();
  bool any_field = false;
  for (auto h : inst.fields())
    if (h != 0) any_field = true;
  mc.node_count = inst.n() + (any_field ? 1 : 0);
  if (any_field) mc.field_node = inst.n();
  for (const auto& e : inst.edges()) {
    if (e.num == 0) continue;
    mc.edges.push_back(e);
    mc.total_weight_num += e.num;
  }
  if (any_field) {
    for (std::uint32_t i = 0; i < inst.n(); ++i) {
      std::int64_t h = inst.field(i);
      if (h == 0) continue;
      mc.edges.push_back({i, *mc.field_node, h});
      mc.total_weight_num += h;
    }
  }
  return mc;
}

std::int64_t cut_value_num(const MaxCutInstance& mc,
                           std::span<const std::uint8_t> sides) {
  if (sides.size() != mc.node_count)
    throw std::invalid_argument("side vector has size " +
                                std::to_string(sides.size()) + ", expected " +
                                std::to_string(mc.node_count));
  for (auto s : sides)
    if (s > 1) throw std::invalid_argument("sides must be 0/1");
  std::int64_t cut = 0;
  for (const auto& e : mc.edges)
    if (sides[e.u] != sides[e.v]) cut += e.num;
  return cut;
}

std::int64_t ising_energy_from_cut_num(const MaxCutInstance& mc,
                                       std::int64_t cut_num) {
  return mc.total_weight_num - 2 * cut_num;
}

std::vector<std::int8_t> maxcut_solution_to_spins(
    const MaxCutInstance& mc, std::span<const std::uint8_t> sides,
    std::uint32_t ising_n) {
  if (sides.size() != mc.node_count)
    throw std::invalid_argument("side vector size mismatch");
  std::uint32_t spin_nodes = mc.node_count - (mc.field_node ? 1 : 0);
  if (ising_n < spin_nodes)
    throw std::invalid_argument("ising_n smaller than cut node count");
  std::uint8_t anchor = mc.field_node ? sides[*mc.field_node]
                        : (mc.node_count > 0 ? sides[0] : 0);
  std::vector<std::int8_t> spins(ising_n, 1);
  for (std::uint32_t i = 0; i < spin_nodes; ++i)
    spins[i] = (sides[i] == anchor) ? 1 : -1;
  return spins;
}

std::vector<std::uint8_t> cut_from_spins(const MaxCutInstance& mc,
                                         std::span<const std::int8_t> spins) {
  std::uint32_t spin_nodes = mc.node_count - (mc.field_node ? 1 : 0);
  if (spins.size() < spin_nodes)
    throw std::invalid_argument("spin vector too short for cut");
  std::vector<std::uint8_t> sides(mc.node_count, 0);
  for (std::uint32_t i = 0; i < spin_nodes; ++i)
    sides[i] = spins[i] == 1 ? 0 : 1;
  if (mc.field_node) sides[*mc.field_node] = 0;
  return sides;
}

std::int64_t QuboInstance::value(std::span<const std::uint8_t> x) const {
  if (x.size() != n) throw std::invalid_argument("x size mismatch");
  std::int64_t v = 0;
  for (const auto& e : quadratic) v += e.num * x[e.u] * x[e.v];
  for (std::uint32_t i = 0; i < n; ++i) v += linear[i] * x[i];
  return v;
}

QuboToIsingResult qubo_to_ising(const QuboInstance& q) {
  QuboToIsingResult r;
  r.inst = IsingInstance(q.n, 0);
  std::vector<std::int64_t> h(q.n, 0);
  for (const auto& e : q.quadratic) {
    if (e.u >= q.n || e.v >= q.n || e.u == e.v)
      throw std::invalid_argument("bad quadratic term");
    r.inst.add_edge(e.u, e.v, -e.num);
    h[e.u] -= e.num;
    h[e.v] -= e.num;
    r.constant_num += e.num;
  }
  if (q.linear.size() != q.n) throw std::invalid_argument("linear size");
  for (std::uint32_t i = 0; i < q.n; ++i) {
    h[i] -= 2 * q.linear[i];
    r.constant_num += 2 * q.linear[i];
    r.inst.set_field(i, h[i]);
  }
  r.inst.finalize();
  return r;
}

std::int64_t qubo_value_from_ising_num(const QuboToIsingResult& r,
                                       std::int64_t ising_energy_num) {
  std::int64_t diff = r.constant_num - ising_energy_num;
  if (diff % 4 != 0)
    throw std::logic_error("energy is not reachable by any 0/1 assignment");
  return diff / 4;
}

std::vector<std::uint8_t> qubo_solution_from_spins(
    std::span<const std::int8_t> spins) {
  std::vector<std::uint8_t> x(spins.size());
  for (std::size_t i = 0; i < spins.size(); ++i) x[i] = spins[i] == 1 ? 1 : 0;
  return x;
}

PreprocessResult preprocess_dominated_fields(const IsingInstance& inst) {
  const std::uint32_t n = inst.n();
  std::vector<std::int64_t> h(inst.fields());
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> adj(n);
  for (const auto& e : inst.edges()) {
    adj[e.u].push_back({e.v, e.num});
    adj[e.v].push_back({e.u, e.num});
  }

  std::vector<std::int8_t> fixed_spin(n, 0);  // 0 = still free
  std::vector<std::int64_t> abs_sum(n, 0);
  for (std::uint32_t i = 0; i < n; ++i)
    for (const auto& [j, w] : adj[i]) abs_sum[i] += std::llabs(w);

  auto dominated = [&](std::uint32_t i) {
    if (std::llabs(h[i]) >= abs_sum[i]) return h[i] != 0 || abs_sum[i] == 0;
    return false;
  };

  PreprocessResult res;
  std::vector<std::uint32_t> work;
  std::vector<std::uint8_t> queued(n, 0);
  for (std::uint32_t i = 0; i < n; ++i)
    if (dominated(i)) {
      work.push_back(i);
      queued[i] = 1;
    }
  while (!work.empty()) {
    std::uint32_t i = work.back();
    work.pop_back();
    queued[i] = 0;
    if (fixed_spin[i] != 0 || !dominated(i)) continue;
    std::int8_t s = h[i] > 0 ? -1 : 1;
    fixed_spin[i] = s;
    res.fixed.push_back({i, s});
    res.constant_num += h[i] * s;
    for (const auto& [j, w] : adj[i]) {
      if (fixed_spin[j] != 0) continue;
      h[j] += w * s;
      abs_sum[j] -= std::llabs(w);
      if (!queued[j] && dominated(j)) {
        work.push_back(j);
        queued[j] = 1;
      }
    }
  }

  std::vector<std::uint32_t> orig_to_red(n, 0);
  for (std::uint32_t i = 0; i < n; ++i)
    if (fixed_spin[i] == 0) {
      orig_to_red[i] = static_cast<std::uint32_t>(res.reduced_to_orig.size());
      res.reduced_to_orig.push_back(i);
    }
  res.reduced = IsingInstance(
      static_cast<std::uint32_t>(res.reduced_to_orig.size()), inst.gamma());
  for (std::size_t r = 0; r < res.reduced_to_orig.size(); ++r)
    res.reduced.set_field(static_cast<std::uint32_t>(r),
                          h[res.reduced_to_orig[r]]);
  for (const auto& e : inst.edges())
    if (fixed_spin[e.u] == 0 && fixed_spin[e.v] == 0)
      res.reduced.add_edge(orig_to_red[e.u], orig_to_red[e.v], e.num);
  res.reduced.finalize();
  return res;
}

std::vector<std::int8_t> merge_preprocessed(
    const PreprocessResult& pre, std::span<const std::int8_t> reduced_spins,
    std::uint32_t orig_n) {
  if (reduced_spins.size() != pre.reduced.n())
    throw std::invalid_argument("reduced spin vector size mismatch");
  std::vector<std::int8_t> out(orig_n, 1);
  for (const auto& [i, s] : pre.fixed) out.at(i) = s;
  for (std::size_t r = 0; r < pre.reduced_to_orig.size(); ++r)
    out.at(pre.reduced_to_orig[r]) = reduced_spins[r];
  return out;
}

}  // namespace chising
