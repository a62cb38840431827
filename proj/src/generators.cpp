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

#include "chising/generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <stdexcept>
#include <utility>

namespace chising {

namespace {

//! Draw order shared by the Chimera families: extra faults first, then one
//! weight per coupler in edge-list order, then one field per working qubit
//! in id order (for the families that have fields).
struct ChimeraDrawContext {
  std::shared_ptr<const ChimeraGraph> graph;
  PortableRng rng;
};

ChimeraDrawContext begin_chimera_draw(int k, const FaultPolicy& faults,
                                      std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("generator needs k >= 1");
  if (faults.extra_random_nodes < 0)
    throw std::invalid_argument("extra_random_nodes must be >= 0");

  ChimeraDrawContext ctx{nullptr, PortableRng(seed)};
  ChimeraFaults all = faults.fixed;
  if (faults.extra_random_nodes > 0) {
    const ChimeraGraph base(k, false, faults.fixed);
    std::vector<std::uint32_t> candidates;
    candidates.reserve(base.node_count());
    for (std::uint32_t id = 0; id < base.id_space(); ++id)
      if (base.is_working(id)) candidates.push_back(id);
    const auto extra = static_cast<std::uint32_t>(faults.extra_random_nodes);
    if (extra > candidates.size())
      throw std::invalid_argument("more extra faults requested than qubits");
    for (std::uint32_t idx :
         ctx.rng.sample_without_replacement(
             static_cast<std::uint32_t>(candidates.size()), extra))
      all.nodes.push_back(base.coord_of(candidates[idx]));
  }
  ctx.graph = std::make_shared<const ChimeraGraph>(k, false, all);
  return ctx;
}

IsingInstance finish_instance(IsingInstance inst, ChimeraDrawContext ctx,
                              const std::string& family, int k,
                              std::uint64_t seed) {
  inst.finalize();
  inst.attach_layout(std::move(ctx.graph));
  inst.meta.family = family;
  inst.meta.k = k;
  inst.meta.seed = seed;
  inst.meta.name = family + "-k" + std::to_string(k) + "-s" +
                   std::to_string(seed);
  return inst;
}

}  // namespace

IsingInstance gen_mgw(int k, const FaultPolicy& faults, std::uint64_t seed) {
  auto ctx = begin_chimera_draw(k, faults, seed);
  const ChimeraGraph& g = *ctx.graph;
  IsingInstance inst(g.id_space(), 10);
  for (const auto& [u, v] : g.edges())
    inst.add_edge(u, v, 10 * ctx.rng.spin());
  for (std::uint32_t id = 0; id < g.id_space(); ++id)
    if (g.is_working(id)) inst.set_field(id, 10 * ctx.rng.spin());
  return finish_instance(std::move(inst), std::move(ctx), "mgw", k, seed);
}

IsingInstance gen_rfr(int k, const FaultPolicy& faults, std::uint64_t seed) {
  auto ctx = begin_chimera_draw(k, faults, seed);
  const ChimeraGraph& g = *ctx.graph;
  IsingInstance inst(g.id_space(), 10);
  for (const auto& [u, v] : g.edges())
    inst.add_edge(u, v, ctx.rng.uniform_int(-10, 10));
  for (std::uint32_t id = 0; id < g.id_space(); ++id)
    if (g.is_working(id)) inst.set_field(id, ctx.rng.uniform_int(-10, 10));
  return finish_instance(std::move(inst), std::move(ctx), "rfr", k, seed);
}

IsingInstance gen_selby(int k, const FaultPolicy& faults, std::uint64_t seed) {
  auto ctx = begin_chimera_draw(k, faults, seed);
  const ChimeraGraph& g = *ctx.graph;
  IsingInstance inst(g.id_space(), 10);
  for (const auto& [u, v] : g.edges()) {
    const bool intra = g.is_intra_cell_edge(u, v);
    inst.add_edge(u, v, ctx.rng.uniform_int(intra ? -5 : -10, intra ? 5 : 10));
  }
  return finish_instance(std::move(inst), std::move(ctx), "selby", k, seed);
}

IsingInstance gen_mis(int k, const FaultPolicy& faults, std::uint64_t seed) {
  auto ctx = begin_chimera_draw(k, faults, seed);
  const ChimeraGraph& g = *ctx.graph;
  IsingInstance inst(g.id_space(), 10);
  std::vector<std::int64_t> incident_sum(g.id_space(), 0);
  for (const auto& [u, v] : g.edges()) {
    const std::int64_t num = static_cast<std::int64_t>(ctx.rng.uniform_below(2));
    if (num != 0) inst.add_edge(u, v, num);
    incident_sum[u] += num;
    incident_sum[v] += num;
  }
  for (std::uint32_t id = 0; id < g.id_space(); ++id)
    if (g.is_working(id)) inst.set_field(id, incident_sum[id] - 2);
  return finish_instance(std::move(inst), std::move(ctx), "mis", k, seed);
}

namespace {

struct LogicalDraw {
  IsingInstance inst;
  std::vector<int> degree;
  bool has_isolated = false;
};

//! Edges of K_n in (a, b) lexicographic order, each kept with probability
//! p_percent / 100.
LogicalDraw draw_logical_edges(std::uint32_t n, int p_percent,
                               PortableRng& rng, bool signed_weights) {
  LogicalDraw d{IsingInstance(n, 0), std::vector<int>(n, 0), false};
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b) {
      if (rng.uniform_below(100) >= static_cast<std::uint64_t>(p_percent))
        continue;
      const std::int64_t w = signed_weights ? rng.spin() : 1;
      d.inst.add_edge(a, b, w);
      ++d.degree[a];
      ++d.degree[b];
    }
  for (std::uint32_t a = 0; a < n; ++a)
    if (d.degree[a] == 0) d.has_isolated = true;
  return d;
}

std::optional<K64Result> finish_k64(IsingInstance logical, int k,
                                    const std::string& family, int p_percent,
                                    std::uint64_t seed, int draws_used) {
  logical.finalize();
  logical.meta.family = family;
  logical.meta.k = k;
  logical.meta.seed = seed;
  logical.meta.name = family + "-p" + std::to_string(p_percent) + "-k" +
                      std::to_string(k) + "-s" + std::to_string(seed);
  K64Result res;
  res.embedded = embed_instance(logical, k);
  res.embedded.physical.meta = logical.meta;
  res.logical = std::move(logical);
  res.draws_used = draws_used;
  return res;
}

void check_k64_args(int k, int p_percent, int max_draws) {
  if (k < 1) throw std::invalid_argument("k64 generator needs k >= 1");
  if (p_percent < 0 || p_percent > 100)
    throw std::invalid_argument("edge probability must be a percent in [0, 100]");
  if (max_draws < 1) throw std::invalid_argument("max_draws must be >= 1");
}

}  // namespace

std::optional<K64Result> gen_k64_ising(int k, int p_percent,
                                       std::uint64_t seed, int max_draws) {
  check_k64_args(k, p_percent, max_draws);
  const std::uint32_t n = 4u * static_cast<std::uint32_t>(k);
  PortableRng rng(seed);
  for (int draw = 1; draw <= max_draws; ++draw) {
    LogicalDraw d = draw_logical_edges(n, p_percent, rng, true);
    if (d.has_isolated) continue;
    bool representable = true;
    for (std::uint32_t a = 0; a < n; ++a) {
      const std::int64_t hi = d.degree[a] - 1;
      const std::int64_t h = rng.uniform_int(-hi, hi);
      d.inst.set_field(a, h);
      // The larger field half is h - h/2; it must stay on the gamma = 10
      // grid of the embedded instance.
      if (std::abs(h - h / 2) > 10) representable = false;
    }
    if (!representable) continue;
    return finish_k64(std::move(d.inst), k, "k64ising", p_percent, seed, draw);
  }
  return std::nullopt;
}

std::optional<K64Result> gen_k64_maxcut(int k, int p_percent,
                                        std::uint64_t seed, int max_draws) {
  check_k64_args(k, p_percent, max_draws);
  const std::uint32_t n = 4u * static_cast<std::uint32_t>(k);
  PortableRng rng(seed);
  for (int draw = 1; draw <= max_draws; ++draw) {
    LogicalDraw d = draw_logical_edges(n, p_percent, rng, false);
    if (d.has_isolated) continue;
    // Chains only provably dominate their crossings while the total weight
    // hanging off one chain stays below the chain strength on both ends.
    const bool dominated =
        std::all_of(d.degree.begin(), d.degree.end(),
                    [](int deg) { return deg <= 19; });
    if (!dominated) continue;
    return finish_k64(std::move(d.inst), k, "k64maxcut", p_percent, seed, draw);
  }
  return std::nullopt;
}

std::int64_t k64_cut_size(const IsingInstance& logical,
                          std::span<const std::int8_t> spins) {
  const auto m = static_cast<std::int64_t>(logical.edges().size());
  return (m - logical.energy_num(spins)) / 2;
}

IsingInstance rebin_instance(const IsingInstance& src, int gamma) {
  if (gamma < 1) throw std::invalid_argument("rebin needs gamma >= 1");
  const double denom = gamma_denominator(src);
  double maxmag = 0.0;
  for (const auto& e : src.edges())
    maxmag = std::max(maxmag, std::abs(e.num / denom));
  for (std::uint32_t v = 0; v < src.n(); ++v)
    maxmag = std::max(maxmag, std::abs(src.field(v) / denom));

  IsingInstance out(src.n(), gamma);
  if (maxmag > 0.0) {
    for (const auto& e : src.edges())
      out.add_edge(e.u, e.v,
                   snap_to_granularity_num(e.num / denom / maxmag, gamma));
    for (std::uint32_t v = 0; v < src.n(); ++v)
      out.set_field(v, snap_to_granularity_num(src.field(v) / denom / maxmag,
                                               gamma));
  }
  out.finalize();
  out.attach_layout(src.layout_ptr());
  out.meta = src.meta;
  return out;
}

IsingInstance gen_family(const std::string& family, int k,
                         const FaultPolicy& faults, std::uint64_t seed) {
  if (family == "mgw") return gen_mgw(k, faults, seed);
  if (family == "rfr") return gen_rfr(k, faults, seed);
  if (family == "selby") return gen_selby(k, faults, seed);
  if (family == "mis") return gen_mis(k, faults, seed);
  throw std::invalid_argument(
      "unknown family '" + family + "' (known: mgw, rfr, selby, mis)");
}

}  // namespace chising
