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

#include "chising/subsample.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace chising {

namespace {

void check_spec(const ChimeraGraph& g, const SubsetSpec& spec) {
  if (spec.w < 1)
    throw std::invalid_argument("subset strip width must be >= 1, got " +
                                std::to_string(spec.w));
  if (spec.orientation != 0 && spec.orientation != 1)
    throw std::invalid_argument("subset orientation must be 0 or 1, got " +
                                std::to_string(spec.orientation));
  if (spec.i < 0 || spec.i > spec.w)
    throw std::invalid_argument("subset cut residue must be in [0, w], got " +
                                std::to_string(spec.i));
  if (spec.j < 0 || spec.j >= g.k())
    throw std::invalid_argument("subset stitch row must be in [0, k), got " +
                                std::to_string(spec.j));
}

// Oriented coordinates: orientation 1 works on the transposed grid, where
// real (row, col, side) appears as (col, row, 1-side).
ChimeraCoord to_real(const SubsetSpec& spec, int r, int c, int side, int u) {
  ChimeraCoord out;
  if (spec.orientation == 0) {
    out.row = static_cast<std::uint16_t>(r);
    out.col = static_cast<std::uint16_t>(c);
    out.side = static_cast<std::uint8_t>(side);
  } else {
    out.row = static_cast<std::uint16_t>(c);
    out.col = static_cast<std::uint16_t>(r);
    out.side = static_cast<std::uint8_t>(1 - side);
  }
  out.unit = static_cast<std::uint8_t>(u);
  return out;
}

// Removal rule in oriented coordinates: horizontal qubits of cut-column
// cells go away, except in the stitch row. The last column is cut like any
// other; a surviving last column would merge into its neighbor strip and
// push the sweep width past 4w+8 whenever the stitch row is interior.
bool cut_removed(const SubsetSpec& spec, int r, int c, int side) {
  return side == 1 && c % (spec.w + 1) == spec.i && r != spec.j;
}

double ms_between(std::chrono::steady_clock::time_point a,
                  std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double, std::milli>(b - a).count();
}

}  // namespace

std::vector<std::uint32_t> subset_nodes(const ChimeraGraph& g,
                                        const SubsetSpec& spec) {
  check_spec(g, spec);
  const int k = g.k();
  const std::uint32_t qubit_slots = 8u * static_cast<std::uint32_t>(k) * k;
  std::vector<std::uint32_t> nodes;
  nodes.reserve(qubit_slots);
  for (std::uint32_t id = 0; id < qubit_slots; ++id) {
    if (!g.is_working(id)) continue;
    const ChimeraCoord c = g.coord_of(id);
    int r_o, c_o, side_o;
    if (spec.orientation == 0) {
      r_o = c.row;
      c_o = c.col;
      side_o = c.side;
    } else {
      r_o = c.col;
      c_o = c.row;
      side_o = 1 - c.side;
    }
    if (cut_removed(spec, r_o, c_o, side_o)) continue;
    nodes.push_back(id);
  }
  return nodes;
}

std::vector<std::uint32_t> subset_sweep_order(const ChimeraGraph& g,
                                              const SubsetSpec& spec) {
  check_spec(g, spec);
  const int k = g.k();
  std::vector<std::uint32_t> order;
  order.reserve(8u * static_cast<std::uint32_t>(k) * k);

  auto emit_side = [&](int r, int c, int side) {
    if (cut_removed(spec, r, c, side)) return;
    for (int u = 0; u < 4; ++u) {
      const std::uint32_t id = g.linear_index(to_real(spec, r, c, side, u));
      if (g.is_working(id)) order.push_back(id);
    }
  };
  auto emit_cell = [&](int r, int c) {
    emit_side(r, c, 0);
    emit_side(r, c, 1);
  };

  // Inside a strip the boundary carries one row of vertical qubits plus the
  // current cell's horizontals plus the bridge into the already-solved part,
  // so sweeping the strips right to left keeps it at 4w+8 or below.
  auto emit_segment = [&](int a, int b) {
    for (int r = 0; r < k; ++r)
      for (int c = b; c >= a; --c) emit_cell(r, c);
  };

  // A cut column is two vertical chains walked toward the stitch row, then
  // the stitch cell itself; its horizontals retire the bridge pairwise.
  auto emit_cut = [&](int c) {
    for (int r = 0; r < spec.j; ++r) emit_side(r, c, 0);
    for (int r = k - 1; r > spec.j; --r) emit_side(r, c, 0);
    emit_cell(spec.j, c);
  };

  std::vector<int> cuts;
  for (int c = 0; c < k; ++c)
    if (c % (spec.w + 1) == spec.i) cuts.push_back(c);

  const int trail_start = cuts.empty() ? 0 : cuts.back() + 1;
  if (trail_start <= k - 1) emit_segment(trail_start, k - 1);
  for (int t = static_cast<int>(cuts.size()) - 1; t >= 0; --t) {
    emit_cut(cuts[t]);
    const int a = (t == 0) ? 0 : cuts[t - 1] + 1;
    if (a <= cuts[t] - 1) emit_segment(a, cuts[t] - 1);
  }
  return order;
}

std::vector<SubsetSpec> outer_collection(int k, int w, PortableRng& rng) {
  if (k < 1) throw std::invalid_argument("outer_collection: k must be >= 1");
  if (w < 1) throw std::invalid_argument("outer_collection: w must be >= 1");
  const int x = static_cast<int>(rng.uniform_below(2));
  const int y = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(w) + 1));
  const int z = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(k)));
  std::vector<SubsetSpec> specs;
  specs.reserve(2 * (w + 1));
  for (int orient : {x, 1 - x})
    for (int t = 0; t <= w; ++t)
      specs.push_back(SubsetSpec{w, orient, (y + t) % (w + 1), z});
  return specs;
}

std::optional<std::int64_t> improve_on_subset(const IsingInstance& inst,
                                              const ChimeraGraph& g,
                                              const SubsetSpec& spec,
                                              std::vector<std::int8_t>& spins,
                                              const DpOptions& dp_opt) {
  if (inst.n() != g.id_space())
    throw std::invalid_argument("instance and graph id spaces differ");
  if (spins.size() != inst.n())
    throw std::invalid_argument("spin vector size does not match instance");
  if (!dp_opt.tie_pref.empty() && dp_opt.tie_pref.size() != inst.n())
    throw std::invalid_argument("tie_pref must be empty or cover all nodes");

  const std::vector<std::uint32_t> free_nodes = subset_nodes(g, spec);
  ConditionalProblem cp = make_conditional(inst, free_nodes, spins);

  std::vector<std::uint32_t> sub_of(inst.n(), ChimeraGraph::npos);
  for (std::uint32_t si = 0; si < cp.sub.n(); ++si)
    sub_of[cp.sub_to_orig[si]] = si;

  const std::vector<std::uint32_t> material = cp.sub.material_nodes();
  std::vector<std::uint8_t> is_material(cp.sub.n(), 0);
  for (std::uint32_t si : material) is_material[si] = 1;

  std::vector<std::uint32_t> sub_order;
  sub_order.reserve(material.size());
  for (std::uint32_t orig : subset_sweep_order(g, spec)) {
    const std::uint32_t si = sub_of[orig];
    if (si != ChimeraGraph::npos && is_material[si]) sub_order.push_back(si);
  }

  std::vector<std::int8_t> sub_pref;
  DpOptions sub_opt;
  sub_opt.width_cap = dp_opt.width_cap;
  sub_opt.deadline = dp_opt.deadline;
  if (!dp_opt.tie_pref.empty()) {
    sub_pref.resize(cp.sub.n());
    for (std::uint32_t si = 0; si < cp.sub.n(); ++si)
      sub_pref[si] = dp_opt.tie_pref[cp.sub_to_orig[si]];
    sub_opt.tie_pref = sub_pref;
  }

  const SweepDecomposition dec = build_sweep_with_order(cp.sub, sub_order);
  const SolveReport rep = solve_dp(cp.sub, dec, sub_opt);
  if (rep.status != SolveStatus::kOptimal) {
    if (rep.status == SolveStatus::kError && rep.message == "deadline exceeded")
      return std::nullopt;
    throw std::runtime_error("subset solve failed: " + rep.message);
  }

  for (std::uint32_t si = 0; si < cp.sub.n(); ++si)
    spins[cp.sub_to_orig[si]] = rep.spins[si];
  return cp.constant_num + *rep.energy_num;
}

SolveReport run_heuristic(const IsingInstance& inst, const HeuristicConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  SolveReport rep;
  rep.solver = "selby";
  rep.gamma = inst.gamma();
  rep.seed = cfg.seed;

  const std::shared_ptr<const ChimeraGraph> g = inst.layout_ptr();
  if (!g) {
    rep.message = "heuristic requires a Chimera layout on the instance";
    return rep;
  }
  if (inst.n() != g->id_space()) {
    rep.message = "instance size does not match its layout";
    return rep;
  }
  if (cfg.w < 1) {
    rep.message = "strip width must be >= 1";
    return rep;
  }
  if (4 * cfg.w + 8 > cfg.width_cap) {
    rep.message = "width cap " + std::to_string(cfg.width_cap) +
                  " below subset requirement 4w+8 = " +
                  std::to_string(4 * cfg.w + 8);
    return rep;
  }
  if (!(cfg.perturb_fraction >= 0.0 && cfg.perturb_fraction <= 1.0)) {
    rep.message = "perturb_fraction must lie in [0, 1]";
    return rep;
  }
  if (!(cfg.time_limit_s >= 0.0)) {
    rep.message = "time limit must be >= 0";
    return rep;
  }

  const int k = g->k();
  const std::uint32_t n = inst.n();
  const auto deadline =
      t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
               std::chrono::duration<double>(cfg.time_limit_s));

  PortableRng rng(cfg.seed);
  std::vector<std::int8_t> spins(n);
  for (std::uint32_t v = 0; v < n; ++v)
    spins[v] = static_cast<std::int8_t>(rng.spin());
  if (g->with_field()) spins[g->field_node()] = 1;
  std::vector<std::int8_t> tie_pref(n);
  for (std::uint32_t v = 0; v < n; ++v)
    tie_pref[v] = static_cast<std::int8_t>(rng.spin());

  std::int64_t cur = inst.energy_num(spins);
  std::int64_t best = cur;
  std::vector<std::int8_t> best_spins = spins;
  rep.trace.push_back(
      {0, ms_between(t0, std::chrono::steady_clock::now()), cur, best});

  std::string stop;
  if (cfg.target_num && best <= *cfg.target_num) stop = "target reached";

  int pass = 0;
  while (stop.empty()) {
    if (std::chrono::steady_clock::now() >= deadline) {
      stop = "time limit";
      break;
    }
    if (cfg.max_passes && pass >= *cfg.max_passes) {
      stop = "pass limit";
      break;
    }
    ++pass;

    bool timed_out = false;
    for (const SubsetSpec& spec : outer_collection(k, cfg.w, rng)) {
      DpOptions dp_opt;
      dp_opt.width_cap = cfg.width_cap;
      dp_opt.tie_pref = tie_pref;
      dp_opt.deadline = deadline;
      const auto r = improve_on_subset(inst, *g, spec, spins, dp_opt);
      if (!r) {
        timed_out = true;
        break;
      }
      cur = *r;
      if (cur < best) {
        best = cur;
        best_spins = spins;
      }
      if (cfg.target_num && best <= *cfg.target_num) break;
    }
    rep.trace.push_back(
        {pass, ms_between(t0, std::chrono::steady_clock::now()), cur, best});
    if (cfg.target_num && best <= *cfg.target_num) {
      stop = "target reached";
      break;
    }
    if (timed_out) {
      stop = "time limit";
      break;
    }

    if (cfg.restart == RestartPolicy::kPerturbBest) {
      const std::uint32_t cells = static_cast<std::uint32_t>(k) * k;
      const std::uint32_t redraw = static_cast<std::uint32_t>(std::min<double>(
          cells, std::ceil(cfg.perturb_fraction * cells)));
      for (std::uint32_t cell : rng.sample_without_replacement(cells, redraw))
        for (std::uint32_t slot = 0; slot < 8; ++slot)
          spins[cell * 8 + slot] = static_cast<std::int8_t>(rng.spin());
    } else {
      for (std::uint32_t v = 0; v < n; ++v)
        spins[v] = static_cast<std::int8_t>(rng.spin());
      if (g->with_field()) spins[g->field_node()] = 1;
    }
    cur = inst.energy_num(spins);
  }

  rep.status = SolveStatus::kHeuristic;
  rep.energy_num = best;
  rep.spins = std::move(best_spins);
  rep.message = stop;
  rep.elapsed_ms = ms_between(t0, std::chrono::steady_clock::now());
  return rep;
}

}  // namespace chising
