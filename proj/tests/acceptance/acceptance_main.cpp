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

// End-to-end acceptance suite. Ten independent checks, one PASS/FAIL line
// each, nonzero exit on any failure. Tolerances, counts, and thresholds are
// pinned in this file on purpose; expects to run from the repository root
// (data/ must be reachable).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "../oracles.hpp"
#include "chising/bench.hpp"
#include "chising/chimera.hpp"
#include "chising/embedding.hpp"
#include "chising/exact.hpp"
#include "chising/generators.hpp"
#include "chising/io.hpp"
#include "chising/ising.hpp"
#include "chising/rng.hpp"
#include "chising/subsample.hpp"
#include "chising/transforms.hpp"

namespace {

using namespace chising;

using Outcome = std::pair<bool, std::string>;

int g_failures = 0;

void report(int idx, bool ok, const std::string& label,
            const std::string& detail) {
  std::printf("[%2d] %s  %s%s%s\n", idx, ok ? "PASS" : "FAIL", label.c_str(),
              detail.empty() ? "" : ": ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

template <typename Fn>
void criterion(int idx, const std::string& label, Fn&& fn) {
  try {
    const Outcome out = fn();
    report(idx, out.first, label, out.second);
  } catch (const std::exception& e) {
    report(idx, false, label, std::string("exception: ") + e.what());
  }
}

DpOptions dp_cap(int width_cap) {
  DpOptions opt;
  opt.width_cap = width_cap;
  return opt;
}

std::vector<oracle::Edge> to_oracle(const std::vector<WeightedEdge>& edges) {
  std::vector<oracle::Edge> out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.push_back({e.u, e.v, e.num});
  return out;
}

IsingInstance random_instance(std::uint32_t n, int gamma, int pct, int wmax,
                              int hmax, std::uint64_t seed) {
  PortableRng rng(seed);
  IsingInstance inst(n, gamma);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (rng.uniform_below(100) < static_cast<std::uint64_t>(pct))
        inst.add_edge(i, j, rng.uniform_int(-wmax, wmax));
  for (std::uint32_t i = 0; i < n; ++i)
    if (rng.uniform_below(100) < 60)
      inst.set_field(i, rng.uniform_int(-hmax, hmax));
  inst.finalize();
  return inst;
}

// 1. The boundary DP and the gray-code brute force agree exactly on every
// generated family, C_1 fault-free and C_2 with seeded fault sets that keep
// the material spin count within brute-force reach.
Outcome check_exact_agreement() {
  const std::vector<std::string> families = {"mgw", "rfr", "selby", "mis"};
  int checked = 0;
  int bad = 0;
  const auto agree = [&](const IsingInstance& inst) {
    const SolveReport bf = brute_force(inst, {.cap = 20});
    const SolveReport dp = solve_exact(inst, dp_cap(20));
    return bf.status == SolveStatus::kOptimal &&
           dp.status == SolveStatus::kOptimal && bf.energy_num &&
           dp.energy_num && *bf.energy_num == *dp.energy_num &&
           inst.energy_num(dp.spins) == *dp.energy_num;
  };
  for (const std::string& family : families) {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      if (!agree(gen_family(family, 1, FaultPolicy{}, seed))) ++bad;
      ++checked;
    }
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      FaultPolicy faults;
      faults.extra_random_nodes = 12 + static_cast<int>(seed % 7);
      if (!agree(gen_family(family, 2, faults, seed))) ++bad;
      ++checked;
    }
  }
  return {bad == 0 && checked == 800,
          std::to_string(checked) + " instances, " + std::to_string(bad) +
              " mismatches"};
}

// 2. MaxCut and QUBO views preserve the optimum under double enumeration:
// min H = total weight - 2 * max cut, and the QUBO recovery formula returns
// the enumerated QUBO maximum together with a witnessing assignment.
Outcome check_transforms() {
  int bad = 0;
  for (int t = 0; t < 100; ++t) {
    const std::uint32_t n = 4 + static_cast<std::uint32_t>(t % 13);
    const IsingInstance inst =
        random_instance(n, 10, 45, 10, 10, 9000 + static_cast<std::uint64_t>(t));
    const auto full =
        oracle::exhaustive_min(n, to_oracle(inst.edges()), inst.fields());

    const MaxCutInstance mc = ising_to_maxcut(inst);
    const auto cut = oracle::exhaustive_maxcut(mc.node_count, to_oracle(mc.edges));
    bool ok = full.energy == mc.total_weight_num - 2 * cut.cut;
    if (mc.node_count > 0) {
      const auto spins = maxcut_solution_to_spins(mc, cut.sides, inst.n());
      ok = ok && inst.energy_num(spins) == full.energy;
    }

    QuboInstance q;
    q.n = 3 + static_cast<std::uint32_t>(t % 10);
    PortableRng rng(7700 + static_cast<std::uint64_t>(t));
    for (std::uint32_t i = 0; i < q.n; ++i)
      for (std::uint32_t j = i + 1; j < q.n; ++j)
        if (rng.uniform_below(100) < 55)
          q.quadratic.push_back({i, j, rng.uniform_int(-12, 12)});
    q.linear.resize(q.n);
    for (std::uint32_t i = 0; i < q.n; ++i) q.linear[i] = rng.uniform_int(-12, 12);

    const QuboToIsingResult conv = qubo_to_ising(q);
    const auto imin = oracle::exhaustive_min(
        conv.inst.n(), to_oracle(conv.inst.edges()), conv.inst.fields());
    const auto qmax =
        oracle::exhaustive_qubo_max(q.n, to_oracle(q.quadratic), q.linear);
    ok = ok && qubo_value_from_ising_num(conv, imin.energy) == qmax.value &&
         q.value(qubo_solution_from_spins(imin.spins)) == qmax.value;

    if (!ok) ++bad;
  }
  return {bad == 0, "100 instance pairs, " + std::to_string(bad) + " mismatches"};
}

// 3. Zero-field instances with nonnegative couplings are bipartite-trivial:
// every coupler can be cut at once, so the DP optimum is exactly -sum J.
Outcome check_nonnegative_bound() {
  int bad = 0;
  for (int t = 0; t < 50; ++t) {
    const int k = 2 + t % 3;
    const ChimeraGraph g(k);
    IsingInstance inst(static_cast<std::uint32_t>(8 * k * k), 10);
    PortableRng rng(3000 + static_cast<std::uint64_t>(t));
    std::int64_t total = 0;
    for (const auto& [u, v] : g.edges()) {
      const std::int64_t num = static_cast<std::int64_t>(rng.uniform_below(11));
      if (num != 0) {
        inst.add_edge(u, v, num);
        total += num;
      }
    }
    inst.finalize();
    const SolveReport rep = solve_exact(inst, dp_cap(20));
    const bool ok = rep.status == SolveStatus::kOptimal && rep.energy_num &&
                    *rep.energy_num == -total &&
                    inst.energy_num(rep.spins) == -total;
    if (!ok) ++bad;
  }
  return {bad == 0, "50 instances, " + std::to_string(bad) + " off the bound"};
}

// Shared state for checks 4 and 5: the subset heuristic runs once, the
// trace audit reuses the same runs.
struct HeuristicAudit {
  bool ran = false;
  int matched = 0;
  int instances = 0;
  int runs = 0;
  long violations = 0;
  bool traces_ok = true;
  std::string error;
};

HeuristicAudit g_heur;

// 4. The subset heuristic (w = 3, up to 8 seeds, 30 s budget per run)
// reaches the proven optimum on at least 18 of 20 generated instances.
Outcome check_heuristic_optimality() {
  g_heur.ran = true;
  for (std::uint64_t inst_seed = 1; inst_seed <= 20; ++inst_seed) {
    const IsingInstance inst = gen_rfr(4, FaultPolicy{}, inst_seed);
    const SolveReport exact = solve_exact(inst, dp_cap(20));
    ++g_heur.instances;
    if (exact.status != SolveStatus::kOptimal || !exact.energy_num) {
      g_heur.error = "exact solve failed on seed " + std::to_string(inst_seed);
      continue;
    }
    bool got = false;
    for (std::uint64_t s = 0; s < 8 && !got; ++s) {
      HeuristicConfig cfg;
      cfg.w = 3;
      cfg.seed = inst_seed * 100 + s;
      cfg.time_limit_s = 30.0;
      cfg.target_num = *exact.energy_num;
      const SolveReport rep = run_heuristic(inst, cfg);
      ++g_heur.runs;
      if (rep.trace.empty() || rep.trace.front().pass != 0)
        g_heur.traces_ok = false;
      for (std::size_t i = 0; i + 1 < rep.trace.size(); ++i)
        if (rep.trace[i + 1].best_num > rep.trace[i].best_num)
          ++g_heur.violations;
      if (rep.energy_num && *rep.energy_num == *exact.energy_num) got = true;
    }
    if (got) ++g_heur.matched;
  }
  const bool ok = g_heur.error.empty() && g_heur.instances == 20 &&
                  g_heur.matched >= 18;
  std::string detail = "optimum reached on " + std::to_string(g_heur.matched) +
                       "/20 instances (threshold 18)";
  if (!g_heur.error.empty()) detail += "; " + g_heur.error;
  return {ok, detail};
}

// 5. Across every heuristic run above, the best-so-far trace never
// increases and every trace starts at pass 0.
Outcome check_trace_monotonicity() {
  if (!g_heur.ran || g_heur.runs == 0)
    return {false, "no heuristic runs recorded"};
  return {g_heur.violations == 0 && g_heur.traces_ok,
          std::to_string(g_heur.runs) + " runs, " +
              std::to_string(g_heur.violations) + " violations"};
}

// 6. Chimera counts match the closed forms 8k^2 nodes and 24k^2 - 8k
// couplers, and the field-extended graph adds one node and 8k^2 edges
// (2049 / 8064 at k = 16).
Outcome check_structure_counts() {
  bool ok = true;
  for (const int k : {1, 2, 4, 8, 16}) {
    const auto kk = static_cast<std::uint32_t>(k) * static_cast<std::uint32_t>(k);
    const ChimeraGraph plain(k);
    const ChimeraGraph fielded(k, true);
    ok = ok && plain.node_count() == 8 * kk &&
         plain.edge_count() == static_cast<std::size_t>(24 * kk - 8 * k);
    ok = ok && fielded.node_count() == 8 * kk + 1 &&
         fielded.edge_count() == static_cast<std::size_t>(32 * kk - 8 * k);
  }
  const ChimeraGraph c16(16, true);
  ok = ok && c16.node_count() == 2049 && c16.edge_count() == 8064;
  return {ok, "k in {1,2,4,8,16}, plain and field-extended"};
}

// 7. Repetition-time arithmetic: the three pinned values reproduce to six
// significant figures and t99 strictly decreases in p on a 99-point grid.
Outcome check_t99() {
  const auto rel_ok = [](double got, double want) {
    return std::abs(got - want) <= 1e-6 * std::abs(want);
  };
  bool ok = rel_ok(t99_microseconds(20.0, 0.99), 20.0);
  ok = ok && t99_microseconds(20.0, 1.0) == 20.0;
  ok = ok && rel_ok(t99_microseconds(20.0, 0.5), 132.877124);
  double prev = t99_microseconds(20.0, 0.01);
  for (int i = 2; i <= 99; ++i) {
    const double cur = t99_microseconds(20.0, i / 100.0);
    if (!(cur < prev) || !std::isfinite(cur) || cur <= 0.0) ok = false;
    prev = cur;
  }
  return {ok, "3 pinned values, 99-point monotone grid"};
}

// 8. Determinism: the committed 1000-value generator reference replays
// exactly, and the full generate / solve / benchmark pipeline emits byte
// identical text when run twice with the same seeds.
Outcome check_reproducibility() {
  std::ifstream ref("data/rng_seed4711_first1000.txt");
  if (!ref) return {false, "data/rng_seed4711_first1000.txt not found"};
  PortableRng rng(4711);
  int lines = 0;
  bool vector_ok = true;
  std::uint64_t want = 0;
  while (ref >> want) {
    ++lines;
    if (rng.next() != want) vector_ok = false;
  }
  vector_ok = vector_ok && lines == 1000;

  const auto pipeline = []() {
    std::ostringstream out;
    std::vector<IsingInstance> insts;
    for (const std::uint64_t seed : {11, 12, 13})
      insts.push_back(gen_rfr(2, FaultPolicy{}, seed));
    for (const auto& inst : insts) write_instance(out, inst);

    std::vector<std::pair<std::string, const IsingInstance*>> list;
    for (const auto& inst : insts) list.emplace_back(inst.meta.name, &inst);
    std::vector<SolverSpec> solvers;
    solvers.push_back({"dp", [](const IsingInstance& in, std::uint64_t) {
                         return solve_exact(in, dp_cap(20));
                       }});
    solvers.push_back({"selby", [](const IsingInstance& in, std::uint64_t s) {
                         HeuristicConfig cfg;
                         cfg.w = 1;
                         cfg.seed = s;
                         cfg.max_passes = 3;
                         return run_heuristic(in, cfg);
                       }});
    BatchOptions batch;
    batch.seeds = {5};
    const auto records = run_batch(list, solvers, batch);
    for (const auto& r : records)
      out << r.task.instance_name << ' ' << r.task.solver_name << ' '
          << r.task.seed << ' '
          << (r.energy_num ? std::to_string(*r.energy_num) : "none") << '\n';
    out << summary_to_csv(summarize(list, records, {"dp", "selby"}));
    for (const auto& inst : insts)
      out << report_to_json(solve_exact(inst, dp_cap(20)), false)
          << '\n';
    return out.str();
  };
  const std::string first = pipeline();
  const std::string second = pipeline();

  const auto tmp = std::filesystem::temp_directory_path();
  const auto path_a = tmp / "chising-accept-a.ising";
  const auto path_b = tmp / "chising-accept-b.ising";
  write_instance_file(path_a.string(), gen_rfr(2, FaultPolicy{}, 11));
  write_instance_file(path_b.string(), gen_rfr(2, FaultPolicy{}, 11));
  const auto slurp = [](const std::filesystem::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
  };
  const std::string bytes_a = slurp(path_a);
  const std::string bytes_b = slurp(path_b);
  std::filesystem::remove(path_a);
  std::filesystem::remove(path_b);

  const bool ok = vector_ok && !first.empty() && first == second &&
                  !bytes_a.empty() && bytes_a == bytes_b;
  return {ok, vector_ok ? "1000-value replay and double pipeline identical"
                        : "generator reference vector mismatch"};
}

// 9. The clique embedding is structurally sound at k = 16 (disjoint
// connected chains, all 2016 crossings on real couplers) and at k = 4 the
// generate / embed / solve / decode loop lands on the logical brute-force
// optimum for all 20 seeds.
Outcome check_embedding_roundtrip() {
  const CliqueEmbedding emb = build_clique_embedding(16);
  const ChimeraGraph g16(16);
  validate_embedding(emb, g16);
  bool ok = emb.chains.size() == 64;
  std::set<std::pair<std::uint32_t, std::uint32_t>> crossings;
  for (std::uint32_t a = 0; a < 64; ++a)
    for (std::uint32_t b = a + 1; b < 64; ++b)
      crossings.insert(crossing_coupler(emb, a, b));
  ok = ok && crossings.size() == 2016;
  for (const auto& [p, q] : crossings) {
    const auto nb = g16.neighbors(p);
    if (!std::binary_search(nb.begin(), nb.end(), q)) ok = false;
  }

  int decoded_optimal = 0;
  int generated = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto r = gen_k64_ising(4, 40, seed);
    if (!r) continue;
    ++generated;
    const SolveReport phys = solve_exact(r->embedded.physical, dp_cap(20));
    const SolveReport logical = brute_force(r->logical, {.cap = 24});
    if (phys.status != SolveStatus::kOptimal ||
        logical.status != SolveStatus::kOptimal)
      continue;
    const auto decoded = decode_chains(r->embedded.emb, phys.spins);
    if (r->logical.energy_num(decoded) == *logical.energy_num)
      ++decoded_optimal;
  }
  ok = ok && generated == 20 && decoded_optimal == 20;
  return {ok, "2016 crossings; " + std::to_string(decoded_optimal) +
                  "/20 decoded optima"};
}

// 10. Field-domination preprocessing is lossless: on random instances the
// reduced optimum plus the fixed-spin constant equals the full optimum, and
// the merged assignment realizes it.
Outcome check_preprocessing() {
  int bad = 0;
  for (int t = 0; t < 100; ++t) {
    const std::uint32_t n = 4 + static_cast<std::uint32_t>(t % 17);
    const int pct = 25 + (t * 7) % 50;
    const IsingInstance inst =
        random_instance(n, 0, pct, 10, 12, 5500 + static_cast<std::uint64_t>(t));
    const PreprocessResult pre = preprocess_dominated_fields(inst);
    const SolveReport full = brute_force(inst, {.cap = 20});
    const SolveReport reduced = brute_force(pre.reduced, {.cap = 20});
    bool ok = full.status == SolveStatus::kOptimal &&
              reduced.status == SolveStatus::kOptimal;
    if (ok) {
      ok = *full.energy_num == pre.constant_num + *reduced.energy_num;
      const auto merged = merge_preprocessed(pre, reduced.spins, inst.n());
      ok = ok && inst.energy_num(merged) == *full.energy_num;
    }
    if (!ok) ++bad;
  }
  return {bad == 0, "100 instances, " + std::to_string(bad) + " mismatches"};
}

}  // namespace

int main() {
  criterion(1, "exact solvers agree on generated families",
            check_exact_agreement);
  criterion(2, "maxcut and qubo transforms preserve optima", check_transforms);
  criterion(3, "nonnegative zero-field instances cut every coupler",
            check_nonnegative_bound);
  criterion(4, "subset heuristic reaches the exact optimum",
            check_heuristic_optimality);
  criterion(5, "heuristic best-energy traces never increase",
            check_trace_monotonicity);
  criterion(6, "chimera node and edge counts match closed forms",
            check_structure_counts);
  criterion(7, "t99 pinned values and strict monotonicity", check_t99);
  criterion(8, "fixed seeds reproduce files, energies, and summaries",
            check_reproducibility);
  criterion(9, "clique embedding validates and round-trips through solve",
            check_embedding_roundtrip);
  criterion(10, "field-domination preprocessing preserves the optimum",
            check_preprocessing);

  std::printf("acceptance: %d/10 criteria passed\n", 10 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
