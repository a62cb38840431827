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

#ifndef CHISING_BENCH_HPP_
#define CHISING_BENCH_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chising/exact.hpp"
#include "chising/ising.hpp"
#include "chising/transforms.hpp"

namespace chising {

//! Time to reach 99% success probability by repeating a run of duration t
//! with per-run success probability p:
//!
//!     t99 = t * ln(0.01) / ln(1 - p)
//!
//! p <= 0 gives infinity, p >= 1 gives t (one run always suffices).
double t99_microseconds(double t_run_us, double p_success);

//! Fraction of reported energies that reach the reference optimum.
double success_fraction(const std::vector<std::int64_t>& energies,
                        std::int64_t optimum_num);

//! Relative gap of an achieved energy E to the best known B, in percent:
//! 100 * (E - B) / |B|. When B == 0 the absolute gap is reported instead
//! and `relative` is false.
struct GapResult {
  double value = 0.0;
  bool relative = true;
};

GapResult gap_percent(std::int64_t achieved_num, std::int64_t best_num);

//! One benchmark task: a named instance solved by a named solver at a seed.
struct BenchTask {
  std::string instance_name;
  std::string solver_name;
  std::uint64_t seed = 0;
};

//! Outcome record, one per task.
struct BenchRecord {
  BenchTask task;
  SolveStatus status = SolveStatus::kError;
  std::optional<std::int64_t> energy_num;
  int gamma = 0;
  double elapsed_ms = 0.0;
  std::string message;  // set for capped / error outcomes
};

//! A solver under benchmark: callable taking (instance, seed).
struct SolverSpec {
  std::string name;
  std::function<SolveReport(const IsingInstance&, std::uint64_t)> run;
};

struct BatchOptions {
  int workers = 1;
  std::vector<std::uint64_t> seeds = {0};
};

//! Runs every (instance, solver, seed) task on a small thread pool. Tasks
//! that throw or return capped/error are quarantined into records with the
//! failure message; the batch never aborts on a single bad task.
std::vector<BenchRecord> run_batch(
    const std::vector<std::pair<std::string, const IsingInstance*>>& instances,
    const std::vector<SolverSpec>& solvers, const BatchOptions& opt = {});

//! Per-family aggregation of a batch. best_by_solver holds, per solver (in
//! the order given), the count of tasks whose energy matched the family's
//! best found. Gap columns are computed for the last solver listed against
//! the best energy found per instance by any solver (or the known optimum
//! when provided).
struct FamilySummary {
  std::string family;
  int instances = 0;
  std::uint32_t nodes_min = 0, nodes_max = 0;
  double nodes_avg = 0.0;
  std::size_t edges_min = 0, edges_max = 0;
  double edges_avg = 0.0;
  int opt_known = 0;  // instances with a proven optimum in the batch
  std::vector<std::pair<std::string, int>> best_by_solver;
  double gap_max = 0.0;
  double gap_avg = 0.0;
};

std::vector<FamilySummary> summarize(
    const std::vector<std::pair<std::string, const IsingInstance*>>& instances,
    const std::vector<BenchRecord>& records,
    const std::vector<std::string>& solver_order);

std::string summary_to_csv(const std::vector<FamilySummary>& rows);

//! MaxCut transform sizes (non-isolated nodes, nonzero edges) for reporting.
struct TransformCounts {
  std::uint32_t nodes = 0;
  std::size_t edges = 0;
};

TransformCounts transform_counts(const IsingInstance& inst);

}  // namespace chising

#endif  // CHISING_BENCH_HPP_
