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

#ifndef CHISING_EXACT_HPP_
#define CHISING_EXACT_HPP_

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chising/ising.hpp"

namespace chising {

enum class SolveStatus {
  kOptimal,    // proven minimum (for the solved subproblem)
  kHeuristic,  // best found, no optimality proof
  kCapped,     // refused: instance exceeds the solver's size/width cap
  kError,      // solver failed (bad input, internal limit)
};

const char* to_string(SolveStatus s);

//! One heuristic progress sample: energy after a pass and best so far.
struct TracePoint {
  int pass = 0;
  double elapsed_ms = 0.0;
  std::int64_t energy_num = 0;
  std::int64_t best_num = 0;
};

//! Uniform result record for every solver in this library.
struct SolveReport {
  std::string solver;
  SolveStatus status = SolveStatus::kError;
  std::optional<std::int64_t> energy_num;
  int gamma = 0;
  std::vector<std::int8_t> spins;  // empty when no assignment was produced
  std::optional<std::int64_t> lower_bound_num;
  double elapsed_ms = 0.0;
  std::string message;
  std::vector<TracePoint> trace;
  std::optional<std::uint64_t> seed;

  double energy() const;
};

//! Exhaustive minimization over the material spins (nonzero field or
//! positive degree); immaterial spins are reported as +1. Gray-code order,
//! O(1) energy update per step.
struct BruteForceOptions {
  int cap = 24;  // refuse instances with more material spins than this
};

SolveReport brute_force(const IsingInstance& inst,
                        const BruteForceOptions& opt = {});

//! A subproblem: minimize over a node subset with the complement's spins
//! held fixed. Cross couplings fold into fields, internal energy of the
//! fixed part becomes a constant.
struct ConditionalProblem {
  IsingInstance sub;                       // re-indexed over free nodes
  std::vector<std::uint32_t> sub_to_orig;  // size sub.n()
  std::int64_t constant_num = 0;
};

ConditionalProblem make_conditional(const IsingInstance& inst,
                                    std::span<const std::uint32_t> free_nodes,
                                    std::span<const std::int8_t> fixed_spins);

//! One step of a linear elimination order: introduce `node` into boundary
//! slot `slot`, then drop the listed nodes (all of whose neighbors have been
//! introduced) from their slots. boundary_after is the number of live slots
//! after the drops; width of the decomposition = max over steps.
struct SweepStep {
  std::uint32_t node = 0;
  int slot = 0;
  std::vector<std::uint32_t> drop_nodes;
  std::vector<int> drop_slots;
  int boundary_after = 0;
  bool self_drop = false;  // node dropped in its own step (degree-0 tail)
};

struct SweepDecomposition {
  std::vector<SweepStep> steps;
  int width = 0;  // max boundary_after over steps
  std::vector<std::uint32_t> order;  // introduction order, = steps[i].node
};

//! Builds the elimination schedule for a given introduction order: each
//! node takes the lowest free slot, and a node is dropped as soon as all
//! its neighbors (within the order) have been introduced.
SweepDecomposition build_sweep_with_order(
    const IsingInstance& inst, std::span<const std::uint32_t> order);

//! Default order: ascending node id over material nodes. For instances
//! carrying a Chimera layout the id order is the column-major cell sweep
//! that keeps the boundary at 4k+4 on a full C_k.
SweepDecomposition build_sweep(const IsingInstance& inst);

//! Boundary dynamic programming over a sweep decomposition. Exact; memory
//! 2^width states plus one bit per state per drop for solution recovery.
struct DpOptions {
  int width_cap = 20;
  std::span<const std::int8_t> tie_pref = {};  // preferred spin per node on ties
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

SolveReport solve_dp(const IsingInstance& inst, const SweepDecomposition& dec,
                     const DpOptions& opt = {});

//! build_sweep + solve_dp with the default order.
SolveReport solve_exact(const IsingInstance& inst, const DpOptions& opt = {});

}  // namespace chising

#endif  // CHISING_EXACT_HPP_
