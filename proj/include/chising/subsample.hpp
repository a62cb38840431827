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

#ifndef CHISING_SUBSAMPLE_HPP_
#define CHISING_SUBSAMPLE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "chising/chimera.hpp"
#include "chising/exact.hpp"
#include "chising/ising.hpp"
#include "chising/rng.hpp"

namespace chising {

//! Low-treewidth induced subgraph of a Chimera C_k. H(w, 0, i, j) keeps
//! every vertical (side 0) qubit and drops the horizontal (side 1) qubits
//! of all cells in columns congruent to i mod (w+1), except the cells in
//! row j, whose horizontal qubits survive and stitch the w-column strips
//! together. The last column is cut like any other when its index matches
//! the residue; its horizontals couple leftward, and freezing them keeps
//! every strip at most w columns wide. Orientation 1 applies the same
//! pattern to the transposed grid (rows and columns swap, sides flip).
struct SubsetSpec {
  int w = 3;            // strip width; subproblem boundary stays <= 4w+8
  int orientation = 0;  // 0 = column strips, 1 = row strips (transpose)
  int i = 0;            // cut column residue, 0..w
  int j = 0;            // row whose cut cells stay intact, 0..k-1

  friend bool operator==(const SubsetSpec&, const SubsetSpec&) = default;
};

//! Sorted ids of the qubits kept by the subset (working qubits only).
std::vector<std::uint32_t> subset_nodes(const ChimeraGraph& g,
                                        const SubsetSpec& spec);

//! Introduction order realizing the low width for this subset: strips are
//! swept column-block by column-block (row-major inside a block), and cut
//! columns are crossed via their two surviving chain halves before the
//! stitching row-j cell.
std::vector<std::uint32_t> subset_sweep_order(const ChimeraGraph& g,
                                              const SubsetSpec& spec);

//! One round of subsets whose union covers all qubits: for random x, y, z,
//! the specs H(w, x, (y+t) mod (w+1), z) for t = 0..w, followed by the same
//! cut sequence at orientation 1-x. 2(w+1) subsets per round.
std::vector<SubsetSpec> outer_collection(int k, int w, PortableRng& rng);

enum class RestartPolicy {
  kPerturbBest,  // restart from best with a random fraction of cells redrawn
  kFresh,        // restart from a uniformly random assignment
};

struct HeuristicConfig {
  int w = 3;
  std::uint64_t seed = 4711;
  double time_limit_s = 30.0;
  RestartPolicy restart = RestartPolicy::kPerturbBest;
  double perturb_fraction = 0.20;  // fraction of cells redrawn per restart
  int width_cap = 20;
  std::optional<std::int64_t> target_num;  // stop early at this energy
  std::optional<int> max_passes;           // stop after this many outer passes
};

//! Large-neighborhood search: start from a random assignment and run outer
//! passes until the budget expires. Each pass draws a fresh covering
//! collection of low-treewidth subsets and re-optimizes over them exactly,
//! one conditional minimization at a time. Between passes the next start is
//! either the previous pass's result with a random fraction of cells redrawn
//! (default) or a fresh random assignment. Requires a Chimera layout on the
//! instance. Returns the best assignment seen with a per-pass trace.
SolveReport run_heuristic(const IsingInstance& inst,
                          const HeuristicConfig& cfg = {});

//! One subset re-optimization step on a working assignment. Returns the
//! new energy numerator, or nullopt (spins untouched) when the deadline in
//! dp_opt expired mid-solve. Exposed for tests.
std::optional<std::int64_t> improve_on_subset(const IsingInstance& inst,
                                              const ChimeraGraph& g,
                                              const SubsetSpec& spec,
                                              std::vector<std::int8_t>& spins,
                                              const DpOptions& dp_opt);

}  // namespace chising

#endif  // CHISING_SUBSAMPLE_HPP_
