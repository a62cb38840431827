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

#ifndef CHISING_TRANSFORMS_HPP_
#define CHISING_TRANSFORMS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "chising/ising.hpp"

namespace chising {

//! Weighted MaxCut instance produced from an Ising model. Node ids 0..n-1
//! are the Ising spins; when any field is nonzero an extra field node v is
//! appended and h_i becomes the weight of edge (i, v). Zero-weight edges
//! and zero fields are omitted.
struct MaxCutInstance {
  std::uint32_t node_count = 0;
  std::vector<WeightedEdge> edges;
  std::optional<std::uint32_t> field_node;
  int gamma = 0;
  std::int64_t total_weight_num = 0;  // sum of all edge weights

  std::size_t edge_count() const { return edges.size(); }

  //! Nodes with at least one incident edge.
  std::uint32_t non_isolated_count() const;
};

MaxCutInstance ising_to_maxcut(const IsingInstance& inst);

//! Cut weight numerator for a side assignment x in {0,1}^node_count.
std::int64_t cut_value_num(const MaxCutInstance& mc,
                           std::span<const std::uint8_t> sides);

//! Ising energy of a cut via H = total_weight - 2 * cut.
std::int64_t ising_energy_from_cut_num(const MaxCutInstance& mc,
                                       std::int64_t cut_num);

//! Spins from a cut: s_i = +1 iff i lies on the same side as the anchor
//! (the field node when present, else node 0). Output has the Ising n.
std::vector<std::int8_t> maxcut_solution_to_spins(
    const MaxCutInstance& mc, std::span<const std::uint8_t> sides,
    std::uint32_t ising_n);

//! Side assignment from spins (anchor side 0), inverse of the above.
std::vector<std::uint8_t> cut_from_spins(const MaxCutInstance& mc,
                                         std::span<const std::int8_t> spins);

//! QUBO maximization instance:
//!
//!     f(x) = sum_{i<j} q_ij x_i x_j + sum_i q_i x_i,   x in {0,1}^n
//!
//! with integer coefficients; quadratic terms stored as (i, j, q) with i<j.
struct QuboInstance {
  std::uint32_t n = 0;
  std::vector<WeightedEdge> quadratic;  // num = q_ij
  std::vector<std::int64_t> linear;     // q_i

  std::int64_t value(std::span<const std::uint8_t> x) const;
};

//! Ising counterpart of a QUBO maximization problem under x = (s+1)/2:
//!
//!     max f(x)  ==  min H(s)   with   f(x*) = (constant_num - H(s*)) / 4.
//!
//! The produced instance has gamma == 0 (raw integers) and the division is
//! always exact.
struct QuboToIsingResult {
  IsingInstance inst;
  std::int64_t constant_num = 0;
};

QuboToIsingResult qubo_to_ising(const QuboInstance& q);

//! QUBO optimum and argmax recovered from an Ising optimum.
std::int64_t qubo_value_from_ising_num(const QuboToIsingResult& r,
                                       std::int64_t ising_energy_num);
std::vector<std::uint8_t> qubo_solution_from_spins(
    std::span<const std::int8_t> spins);

//! Field-domination preprocessing. Repeatedly fixes any spin whose field
//! magnitude is at least its total incident coupling weight,
//!
//!     |h_i| >= sum_j |J_ij|  =>  s_i = -sign(h_i)
//!
//! (spins with h_i == 0 and no remaining neighbors are fixed to +1), folds
//! the fixed spin's couplings into its neighbors' fields, and iterates to a
//! fixpoint. The reduced instance is re-indexed over the surviving spins.
struct PreprocessResult {
  IsingInstance reduced;
  std::vector<std::uint32_t> reduced_to_orig;        // size reduced.n()
  std::vector<std::pair<std::uint32_t, std::int8_t>> fixed;  // (orig id, spin)
  std::int64_t constant_num = 0;  // energy contributed by fixed spins
};

PreprocessResult preprocess_dominated_fields(const IsingInstance& inst);

//! Full-length solution from a reduced one: fixed spins take their fixed
//! values, surviving spins come from reduced_spins.
std::vector<std::int8_t> merge_preprocessed(
    const PreprocessResult& pre, std::span<const std::int8_t> reduced_spins,
    std::uint32_t orig_n);

}  // namespace chising

#endif  // CHISING_TRANSFORMS_HPP_
