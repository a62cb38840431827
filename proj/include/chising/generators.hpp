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

#ifndef CHISING_GENERATORS_HPP_
#define CHISING_GENERATORS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "chising/chimera.hpp"
#include "chising/embedding.hpp"
#include "chising/ising.hpp"
#include "chising/rng.hpp"

namespace chising {

//! Hardware fault model for generated Chimera instances: a fixed fault list
//! plus optionally a few extra qubits knocked out at random (drawn before
//! any weights so weight streams stay aligned across fault counts).
struct FaultPolicy {
  ChimeraFaults fixed;
  int extra_random_nodes = 0;
};

//! Random +-1 weights (numerators +-10, gamma = 10) on every working
//! coupler and every working qubit's field, drawn with equal probability.
IsingInstance gen_mgw(int k, const FaultPolicy& faults, std::uint64_t seed);

//! Couplings and fields drawn uniformly from the 21-member granularity set
//! {-1, -0.9, ..., 1} (numerators uniform on [-10, 10], zero allowed).
IsingInstance gen_rfr(int k, const FaultPolicy& faults, std::uint64_t seed);

//! Intra-cell couplings uniform on numerators [-5, 5], inter-cell couplings
//! uniform on [-10, 10], no fields.
IsingInstance gen_selby(int k, const FaultPolicy& faults, std::uint64_t seed);

//! Independent-set style instances: couplings 0 or 0.1 with equal
//! probability (numerators 0 or 1), field h_i = (sum of incident coupling
//! values) - 0.2, i.e. numerator (sum of incident numerators) - 2.
IsingInstance gen_mis(int k, const FaultPolicy& faults, std::uint64_t seed);

//! Dense logical problems on K_{4k}: each of the 4k*(4k-1)/2 logical edges
//! is present with probability p and weight +-1; each logical field is an
//! integer uniform on [-(d_a - 1), d_a - 1] where d_a is the node's degree
//! (nodes too weak to survive field-domination preprocessing cannot occur;
//! a draw containing an isolated node is rejected because its field range
//! is empty). The logical problem maps through the clique
//! embedding with chain couplers at -10; a draw is rejected when the
//! physical instance leaves the representable weight range, i.e. some field
//! half exceeds |10|. The generator retries with fresh draws from the same
//! stream up to max_draws times; nullopt means every draw was rejected,
//! which is the expected outcome once p climbs well past 25.
struct K64Result {
  EmbeddedInstance embedded;
  IsingInstance logical;  // gamma = 0, raw integers
  int draws_used = 1;
};

std::optional<K64Result> gen_k64_ising(int k, int p_percent,
                                       std::uint64_t seed, int max_draws = 64);

//! MaxCut flavor: every present logical edge +1, all fields zero. The
//! objective over logical spins is sum_{ab in E} s_a s_b, so the maximum
//! cut size is (|E| - optimum) / 2. That recovery is only guaranteed when
//! every chain provably dominates its crossings, which needs every logical
//! degree <= 19 under -10 chains; denser draws are rejected (the expected
//! outcome once p climbs well past 20).
std::optional<K64Result> gen_k64_maxcut(int k, int p_percent,
                                        std::uint64_t seed, int max_draws = 64);

//! Cut size recovered from logical spins: (|E| - energy(spins)) / 2 edges.
std::int64_t k64_cut_size(const IsingInstance& logical,
                          std::span<const std::int8_t> spins);

//! Rebins arbitrary weights onto the gamma = 10 grid: scales so the largest
//! magnitude maps to 1, then snaps every weight to the nearest member of
//! the granularity set. Fields are rebinned with the same scale.
IsingInstance rebin_instance(const IsingInstance& src, int gamma = 10);

//! Dispatch by family name ("mgw", "rfr", "selby", "mis"). Unknown names
//! throw. k64 and rebinned families have their own entry points above.
IsingInstance gen_family(const std::string& family, int k,
                         const FaultPolicy& faults, std::uint64_t seed);

}  // namespace chising

#endif  // CHISING_GENERATORS_HPP_
