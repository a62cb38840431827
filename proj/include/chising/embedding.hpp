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

#ifndef CHISING_EMBEDDING_HPP_
#define CHISING_EMBEDDING_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "chising/chimera.hpp"
#include "chising/ising.hpp"

namespace chising {

//! Minor embedding of the complete graph K_{4k} into Chimera C_k. Logical
//! node a = 4g + u (group g = a / 4, unit u = a % 4) maps to the chain
//!
//!     left-u of cells (0, g) .. (g, g)    [joined by vertical couplers]
//!     right-u of cells (g, g) .. (g, k-1) [joined by horizontal couplers]
//!
//! a path of k+1 qubits bending at the diagonal cell (g, g). Chains a and b
//! (a < b) meet exactly once, at the intra-cell coupler
//! (left-u_b, right-u_a) of cell (g_a, g_b).
struct CliqueEmbedding {
  int k = 0;
  std::vector<std::vector<std::uint32_t>> chains;  // chains[a] in path order

  std::uint32_t logical_nodes() const {
    return static_cast<std::uint32_t>(chains.size());
  }
};

CliqueEmbedding build_clique_embedding(int k);

//! Id of the physical coupler qubit pair realizing logical edge (a, b).
std::pair<std::uint32_t, std::uint32_t> crossing_coupler(
    const CliqueEmbedding& emb, std::uint32_t a, std::uint32_t b);

//! Checks the embedding against a (possibly faulty) graph: chains must be
//! pairwise disjoint, each chain connected using working couplers, and one
//! working crossing coupler must exist per logical pair. Throws listing
//! every violation.
void validate_embedding(const CliqueEmbedding& emb, const ChimeraGraph& g);

//! Physical instance realizing a logical problem on K_{4k}: logical
//! couplings sit on crossing couplers, each logical field splits onto the
//! two chain ends (head takes h - h/2, tail takes h/2, truncating division,
//! so both halves keep h's sign), and every intra-chain coupler gets the
//! strong ferromagnetic weight -chain_num. The physical instance keeps
//! gamma = 10 with chain_num = 10 (weight -1.0, the strongest value
//! available). Field halves may leave [-10, 10]; callers that need
//! representable instances must check and reject (the generators do).
struct EmbeddedInstance {
  IsingInstance physical;
  CliqueEmbedding emb;
  std::int64_t chain_num = 10;
  //! Energy the chains contribute when all are intact:
  //! -chain_num * (#chains) * k. Logical energy = physical - this offset
  //! once chain weights are scaled consistently (tests pin the exact rule).
  std::int64_t chain_offset_num = 0;
};

EmbeddedInstance embed_instance(const IsingInstance& logical, int k);

//! Majority vote per chain; ties (impossible for odd chains) take the spin
//! of the lowest-id qubit. Input spins are physical, output logical.
std::vector<std::int8_t> decode_chains(const CliqueEmbedding& emb,
                                       std::span<const std::int8_t> physical);

//! Inverse of decode for intact chains: every chain qubit copies the
//! logical spin. Used to compare physical and logical energies.
std::vector<std::int8_t> extend_to_chains(const CliqueEmbedding& emb,
                                          std::uint32_t physical_n,
                                          std::span<const std::int8_t> logical);

}  // namespace chising

#endif  // CHISING_EMBEDDING_HPP_
