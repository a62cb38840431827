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

#ifndef CHISING_CHIMERA_HPP_
#define CHISING_CHIMERA_HPP_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace chising {

//! Position of a qubit inside a Chimera grid C_k: cell (row, col), bipartite
//! side within the K_{4,4} cell, and unit index 0..3 within the side.
//!
//! Side 0 ("left"/vertical) nodes couple to the same unit of the cell below;
//! side 1 ("right"/horizontal) nodes couple to the same unit of the cell to
//! the right. Boundary cells simply lack the outgoing coupler.
struct ChimeraCoord {
  std::uint16_t row = 0;
  std::uint16_t col = 0;
  std::uint8_t side = 0;  // 0 = vertical partner, 1 = horizontal partner
  std::uint8_t unit = 0;  // 0..3

  friend bool operator==(const ChimeraCoord&, const ChimeraCoord&) = default;
  friend auto operator<=>(const ChimeraCoord&, const ChimeraCoord&) = default;
};

//! Declared-broken hardware: qubits and couplers to exclude from the graph.
struct ChimeraFaults {
  std::vector<ChimeraCoord> nodes;
  std::vector<std::pair<ChimeraCoord, ChimeraCoord>> couplers;

  bool empty() const { return nodes.empty() && couplers.empty(); }
};

//! Chimera graph C_k: a k x k grid of K_{4,4} cells, optionally extended by a
//! field node adjacent to every working qubit (used by the MaxCut view of an
//! Ising model with linear terms).
//!
//! Node ids are the canonical linear indices
//!
//!     id(row, col, side, unit) = ((row * k) + col) * 8 + side * 4 + unit
//!
//! and the field node, when present, takes the highest id (8k^2). Faulty
//! qubits keep their id slot but have no incident edges and reject queries,
//! so ids stay stable across fault sets.
class ChimeraGraph {
 public:
  static constexpr std::uint32_t npos = 0xffffffffu;

  explicit ChimeraGraph(int k, bool with_field = false,
                        const ChimeraFaults& faults = {});

  int k() const { return k_; }
  bool with_field() const { return with_field_; }

  //! Number of id slots: 8k^2 qubit slots plus the field slot if present.
  std::uint32_t id_space() const { return qubit_slots_ + (with_field_ ? 1 : 0); }

  //! Number of working nodes (non-faulty qubits, plus the field node).
  std::uint32_t node_count() const { return working_count_; }
  std::size_t edge_count() const { return edges_.size(); }

  std::uint32_t field_node() const;  // throws if the graph has no field node

  bool is_working(std::uint32_t id) const {
    return id < id_space() && working_[id];
  }

  //! Validates the coordinate (throws with the offending values) and returns
  //! its linear id. Faulty coordinates are still addressable here.
  std::uint32_t linear_index(const ChimeraCoord& c) const;

  ChimeraCoord coord_of(std::uint32_t id) const;  // qubit ids only

  //! Sorted adjacency of a working node. Faulty or out-of-range ids throw.
  std::span<const std::uint32_t> neighbors(std::uint32_t id) const;

  std::uint32_t degree(std::uint32_t id) const {
    return static_cast<std::uint32_t>(neighbors(id).size());
  }

  //! All edges as (min id, max id) pairs in lexicographic order.
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges() const {
    return edges_;
  }

  //! True when both endpoints are qubits of the same cell.
  bool is_intra_cell_edge(std::uint32_t u, std::uint32_t v) const;

  const ChimeraFaults& faults() const { return faults_; }

  //! Proper 2-coloring of the qubit subgraph: (row + col + side) mod 2.
  //! Every Chimera coupler crosses it; the field node is not colored.
  int bipartition_class(std::uint32_t id) const;

 private:
  int k_;
  bool with_field_;
  std::uint32_t qubit_slots_;
  std::uint32_t working_count_ = 0;
  std::vector<std::uint8_t> working_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
  std::vector<std::uint32_t> adj_offsets_;
  std::vector<std::uint32_t> adj_;
  ChimeraFaults faults_;  // normalized: deduplicated, validated
};

//! Nearest member of the granularity set
//! Gamma = {-1, -1+1/gamma, ..., 0, ..., 1-1/gamma, 1} (2*gamma+1 values).
//! Inputs outside [-1, 1] clamp to the boundary; exact midpoints round away
//! from zero. Returned as the integer numerator over gamma.
std::int64_t snap_to_granularity_num(double x, int gamma);

//! Same snap, returned as the value in Gamma.
double snap_to_granularity(double x, int gamma);

//! All members of Gamma in ascending order.
std::vector<double> granularity_members(int gamma);

}  // namespace chising

#endif  // CHISING_CHIMERA_HPP_
