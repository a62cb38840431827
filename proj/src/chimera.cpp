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

#include "chising/chimera.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace chising {

namespace {

std::string coord_str(const ChimeraCoord& c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + "," +
         std::to_string(c.side) + "," + std::to_string(c.unit) + ")";
}

void check_coord(const ChimeraCoord& c, int k) {
  if (c.row >= k || c.col >= k || c.side > 1 || c.unit > 3)
    throw std::invalid_argument("coordinate out of range for C_" +
                                std::to_string(k) + ": " + coord_str(c));
}

// True when the two coordinates are joined by a coupler in fault-free C_k.
bool adjacent_in_fabric(const ChimeraCoord& a, const ChimeraCoord& b) {
  if (a.row == b.row && a.col == b.col) return a.side != b.side;
  if (a.side != b.side || a.unit != b.unit) return false;
  if (a.side == 0)
    return a.col == b.col && (a.row + 1 == b.row || b.row + 1 == a.row);
  return a.row == b.row && (a.col + 1 == b.col || b.col + 1 == a.col);
}

}  // namespace

ChimeraGraph::ChimeraGraph(int k, bool with_field, const ChimeraFaults& faults)
    : k_(k), with_field_(with_field) {
  if (k < 1 || k > 256) throw std::invalid_argument("k must be in 1..256");
  qubit_slots_ = static_cast<std::uint32_t>(8) * k * k;
  working_.assign(id_space(), 1);

  std::set<std::uint32_t> dead;
  for (const auto& c : faults.nodes) {
    check_coord(c, k);
    dead.insert(linear_index(c));
  }
  std::set<std::pair<std::uint32_t, std::uint32_t>> dead_couplers;
  for (const auto& [a, b] : faults.couplers) {
    check_coord(a, k);
    check_coord(b, k);
    if (!adjacent_in_fabric(a, b))
      throw std::invalid_argument("coupler fault joins non-adjacent qubits " +
                                  coord_str(a) + " " + coord_str(b));
    auto ia = linear_index(a), ib = linear_index(b);
    dead_couplers.insert({std::min(ia, ib), std::max(ia, ib)});
  }
  for (auto id : dead) working_[id] = 0;

  faults_.nodes.reserve(dead.size());
  for (auto id : dead) faults_.nodes.push_back(coord_of(id));
  faults_.couplers.reserve(dead_couplers.size());
  for (const auto& [ia, ib] : dead_couplers)
    faults_.couplers.emplace_back(coord_of(ia), coord_of(ib));

  auto try_edge = [&](std::uint32_t u, std::uint32_t v) {
    if (!working_[u] || !working_[v]) return;
    auto key = std::make_pair(std::min(u, v), std::max(u, v));
    if (dead_couplers.count(key)) return;
    edges_.push_back(key);
  };

  for (std::uint16_t r = 0; r < k; ++r)
    for (std::uint16_t c = 0; c < k; ++c) {
      for (std::uint8_t a = 0; a < 4; ++a)
        for (std::uint8_t b = 0; b < 4; ++b)
          try_edge(linear_index({r, c, 0, a}), linear_index({r, c, 1, b}));
      if (r + 1 < k)
        for (std::uint8_t u = 0; u < 4; ++u)
          try_edge(linear_index({r, c, 0, u}),
                   linear_index({static_cast<std::uint16_t>(r + 1), c, 0, u}));
      if (c + 1 < k)
        for (std::uint8_t u = 0; u < 4; ++u)
          try_edge(linear_index({r, c, 1, u}),
                   linear_index({r, static_cast<std::uint16_t>(c + 1), 1, u}));
    }
  if (with_field_) {
    std::uint32_t f = qubit_slots_;
    for (std::uint32_t q = 0; q < qubit_slots_; ++q)
      if (working_[q]) edges_.emplace_back(q, f);
  }
  std::sort(edges_.begin(), edges_.end());

  for (std::uint32_t id = 0; id < id_space(); ++id)
    working_count_ += working_[id];

  adj_offsets_.assign(id_space() + 1, 0);
  for (const auto& [u, v] : edges_) {
    ++adj_offsets_[u + 1];
    ++adj_offsets_[v + 1];
  }
  for (std::size_t i = 1; i < adj_offsets_.size(); ++i)
    adj_offsets_[i] += adj_offsets_[i - 1];
  adj_.resize(2 * edges_.size());
  std::vector<std::uint32_t> fill(adj_offsets_.begin(),
                                  adj_offsets_.end() - 1);
  for (const auto& [u, v] : edges_) {
    adj_[fill[u]++] = v;
    adj_[fill[v]++] = u;
  }
  for (std::uint32_t id = 0; id < id_space(); ++id)
    std::sort(adj_.begin() + adj_offsets_[id], adj_.begin() + adj_offsets_[id + 1]);
}

std::uint32_t ChimeraGraph::field_node() const {
  if (!with_field_) throw std::logic_error("graph has no field node");
  return qubit_slots_;
}

std::uint32_t ChimeraGraph::linear_index(const ChimeraCoord& c) const {
  check_coord(c, k_);
  return ((static_cast<std::uint32_t>(c.row) * k_) + c.col) * 8 +
         c.side * 4 + c.unit;
}

ChimeraCoord ChimeraGraph::coord_of(std::uint32_t id) const {
  if (id >= qubit_slots_)
    throw std::out_of_range("id " + std::to_string(id) + " is not a qubit");
  ChimeraCoord c;
  c.unit = id % 4;
  c.side = (id / 4) % 2;
  std::uint32_t cell = id / 8;
  c.col = static_cast<std::uint16_t>(cell % k_);
  c.row = static_cast<std::uint16_t>(cell / k_);
  return c;
}

std::span<const std::uint32_t> ChimeraGraph::neighbors(std::uint32_t id) const {
  if (id >= id_space())
    throw std::out_of_range("node id " + std::to_string(id) + " out of range");
  if (!working_[id])
    throw std::invalid_argument("node " + std::to_string(id) + " is faulty");
  return {adj_.data() + adj_offsets_[id],
          adj_offsets_[id + 1] - adj_offsets_[id]};
}

bool ChimeraGraph::is_intra_cell_edge(std::uint32_t u, std::uint32_t v) const {
  if (u >= qubit_slots_ || v >= qubit_slots_) return false;
  return u / 8 == v / 8;
}

int ChimeraGraph::bipartition_class(std::uint32_t id) const {
  ChimeraCoord c = coord_of(id);
  return (c.row + c.col + c.side) % 2;
}

std::int64_t snap_to_granularity_num(double x, int gamma) {
  if (gamma < 1) throw std::invalid_argument("gamma must be >= 1");
  if (std::isnan(x)) throw std::invalid_argument("cannot snap NaN");
  std::int64_t num = std::llround(x * gamma);
  return std::clamp<std::int64_t>(num, -gamma, gamma);
}

double snap_to_granularity(double x, int gamma) {
  return static_cast<double>(snap_to_granularity_num(x, gamma)) / gamma;
}

std::vector<double> granularity_members(int gamma) {
  if (gamma < 1) throw std::invalid_argument("gamma must be >= 1");
  std::vector<double> out;
  out.reserve(2 * gamma + 1);
  for (int num = -gamma; num <= gamma; ++num)
    out.push_back(static_cast<double>(num) / gamma);
  return out;
}

}  // namespace chising
