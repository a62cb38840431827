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

#include "chising/ising.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace chising {

// Granularity bounds (|num| <= gamma) are enforced at the file boundary and
// by the generators, not here: transforms legitimately fold couplings into
// fields and push numerators past gamma.

void IsingInstance::set_field(std::uint32_t i, std::int64_t num) {
  fields_.at(i) = num;  // adjacency index unaffected
}

void IsingInstance::add_edge(std::uint32_t u, std::uint32_t v, std::int64_t num,
                             bool keep_zero) {
  if (u == v) throw std::invalid_argument("self loop at node " + std::to_string(u));
  if (u >= n_ || v >= n_)
    throw std::invalid_argument("edge (" + std::to_string(u) + "," +
                                std::to_string(v) + ") out of range");
  if (num == 0 && !keep_zero) return;
  if (u > v) std::swap(u, v);
  edges_.push_back({u, v, num});
  csr_valid_ = false;
}

void IsingInstance::finalize() {
  std::sort(edges_.begin(), edges_.end(),
            [](const WeightedEdge& a, const WeightedEdge& b) {
              return std::tie(a.u, a.v) < std::tie(b.u, b.v);
            });
  for (std::size_t i = 1; i < edges_.size(); ++i)
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
      throw std::invalid_argument("duplicate edge (" +
                                  std::to_string(edges_[i].u) + "," +
                                  std::to_string(edges_[i].v) + ")");
  csr_offsets_.assign(n_ + 1, 0);
  for (const auto& e : edges_) {
    ++csr_offsets_[e.u + 1];
    ++csr_offsets_[e.v + 1];
  }
  for (std::size_t i = 1; i < csr_offsets_.size(); ++i)
    csr_offsets_[i] += csr_offsets_[i - 1];
  csr_.resize(2 * edges_.size());
  std::vector<std::uint32_t> fill(csr_offsets_.begin(), csr_offsets_.end() - 1);
  for (const auto& e : edges_) {
    csr_[fill[e.u]++] = {e.v, e.num};
    csr_[fill[e.v]++] = {e.u, e.num};
  }
  for (std::uint32_t i = 0; i < n_; ++i)
    std::sort(csr_.begin() + csr_offsets_[i], csr_.begin() + csr_offsets_[i + 1]);
  csr_valid_ = true;
}

std::int64_t IsingInstance::energy_num(std::span<const std::int8_t> spins) const {
  if (spins.size() != n_)
    throw std::invalid_argument("spin vector has size " +
                                std::to_string(spins.size()) + ", expected " +
                                std::to_string(n_));
  for (std::uint32_t i = 0; i < n_; ++i)
    if (spins[i] != 1 && spins[i] != -1)
      throw std::invalid_argument("spin " + std::to_string(i) +
                                  " is not +-1");
  std::int64_t h = 0;
  for (const auto& e : edges_) h += e.num * spins[e.u] * spins[e.v];
  for (std::uint32_t i = 0; i < n_; ++i) h += fields_[i] * spins[i];
  return h;
}

double IsingInstance::energy(std::span<const std::int8_t> spins) const {
  return static_cast<double>(energy_num(spins)) / gamma_denominator(*this);
}

std::vector<std::uint32_t> IsingInstance::material_nodes() const {
  std::vector<std::uint8_t> mark(n_, 0);
  for (const auto& e : edges_) {
    mark[e.u] = 1;
    mark[e.v] = 1;
  }
  for (std::uint32_t i = 0; i < n_; ++i)
    if (fields_[i] != 0) mark[i] = 1;
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < n_; ++i)
    if (mark[i]) out.push_back(i);
  return out;
}

std::uint32_t IsingInstance::degree(std::uint32_t i) const {
  if (!csr_valid_) throw std::logic_error("instance not finalized");
  if (i >= n_) throw std::out_of_range("node out of range");
  return csr_offsets_[i + 1] - csr_offsets_[i];
}

std::span<const std::pair<std::uint32_t, std::int64_t>> IsingInstance::incident(
    std::uint32_t i) const {
  if (!csr_valid_) throw std::logic_error("instance not finalized");
  if (i >= n_) throw std::out_of_range("node out of range");
  return {csr_.data() + csr_offsets_[i], csr_offsets_[i + 1] - csr_offsets_[i]};
}

std::int64_t IsingInstance::weight_radius(std::uint32_t i) const {
  std::int64_t r = std::llabs(fields_.at(i));
  for (const auto& [j, num] : incident(i)) r += std::llabs(num);
  return r;
}

double gamma_denominator(const IsingInstance& inst) {
  return inst.gamma() > 0 ? static_cast<double>(inst.gamma()) : 1.0;
}

}  // namespace chising
