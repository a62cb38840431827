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

#ifndef CHISING_ISING_HPP_
#define CHISING_ISING_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chising/chimera.hpp"

namespace chising {

//! Undirected weighted edge; weight stored as an integer numerator. The
//! denominator (granularity) lives on the owning instance.
struct WeightedEdge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  std::int64_t num = 0;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

//! Optional metadata carried alongside an instance (generator family,
//! Chimera size, RNG seed). Purely informational; solvers ignore it.
struct InstanceMeta {
  std::string family;
  int k = 0;
  std::uint64_t seed = 0;
  std::string name;

  bool empty() const { return family.empty() && k == 0 && seed == 0 && name.empty(); }
};

//! Ising energy minimization instance
//!
//!     H(s) = sum_{(i,j) in E} J_ij s_i s_j + sum_i h_i s_i,   s in {-1,+1}^n
//!
//! All weights are integer numerators. gamma > 0 means weights represent
//! num/gamma and must satisfy |num| <= gamma; gamma == 0 marks a raw integer
//! instance with no granularity constraint (used for logical problems whose
//! couplings are plain integers).
//!
//! n is the size of the id space. Nodes with no field and no incident edge
//! are immaterial: every solver may assign them +1 without loss.
class IsingInstance {
 public:
  IsingInstance() = default;
  IsingInstance(std::uint32_t n, int gamma) : n_(n), gamma_(gamma),
                                              fields_(n, 0) {}

  std::uint32_t n() const { return n_; }
  int gamma() const { return gamma_; }

  const std::vector<WeightedEdge>& edges() const { return edges_; }
  const std::vector<std::int64_t>& fields() const { return fields_; }

  std::int64_t field(std::uint32_t i) const { return fields_.at(i); }
  void set_field(std::uint32_t i, std::int64_t num);

  //! Adds an edge (u < v enforced by swapping). Duplicate edges are
  //! rejected; zero-weight edges are kept only if keep_zero is set.
  void add_edge(std::uint32_t u, std::uint32_t v, std::int64_t num,
                bool keep_zero = false);

  //! Sorts edges lexicographically and rebuilds the adjacency index.
  void finalize();
  bool finalized() const { return csr_valid_; }

  //! H(s) numerator for s in {-1,+1}^n (size must match n).
  std::int64_t energy_num(std::span<const std::int8_t> spins) const;
  double energy(std::span<const std::int8_t> spins) const;

  //! Nodes that influence the energy: nonzero field or positive degree.
  std::vector<std::uint32_t> material_nodes() const;

  std::uint32_t degree(std::uint32_t i) const;

  //! Incident (neighbor, weight numerator) pairs; requires finalize().
  std::span<const std::pair<std::uint32_t, std::int64_t>> incident(
      std::uint32_t i) const;

  //! Sum over all nodes of |h_i| plus incident |J_ij|, an upper bound on
  //! |H|; used for overflow and domination checks.
  std::int64_t weight_radius(std::uint32_t i) const;

  //! Chimera layout this instance was generated on, including its fault
  //! set when known; absent for non-Chimera instances.
  const ChimeraGraph* layout() const { return layout_.get(); }
  void attach_layout(std::shared_ptr<const ChimeraGraph> g) { layout_ = std::move(g); }
  std::shared_ptr<const ChimeraGraph> layout_ptr() const { return layout_; }

  InstanceMeta meta;

 private:
  std::uint32_t n_ = 0;
  int gamma_ = 0;
  std::vector<WeightedEdge> edges_;
  std::vector<std::int64_t> fields_;
  std::shared_ptr<const ChimeraGraph> layout_;

  bool csr_valid_ = false;
  std::vector<std::uint32_t> csr_offsets_;
  std::vector<std::pair<std::uint32_t, std::int64_t>> csr_;
};

//! Convenience: value of the instance's denominator as double (1.0 when
//! gamma == 0, i.e. raw integer weights).
double gamma_denominator(const IsingInstance& inst);

}  // namespace chising

#endif  // CHISING_ISING_HPP_
