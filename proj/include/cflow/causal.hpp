// Copyright 2026 The cflow developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cflow/geometry.hpp"
#include "cflow/pathcover.hpp"

namespace cflow {

class CyclicOrderError : public CflowError {
 public:
  using CflowError::CflowError;
};

/// Digraph of one-segment influencing walks for a path cover: an arc x->y
/// means x -> f(x) is a cover arc and either y = f(x) or y ~ f(x), y != x.
/// x precedes y in the natural pre-order iff y is reachable from x here.
struct InfluenceDigraph {
  /// Out-neighbors per vertex; the cover arc f(x) first, remaining
  /// neighbors of f(x) ascending. Sources are exactly the vertices of O^c.
  std::vector<std::vector<VertexId>> arcs;

  std::size_t arc_count() const;
};

InfluenceDigraph influence_digraph(const Geometry& g, const PathCover& c);

/// A closed influencing walk certifying that the natural pre-order is not
/// antisymmetric (so the cover is not causal and the geometry has no flow).
struct ViciousCircuitWitness {
  std::vector<VertexId> circuit;  // closed walk in G, first == last
  /// The unique segment decomposition: each entry is a 2-vertex cover arc
  /// (x, f(x)) or a 3-vertex piece (x, f(x), y) with edge f(x)y uncovered.
  std::vector<std::vector<VertexId>> segments;
  /// Members of the strongly connected component the circuit was taken
  /// from, sorted ascending.
  std::vector<VertexId> scc;
};

/// Returns a witness iff the digraph has a directed cycle, i.e. iff the
/// cover has a vicious circuit. The witness expands a shortest cycle of a
/// nontrivial SCC back into a walk in G.
std::optional<ViciousCircuitWitness> detect_vicious_circuit(
    const InfluenceDigraph& d, const PathCover& c);

/// The natural pre-order of a causal path cover, stored as a chain
/// decomposition: per vertex and per cover path, the minimal position on
/// that path reachable in the influence digraph. Space O(n·k), query O(1).
class CausalOrder {
 public:
  static constexpr std::uint32_t kNoPosition =
      std::numeric_limits<std::uint32_t>::max();

  const std::vector<std::vector<VertexId>>& chains() const { return chains_; }
  std::size_t chain_count() const { return chains_.size(); }
  std::size_t vertex_count() const { return chain_of_.size(); }

  std::uint32_t chain_of(VertexId v) const { return chain_of_[v]; }
  std::uint32_t position_of(VertexId v) const { return position_of_[v]; }

  /// Minimal position p with x <= chains()[chain][p], or kNoPosition.
  std::uint32_t min_position(VertexId x, std::uint32_t chain) const {
    return closure_[x * chain_count() + chain];
  }

  /// x <= y in the natural pre-order.
  bool leq(VertexId x, VertexId y) const {
    std::uint32_t p = min_position(x, chain_of_[y]);
    return p != kNoPosition && p <= position_of_[y];
  }

  /// Partition of V(G) by longest-chain depth, ascending. Measuring layers
  /// front to back (any order inside a layer) is a valid schedule.
  const std::vector<std::vector<VertexId>>& layers() const { return layers_; }
  std::uint32_t layer_of(VertexId v) const { return layer_of_[v]; }

  friend CausalOrder compute_order(const Geometry&, const PathCover&,
                                   const InfluenceDigraph&);

 private:
  std::vector<std::vector<VertexId>> chains_;
  std::vector<std::uint32_t> chain_of_;
  std::vector<std::uint32_t> position_of_;
  std::vector<std::uint32_t> closure_;  // n * k, row per vertex
  std::vector<std::vector<VertexId>> layers_;
  std::vector<std::uint32_t> layer_of_;
};

/// Transitive closure over the influence digraph, merged chain-by-chain in
/// reverse topological order; O(k·m). Throws CyclicOrderError if the
/// digraph is cyclic (callers are expected to have run
/// detect_vicious_circuit first).
CausalOrder compute_order(const Geometry& g, const PathCover& c,
                          const InfluenceDigraph& d);
CausalOrder compute_order(const Geometry& g, const PathCover& c);

inline bool leq(const CausalOrder& order, VertexId x, VertexId y) {
  return order.leq(x, y);
}

/// The stored ascending depth partition (layer(v) = longest chain ending
/// at v).
inline const std::vector<std::vector<VertexId>>& depth_layers(
    const CausalOrder& order) {
  return order.layers();
}

}  // namespace cflow
