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
#include <variant>
#include <vector>

#include "cflow/geometry.hpp"

namespace cflow {

/// A directed path in G as its vertex sequence; a single vertex is a
/// trivial path.
struct DirectedPath {
  std::vector<VertexId> vertices;

  bool trivial() const { return vertices.size() == 1; }
  VertexId initial() const { return vertices.front(); }
  VertexId final() const { return vertices.back(); }
  bool operator==(const DirectedPath&) const = default;
};

/// Unit-capacity network for the vertex-disjoint I->O path problem.
/// Each graph vertex v is split into v_in -> v_out; a source r feeds every
/// input and every output drains into a sink s. Integral r-s flows of value
/// t correspond to t vertex-disjoint I->O paths.
class FlowNetwork {
 public:
  using NodeId = std::uint32_t;

  struct Arc {
    NodeId head;
    std::int32_t capacity;
    std::int32_t flow;  // negative on a residual twin once its partner carries
  };

  static constexpr NodeId kSource = 0;
  static constexpr NodeId kSink = 1;
  static NodeId node_in(VertexId v) { return 2 + 2 * v; }
  static NodeId node_out(VertexId v) { return 3 + 2 * v; }

  explicit FlowNetwork(std::size_t node_count) : out_(node_count) {}

  /// Adds a forward arc with the given capacity plus its zero-capacity
  /// residual twin (arc ids 2i / 2i+1).
  void add_arc(NodeId tail, NodeId head, std::int32_t capacity);

  std::size_t node_count() const { return out_.size(); }
  /// Forward arcs only (even ids), as (tail, head) pairs.
  std::vector<std::pair<NodeId, NodeId>> forward_arcs() const;

  const Arc& arc(std::uint32_t id) const { return arcs_[id]; }
  const std::vector<std::uint32_t>& out_arcs(NodeId node) const {
    return out_[node];
  }

  /// Sorts every adjacency list by head node id; augmenting-path search then
  /// breaks ties by ascending node order, making the flow deterministic.
  void finalize();

  /// Edmonds-Karp (BFS augmenting paths). Returns the max-flow value.
  std::int64_t run_max_flow();

  std::int64_t flow_value() const { return value_; }

 private:
  std::vector<Arc> arcs_;
  std::vector<std::uint32_t> tails_;
  std::vector<std::vector<std::uint32_t>> out_;
  std::int64_t value_ = 0;
};

FlowNetwork build_network(const Geometry& g);

/// A maximum-size family of vertex-disjoint I->O paths, decomposed from the
/// integral max flow. Deterministic for a given geometry; paths sorted by
/// initial vertex. Leftover flow cycles (never on path vertices) are
/// discarded during extraction.
std::vector<DirectedPath> max_disjoint_paths(const Geometry& g);

/// Vertex-disjoint directed I->O paths covering all of V(G), with the
/// successor / predecessor maps of the cover.
struct PathCover {
  std::vector<DirectedPath> paths;
  std::vector<VertexId> successor;    // f: O^c -> I^c; kNoVertex on outputs
  std::vector<VertexId> predecessor;  // g(y) for y in img(f); kNoVertex else
  std::vector<std::uint32_t> chain_index;  // path containing v
  std::vector<std::uint32_t> chain_pos;    // position of v on its path
};

struct NoCover {
  std::vector<VertexId> uncovered;
  // Paths that touch I off their initial point or O off their final point
  // (possible only for geometries without a flow).
  std::vector<std::string> shape_violations;
};

using CoverResult = std::variant<PathCover, NoCover>;

/// Promotes a vertex-disjoint family to a path cover, or reports why it is
/// not one. Throws CflowError on malformed input (non-adjacent consecutive
/// vertices, repeated vertices).
CoverResult to_path_cover(const Geometry& g,
                          const std::vector<DirectedPath>& family);

}  // namespace cflow
