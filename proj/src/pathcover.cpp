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

#include "cflow/pathcover.hpp"

#include <algorithm>
#include <deque>

namespace cflow {

void FlowNetwork::add_arc(NodeId tail, NodeId head, std::int32_t capacity) {
  arcs_.push_back({head, capacity, 0});
  tails_.push_back(tail);
  out_[tail].push_back(static_cast<std::uint32_t>(arcs_.size() - 1));
  arcs_.push_back({tail, 0, 0});
  tails_.push_back(head);
  out_[head].push_back(static_cast<std::uint32_t>(arcs_.size() - 1));
}

std::vector<std::pair<FlowNetwork::NodeId, FlowNetwork::NodeId>>
FlowNetwork::forward_arcs() const {
  std::vector<std::pair<NodeId, NodeId>> result;
  for (std::uint32_t id = 0; id < arcs_.size(); id += 2)
    result.emplace_back(tails_[id], arcs_[id].head);
  return result;
}

void FlowNetwork::finalize() {
  for (auto& list : out_)
    std::sort(list.begin(), list.end(),
              [&](std::uint32_t a, std::uint32_t b) {
                return arcs_[a].head != arcs_[b].head
                           ? arcs_[a].head < arcs_[b].head
                           : a < b;
              });
}

std::int64_t FlowNetwork::run_max_flow() {
  const std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> parent_arc(node_count());
  std::deque<NodeId> queue;

  while (true) {
    std::fill(parent_arc.begin(), parent_arc.end(), kUnset);
    queue.clear();
    queue.push_back(kSource);
    parent_arc[kSource] = kUnset - 1;  // visited marker for the source
    bool reached = false;
    while (!queue.empty() && !reached) {
      NodeId node = queue.front();
      queue.pop_front();
      for (std::uint32_t id : out_[node]) {
        const Arc& a = arcs_[id];
        // residual capacity = capacity - flow; the twin's residual grows as
        // flow is pushed, so both directions are covered by this test
        if (a.flow >= a.capacity || parent_arc[a.head] != kUnset) continue;
        parent_arc[a.head] = id;
        if (a.head == kSink) {
          reached = true;
          break;
        }
        queue.push_back(a.head);
      }
    }
    if (!reached) break;

    // Unit capacities: bottleneck is always 1.
    NodeId node = kSink;
    while (node != kSource) {
      std::uint32_t id = parent_arc[node];
      arcs_[id].flow += 1;
      arcs_[id ^ 1].flow -= 1;
      node = arcs_[id ^ 1].head;
    }
    ++value_;
  }
  return value_;
}

FlowNetwork build_network(const Geometry& g) {
  const std::size_t n = g.vertex_count();
  FlowNetwork net(2 + 2 * n);
  for (VertexId v : g.inputs())
    net.add_arc(FlowNetwork::kSource, FlowNetwork::node_in(v), 1);
  for (VertexId v = 0; v < n; ++v)
    net.add_arc(FlowNetwork::node_in(v), FlowNetwork::node_out(v), 1);
  for (auto [u, v] : g.edges()) {
    net.add_arc(FlowNetwork::node_out(u), FlowNetwork::node_in(v), 1);
    net.add_arc(FlowNetwork::node_out(v), FlowNetwork::node_in(u), 1);
  }
  for (VertexId v : g.outputs())
    net.add_arc(FlowNetwork::node_out(v), FlowNetwork::kSink, 1);
  net.finalize();
  return net;
}

namespace {

bool carries(const FlowNetwork& net, std::uint32_t id) {
  return net.arc(id).flow > 0;
}

}  // namespace

std::vector<DirectedPath> max_disjoint_paths(const Geometry& g) {
  FlowNetwork net = build_network(g);
  net.run_max_flow();

  // Map: for each vertex, the flow-carrying arc out of v_out (unique by
  // conservation, since at most one unit enters v_in).
  const std::size_t n = g.vertex_count();
  std::vector<VertexId> next(n, kNoVertex);  // successor vertex, or kNoVertex
  std::vector<char> ends_at_sink(n, 0);
  std::vector<char> starts_at_source(n, 0);

  for (VertexId v = 0; v < n; ++v) {
    for (std::uint32_t id : net.out_arcs(FlowNetwork::node_out(v))) {
      if (id % 2 != 0 || !carries(net, id)) continue;
      FlowNetwork::NodeId head = net.arc(id).head;
      if (head == FlowNetwork::kSink)
        ends_at_sink[v] = 1;
      else
        next[v] = static_cast<VertexId>((head - 2) / 2);
    }
  }
  for (std::uint32_t id : net.out_arcs(FlowNetwork::kSource)) {
    if (id % 2 != 0 || !carries(net, id)) continue;
    starts_at_source[static_cast<VertexId>((net.arc(id).head - 2) / 2)] = 1;
  }

  std::vector<DirectedPath> family;
  for (VertexId v : g.inputs()) {
    if (!starts_at_source[v]) continue;
    DirectedPath path;
    VertexId cur = v;
    while (true) {
      path.vertices.push_back(cur);
      if (ends_at_sink[cur]) break;
      cur = next[cur];
    }
    family.push_back(std::move(path));
  }
  // inputs() is sorted, so the family is already ordered by initial vertex.
  // Any flow not visited here lies on cycles through vertices no path uses;
  // dropping it is the cycle cancellation.
  return family;
}

CoverResult to_path_cover(const Geometry& g,
                          const std::vector<DirectedPath>& family) {
  const std::size_t n = g.vertex_count();
  std::vector<char> covered(n, 0);

  for (const DirectedPath& path : family) {
    if (path.vertices.empty())
      throw CflowError("to_path_cover: empty path in family");
    for (std::size_t i = 0; i < path.vertices.size(); ++i) {
      VertexId v = path.vertices[i];
      if (v >= n) throw UnknownVertexError("path vertex out of range");
      if (covered[v])
        throw CflowError("to_path_cover: family is not vertex-disjoint at " +
                         g.name(v));
      covered[v] = 1;
      if (i + 1 < path.vertices.size() &&
          !g.adjacent(v, path.vertices[i + 1]))
        throw CflowError("to_path_cover: consecutive path vertices " +
                         g.name(v) + "," + g.name(path.vertices[i + 1]) +
                         " are not adjacent");
    }
  }

  NoCover failure;
  for (VertexId v = 0; v < n; ++v)
    if (!covered[v]) failure.uncovered.push_back(v);

  for (const DirectedPath& path : family) {
    if (!g.is_output(path.final()))
      failure.shape_violations.push_back("path ending at " +
                                         g.name(path.final()) +
                                         " does not end in O");
    for (std::size_t i = 0; i < path.vertices.size(); ++i) {
      VertexId v = path.vertices[i];
      if (i > 0 && g.is_input(v))
        failure.shape_violations.push_back("input " + g.name(v) +
                                           " is not an initial point");
      if (i + 1 < path.vertices.size() && g.is_output(v))
        failure.shape_violations.push_back("output " + g.name(v) +
                                           " is not a final point");
    }
  }

  if (!failure.uncovered.empty() || !failure.shape_violations.empty())
    return failure;

  PathCover cover;
  cover.paths = family;
  std::sort(cover.paths.begin(), cover.paths.end(),
            [](const DirectedPath& a, const DirectedPath& b) {
              return a.initial() < b.initial();
            });
  cover.successor.assign(n, kNoVertex);
  cover.predecessor.assign(n, kNoVertex);
  cover.chain_index.assign(n, 0);
  cover.chain_pos.assign(n, 0);
  for (std::size_t p = 0; p < cover.paths.size(); ++p) {
    const auto& verts = cover.paths[p].vertices;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      cover.chain_index[verts[i]] = static_cast<std::uint32_t>(p);
      cover.chain_pos[verts[i]] = static_cast<std::uint32_t>(i);
      if (i + 1 < verts.size()) {
        cover.successor[verts[i]] = verts[i + 1];
        cover.predecessor[verts[i + 1]] = verts[i];
      }
    }
  }
  return cover;
}

}  // namespace cflow
