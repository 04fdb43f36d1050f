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

#include "cflow/causal.hpp"

#include <algorithm>
#include <deque>

namespace cflow {

std::size_t InfluenceDigraph::arc_count() const {
  std::size_t total = 0;
  for (const auto& list : arcs) total += list.size();
  return total;
}

InfluenceDigraph influence_digraph(const Geometry& g, const PathCover& c) {
  const std::size_t n = g.vertex_count();
  InfluenceDigraph d;
  d.arcs.resize(n);
  for (VertexId x = 0; x < n; ++x) {
    VertexId fx = c.successor[x];
    if (fx == kNoVertex) continue;  // x in O
    d.arcs[x].push_back(fx);
    for (VertexId y : g.neighbors(fx))
      if (y != x) d.arcs[x].push_back(y);
  }
  return d;
}

namespace {

// Iterative Tarjan. Returns the component id per vertex; ids are assigned
// in completion order (reverse topological).
struct TarjanResult {
  std::vector<std::uint32_t> component;
  std::uint32_t count = 0;
  std::vector<std::uint32_t> component_size;
};

TarjanResult tarjan_scc(const InfluenceDigraph& d) {
  const std::size_t n = d.arcs.size();
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

  TarjanResult result;
  result.component.assign(n, kUnset);
  std::vector<std::uint32_t> index(n, kUnset);
  std::vector<std::uint32_t> lowlink(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<VertexId> stack;
  std::uint32_t next_index = 0;

  struct Frame {
    VertexId v;
    std::size_t arc;
  };
  std::vector<Frame> frames;

  for (VertexId root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    frames.push_back({root, 0});
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;

    while (!frames.empty()) {
      Frame& frame = frames.back();
      VertexId v = frame.v;
      if (frame.arc < d.arcs[v].size()) {
        VertexId w = d.arcs[v][frame.arc++];
        if (index[w] == kUnset) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
      } else {
        frames.pop_back();
        if (!frames.empty())
          lowlink[frames.back().v] = std::min(lowlink[frames.back().v],
                                              lowlink[v]);
        if (lowlink[v] == index[v]) {
          std::uint32_t id = result.count++;
          std::uint32_t size = 0;
          while (true) {
            VertexId w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            result.component[w] = id;
            ++size;
            if (w == v) break;
          }
          result.component_size.push_back(size);
        }
      }
    }
  }
  return result;
}

// Shortest directed cycle inside one SCC, as a vertex sequence closing on
// its start. Deterministic: smallest-length cycle, ties broken by the
// smallest starting vertex.
std::vector<VertexId> shortest_cycle_in_scc(const InfluenceDigraph& d,
                                            const std::vector<VertexId>& scc,
                                            std::uint32_t component_id,
                                            const TarjanResult& sccs) {
  const std::size_t n = d.arcs.size();
  constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
  std::vector<VertexId> best;

  std::vector<std::uint32_t> dist(n);
  std::vector<VertexId> parent(n);
  std::deque<VertexId> queue;

  for (VertexId start : scc) {
    std::fill(dist.begin(), dist.end(), kInf);
    queue.clear();
    dist[start] = 0;
    queue.push_back(start);
    std::uint32_t cycle_len = kInf;
    VertexId last = kNoVertex;
    while (!queue.empty() && last == kNoVertex) {
      VertexId v = queue.front();
      queue.pop_front();
      for (VertexId w : d.arcs[v]) {
        if (sccs.component[w] != component_id) continue;
        if (w == start) {
          cycle_len = dist[v] + 1;
          last = v;
          break;
        }
        if (dist[w] != kInf) continue;
        dist[w] = dist[v] + 1;
        parent[w] = v;
        queue.push_back(w);
      }
    }
    if (last == kNoVertex) continue;  // start lies on no cycle (unreachable)
    if (!best.empty() && cycle_len + 1 >= best.size()) continue;
    std::vector<VertexId> cycle;
    for (VertexId v = last; v != start; v = parent[v]) cycle.push_back(v);
    cycle.push_back(start);
    std::reverse(cycle.begin(), cycle.end());
    cycle.push_back(start);
    best = std::move(cycle);
  }
  return best;
}

}  // namespace

std::optional<ViciousCircuitWitness> detect_vicious_circuit(
    const InfluenceDigraph& d, const PathCover& c) {
  TarjanResult sccs = tarjan_scc(d);

  // No self-loops can occur (x != f(x), and x is excluded from the neighbor
  // arcs), so a cycle exists iff some component is nontrivial.
  std::uint32_t cyclic_id = std::numeric_limits<std::uint32_t>::max();
  for (VertexId v = 0; v < d.arcs.size(); ++v) {
    if (sccs.component_size[sccs.component[v]] >= 2) {
      cyclic_id = sccs.component[v];
      break;  // component containing the smallest vertex id
    }
  }
  if (cyclic_id == std::numeric_limits<std::uint32_t>::max())
    return std::nullopt;

  ViciousCircuitWitness witness;
  for (VertexId v = 0; v < d.arcs.size(); ++v)
    if (sccs.component[v] == cyclic_id) witness.scc.push_back(v);

  std::vector<VertexId> cycle =
      shortest_cycle_in_scc(d, witness.scc, cyclic_id, sccs);

  // Expand each influence arc back into segments of an influencing walk.
  witness.circuit.push_back(cycle.front());
  for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
    VertexId x = cycle[i];
    VertexId y = cycle[i + 1];
    VertexId fx = c.successor[x];
    if (y == fx) {
      witness.segments.push_back({x, y});
      witness.circuit.push_back(y);
    } else if (fx != kNoVertex && c.successor[fx] == y) {
      // Edge f(x)y is itself a cover arc: the shortcut decomposes into two
      // cover-arc segments.
      witness.segments.push_back({x, fx});
      witness.segments.push_back({fx, y});
      witness.circuit.push_back(fx);
      witness.circuit.push_back(y);
    } else {
      witness.segments.push_back({x, fx, y});
      witness.circuit.push_back(fx);
      witness.circuit.push_back(y);
    }
  }
  return witness;
}

CausalOrder compute_order(const Geometry& g, const PathCover& c,
                          const InfluenceDigraph& d) {
  const std::size_t n = g.vertex_count();
  const std::size_t k = c.paths.size();

  CausalOrder order;
  order.chains_.reserve(k);
  for (const DirectedPath& path : c.paths) order.chains_.push_back(path.vertices);
  order.chain_of_ = c.chain_index;
  order.position_of_ = c.chain_pos;

  // Kahn topological sort; also gives layers (longest chain ending at v).
  std::vector<std::uint32_t> indegree(n, 0);
  for (VertexId v = 0; v < n; ++v)
    for (VertexId w : d.arcs[v]) ++indegree[w];

  std::deque<VertexId> queue;
  for (VertexId v = 0; v < n; ++v)
    if (indegree[v] == 0) queue.push_back(v);

  order.layer_of_.assign(n, 0);
  std::vector<VertexId> topo;
  topo.reserve(n);
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    topo.push_back(v);
    for (VertexId w : d.arcs[v]) {
      order.layer_of_[w] =
          std::max(order.layer_of_[w], order.layer_of_[v] + 1);
      if (--indegree[w] == 0) queue.push_back(w);
    }
  }
  if (topo.size() != n)
    throw CyclicOrderError("compute_order: influence digraph is cyclic");

  std::uint32_t depth = 0;
  for (VertexId v = 0; v < n; ++v)
    depth = std::max(depth, order.layer_of_[v] + 1);
  order.layers_.assign(depth, {});
  for (VertexId v = 0; v < n; ++v)
    order.layers_[order.layer_of_[v]].push_back(v);

  // Closure rows merge child rows in reverse topological order, so every
  // out-neighbor's row is final before it is consumed.
  order.closure_.assign(n * k, CausalOrder::kNoPosition);
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    VertexId v = *it;
    std::uint32_t* row = order.closure_.data() + v * k;
    row[order.chain_of_[v]] = order.position_of_[v];
    for (VertexId w : d.arcs[v]) {
      const std::uint32_t* child = order.closure_.data() + w * k;
      for (std::size_t chain = 0; chain < k; ++chain)
        row[chain] = std::min(row[chain], child[chain]);
    }
  }
  return order;
}

CausalOrder compute_order(const Geometry& g, const PathCover& c) {
  return compute_order(g, c, influence_digraph(g, c));
}

}  // namespace cflow
