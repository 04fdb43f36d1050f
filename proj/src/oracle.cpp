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

#include "cflow/oracle.hpp"

#include <algorithm>
#include <cstddef>

namespace cflow::oracle {

namespace {

// Acyclicity of the pre-order generators for f: arcs x->f(x) and x->y for
// y ~ f(x), y != x (the reflexive x<=x is irrelevant to antisymmetry).
bool generators_acyclic(const Geometry& g, const SuccessorMap& f) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<VertexId>> arcs(n);
  for (VertexId x = 0; x < n; ++x) {
    if (f[x] == kNoVertex) continue;
    arcs[x].push_back(f[x]);
    for (VertexId y : g.neighbors(f[x]))
      if (y != x && y != f[x]) arcs[x].push_back(y);
  }
  // Iterative three-color DFS.
  std::vector<char> color(n, 0);  // 0 white, 1 gray, 2 black
  std::vector<std::pair<VertexId, std::size_t>> stack;
  for (VertexId start = 0; start < n; ++start) {
    if (color[start] != 0) continue;
    stack.push_back({start, 0});
    color[start] = 1;
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      if (idx < arcs[v].size()) {
        VertexId w = arcs[v][idx++];
        if (color[w] == 1) return false;
        if (color[w] == 0) {
          color[w] = 1;
          stack.push_back({w, 0});
        }
      } else {
        color[v] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

}  // namespace

std::vector<SuccessorMap> oracle_flows(const Geometry& g) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexId> measured;  // O^c in ascending order
  for (VertexId v = 0; v < n; ++v)
    if (!g.is_output(v)) measured.push_back(v);
  if (measured.size() > 8)
    throw ResourceLimitError("oracle_flows: |O^c| > 8");

  std::vector<SuccessorMap> found;
  SuccessorMap f(n, kNoVertex);
  std::vector<char> used(n, 0);

  auto assign = [&](auto&& self, std::size_t i) -> void {
    if (i == measured.size()) {
      if (generators_acyclic(g, f)) found.push_back(f);
      return;
    }
    VertexId x = measured[i];
    for (VertexId y : g.neighbors(x)) {
      if (g.is_input(y) || used[y]) continue;
      used[y] = 1;
      f[x] = y;
      self(self, i + 1);
      f[x] = kNoVertex;
      used[y] = 0;
    }
  };
  assign(assign, 0);
  return found;
}

namespace {

struct FamilySearch {
  const Geometry& g;
  std::size_t target;  // only record families of exactly this size
  bool record;
  std::size_t best = 0;
  std::vector<PathFamily> families;

  std::vector<char> used;
  PathFamily current;
  PathSeq path;

  explicit FamilySearch(const Geometry& geom) : g(geom), target(0),
      record(false), used(geom.vertex_count(), 0) {}

  void run() {
    next_input(0);
  }

  // Paths are keyed by their initial input, chosen in ascending order, so
  // every family is produced exactly once.
  void next_input(std::size_t idx) {
    const auto& inputs = g.inputs();
    if (record && current.size() + (inputs.size() - idx) < target) return;
    if (idx == inputs.size()) {
      finish();
      return;
    }
    VertexId start = inputs[idx];
    // Option: no path starts at this input.
    next_input(idx + 1);
    if (used[start]) return;
    used[start] = 1;
    path.assign(1, start);
    extend(idx);
    used[start] = 0;
  }

  void extend(std::size_t idx) {
    VertexId tip = path.back();
    if (g.is_output(tip)) {
      current.push_back(path);
      PathSeq saved = path;
      next_input(idx + 1);
      path = saved;
      current.pop_back();
    }
    for (VertexId w : g.neighbors(tip)) {
      if (used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      extend(idx);
      path.pop_back();
      used[w] = 0;
    }
  }

  void finish() {
    best = std::max(best, current.size());
    if (record && current.size() == target) families.push_back(current);
  }
};

}  // namespace

std::size_t oracle_max_family_size(const Geometry& g) {
  if (g.vertex_count() > 10)
    throw ResourceLimitError("oracle_path_families: more than 10 vertices");
  FamilySearch search(g);
  search.run();
  return search.best;
}

std::vector<PathFamily> oracle_path_families(const Geometry& g) {
  if (g.vertex_count() > 10)
    throw ResourceLimitError("oracle_path_families: more than 10 vertices");
  FamilySearch sizing(g);
  sizing.run();

  FamilySearch search(g);
  search.target = sizing.best;
  search.record = true;
  search.run();
  // Paths already emerge sorted by initial vertex (inputs visited
  // ascending); families in deterministic search order.
  return search.families;
}

}  // namespace cflow::oracle
