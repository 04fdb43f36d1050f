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

#include "cflow/geometry.hpp"

#include <algorithm>
#include <set>

namespace cflow {

std::string to_string(ValidationIssue::Code code) {
  switch (code) {
    case ValidationIssue::Code::InvalidEdge:
      return "InvalidEdge";
    case ValidationIssue::Code::UnknownVertex:
      return "UnknownVertex";
    case ValidationIssue::Code::DuplicateEdge:
      return "DuplicateEdge";
    case ValidationIssue::Code::LoopEdge:
      return "LoopEdge";
  }
  return "Unknown";
}

Geometry::Geometry(std::shared_ptr<const Core> core,
                   std::vector<VertexId> inputs, std::vector<VertexId> outputs)
    : core_(std::move(core)),
      inputs_(std::move(inputs)),
      outputs_(std::move(outputs)) {
  const std::size_t n = vertex_count();
  in_mask_.assign(n, 0);
  out_mask_.assign(n, 0);
  for (VertexId v : inputs_) in_mask_[v] = 1;
  for (VertexId v : outputs_) out_mask_[v] = 1;
}

std::span<const VertexId> Geometry::neighbors(VertexId v) const {
  if (v >= vertex_count())
    throw UnknownVertexError("unknown vertex index " + std::to_string(v));
  return {core_->flat_adj.data() + core_->offsets[v],
          core_->offsets[v + 1] - core_->offsets[v]};
}

bool Geometry::adjacent(VertexId u, VertexId v) const {
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

const std::string& Geometry::name(VertexId v) const {
  if (v >= vertex_count())
    throw UnknownVertexError("unknown vertex index " + std::to_string(v));
  if (!core_->names.empty()) return core_->names[v];
  // Decimal fallback names are materialized lazily and cached per process.
  static thread_local std::vector<std::string> decimal;
  while (decimal.size() <= v) decimal.push_back(std::to_string(decimal.size()));
  return decimal[v];
}

std::optional<VertexId> Geometry::find(const std::string& name) const {
  if (!core_->names.empty()) {
    for (VertexId v = 0; v < vertex_count(); ++v)
      if (core_->names[v] == name) return v;
  }
  return std::nullopt;
}

Geometry Geometry::with_io(std::vector<VertexId> inputs,
                           std::vector<VertexId> outputs) const {
  const std::size_t n = vertex_count();
  for (VertexId v : inputs)
    if (v >= n) throw UnknownVertexError("input vertex out of range");
  for (VertexId v : outputs)
    if (v >= n) throw UnknownVertexError("output vertex out of range");
  std::sort(inputs.begin(), inputs.end());
  inputs.erase(std::unique(inputs.begin(), inputs.end()), inputs.end());
  std::sort(outputs.begin(), outputs.end());
  outputs.erase(std::unique(outputs.begin(), outputs.end()), outputs.end());
  return Geometry(core_, std::move(inputs), std::move(outputs));
}

bool Geometry::operator==(const Geometry& other) const {
  return vertex_count() == other.vertex_count() &&
         core_->edges == other.core_->edges && inputs_ == other.inputs_ &&
         outputs_ == other.outputs_ && core_->names == other.core_->names;
}

struct GeometryFactory {
  static Geometry build(std::size_t n,
                        std::vector<std::pair<VertexId, VertexId>> edges,
                        std::vector<VertexId> inputs,
                        std::vector<VertexId> outputs,
                        std::vector<std::string> names) {
    auto core = std::make_shared<Geometry::Core>();
    core->names = std::move(names);
    core->edges = std::move(edges);
    std::sort(core->edges.begin(), core->edges.end());

    std::vector<std::size_t> deg(n, 0);
    for (auto [u, v] : core->edges) {
      ++deg[u];
      ++deg[v];
    }
    core->offsets.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v)
      core->offsets[v + 1] = core->offsets[v] + deg[v];
    core->flat_adj.resize(core->offsets[n]);
    std::vector<std::size_t> cursor(core->offsets.begin(),
                                    core->offsets.end() - 1);
    for (auto [u, v] : core->edges) {
      core->flat_adj[cursor[u]++] = v;
      core->flat_adj[cursor[v]++] = u;
    }
    for (std::size_t v = 0; v < n; ++v)
      std::sort(core->flat_adj.begin() + core->offsets[v],
                core->flat_adj.begin() + core->offsets[v + 1]);

    return Geometry(std::move(core), std::move(inputs), std::move(outputs));
  }
};

ValidationResult validate(const RawGeometry& raw) {
  ValidationResult result;
  const std::int64_t n = static_cast<std::int64_t>(raw.vertex_count);

  if (!raw.names.empty() && raw.names.size() != raw.vertex_count) {
    result.issues.push_back({ValidationIssue::Code::InvalidEdge,
                             "name list length does not match vertex count"});
  }

  auto check_vertex = [&](std::int64_t v, const char* role) {
    if (v < 0 || v >= n) {
      result.issues.push_back(
          {ValidationIssue::Code::UnknownVertex,
           std::string(role) + " references unknown vertex " +
               std::to_string(v)});
      return false;
    }
    return true;
  };

  std::set<std::pair<VertexId, VertexId>> seen;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (auto [a, b] : raw.edges) {
    bool ok = check_vertex(a, "edge") && check_vertex(b, "edge");
    if (!ok) continue;
    if (a == b) {
      result.issues.push_back({ValidationIssue::Code::LoopEdge,
                               "loop edge at vertex " + std::to_string(a)});
      continue;
    }
    auto u = static_cast<VertexId>(std::min(a, b));
    auto v = static_cast<VertexId>(std::max(a, b));
    if (!seen.insert({u, v}).second) {
      result.issues.push_back({ValidationIssue::Code::DuplicateEdge,
                               "duplicate edge " + std::to_string(u) + "-" +
                                   std::to_string(v)});
      continue;
    }
    edges.emplace_back(u, v);
  }

  std::vector<VertexId> inputs, outputs;
  for (std::int64_t v : raw.inputs)
    if (check_vertex(v, "input set")) inputs.push_back(static_cast<VertexId>(v));
  for (std::int64_t v : raw.outputs)
    if (check_vertex(v, "output set"))
      outputs.push_back(static_cast<VertexId>(v));

  if (!result.issues.empty()) return result;

  std::sort(inputs.begin(), inputs.end());
  inputs.erase(std::unique(inputs.begin(), inputs.end()), inputs.end());
  std::sort(outputs.begin(), outputs.end());
  outputs.erase(std::unique(outputs.begin(), outputs.end()), outputs.end());

  result.geometry =
      GeometryFactory::build(raw.vertex_count, std::move(edges),
                             std::move(inputs), std::move(outputs), raw.names);
  return result;
}

Geometry validated(const RawGeometry& raw) {
  ValidationResult result = validate(raw);
  if (!result.ok()) {
    std::string what = "invalid geometry:";
    for (const auto& issue : result.issues)
      what += " [" + to_string(issue.code) + "] " + issue.detail + ";";
    throw CflowError(what);
  }
  return *std::move(result.geometry);
}

Geometry make_geometry(std::size_t n,
                       std::vector<std::pair<VertexId, VertexId>> edges,
                       std::vector<VertexId> inputs,
                       std::vector<VertexId> outputs,
                       std::vector<std::string> names) {
  RawGeometry raw;
  raw.vertex_count = n;
  raw.names = std::move(names);
  for (auto [u, v] : edges) raw.edges.emplace_back(u, v);
  for (VertexId v : inputs) raw.inputs.push_back(v);
  for (VertexId v : outputs) raw.outputs.push_back(v);
  return validated(raw);
}

EdgeBound flow_edge_bound(const Geometry& g) {
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  const auto k = static_cast<std::int64_t>(g.outputs().size());
  EdgeBound result;
  result.bound = k * n - k * (k + 1) / 2;
  result.pass = static_cast<std::int64_t>(g.edge_count()) <= result.bound;
  return result;
}

}  // namespace cflow
