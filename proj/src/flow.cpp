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

#include "cflow/flow.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace cflow {

const char* to_string(FlowFailure::Kind kind) {
  switch (kind) {
    case FlowFailure::Kind::UnequalIO:
      return "unequal_io";
    case FlowFailure::Kind::EdgeBoundExceeded:
      return "edge_bound_exceeded";
    case FlowFailure::Kind::NoCover:
      return "no_cover";
    case FlowFailure::Kind::ViciousCircuit:
      return "vicious_circuit";
  }
  return "unknown";
}

const char* to_string(FlowViolation::Kind kind) {
  switch (kind) {
    case FlowViolation::Kind::SuccessorMissing:
      return "successor_missing";
    case FlowViolation::Kind::SuccessorOnOutput:
      return "successor_on_output";
    case FlowViolation::Kind::SuccessorIsInput:
      return "successor_is_input";
    case FlowViolation::Kind::NotAdjacent:
      return "not_adjacent";
    case FlowViolation::Kind::OrderNotAntisymmetric:
      return "order_not_antisymmetric";
    case FlowViolation::Kind::OrderNotTransitive:
      return "order_not_transitive";
    case FlowViolation::Kind::BelowSuccessorMissing:
      return "condition_2b";
    case FlowViolation::Kind::NeighborOrderMissing:
      return "condition_2c";
  }
  return "unknown";
}

FindResult find_flow(const Geometry& g) {
  if (g.inputs().size() != g.outputs().size()) {
    FlowFailure failure;
    failure.kind = FlowFailure::Kind::UnequalIO;
    failure.input_count = g.inputs().size();
    failure.output_count = g.outputs().size();
    return failure;
  }

  EdgeBound prefilter = flow_edge_bound(g);
  if (!prefilter.pass) {
    FlowFailure failure;
    failure.kind = FlowFailure::Kind::EdgeBoundExceeded;
    failure.edge_count = static_cast<std::int64_t>(g.edge_count());
    failure.bound = prefilter.bound;
    return failure;
  }

  std::vector<DirectedPath> family = max_disjoint_paths(g);
  CoverResult cover_result = to_path_cover(g, family);
  if (auto* no_cover = std::get_if<NoCover>(&cover_result)) {
    FlowFailure failure;
    failure.kind = FlowFailure::Kind::NoCover;
    failure.uncovered = std::move(no_cover->uncovered);
    failure.shape_violations = std::move(no_cover->shape_violations);
    failure.paths = std::move(family);
    return failure;
  }
  PathCover cover = std::get<PathCover>(std::move(cover_result));

  InfluenceDigraph digraph = influence_digraph(g, cover);
  if (auto witness = detect_vicious_circuit(digraph, cover)) {
    FlowFailure failure;
    failure.kind = FlowFailure::Kind::ViciousCircuit;
    failure.witness = std::move(witness);
    failure.paths = std::move(family);
    failure.cover = std::move(cover);
    failure.digraph = std::move(digraph);
    return failure;
  }

  Flow flow;
  flow.order = compute_order(g, cover, digraph);
  flow.successor = cover.successor;
  flow.cover = std::move(cover);
  return flow;
}

namespace {

FlowCheckReport check_flow_impl(
    const Geometry& g, const std::vector<VertexId>& successor,
    const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  FlowCheckReport report;
  auto flag = [&](FlowViolation::Kind kind, VertexId x, VertexId y) {
    report.ok = false;
    report.violations.push_back({kind, x, y});
  };

  const std::size_t n = g.vertex_count();
  std::set<std::pair<VertexId, VertexId>> rel(pairs.begin(), pairs.end());
  auto related = [&](VertexId x, VertexId y) {
    return x == y || rel.count({x, y}) > 0;
  };

  for (auto [x, y] : rel) {
    if (x != y && rel.count({y, x}))
      flag(FlowViolation::Kind::OrderNotAntisymmetric, x, y);
  }
  for (auto [x, y] : rel) {
    if (x == y) continue;
    auto from_y = rel.lower_bound({y, 0});
    auto end_y = rel.lower_bound({y + 1, 0});
    for (auto it = from_y; it != end_y; ++it) {
      VertexId z = it->second;
      if (!related(x, z)) {
        flag(FlowViolation::Kind::OrderNotTransitive, x, z);
      }
    }
  }

  if (successor.size() != n)
    throw CflowError("check_flow: successor map has wrong length");

  for (VertexId x = 0; x < n; ++x) {
    VertexId fx = successor[x];
    if (g.is_output(x)) {
      if (fx != kNoVertex) flag(FlowViolation::Kind::SuccessorOnOutput, x, fx);
      continue;
    }
    if (fx == kNoVertex) {
      flag(FlowViolation::Kind::SuccessorMissing, x, kNoVertex);
      continue;
    }
    if (fx >= n || !g.adjacent(x, fx)) {
      flag(FlowViolation::Kind::NotAdjacent, x, fx);
      continue;
    }
    if (g.is_input(fx)) flag(FlowViolation::Kind::SuccessorIsInput, x, fx);
    if (!related(x, fx))
      flag(FlowViolation::Kind::BelowSuccessorMissing, x, fx);
    for (VertexId y : g.neighbors(fx))
      if (!related(x, y))
        flag(FlowViolation::Kind::NeighborOrderMissing, x, y);
  }
  return report;
}

}  // namespace

FlowCheckReport check_flow(
    const Geometry& g, const std::vector<VertexId>& successor,
    const std::vector<std::pair<VertexId, VertexId>>& order_pairs) {
  return check_flow_impl(g, successor, order_pairs);
}

FlowCheckReport check_flow(
    const Geometry& g, const std::vector<VertexId>& successor,
    const std::function<bool(VertexId, VertexId)>& order) {
  const std::size_t n = g.vertex_count();
  if (n > 4096)
    throw ResourceLimitError(
        "check_flow: relation-oracle form materializes VxV, limited to 4096 "
        "vertices");
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId x = 0; x < n; ++x)
    for (VertexId y = 0; y < n; ++y)
      if (x != y && order(x, y)) pairs.emplace_back(x, y);
  return check_flow_impl(g, successor, pairs);
}

std::vector<std::pair<VertexId, VertexId>> order_pairs(
    const CausalOrder& order) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  const auto n = static_cast<VertexId>(order.vertex_count());
  for (VertexId x = 0; x < n; ++x)
    for (VertexId y = 0; y < n; ++y)
      if (x != y && order.leq(x, y)) pairs.emplace_back(x, y);
  return pairs;
}

}  // namespace cflow
