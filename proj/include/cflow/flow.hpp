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

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "cflow/causal.hpp"
#include "cflow/geometry.hpp"
#include "cflow/pathcover.hpp"

namespace cflow {

/// A flow (f, <=) together with the path cover it induces. When it exists it
/// is unique, and the stored order is the natural pre-order — the coarsest
/// valid causal order.
struct Flow {
  std::vector<VertexId> successor;  // f: O^c -> I^c; kNoVertex on outputs
  PathCover cover;
  CausalOrder order;
};

/// Why a geometry has no flow, with whatever was computed before the failing
/// stage attached for diagnostics.
struct FlowFailure {
  enum class Kind { UnequalIO, EdgeBoundExceeded, NoCover, ViciousCircuit };
  Kind kind;

  // UnequalIO
  std::size_t input_count = 0;
  std::size_t output_count = 0;
  // EdgeBoundExceeded
  std::int64_t edge_count = 0;
  std::int64_t bound = 0;
  // NoCover
  std::vector<VertexId> uncovered;
  std::vector<std::string> shape_violations;
  // ViciousCircuit
  std::optional<ViciousCircuitWitness> witness;

  // Partial artifacts.
  std::vector<DirectedPath> paths;
  std::optional<PathCover> cover;
  std::optional<InfluenceDigraph> digraph;
};

const char* to_string(FlowFailure::Kind kind);

using FindResult = std::variant<Flow, FlowFailure>;

/// Full decision pipeline for |I| = |O|: edge-count prefilter, maximum
/// vertex-disjoint paths, cover check, vicious-circuit check, natural
/// pre-order. O(k·m) after the prefilter, so O(k²·n) overall.
FindResult find_flow(const Geometry& g);

struct FlowViolation {
  enum class Kind {
    SuccessorMissing,      // f undefined on some x in O^c
    SuccessorOnOutput,     // f defined on an output vertex
    SuccessorIsInput,      // f(x) outside I^c
    NotAdjacent,           // x !~ f(x)
    OrderNotAntisymmetric,
    OrderNotTransitive,
    BelowSuccessorMissing,  // x <= f(x) fails
    NeighborOrderMissing,   // y ~ f(x) but x <= y fails
  };
  Kind kind;
  VertexId x = kNoVertex;
  VertexId y = kNoVertex;
};

const char* to_string(FlowViolation::Kind kind);

struct FlowCheckReport {
  bool ok = true;
  std::vector<FlowViolation> violations;
};

/// Direct check of the flow conditions for an explicit candidate (f, <=).
/// The order is given as a pair set; reflexive pairs are implied and
/// antisymmetry/transitivity are checked on the provided pairs.
FlowCheckReport check_flow(
    const Geometry& g, const std::vector<VertexId>& successor,
    const std::vector<std::pair<VertexId, VertexId>>& order_pairs);

/// Same check with the order as a relation oracle, materialized over V×V.
/// Guarded to 4096 vertices.
FlowCheckReport check_flow(
    const Geometry& g, const std::vector<VertexId>& successor,
    const std::function<bool(VertexId, VertexId)>& order);

/// All related pairs of a computed order (O(n²) output; test/CLI helper).
std::vector<std::pair<VertexId, VertexId>> order_pairs(
    const CausalOrder& order);

}  // namespace cflow
