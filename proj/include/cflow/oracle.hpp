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

#include <vector>

#include "cflow/geometry.hpp"

// Brute-force reference implementations. These deliberately share no code
// with the pipeline modules they are used to check: flows are found by
// enumerating successor candidates, path families by backtracking over
// neighbor choices.

namespace cflow::oracle {

/// Successor assignment per vertex; kNoVertex on outputs.
using SuccessorMap = std::vector<VertexId>;

/// All injective f: O^c -> I^c with x ~ f(x) whose generated pre-order
/// (x <= f(x), and x <= y for y ~ f(x)) is antisymmetric, i.e. all successor
/// functions admitting a flow. Throws ResourceLimitError if |O^c| > 8.
std::vector<SuccessorMap> oracle_flows(const Geometry& g);

/// One directed path as its vertex sequence (a single vertex for a trivial
/// path).
using PathSeq = std::vector<VertexId>;
using PathFamily = std::vector<PathSeq>;

/// All maximum-size families of vertex-disjoint directed I->O paths
/// (internal crossings of I or O are allowed, matching the network-flow
/// notion). Families are canonicalized: paths sorted by initial vertex.
/// Throws ResourceLimitError if the geometry has more than 10 vertices.
std::vector<PathFamily> oracle_path_families(const Geometry& g);

/// Size of a maximum family (0 when no I->O path exists).
std::size_t oracle_max_family_size(const Geometry& g);

}  // namespace cflow::oracle
