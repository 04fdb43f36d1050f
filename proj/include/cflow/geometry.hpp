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
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cflow {

using VertexId = std::uint32_t;

/// Sentinel for "no vertex" (e.g. successor of an output).
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

class CflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownVertexError : public CflowError {
 public:
  using CflowError::CflowError;
};

/// Thrown when an input exceeds a desk-scale guard (simulator qubit count,
/// oracle enumeration size).
class ResourceLimitError : public CflowError {
 public:
  using CflowError::CflowError;
};

/// Unvalidated description of a geometry, as read from a file or built by a
/// generator. Vertex references are raw indices; name resolution happens in
/// the I/O layer.
struct RawGeometry {
  std::size_t vertex_count = 0;
  std::vector<std::string> names;  // empty, or one display name per vertex
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  std::vector<std::int64_t> inputs;
  std::vector<std::int64_t> outputs;
};

struct ValidationIssue {
  enum class Code { InvalidEdge, UnknownVertex, DuplicateEdge, LoopEdge };
  Code code;
  std::string detail;
};

std::string to_string(ValidationIssue::Code code);

/// An undirected simple graph with designated input and output vertex sets.
/// Immutable after construction; adjacency is shared between copies, so
/// copies (including with_io rebindings) are cheap.
class Geometry {
 public:
  std::size_t vertex_count() const { return core_->offsets.size() - 1; }
  std::size_t edge_count() const { return core_->edges.size(); }

  /// Sorted neighbor set N(v). Throws UnknownVertexError if v is out of range.
  std::span<const VertexId> neighbors(VertexId v) const;

  std::size_t degree(VertexId v) const { return neighbors(v).size(); }
  bool adjacent(VertexId u, VertexId v) const;

  /// Sorted edge list with u < v per edge.
  const std::vector<std::pair<VertexId, VertexId>>& edges() const {
    return core_->edges;
  }

  const std::vector<VertexId>& inputs() const { return inputs_; }
  const std::vector<VertexId>& outputs() const { return outputs_; }
  bool is_input(VertexId v) const { return in_mask_[v]; }
  bool is_output(VertexId v) const { return out_mask_[v]; }

  /// Display name: the name given at validation, or the decimal index.
  const std::string& name(VertexId v) const;
  bool has_custom_names() const { return !core_->names.empty(); }
  /// Index of the vertex with the given display name, if any.
  std::optional<VertexId> find(const std::string& name) const;

  /// Same graph, different input/output designation. Throws
  /// UnknownVertexError on an out-of-range vertex.
  Geometry with_io(std::vector<VertexId> inputs,
                   std::vector<VertexId> outputs) const;

  bool operator==(const Geometry& other) const;

  friend struct GeometryFactory;

 private:
  struct Core {
    std::vector<std::size_t> offsets;  // CSR row offsets, size n + 1
    std::vector<VertexId> flat_adj;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<std::string> names;
  };

  Geometry(std::shared_ptr<const Core> core, std::vector<VertexId> inputs,
           std::vector<VertexId> outputs);

  std::shared_ptr<const Core> core_;
  std::vector<VertexId> inputs_;
  std::vector<VertexId> outputs_;
  std::vector<char> in_mask_;
  std::vector<char> out_mask_;
};

struct ValidationResult {
  std::optional<Geometry> geometry;
  std::vector<ValidationIssue> issues;
  bool ok() const { return geometry.has_value(); }
};

/// Checks a raw description and produces the canonical Geometry: sorted
/// adjacency, sorted deduplicated I/O. Collects every issue instead of
/// stopping at the first.
ValidationResult validate(const RawGeometry& raw);

/// validate() that throws CflowError on any issue. Convenience for
/// generators and tests.
Geometry validated(const RawGeometry& raw);

/// Builds a geometry from index-based parts, throwing on invalid input.
Geometry make_geometry(std::size_t n,
                       std::vector<std::pair<VertexId, VertexId>> edges,
                       std::vector<VertexId> inputs,
                       std::vector<VertexId> outputs,
                       std::vector<std::string> names = {});

struct EdgeBound {
  std::int64_t bound = 0;
  bool pass = false;
};

/// k·n − k(k+1)/2 with k = |O|: no geometry with more edges has a flow.
EdgeBound flow_edge_bound(const Geometry& g);

}  // namespace cflow
