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

#include <string>
#include <vector>

#include "cflow/flow.hpp"
#include "cflow/geometry.hpp"

namespace cflow {

class InvalidFlowError : public CflowError {
 public:
  using CflowError::CflowError;
};

/// Measurement angle per vertex, radians; entries outside O^c are ignored.
using AngleAssignment = std::vector<double>;

inline AngleAssignment zero_angles(const Geometry& g) {
  return AngleAssignment(g.vertex_count(), 0.0);
}

/// One pattern command. Dependency sets are sets of vertex ids whose
/// signals are summed mod 2:
///   Measure    effective angle (-1)^(sum x_deps) * angle + pi * (sum z_deps)
///   Correct    the Pauli fires when the dependency sum is odd
struct Command {
  enum class Op { Prepare, Entangle, Measure, Correct };
  enum class Axis { X, Z };

  Op op;
  VertexId qubit = kNoVertex;
  VertexId other = kNoVertex;  // Entangle only
  double angle = 0.0;          // Measure only
  Axis axis = Axis::X;         // Correct only
  std::vector<VertexId> x_deps;
  std::vector<VertexId> z_deps;
  std::vector<VertexId> deps;

  static Command prepare(VertexId v);
  static Command entangle(VertexId u, VertexId v);
  static Command measure(VertexId v, double angle, std::vector<VertexId> x,
                         std::vector<VertexId> z);
  static Command correct(Axis axis, VertexId v, std::vector<VertexId> deps);

  bool operator==(const Command&) const = default;
};

/// Ordered command sequence: preparations, entanglers, adaptive
/// measurements of O^c in causal-layer order, corrections on O.
struct MeasurementPattern {
  std::vector<Command> commands;
  std::vector<VertexId> inputs;
  std::vector<VertexId> outputs;
  std::size_t vertex_count = 0;

  /// Measured vertices in command order; branch outcome vectors follow
  /// this order.
  std::vector<VertexId> measurement_order() const;

  bool operator==(const MeasurementPattern&) const = default;
};

/// Emits the complete adaptive pattern for a flow. With raw_corrections,
/// byproduct corrections are left as explicit conditional Paulis right
/// after each measurement instead of being absorbed into later angles and
/// final corrections. Throws InvalidFlowError if the flow does not satisfy
/// the flow conditions on g.
MeasurementPattern derive_pattern(const Geometry& g, const Flow& flow,
                                  const AngleAssignment& angles,
                                  bool raw_corrections = false);

/// Removes every Measure z-dependency by reinterpreting downstream signals
/// (s_v becomes s_v + sum z_deps), rewriting all later dependency sets.
/// Simulated behavior is unchanged.
MeasurementPattern signal_shift(const MeasurementPattern& p);

/// Validity conditions for measurement algorithms: prepare/measure at most
/// once, no dependency on an unmeasured signal, non-inputs prepared first,
/// measured qubits finish with their measurement, inputs never prepared,
/// outputs never measured. Returns human-readable violations.
std::vector<std::string> validate_pattern(const Geometry& g,
                                          const MeasurementPattern& p);

}  // namespace cflow
