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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "cflow/geometry.hpp"
#include "cflow/pattern.hpp"

// Desk-scale statevector execution of measurement patterns, one outcome
// branch at a time.
//
// Conventions (pinned by the tests):
//  - controlled-Z is diag(1, 1, 1, -1);
//  - measurement at angle a projects onto |+_a> = (|0> + e^{ia}|1>)/sqrt(2)
//    for outcome 0 and |-_a> for outcome 1;
//  - basis index bit i is the i-th qubit of the register's qubit list
//    (least significant bit first); input and output states list their
//    vertices in ascending order;
//  - measured qubits are projected, renormalized, then dropped from the
//    register.

namespace cflow {

using Complex = std::complex<double>;

/// Amplitudes over the currently live qubits plus the vertex -> bit map.
class StateVector {
 public:
  /// Register holding the given vertices (ascending bit position) in the
  /// given joint state.
  StateVector(std::vector<VertexId> qubits, Eigen::VectorXcd amplitudes);

  std::size_t live_count() const { return qubits_.size(); }
  const std::vector<VertexId>& qubits() const { return qubits_; }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  bool is_live(VertexId v) const;

  void prepare_plus(VertexId v);
  void entangle(VertexId u, VertexId v);
  void pauli_x(VertexId v);
  void pauli_z(VertexId v);

  /// Projects v onto |+_theta> (outcome 0) or |-_theta> (outcome 1),
  /// renormalizes and removes the qubit. Returns the branch probability;
  /// on a (numerically) zero-probability branch the state is left empty.
  double measure(VertexId v, double theta, int outcome);

  /// Amplitudes reordered to the given qubit list, which must be exactly
  /// the live set.
  Eigen::VectorXcd reordered(const std::vector<VertexId>& order) const;

 private:
  std::size_t bit_of(VertexId v) const;

  std::vector<VertexId> qubits_;
  Eigen::VectorXcd amps_;
};

struct BranchReport {
  std::vector<std::uint8_t> outcomes;  // in pattern measurement order
  double probability = 0.0;
  bool zero_probability = false;
  Eigen::VectorXcd output;  // over O ascending; empty if zero_probability
};

inline constexpr std::size_t kDefaultMaxQubits = 14;

/// Executes the pattern for one prescribed outcome assignment.
/// input_state has 2^|I| amplitudes over the inputs in ascending order.
BranchReport simulate_branch(const Geometry& g, const MeasurementPattern& p,
                             const Eigen::VectorXcd& input_state,
                             const std::vector<std::uint8_t>& outcomes,
                             std::size_t max_qubits = kDefaultMaxQubits);

/// The linear map implemented on the all-zero branch: column j is the
/// output state for basis input j, rescaled by sqrt(probability *
/// 2^|O^c|). Unitary (up to global phase) exactly when the pattern is
/// deterministic.
Eigen::MatrixXcd extract_map(const Geometry& g, const MeasurementPattern& p,
                             std::size_t max_qubits = kDefaultMaxQubits);

/// Phase normalization used for all state comparisons: the first amplitude
/// of magnitude > 1e-10 is made real positive.
Eigen::VectorXcd canonical_phase(const Eigen::VectorXcd& state);

struct CheckIssue {
  std::string check;
  std::string detail;
  double deviation = 0.0;
};

struct BranchTableEntry {
  std::size_t input_index = 0;
  std::vector<std::uint8_t> outcomes;
  double probability = 0.0;
};

struct DeterminismReport {
  bool pass = true;
  double max_state_deviation = 0.0;
  double max_probability_deviation = 0.0;
  double unitarity_deviation = 0.0;
  std::vector<CheckIssue> issues;
  std::vector<BranchTableEntry> branch_table;
};

/// For every computational-basis input, runs all 2^|O^c| branches and
/// checks that outputs agree up to global phase within tol and that each
/// branch has probability 2^-|O^c| within tol; then checks
/// ||M'M - 1||_max <= tol for the extracted map. Collects violations
/// instead of aborting.
DeterminismReport check_determinism_unitarity(
    const Geometry& g, const MeasurementPattern& p, double tol,
    std::size_t max_qubits = kDefaultMaxQubits);

}  // namespace cflow
