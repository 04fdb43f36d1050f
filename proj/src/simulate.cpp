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

#include "cflow/simulate.hpp"

#include <algorithm>
#include <cmath>

namespace cflow {

namespace {

constexpr double kZeroProbability = 1e-12;

int parity(const std::vector<std::uint8_t>& signals,
           const std::vector<VertexId>& deps) {
  int sum = 0;
  for (VertexId w : deps) sum ^= signals[w];
  return sum;
}

}  // namespace

StateVector::StateVector(std::vector<VertexId> qubits,
                         Eigen::VectorXcd amplitudes)
    : qubits_(std::move(qubits)), amps_(std::move(amplitudes)) {
  if (amps_.size() != static_cast<Eigen::Index>(1ull << qubits_.size()))
    throw CflowError("state vector size does not match qubit count");
}

bool StateVector::is_live(VertexId v) const {
  return std::find(qubits_.begin(), qubits_.end(), v) != qubits_.end();
}

std::size_t StateVector::bit_of(VertexId v) const {
  auto it = std::find(qubits_.begin(), qubits_.end(), v);
  if (it == qubits_.end())
    throw CflowError("operation on a qubit that is not live: " +
                     std::to_string(v));
  return static_cast<std::size_t>(it - qubits_.begin());
}

void StateVector::prepare_plus(VertexId v) {
  if (is_live(v)) throw CflowError("qubit prepared while live");
  const Eigen::Index size = amps_.size();
  Eigen::VectorXcd next(2 * size);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  next.head(size) = amps_ * inv_sqrt2;
  next.tail(size) = amps_ * inv_sqrt2;
  amps_ = std::move(next);
  qubits_.push_back(v);
}

void StateVector::entangle(VertexId u, VertexId v) {
  const std::uint64_t mask =
      (1ull << bit_of(u)) | (1ull << bit_of(v));
  for (std::uint64_t idx = 0; idx < static_cast<std::uint64_t>(amps_.size());
       ++idx)
    if ((idx & mask) == mask) amps_[idx] = -amps_[idx];
}

void StateVector::pauli_x(VertexId v) {
  const std::uint64_t bit = 1ull << bit_of(v);
  for (std::uint64_t idx = 0; idx < static_cast<std::uint64_t>(amps_.size());
       ++idx)
    if (idx & bit) std::swap(amps_[idx], amps_[idx ^ bit]);
}

void StateVector::pauli_z(VertexId v) {
  const std::uint64_t bit = 1ull << bit_of(v);
  for (std::uint64_t idx = 0; idx < static_cast<std::uint64_t>(amps_.size());
       ++idx)
    if (idx & bit) amps_[idx] = -amps_[idx];
}

double StateVector::measure(VertexId v, double theta, int outcome) {
  const std::size_t bit_pos = bit_of(v);
  const std::uint64_t bit = 1ull << bit_pos;
  const std::uint64_t low_mask = bit - 1;
  const double sign = outcome == 0 ? 1.0 : -1.0;
  const Complex phase = std::exp(Complex(0.0, -theta));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  Eigen::VectorXcd next(amps_.size() / 2);
  for (std::uint64_t rest = 0;
       rest < static_cast<std::uint64_t>(next.size()); ++rest) {
    const std::uint64_t base =
        ((rest & ~low_mask) << 1) | (rest & low_mask);
    next[rest] =
        (amps_[base] + sign * phase * amps_[base | bit]) * inv_sqrt2;
  }

  const double probability = next.squaredNorm();
  qubits_.erase(qubits_.begin() + static_cast<std::ptrdiff_t>(bit_pos));
  if (probability < kZeroProbability) {
    amps_.resize(0);
    qubits_.clear();
    return probability;
  }
  amps_ = next / std::sqrt(probability);
  return probability;
}

Eigen::VectorXcd StateVector::reordered(
    const std::vector<VertexId>& order) const {
  if (order.size() != qubits_.size())
    throw CflowError("reorder target does not match live register");
  std::vector<std::size_t> source_bit(order.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    source_bit[i] = bit_of(order[i]);

  Eigen::VectorXcd result(amps_.size());
  for (std::uint64_t idx = 0; idx < static_cast<std::uint64_t>(amps_.size());
       ++idx) {
    std::uint64_t src = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
      if (idx & (1ull << i)) src |= 1ull << source_bit[i];
    result[idx] = amps_[src];
  }
  return result;
}

BranchReport simulate_branch(const Geometry& g, const MeasurementPattern& p,
                             const Eigen::VectorXcd& input_state,
                             const std::vector<std::uint8_t>& outcomes,
                             std::size_t max_qubits) {
  if (g.vertex_count() > max_qubits)
    throw ResourceLimitError("simulate_branch: " +
                             std::to_string(g.vertex_count()) +
                             " qubits exceed the limit of " +
                             std::to_string(max_qubits));
  if (input_state.size() !=
      static_cast<Eigen::Index>(1ull << g.inputs().size()))
    throw CflowError("input state size does not match |I|");

  BranchReport report;
  report.probability = 1.0;

  StateVector state(g.inputs(), input_state);
  std::vector<std::uint8_t> signals(g.vertex_count(), 0);
  std::size_t measured = 0;

  for (const Command& c : p.commands) {
    switch (c.op) {
      case Command::Op::Prepare:
        state.prepare_plus(c.qubit);
        break;
      case Command::Op::Entangle:
        state.entangle(c.qubit, c.other);
        break;
      case Command::Op::Measure: {
        if (measured >= outcomes.size())
          throw CflowError("outcome assignment shorter than measurements");
        const int outcome = outcomes[measured] ? 1 : 0;
        const double theta =
            (parity(signals, c.x_deps) ? -1.0 : 1.0) * c.angle +
            M_PI * parity(signals, c.z_deps);
        const double prob = state.measure(c.qubit, theta, outcome);
        report.outcomes.push_back(static_cast<std::uint8_t>(outcome));
        report.probability *= prob;
        signals[c.qubit] = static_cast<std::uint8_t>(outcome);
        ++measured;
        if (prob < kZeroProbability) {
          report.zero_probability = true;
          report.probability = 0.0;
          return report;
        }
        break;
      }
      case Command::Op::Correct:
        if (parity(signals, c.deps)) {
          if (c.axis == Command::Axis::X)
            state.pauli_x(c.qubit);
          else
            state.pauli_z(c.qubit);
        }
        break;
    }
  }

  if (measured != outcomes.size())
    throw CflowError("outcome assignment longer than measurements");
  report.output = state.reordered(g.outputs());
  return report;
}

Eigen::MatrixXcd extract_map(const Geometry& g, const MeasurementPattern& p,
                             std::size_t max_qubits) {
  const std::size_t k = g.inputs().size();
  const std::size_t dim = 1ull << k;
  const std::size_t measured = g.vertex_count() - g.outputs().size();
  const std::vector<std::uint8_t> all_zero(measured, 0);
  const double rescale_base = std::pow(2.0, static_cast<double>(measured));

  Eigen::MatrixXcd map = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    Eigen::VectorXcd basis = Eigen::VectorXcd::Zero(dim);
    basis[static_cast<Eigen::Index>(j)] = 1.0;
    BranchReport report =
        simulate_branch(g, p, basis, all_zero, max_qubits);
    if (report.zero_probability) continue;  // column stays zero
    map.col(static_cast<Eigen::Index>(j)) =
        report.output * std::sqrt(report.probability * rescale_base);
  }
  return map;
}

Eigen::VectorXcd canonical_phase(const Eigen::VectorXcd& state) {
  for (Eigen::Index i = 0; i < state.size(); ++i) {
    if (std::abs(state[i]) > 1e-10) {
      Complex rotation = std::conj(state[i]) / std::abs(state[i]);
      return state * rotation;
    }
  }
  return state;
}

DeterminismReport check_determinism_unitarity(const Geometry& g,
                                              const MeasurementPattern& p,
                                              double tol,
                                              std::size_t max_qubits) {
  DeterminismReport report;
  const std::size_t k = g.inputs().size();
  const std::size_t dim = 1ull << k;
  const std::size_t measured = g.vertex_count() - g.outputs().size();
  const std::size_t branches = 1ull << measured;
  const double expected_probability =
      1.0 / static_cast<double>(branches);

  auto fail = [&](const std::string& check, const std::string& detail,
                  double deviation) {
    report.pass = false;
    report.issues.push_back({check, detail, deviation});
  };

  for (std::size_t j = 0; j < dim; ++j) {
    Eigen::VectorXcd basis = Eigen::VectorXcd::Zero(dim);
    basis[static_cast<Eigen::Index>(j)] = 1.0;

    Eigen::VectorXcd reference;
    for (std::size_t b = 0; b < branches; ++b) {
      std::vector<std::uint8_t> outcomes(measured);
      for (std::size_t i = 0; i < measured; ++i)
        outcomes[i] = static_cast<std::uint8_t>((b >> i) & 1);
      BranchReport branch =
          simulate_branch(g, p, basis, outcomes, max_qubits);
      report.branch_table.push_back({j, outcomes, branch.probability});

      if (branch.zero_probability) {
        fail("branch_probability",
             "zero-probability branch for input " + std::to_string(j), 1.0);
        continue;
      }
      const double prob_deviation =
          std::abs(branch.probability - expected_probability);
      report.max_probability_deviation =
          std::max(report.max_probability_deviation, prob_deviation);
      if (prob_deviation > tol)
        fail("branch_probability",
             "input " + std::to_string(j) + " branch " + std::to_string(b),
             prob_deviation);

      Eigen::VectorXcd output = canonical_phase(branch.output);
      if (b == 0) {
        reference = output;
        continue;
      }
      const double state_deviation =
          (output - reference).cwiseAbs().maxCoeff();
      report.max_state_deviation =
          std::max(report.max_state_deviation, state_deviation);
      if (state_deviation > tol)
        fail("branch_state",
             "input " + std::to_string(j) + " branch " + std::to_string(b),
             state_deviation);
    }
  }

  Eigen::MatrixXcd map = extract_map(g, p, max_qubits);
  Eigen::MatrixXcd gram = map.adjoint() * map;
  report.unitarity_deviation =
      (gram - Eigen::MatrixXcd::Identity(gram.rows(), gram.cols()))
          .cwiseAbs()
          .maxCoeff();
  if (report.unitarity_deviation > tol)
    fail("unitarity", "||M'M - 1||_max exceeds tolerance",
         report.unitarity_deviation);

  return report;
}

}  // namespace cflow
