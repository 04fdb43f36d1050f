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

#include "cflow/pattern.hpp"

#include <algorithm>
#include <set>

namespace cflow {

Command Command::prepare(VertexId v) {
  Command c;
  c.op = Op::Prepare;
  c.qubit = v;
  return c;
}

Command Command::entangle(VertexId u, VertexId v) {
  Command c;
  c.op = Op::Entangle;
  c.qubit = std::min(u, v);
  c.other = std::max(u, v);
  return c;
}

Command Command::measure(VertexId v, double angle, std::vector<VertexId> x,
                         std::vector<VertexId> z) {
  Command c;
  c.op = Op::Measure;
  c.qubit = v;
  c.angle = angle;
  c.x_deps = std::move(x);
  c.z_deps = std::move(z);
  return c;
}

Command Command::correct(Axis axis, VertexId v, std::vector<VertexId> deps) {
  Command c;
  c.op = Op::Correct;
  c.axis = axis;
  c.qubit = v;
  c.deps = std::move(deps);
  return c;
}

std::vector<VertexId> MeasurementPattern::measurement_order() const {
  std::vector<VertexId> order;
  for (const Command& c : commands)
    if (c.op == Command::Op::Measure) order.push_back(c.qubit);
  return order;
}

namespace {

// Byproduct X dependency of v: its cover predecessor, if any.
std::vector<VertexId> x_dependencies(const Flow& flow, VertexId v) {
  VertexId pred = flow.cover.predecessor[v];
  if (pred == kNoVertex) return {};
  return {pred};
}

// Byproduct Z dependencies of v: every measured w != v with v ~ f(w),
// i.e. the cover predecessors of v's neighbors.
std::vector<VertexId> z_dependencies(const Geometry& g, const Flow& flow,
                                     VertexId v) {
  std::vector<VertexId> deps;
  for (VertexId u : g.neighbors(v)) {
    VertexId w = flow.cover.predecessor[u];
    if (w != kNoVertex && w != v) deps.push_back(w);
  }
  std::sort(deps.begin(), deps.end());
  return deps;
}

void verify_flow_for_pattern(const Geometry& g, const Flow& flow) {
  const std::size_t n = g.vertex_count();
  if (flow.successor.size() != n || flow.order.vertex_count() != n)
    throw InvalidFlowError("flow does not match the geometry size");
  for (VertexId x = 0; x < n; ++x) {
    VertexId fx = flow.successor[x];
    if (g.is_output(x)) {
      if (fx != kNoVertex)
        throw InvalidFlowError("successor defined on output " + g.name(x));
      continue;
    }
    if (fx == kNoVertex)
      throw InvalidFlowError("successor missing on " + g.name(x));
    if (fx >= n || !g.adjacent(x, fx) || g.is_input(fx))
      throw InvalidFlowError("successor of " + g.name(x) + " is invalid");
    if (!flow.order.leq(x, fx))
      throw InvalidFlowError("order misses " + g.name(x) + " <= f(" +
                             g.name(x) + ")");
    for (VertexId y : g.neighbors(fx))
      if (!flow.order.leq(x, y))
        throw InvalidFlowError("order misses neighbor condition at " +
                               g.name(x) + "," + g.name(y));
  }
}

}  // namespace

MeasurementPattern derive_pattern(const Geometry& g, const Flow& flow,
                                  const AngleAssignment& angles,
                                  bool raw_corrections) {
  verify_flow_for_pattern(g, flow);
  if (angles.size() != g.vertex_count())
    throw InvalidFlowError("angle assignment has wrong length");

  MeasurementPattern pattern;
  pattern.inputs = g.inputs();
  pattern.outputs = g.outputs();
  pattern.vertex_count = g.vertex_count();

  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!g.is_input(v)) pattern.commands.push_back(Command::prepare(v));
  for (auto [u, v] : g.edges())
    pattern.commands.push_back(Command::entangle(u, v));

  for (const auto& layer : flow.order.layers()) {
    for (VertexId v : layer) {
      if (g.is_output(v)) continue;
      if (raw_corrections) {
        pattern.commands.push_back(Command::measure(v, angles[v], {}, {}));
        VertexId fv = flow.successor[v];
        pattern.commands.push_back(
            Command::correct(Command::Axis::X, fv, {v}));
        for (VertexId y : g.neighbors(fv))
          if (y != v)
            pattern.commands.push_back(
                Command::correct(Command::Axis::Z, y, {v}));
      } else {
        pattern.commands.push_back(
            Command::measure(v, angles[v], x_dependencies(flow, v),
                             z_dependencies(g, flow, v)));
      }
    }
  }

  if (!raw_corrections) {
    for (VertexId o : g.outputs()) {
      auto x_deps = x_dependencies(flow, o);
      if (!x_deps.empty())
        pattern.commands.push_back(
            Command::correct(Command::Axis::X, o, std::move(x_deps)));
      auto z_deps = z_dependencies(g, flow, o);
      if (!z_deps.empty())
        pattern.commands.push_back(
            Command::correct(Command::Axis::Z, o, std::move(z_deps)));
    }
  }
  return pattern;
}

namespace {

// Simultaneous substitution: every member of deps that has been shifted is
// kept, with its shift set folded in mod 2.
std::vector<VertexId> apply_shifts(
    const std::vector<VertexId>& deps,
    const std::vector<std::vector<VertexId>>& shift) {
  std::set<VertexId> result(deps.begin(), deps.end());
  auto toggle = [&](VertexId v) {
    auto [it, inserted] = result.insert(v);
    if (!inserted) result.erase(it);
  };
  for (VertexId w : deps)
    for (VertexId u : shift[w]) toggle(u);
  return {result.begin(), result.end()};
}

}  // namespace

MeasurementPattern signal_shift(const MeasurementPattern& p) {
  MeasurementPattern shifted = p;
  std::vector<std::vector<VertexId>> shift(p.vertex_count);

  for (Command& c : shifted.commands) {
    switch (c.op) {
      case Command::Op::Measure:
        c.x_deps = apply_shifts(c.x_deps, shift);
        c.z_deps = apply_shifts(c.z_deps, shift);
        if (!c.z_deps.empty()) {
          shift[c.qubit] = c.z_deps;
          c.z_deps.clear();
        }
        break;
      case Command::Op::Correct:
        c.deps = apply_shifts(c.deps, shift);
        break;
      default:
        break;
    }
  }
  return shifted;
}

std::vector<std::string> validate_pattern(const Geometry& g,
                                          const MeasurementPattern& p) {
  std::vector<std::string> violations;
  const std::size_t n = g.vertex_count();
  std::vector<char> prepared(n, 0), measured(n, 0), touched(n, 0);

  auto check_deps = [&](const std::vector<VertexId>& deps, const char* what,
                        VertexId target) {
    for (VertexId w : deps) {
      if (w >= n || !measured[w])
        violations.push_back(std::string(what) + " on " + g.name(target) +
                             " depends on unmeasured signal " +
                             (w < n ? g.name(w) : std::to_string(w)));
    }
  };
  auto first_touch = [&](VertexId v, bool is_prepare) {
    if (v >= n) {
      violations.push_back("command on unknown vertex " + std::to_string(v));
      return;
    }
    if (!touched[v] && !g.is_input(v) && !is_prepare)
      violations.push_back("first operation on non-input " + g.name(v) +
                           " is not a preparation");
    if (measured[v])
      violations.push_back("operation on " + g.name(v) +
                           " after its measurement");
    touched[v] = 1;
  };

  for (const Command& c : p.commands) {
    switch (c.op) {
      case Command::Op::Prepare:
        if (c.qubit < n && g.is_input(c.qubit))
          violations.push_back("input " + g.name(c.qubit) + " is prepared");
        if (c.qubit < n && prepared[c.qubit])
          violations.push_back("qubit " + g.name(c.qubit) +
                               " prepared twice");
        first_touch(c.qubit, true);
        if (c.qubit < n) prepared[c.qubit] = 1;
        break;
      case Command::Op::Entangle:
        first_touch(c.qubit, false);
        first_touch(c.other, false);
        break;
      case Command::Op::Measure:
        first_touch(c.qubit, false);
        if (c.qubit < n && g.is_output(c.qubit))
          violations.push_back("output " + g.name(c.qubit) + " is measured");
        if (c.qubit < n && measured[c.qubit])
          violations.push_back("qubit " + g.name(c.qubit) +
                               " measured twice");
        check_deps(c.x_deps, "measurement", c.qubit);
        check_deps(c.z_deps, "measurement", c.qubit);
        if (c.qubit < n) measured[c.qubit] = 1;
        break;
      case Command::Op::Correct:
        first_touch(c.qubit, false);
        check_deps(c.deps, "correction", c.qubit);
        break;
    }
  }
  for (VertexId v = 0; v < n; ++v)
    if (!g.is_output(v) && !measured[v])
      violations.push_back("non-output " + g.name(v) + " is never measured");
  return violations;
}

}  // namespace cflow
