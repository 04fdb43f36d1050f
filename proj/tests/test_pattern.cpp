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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cflow/generate.hpp"
#include "cflow/pattern.hpp"
#include "test_util.hpp"

using namespace cflow;

namespace {

Flow flow_of(const Geometry& g) {
  auto result = find_flow(g);
  REQUIRE(std::holds_alternative<Flow>(result));
  return std::get<Flow>(std::move(result));
}

}  // namespace

TEST_CASE("pattern for the line fixture") {
  Geometry g = testutil::l3();
  AngleAssignment angles = {0.3, -0.7, 0.0};
  MeasurementPattern p = derive_pattern(g, flow_of(g), angles);

  std::vector<Command> expected = {
      Command::prepare(1),
      Command::prepare(2),
      Command::entangle(0, 1),
      Command::entangle(1, 2),
      Command::measure(0, 0.3, {}, {}),
      Command::measure(1, -0.7, {0}, {}),
      Command::correct(Command::Axis::X, 2, {1}),
      Command::correct(Command::Axis::Z, 2, {0}),
  };
  CHECK(p.commands == expected);
  CHECK(validate_pattern(g, p).empty());
}

TEST_CASE("pattern for two disjoint edges has no Z corrections") {
  Geometry g = testutil::p2x2();
  MeasurementPattern p = derive_pattern(g, flow_of(g), zero_angles(g));

  std::vector<Command> expected = {
      Command::prepare(2),
      Command::prepare(3),
      Command::entangle(0, 2),
      Command::entangle(1, 3),
      Command::measure(0, 0.0, {}, {}),
      Command::measure(1, 0.0, {}, {}),
      Command::correct(Command::Axis::X, 2, {0}),
      Command::correct(Command::Axis::X, 3, {1}),
  };
  CHECK(p.commands == expected);
}

TEST_CASE("identity geometry yields the empty pattern") {
  Geometry g = make_geometry(1, {}, {0}, {0});
  MeasurementPattern p = derive_pattern(g, flow_of(g), zero_angles(g));
  CHECK(p.commands.empty());
  CHECK(validate_pattern(g, p).empty());
}

TEST_CASE("command counts match the geometry") {
  std::mt19937_64 rng(2468);
  int found = 0;
  while (found < 40) {
    Geometry g = testutil::random_equal_io(rng, 8);
    auto result = find_flow(g);
    auto* flow = std::get_if<Flow>(&result);
    if (!flow) continue;
    ++found;
    MeasurementPattern p = derive_pattern(g, *flow, zero_angles(g));
    std::size_t prepares = 0, entangles = 0, measures = 0;
    for (const Command& c : p.commands) {
      if (c.op == Command::Op::Prepare) ++prepares;
      if (c.op == Command::Op::Entangle) ++entangles;
      if (c.op == Command::Op::Measure) ++measures;
    }
    CHECK(prepares == g.vertex_count() - g.inputs().size());
    CHECK(entangles == g.edge_count());
    CHECK(measures == g.vertex_count() - g.outputs().size());
    CHECK(validate_pattern(g, p).empty());
  }
}

TEST_CASE("dependencies point strictly into the causal past") {
  std::mt19937_64 rng(1357);
  int found = 0;
  while (found < 40) {
    Geometry g = testutil::random_equal_io(rng, 8);
    auto result = find_flow(g);
    auto* flow = std::get_if<Flow>(&result);
    if (!flow) continue;
    ++found;
    for (bool raw : {false, true}) {
      MeasurementPattern p = derive_pattern(g, *flow, zero_angles(g), raw);
      CHECK(validate_pattern(g, p).empty());
      for (const Command& c : p.commands) {
        auto strictly_before = [&](VertexId w) {
          CHECK(flow->order.leq(w, c.qubit));
          CHECK(w != c.qubit);
        };
        for (VertexId w : c.x_deps) strictly_before(w);
        for (VertexId w : c.z_deps) strictly_before(w);
        for (VertexId w : c.deps) strictly_before(w);
      }
    }
  }
}

TEST_CASE("raw corrections interleave after each measurement") {
  Geometry g = testutil::l3();
  MeasurementPattern p = derive_pattern(g, flow_of(g), zero_angles(g), true);
  std::vector<Command> expected = {
      Command::prepare(1),
      Command::prepare(2),
      Command::entangle(0, 1),
      Command::entangle(1, 2),
      Command::measure(0, 0.0, {}, {}),
      Command::correct(Command::Axis::X, 1, {0}),
      Command::correct(Command::Axis::Z, 2, {0}),
      Command::measure(1, 0.0, {}, {}),
      Command::correct(Command::Axis::X, 2, {1}),
  };
  CHECK(p.commands == expected);
  CHECK(validate_pattern(g, p).empty());
}

TEST_CASE("derive_pattern rejects broken flows") {
  Geometry g = testutil::l3();
  Flow flow = flow_of(g);
  flow.successor[0] = 2;  // not adjacent
  CHECK_THROWS_AS(
      (void)derive_pattern(g, flow, zero_angles(g)), InvalidFlowError);
}

TEST_CASE("signal shifting without z-dependencies is the identity") {
  Geometry g = testutil::l3();
  MeasurementPattern p = derive_pattern(g, flow_of(g), zero_angles(g));
  CHECK(signal_shift(p) == p);
}

TEST_CASE("signal shifting on the length-4 line") {
  // Measure(2) on line(4) carries z_deps = {0}; shifting clears it and
  // rewrites the X correction on the output to depend on s2 + s0.
  Geometry g = gen_line(4);
  MeasurementPattern p = derive_pattern(g, flow_of(g), zero_angles(g));

  const Command* measure2 = nullptr;
  for (const Command& c : p.commands)
    if (c.op == Command::Op::Measure && c.qubit == 2) measure2 = &c;
  REQUIRE(measure2);
  CHECK(measure2->z_deps == std::vector<VertexId>{0});

  MeasurementPattern shifted = signal_shift(p);
  for (const Command& c : shifted.commands)
    if (c.op == Command::Op::Measure) CHECK(c.z_deps.empty());

  std::vector<Command> tail(shifted.commands.end() - 2,
                            shifted.commands.end());
  CHECK(tail[0] == Command::correct(Command::Axis::X, 3, {0, 2}));
  CHECK(tail[1] == Command::correct(Command::Axis::Z, 3, {1}));
  CHECK(validate_pattern(g, shifted).empty());
}

TEST_CASE("validate_pattern catches broken command streams") {
  Geometry g = testutil::l3();
  MeasurementPattern p = derive_pattern(g, flow_of(g), zero_angles(g));

  MeasurementPattern missing = p;
  missing.commands.erase(missing.commands.begin());  // drop Prepare(1)
  CHECK(!validate_pattern(g, missing).empty());

  MeasurementPattern future = p;
  future.commands[4].x_deps = {1};  // Measure(0) depending on later signal
  CHECK(!validate_pattern(g, future).empty());

  MeasurementPattern twice = p;
  twice.commands.push_back(Command::measure(0, 0.0, {}, {}));
  CHECK(!validate_pattern(g, twice).empty());
}
