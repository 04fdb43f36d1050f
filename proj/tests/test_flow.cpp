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

#include <algorithm>

#include "cflow/flow.hpp"
#include "cflow/generate.hpp"
#include "cflow/oracle.hpp"
#include "test_util.hpp"

using namespace cflow;

TEST_CASE("find_flow succeeds on the line fixture") {
  auto result = find_flow(testutil::l3());
  REQUIRE(std::holds_alternative<Flow>(result));
  const Flow& flow = std::get<Flow>(result);
  CHECK(flow.successor == std::vector<VertexId>{1, 2, kNoVertex});
  CHECK(flow.order.leq(0, 1));
  CHECK(flow.order.leq(1, 2));
  CHECK(flow.order.leq(0, 2));
  CHECK_FALSE(flow.order.leq(1, 0));
}

TEST_CASE("find_flow reports the C6 vicious circuit") {
  auto result = find_flow(gen_cycle(6));
  REQUIRE(std::holds_alternative<FlowFailure>(result));
  const FlowFailure& failure = std::get<FlowFailure>(result);
  CHECK(failure.kind == FlowFailure::Kind::ViciousCircuit);
  REQUIRE(failure.witness);
  CHECK(failure.witness->scc == std::vector<VertexId>{0, 2, 4});
  REQUIRE(failure.cover);
  CHECK(testutil::check_witness(gen_cycle(6), *failure.cover,
                                *failure.witness) == "");
}

TEST_CASE("find_flow applies the edge prefilter") {
  auto result = find_flow(testutil::triangle1());
  REQUIRE(std::holds_alternative<FlowFailure>(result));
  const FlowFailure& failure = std::get<FlowFailure>(result);
  CHECK(failure.kind == FlowFailure::Kind::EdgeBoundExceeded);
  CHECK(failure.edge_count == 3);
  CHECK(failure.bound == 2);
}

TEST_CASE("find_flow rejects unequal input/output sizes") {
  Geometry g = make_geometry(3, {{0, 1}, {1, 2}}, {0}, {1, 2});
  auto result = find_flow(g);
  REQUIRE(std::holds_alternative<FlowFailure>(result));
  const FlowFailure& failure = std::get<FlowFailure>(result);
  CHECK(failure.kind == FlowFailure::Kind::UnequalIO);
  CHECK(failure.input_count == 1);
  CHECK(failure.output_count == 2);
}

TEST_CASE("no-cover failures carry the partial family") {
  Geometry g = make_geometry(3, {{0, 2}}, {0}, {2});
  auto result = find_flow(g);
  REQUIRE(std::holds_alternative<FlowFailure>(result));
  const FlowFailure& failure = std::get<FlowFailure>(result);
  CHECK(failure.kind == FlowFailure::Kind::NoCover);
  CHECK(failure.uncovered == std::vector<VertexId>{1});
  CHECK(failure.paths.size() == 1);
}

TEST_CASE("check_flow accepts the line flow and reports a removed pair") {
  Geometry g = testutil::l3();
  std::vector<VertexId> f = {1, 2, kNoVertex};
  std::vector<std::pair<VertexId, VertexId>> pairs = {{0, 1}, {0, 2}, {1, 2}};
  CHECK(check_flow(g, f, pairs).ok);

  std::vector<std::pair<VertexId, VertexId>> missing = {{0, 1}, {1, 2}};
  auto report = check_flow(g, f, missing);
  CHECK_FALSE(report.ok);
  bool found = false;
  for (const auto& v : report.violations)
    if (v.kind == FlowViolation::Kind::NeighborOrderMissing && v.x == 0 &&
        v.y == 2)
      found = true;
  CHECK(found);
}

TEST_CASE("check_flow flags the C6 antisymmetry failure") {
  Geometry g = gen_cycle(6);
  // f(a_i) = b_i and the coarsest relation satisfying the flow conditions:
  // the reachability of the influence digraph, which relates the a's
  // cyclically.
  std::vector<VertexId> f = {1, kNoVertex, 3, kNoVertex, 5, kNoVertex};
  auto family = std::vector<DirectedPath>{
      DirectedPath{{0, 1}}, DirectedPath{{2, 3}}, DirectedPath{{4, 5}}};
  auto cover = std::get<PathCover>(to_path_cover(g, family));
  auto reach = testutil::closure_by_squaring(influence_digraph(g, cover));
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId x = 0; x < 6; ++x)
    for (VertexId y = 0; y < 6; ++y)
      if (x != y && reach[x][y]) pairs.emplace_back(x, y);

  auto report = check_flow(g, f, pairs);
  CHECK_FALSE(report.ok);
  bool antisymmetry = false;
  for (const auto& v : report.violations)
    if (v.kind == FlowViolation::Kind::OrderNotAntisymmetric &&
        !g.is_output(v.x) && !g.is_output(v.y))
      antisymmetry = true;
  CHECK(antisymmetry);
}

TEST_CASE("check_flow with a relation oracle") {
  Geometry g = testutil::l3();
  std::vector<VertexId> f = {1, 2, kNoVertex};
  auto result = find_flow(g);
  const Flow& flow = std::get<Flow>(result);
  CHECK(check_flow(g, f, [&](VertexId x, VertexId y) {
          return flow.order.leq(x, y);
        }).ok);
}

TEST_CASE("agreement with the brute-force oracle (sampled)") {
  std::mt19937_64 rng(20260809);
  for (int trial = 0; trial < 10000; ++trial) {
    Geometry g = testutil::random_equal_io(rng, 8);
    auto result = find_flow(g);
    bool found = std::holds_alternative<Flow>(result);
    auto oracle_successors = oracle::oracle_flows(g);
    REQUIRE(found == !oracle_successors.empty());

    if (found) {
      const Flow& flow = std::get<Flow>(result);
      // The successor function is unique; every oracle flow agrees with it.
      for (const auto& f : oracle_successors) CHECK(f == flow.successor);
      // Definition-1 conditions hold for the returned pair.
      CHECK(check_flow(g, flow.successor, order_pairs(flow.order)).ok);
    }
  }
}

TEST_CASE("successful covers are the unique maximum family (sampled)") {
  std::mt19937_64 rng(5150);
  int found = 0;
  while (found < 80) {
    Geometry g = testutil::random_equal_io(rng, 7);
    auto result = find_flow(g);
    auto* flow = std::get_if<Flow>(&result);
    if (!flow) continue;
    ++found;
    auto families = oracle::oracle_path_families(g);
    REQUIRE(families.size() == 1);
    std::vector<std::vector<VertexId>> cover_seqs;
    for (const auto& path : flow->cover.paths)
      cover_seqs.push_back(path.vertices);
    CHECK(families[0] == cover_seqs);
  }
}
