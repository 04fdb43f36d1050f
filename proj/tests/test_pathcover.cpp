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

#include "cflow/generate.hpp"
#include "cflow/oracle.hpp"
#include "cflow/pathcover.hpp"
#include "test_util.hpp"

using namespace cflow;

namespace {

std::vector<std::vector<VertexId>> as_sequences(
    const std::vector<DirectedPath>& family) {
  std::vector<std::vector<VertexId>> seqs;
  for (const auto& path : family) seqs.push_back(path.vertices);
  return seqs;
}

}  // namespace

TEST_CASE("network for the line fixture") {
  Geometry g = testutil::l3();
  FlowNetwork net = build_network(g);
  CHECK(net.node_count() == 8);

  using N = FlowNetwork;
  std::vector<std::pair<N::NodeId, N::NodeId>> expected = {
      {N::kSource, N::node_in(0)},  {N::node_in(0), N::node_out(0)},
      {N::node_in(1), N::node_out(1)}, {N::node_in(2), N::node_out(2)},
      {N::node_out(0), N::node_in(1)}, {N::node_out(1), N::node_in(0)},
      {N::node_out(1), N::node_in(2)}, {N::node_out(2), N::node_in(1)},
      {N::node_out(2), N::kSink}};
  auto arcs = net.forward_arcs();
  std::sort(arcs.begin(), arcs.end());
  std::sort(expected.begin(), expected.end());
  CHECK(arcs == expected);

  CHECK(net.run_max_flow() == 1);
}

TEST_CASE("max flow values on fixtures") {
  auto value = [](const Geometry& g) {
    FlowNetwork net = build_network(g);
    return net.run_max_flow();
  };
  CHECK(value(testutil::p2x2()) == 2);
  // Frozen from oracle_path_families(C6): both maximum families have size 3.
  CHECK(value(gen_cycle(6)) == 3);
}

TEST_CASE("path extraction on fixtures") {
  CHECK(as_sequences(max_disjoint_paths(testutil::l3())) ==
        std::vector<std::vector<VertexId>>{{0, 1, 2}});
  CHECK(as_sequences(max_disjoint_paths(testutil::p2x2())) ==
        std::vector<std::vector<VertexId>>{{0, 2}, {1, 3}});

  // C6 has two maximum families; the solver must return one of them.
  auto family = as_sequences(max_disjoint_paths(gen_cycle(6)));
  auto oracle_families = oracle::oracle_path_families(gen_cycle(6));
  CHECK(family.size() == 3);
  CHECK(std::count(oracle_families.begin(), oracle_families.end(), family) ==
        1);
}

TEST_CASE("extraction is deterministic") {
  Geometry g = gen_random(8, 12, 2, 41);
  auto first = as_sequences(max_disjoint_paths(g));
  for (int run = 0; run < 3; ++run)
    CHECK(as_sequences(max_disjoint_paths(g)) == first);
}

TEST_CASE("to_path_cover builds successor and predecessor maps") {
  Geometry g = testutil::l3();
  auto result = to_path_cover(g, max_disjoint_paths(g));
  REQUIRE(std::holds_alternative<PathCover>(result));
  const PathCover& cover = std::get<PathCover>(result);
  CHECK(cover.successor == std::vector<VertexId>{1, 2, kNoVertex});
  CHECK(cover.predecessor == std::vector<VertexId>{kNoVertex, 0, 1});
  CHECK(cover.chain_index == std::vector<std::uint32_t>{0, 0, 0});
  CHECK(cover.chain_pos == std::vector<std::uint32_t>{0, 1, 2});
}

TEST_CASE("to_path_cover reports uncovered vertices") {
  Geometry g = make_geometry(3, {{0, 2}}, {0}, {2});
  std::vector<DirectedPath> family = {DirectedPath{{0, 2}}};
  auto result = to_path_cover(g, family);
  REQUIRE(std::holds_alternative<NoCover>(result));
  CHECK(std::get<NoCover>(result).uncovered == std::vector<VertexId>{1});
}

TEST_CASE("to_path_cover on an explicit C6 family") {
  Geometry g = gen_cycle(6);
  std::vector<DirectedPath> family = {DirectedPath{{0, 1}},
                                      DirectedPath{{2, 3}},
                                      DirectedPath{{4, 5}}};
  auto result = to_path_cover(g, family);
  REQUIRE(std::holds_alternative<PathCover>(result));
  const PathCover& cover = std::get<PathCover>(result);
  CHECK(cover.successor ==
        std::vector<VertexId>{1, kNoVertex, 3, kNoVertex, 5, kNoVertex});
}

TEST_CASE("to_path_cover flags shape violations") {
  // 0-1-2 with 1 both input and output: the single covering path crosses
  // I and O internally.
  Geometry g = make_geometry(3, {{0, 1}, {1, 2}}, {0, 1}, {1, 2});
  std::vector<DirectedPath> family = {DirectedPath{{0, 1, 2}}};
  auto result = to_path_cover(g, family);
  REQUIRE(std::holds_alternative<NoCover>(result));
  const NoCover& failure = std::get<NoCover>(result);
  CHECK(failure.uncovered.empty());
  CHECK(failure.shape_violations.size() == 2);
}

TEST_CASE("to_path_cover rejects malformed families") {
  Geometry g = testutil::l3();
  CHECK_THROWS_AS(
      (void)to_path_cover(g, {DirectedPath{{0, 2}}}),  // not an edge
      CflowError);
  CHECK_THROWS_AS(
      (void)to_path_cover(g, {DirectedPath{{0, 1}}, DirectedPath{{1, 2}}}),
      CflowError);  // overlap at 1
}

TEST_CASE("trivial paths cover input-output vertices") {
  Geometry g = make_geometry(1, {}, {0}, {0});
  auto family = max_disjoint_paths(g);
  REQUIRE(family.size() == 1);
  CHECK(family[0].trivial());
  auto result = to_path_cover(g, family);
  CHECK(std::holds_alternative<PathCover>(result));
}

TEST_CASE("family size equals the brute-force maximum (sampled)") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    Geometry g = testutil::random_equal_io(rng, 8);
    auto family = max_disjoint_paths(g);
    CHECK(family.size() == oracle::oracle_max_family_size(g));

    std::set<VertexId> used;
    for (const auto& path : family) {
      CHECK(g.is_input(path.initial()));
      CHECK(g.is_output(path.final()));
      for (VertexId v : path.vertices) CHECK(used.insert(v).second);
    }
  }
}

TEST_CASE("network flow value equals family size (sampled)") {
  std::mt19937_64 rng(78);
  for (int trial = 0; trial < 100; ++trial) {
    Geometry g = testutil::random_equal_io(rng, 8);
    FlowNetwork net = build_network(g);
    auto value = net.run_max_flow();
    CHECK(static_cast<std::size_t>(value) == max_disjoint_paths(g).size());
  }
}
