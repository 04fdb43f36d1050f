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
#include "test_util.hpp"

using namespace cflow;
using oracle::PathFamily;

TEST_CASE("oracle_flows on the line fixture") {
  auto flows = oracle::oracle_flows(testutil::l3());
  REQUIRE(flows.size() == 1);
  CHECK(flows[0] == std::vector<VertexId>{1, 2, kNoVertex});
}

TEST_CASE("oracle_flows is empty on C6") {
  CHECK(oracle::oracle_flows(gen_cycle(6)).empty());
}

TEST_CASE("oracle_flows on two disjoint edges") {
  auto flows = oracle::oracle_flows(testutil::p2x2());
  REQUIRE(flows.size() == 1);
  CHECK(flows[0] == std::vector<VertexId>{2, 3, kNoVertex, kNoVertex});
}

TEST_CASE("oracle_path_families on the line fixture") {
  auto families = oracle::oracle_path_families(testutil::l3());
  REQUIRE(families.size() == 1);
  CHECK(families[0] == PathFamily{{0, 1, 2}});
}

TEST_CASE("C6 has exactly the two orientations as maximum families") {
  auto families = oracle::oracle_path_families(gen_cycle(6));
  REQUIRE(families.size() == 2);
  for (auto& family : families) CHECK(family.size() == 3);
  // a_i -> b_i and a_i -> b_{i-1} in some order
  PathFamily straight = {{0, 1}, {2, 3}, {4, 5}};
  PathFamily mirrored = {{0, 5}, {2, 1}, {4, 3}};
  CHECK(((families[0] == straight && families[1] == mirrored) ||
         (families[0] == mirrored && families[1] == straight)));
}

TEST_CASE("empty family is the maximum when no I-O path exists") {
  Geometry g = make_geometry(2, {}, {0}, {1});
  auto families = oracle::oracle_path_families(g);
  REQUIRE(families.size() == 1);
  CHECK(families[0].empty());
}

TEST_CASE("resource guards") {
  Geometry big_measured = gen_line(12);  // |O^c| = 11
  CHECK_THROWS_AS((void)oracle::oracle_flows(big_measured),
                  ResourceLimitError);
  CHECK_THROWS_AS((void)oracle::oracle_path_families(big_measured),
                  ResourceLimitError);
}

TEST_CASE("families are vertex-disjoint I->O paths (sampled)") {
  std::mt19937_64 rng(20260809);
  for (int trial = 0; trial < 200; ++trial) {
    Geometry g = testutil::random_equal_io(rng, 7);
    auto families = oracle::oracle_path_families(g);
    REQUIRE(!families.empty());
    const std::size_t size = families[0].size();
    for (const auto& family : families) {
      CHECK(family.size() == size);
      std::set<VertexId> used;
      for (const auto& path : family) {
        REQUIRE(!path.empty());
        CHECK(g.is_input(path.front()));
        CHECK(g.is_output(path.back()));
        for (std::size_t i = 0; i < path.size(); ++i) {
          CHECK(used.insert(path[i]).second);
          if (i + 1 < path.size()) CHECK(g.adjacent(path[i], path[i + 1]));
        }
      }
    }
  }
}
