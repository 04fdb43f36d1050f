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

#include "cflow/generate.hpp"

#include <random>
#include <set>
#include <string>

namespace cflow {

namespace {

// std::uniform_int_distribution is implementation-defined; plain modulo
// keeps generated fixtures identical across toolchains.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

}  // namespace

Geometry gen_line(std::size_t n) {
  if (n < 1) throw BadParamsError("line: need at least one vertex");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return make_geometry(n, std::move(edges), {0},
                       {static_cast<VertexId>(n - 1)});
}

Geometry gen_ladder(std::size_t n) {
  if (n < 2 || n % 2 != 0)
    throw BadParamsError("ladder: vertex count must be even and >= 2");
  const auto len = static_cast<VertexId>(n / 2);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 0; i + 1 < len; ++i) {
    edges.push_back({i, i + 1});                      // top rail
    edges.push_back({len + i, len + i + 1});          // bottom rail
  }
  for (VertexId i = 0; i < len; ++i) edges.push_back({i, len + i});  // rungs
  return make_geometry(n, std::move(edges), {0, len},
                       {len - 1, static_cast<VertexId>(2 * len - 1)});
}

Geometry gen_cycle(std::size_t size) {
  if (size < 4 || size % 2 != 0)
    throw BadParamsError("cycle: size must be even and >= 4");
  const auto count = static_cast<VertexId>(size);
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<std::string> names(size);
  std::vector<VertexId> inputs, outputs;
  for (VertexId v = 0; v < count; ++v) {
    edges.push_back({v, static_cast<VertexId>((v + 1) % count)});
    if (v % 2 == 0) {
      names[v] = "a" + std::to_string(v / 2);
      inputs.push_back(v);
    } else {
      names[v] = "b" + std::to_string(v / 2);
      outputs.push_back(v);
    }
  }
  return make_geometry(size, std::move(edges), std::move(inputs),
                       std::move(outputs), std::move(names));
}

Geometry gen_random(std::size_t n, std::size_t m, std::size_t k,
                    std::uint64_t seed) {
  if (n == 0) throw BadParamsError("random: need at least one vertex");
  const std::size_t max_edges = n * (n - 1) / 2;
  if (m > max_edges)
    throw BadParamsError("random: more edges than a simple graph allows");
  if (k > n) throw BadParamsError("random: more terminals than vertices");

  std::mt19937_64 rng(seed);
  std::set<std::pair<VertexId, VertexId>> edge_set;
  while (edge_set.size() < m) {
    auto u = static_cast<VertexId>(below(rng, n));
    auto v = static_cast<VertexId>(below(rng, n));
    if (u == v) continue;
    edge_set.insert({std::min(u, v), std::max(u, v)});
  }

  auto draw_terminals = [&]() {
    std::set<VertexId> chosen;
    while (chosen.size() < k)
      chosen.insert(static_cast<VertexId>(below(rng, n)));
    return std::vector<VertexId>(chosen.begin(), chosen.end());
  };
  std::vector<VertexId> inputs = draw_terminals();
  std::vector<VertexId> outputs = draw_terminals();

  return make_geometry(
      n, {edge_set.begin(), edge_set.end()}, std::move(inputs),
      std::move(outputs));
}

}  // namespace cflow
