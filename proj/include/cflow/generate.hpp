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

#include "cflow/geometry.hpp"

namespace cflow {

class BadParamsError : public CflowError {
 public:
  using CflowError::CflowError;
};

/// Path 0-1-...-(n-1), I = {0}, O = {n-1}. line(1) is the one-vertex
/// identity geometry with I = O = {0}.
Geometry gen_line(std::size_t n);

/// Two rails of n/2 vertices with rungs between them; I = rail heads,
/// O = rail tails (k = 2). n must be even and >= 2.
Geometry gen_ladder(std::size_t n);

/// Cycle a0 b0 a1 b1 ... of the given even size >= 4, with I = {a_i} and
/// O = {b_i}. No geometry of this family has a flow.
Geometry gen_cycle(std::size_t size);

/// Seed-deterministic geometry with n vertices, m distinct edges, k inputs
/// and k outputs (drawn independently, so they may overlap).
Geometry gen_random(std::size_t n, std::size_t m, std::size_t k,
                    std::uint64_t seed);

}  // namespace cflow
