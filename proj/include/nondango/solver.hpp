// Copyright 2026 The Nondango Authors
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

#ifndef NONDANGO_SOLVER_HPP
#define NONDANGO_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nondango/core.hpp"

namespace nondango {

struct SearchStats {
    std::uint64_t nodes_expanded = 0;
    std::uint64_t propagation_steps = 0;
    std::uint64_t solutions_found = 0;
};

struct TooManyCirclesError : PuzzleError {
    using PuzzleError::PuzzleError;
};

// Fixpoint of the sound inference rules:
//   (a) a region with a Black circle forces its other circles White;
//   (b) a region whose circles are all White but one forces that one Black
//       (covers the singleton-circle region);
//   (c) any triple with two circles of one color forces the third opposite.
// Returns nullopt on contradiction: a region with two Blacks or all White,
// a fully assigned monochrome triple, or a region with no circles at all.
std::optional<Coloring> propagate(const Puzzle& p, const Coloring& partial,
                                  SearchStats* stats = nullptr);

// Exact search: propagate + branch on the lowest unassigned circle in
// row-major order, Black first. Deterministic.
std::optional<Coloring> solve(const Puzzle& p, SearchStats* stats = nullptr);

// All verifying total colorings in canonical order (lexicographic by circle
// index with Black < White), truncated at `limit` when given.
std::pair<std::vector<Coloring>, SearchStats> enumerate_solutions(
    const Puzzle& p, std::optional<std::uint64_t> limit = std::nullopt);

// Independent test oracle: depth-first assignment over circles in fixed
// row-major order, pruning only by re-checking completed regions and triples
// with the core rules. Shares no inference logic with the main solver.
// Throws TooManyCirclesError when the puzzle exceeds circle_cap circles.
std::vector<Coloring> dumb_enumerate(const Puzzle& p, std::size_t circle_cap = 22);

}  // namespace nondango

#endif  // NONDANGO_SOLVER_HPP
