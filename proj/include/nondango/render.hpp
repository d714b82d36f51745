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

#ifndef NONDANGO_RENDER_HPP
#define NONDANGO_RENDER_HPP

#include <string>

#include "nondango/core.hpp"

namespace nondango {

// Box-drawing rendering in the style of the paper's figures: heavy lines on
// region borders, light lines on interior grid, 'o' for uncolored circles and
// filled/open dots for a coloring. Deterministic.
// Throws PartialColoringError when a partial coloring is supplied.
std::string render_ascii(const Puzzle& p, const Coloring* coloring = nullptr);

// Self-contained, deterministic SVG document with the same conventions.
std::string render_svg(const Puzzle& p, const Coloring* coloring = nullptr);

}  // namespace nondango

#endif  // NONDANGO_RENDER_HPP
