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

#ifndef NONDANGO_IO_HPP
#define NONDANGO_IO_HPP

#include <map>
#include <string>
#include <vector>

#include "nondango/core.hpp"
#include "nondango/reducer.hpp"

namespace nondango {

// All file formats are newline-terminated, line-oriented, space-delimited
// text. Serializers emit canonical form: single spaces, one record per line,
// trailing newline. parse(serialize(x)) is the identity and
// serialize(parse(doc)) == doc for canonical documents.
//
// Puzzle file:
//   nondango 1
//   rows <r>
//   cols <c>
//   regions
//   <r lines of c region tokens>
//   circles
//   <r lines of c tokens from {., o}>
//
// Solution file:
//   nondango-solution 1
//   rows <r>
//   cols <c>
//   solution
//   <r lines of c tokens from {., B, W}>  (non-'.' exactly at circle cells)
//
// Formula file (1-in-3-SAT+): `p onein3 <n> <m>` then m lines of 3 positive
// integers; `c` comment lines and blank lines are permitted before records.
//
// Map file:
//   nondango-map 1
//   var <i> col <c>        (one per variable, ascending i)
//   clause <j> row <r>     (one per clause, ascending j)
//   literal <j> <i> <row> <col>   (ascending (j, i))

struct SyntaxError : std::runtime_error {
    int line;  // 1-based; 0 when not attributable to a line
    SyntaxError(int line_no, const std::string& reason)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + reason),
          line(line_no) {}
};

Puzzle parse_puzzle(const std::string& text);
std::string serialize_puzzle(const Puzzle& p);

// Solution grids are tied to a puzzle: the coloring's domain is its circles.
Coloring parse_solution(const std::string& text, const Puzzle& p);
std::string serialize_solution(const Puzzle& p, const Coloring& c);

Formula parse_formula(const std::string& text);
std::string serialize_formula(const Formula& f);

// The var/clause/literal records emitted alongside a reduced puzzle.
struct MapFile {
    std::vector<int> column_of;                    // by variable, 1-based index 0 unused
    std::vector<int> row_of;                       // by clause, 1-based index 0 unused
    std::map<std::pair<int, int>, Cell> literal_cell_of;  // (clause, var) -> cell
};

MapFile parse_map(const std::string& text);
std::string serialize_map(const MapFile& m);
MapFile map_of(const ReductionArtifact& artifact);

// Filesystem helpers used by the CLI and tests.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace nondango

#endif  // NONDANGO_IO_HPP
