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

#ifndef NONDANGO_CORE_HPP
#define NONDANGO_CORE_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nondango {

// Grid coordinates: row 0 is the top row, col 0 the leftmost column.
struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

std::string to_string(const Cell& c);

using RegionId = int;

enum class Color : std::uint8_t { Unassigned = 0, Black = 1, White = 2 };

Color opposite(Color c);

// Line directions a run of three consecutive circles can lie on.
enum class Direction : std::uint8_t {
    Horizontal = 0,
    Vertical = 1,
    DiagDownRight = 2,
    DiagUpRight = 3,
};

std::string to_string(Direction d);

// Three consecutive collinear cells, each containing a circle.
// Cells are stored in row-major order.
struct CircleTriple {
    std::array<Cell, 3> cells;
    Direction dir;
    auto operator<=>(const CircleTriple&) const = default;
};

struct Violation {
    enum class Kind { RegionZeroBlack, RegionMultiBlack, MonochromeTriple };
    Kind kind;
    RegionId region = -1;             // for the region kinds
    std::array<Cell, 3> cells{};      // for MonochromeTriple
    Direction dir = Direction::Horizontal;
    Color color = Color::Unassigned;  // the repeated color of a monochrome triple
};

std::string to_string(const Violation& v);

struct PuzzleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DimensionMismatchError : PuzzleError {
    using PuzzleError::PuzzleError;
};
struct DisconnectedRegionError : PuzzleError {
    RegionId region;
    DisconnectedRegionError(RegionId r, const std::string& msg) : PuzzleError(msg), region(r) {}
};
struct OutOfBoundsCircleError : PuzzleError {
    Cell cell;
    OutOfBoundsCircleError(Cell c, const std::string& msg) : PuzzleError(msg), cell(c) {}
};
struct PartialColoringError : PuzzleError {
    using PuzzleError::PuzzleError;
};

class Puzzle;

// Total or partial black/white assignment over a puzzle's circles.
// Colors are indexed by circle index (circles sorted row-major).
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(std::size_t circle_count) : colors_(circle_count, Color::Unassigned) {}

    std::size_t size() const { return colors_.size(); }
    Color at(std::size_t circle_index) const { return colors_.at(circle_index); }
    void set(std::size_t circle_index, Color c) { colors_.at(circle_index) = c; }
    bool total() const;
    std::size_t unassigned_count() const;

    const std::vector<Color>& colors() const { return colors_; }

    // Lexicographic by circle index with Black < White (canonical solver order).
    auto operator<=>(const Coloring&) const = default;

private:
    std::vector<Color> colors_;
};

// Static puzzle instance: grid dimensions, region partition, circle placement.
// Immutable after construction; construct through new_puzzle().
class Puzzle {
public:
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int region_count() const { return region_count_; }
    std::size_t circle_count() const { return circles_.size(); }

    bool in_bounds(Cell c) const {
        return c.row >= 0 && c.row < rows_ && c.col >= 0 && c.col < cols_;
    }
    RegionId region_of(Cell c) const { return region_of_[index(c)]; }
    bool has_circle(Cell c) const { return in_bounds(c) && circle_index_[index(c)] >= 0; }
    // Index into circles() for a circled cell, -1 otherwise.
    int circle_index(Cell c) const { return in_bounds(c) ? circle_index_[index(c)] : -1; }

    // All circled cells in row-major order.
    const std::vector<Cell>& circles() const { return circles_; }
    // Circle indices belonging to one region.
    const std::vector<int>& region_circles(RegionId r) const { return region_circles_.at(r); }
    // Regions that contain no circle at all (legal but unsatisfiable).
    const std::vector<RegionId>& circle_free_regions() const { return circle_free_regions_; }

    const std::vector<CircleTriple>& triples() const { return triples_; }
    // Per triple, the circle indices of its three cells (row-major order).
    const std::vector<std::array<int, 3>>& triple_circles() const { return triple_circles_; }
    // Triple ids touching a given circle index.
    const std::vector<std::vector<int>>& triples_of_circle() const { return triples_of_circle_; }

    Color color_at(const Coloring& c, Cell cell) const;

private:
    friend Puzzle new_puzzle(int rows, int cols, const std::vector<RegionId>& region_grid,
                             const std::vector<Cell>& circle_cells);

    std::size_t index(Cell c) const {
        return static_cast<std::size_t>(c.row) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c.col);
    }

    int rows_ = 0;
    int cols_ = 0;
    int region_count_ = 0;
    std::vector<RegionId> region_of_;
    std::vector<int> circle_index_;
    std::vector<Cell> circles_;
    std::vector<std::vector<int>> region_circles_;
    std::vector<RegionId> circle_free_regions_;
    std::vector<CircleTriple> triples_;
    std::vector<std::array<int, 3>> triple_circles_;
    std::vector<std::vector<int>> triples_of_circle_;
};

// Validates and builds a puzzle. Region ids are canonicalized to first-appearance
// row-major order. Throws DimensionMismatchError, DisconnectedRegionError,
// OutOfBoundsCircleError.
Puzzle new_puzzle(int rows, int cols, const std::vector<RegionId>& region_grid,
                  const std::vector<Cell>& circle_cells);

// Every triple of consecutive collinear circled cells, all four directions,
// no duplicates, in deterministic scan order.
const std::vector<CircleTriple>& circle_triples(const Puzzle& p);

// Checks the two Nondango rules against a total coloring and lists every
// violation (empty result means the coloring is a solution).
// Throws PartialColoringError if any circle is Unassigned.
std::vector<Violation> verify(const Puzzle& p, const Coloring& coloring);

}  // namespace nondango

#endif  // NONDANGO_CORE_HPP
