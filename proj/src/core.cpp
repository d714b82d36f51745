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

#include "nondango/core.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace nondango {

std::string to_string(const Cell& c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

Color opposite(Color c) {
    if (c == Color::Black) return Color::White;
    if (c == Color::White) return Color::Black;
    return Color::Unassigned;
}

std::string to_string(Direction d) {
    switch (d) {
        case Direction::Horizontal: return "horizontal";
        case Direction::Vertical: return "vertical";
        case Direction::DiagDownRight: return "diag-down-right";
        case Direction::DiagUpRight: return "diag-up-right";
    }
    return "?";
}

std::string to_string(const Violation& v) {
    std::ostringstream os;
    switch (v.kind) {
        case Violation::Kind::RegionZeroBlack:
            os << "region R" << v.region << " has no black circle";
            break;
        case Violation::Kind::RegionMultiBlack:
            os << "region R" << v.region << " has more than one black circle";
            break;
        case Violation::Kind::MonochromeTriple:
            os << "monochrome " << to_string(v.dir) << " triple "
               << to_string(v.cells[0]) << " " << to_string(v.cells[1]) << " "
               << to_string(v.cells[2]) << " all "
               << (v.color == Color::Black ? "black" : "white");
            break;
    }
    return os.str();
}

bool Coloring::total() const {
    return std::none_of(colors_.begin(), colors_.end(),
                        [](Color c) { return c == Color::Unassigned; });
}

std::size_t Coloring::unassigned_count() const {
    return static_cast<std::size_t>(
        std::count(colors_.begin(), colors_.end(), Color::Unassigned));
}

Color Puzzle::color_at(const Coloring& c, Cell cell) const {
    int idx = circle_index(cell);
    return idx < 0 ? Color::Unassigned : c.at(static_cast<std::size_t>(idx));
}

namespace {

// Offsets per direction; triples are scanned from their row-major-first cell.
constexpr int kDr[4] = {0, 1, 1, -1};
constexpr int kDc[4] = {1, 0, 1, 1};

void check_region_connectivity(int rows, int cols, const std::vector<RegionId>& region_of,
                               RegionId region_count) {
    std::vector<Cell> seed(static_cast<std::size_t>(region_count), Cell{-1, -1});
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            RegionId id = region_of[static_cast<std::size_t>(r * cols + c)];
            if (seed[static_cast<std::size_t>(id)].row < 0) seed[static_cast<std::size_t>(id)] = {r, c};
        }
    std::vector<int> reach(static_cast<std::size_t>(rows * cols), 0);
    std::vector<int> sizes(static_cast<std::size_t>(region_count), 0);
    for (const RegionId id : region_of) sizes[static_cast<std::size_t>(id)]++;
    std::vector<Cell> stack;
    for (RegionId id = 0; id < region_count; ++id) {
        stack.clear();
        stack.push_back(seed[static_cast<std::size_t>(id)]);
        reach[static_cast<std::size_t>(seed[static_cast<std::size_t>(id)].row * cols +
                                       seed[static_cast<std::size_t>(id)].col)] = 1;
        int found = 0;
        while (!stack.empty()) {
            Cell cur = stack.back();
            stack.pop_back();
            ++found;
            constexpr int dr[4] = {1, -1, 0, 0};
            constexpr int dc[4] = {0, 0, 1, -1};
            for (int k = 0; k < 4; ++k) {
                Cell nb{cur.row + dr[k], cur.col + dc[k]};
                if (nb.row < 0 || nb.row >= rows || nb.col < 0 || nb.col >= cols) continue;
                std::size_t ni = static_cast<std::size_t>(nb.row * cols + nb.col);
                if (reach[ni] || region_of[ni] != id) continue;
                reach[ni] = 1;
                stack.push_back(nb);
            }
        }
        if (found != sizes[static_cast<std::size_t>(id)]) {
            throw DisconnectedRegionError(
                id, "region R" + std::to_string(id) + " is not 4-connected");
        }
    }
}

}  // namespace

Puzzle new_puzzle(int rows, int cols, const std::vector<RegionId>& region_grid,
                  const std::vector<Cell>& circle_cells) {
    if (rows < 1 || cols < 1) {
        throw DimensionMismatchError("grid dimensions must be at least 1x1");
    }
    if (region_grid.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
        throw DimensionMismatchError("region grid size does not match rows*cols");
    }

    Puzzle p;
    p.rows_ = rows;
    p.cols_ = cols;

    // Canonicalize region ids to first-appearance row-major order.
    std::map<RegionId, RegionId> remap;
    p.region_of_.resize(region_grid.size());
    for (std::size_t i = 0; i < region_grid.size(); ++i) {
        auto [it, inserted] = remap.try_emplace(region_grid[i], static_cast<RegionId>(remap.size()));
        p.region_of_[i] = it->second;
    }
    p.region_count_ = static_cast<int>(remap.size());
    check_region_connectivity(rows, cols, p.region_of_, p.region_count_);

    p.circle_index_.assign(region_grid.size(), -1);
    std::vector<Cell> sorted = circle_cells;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (const Cell& c : sorted) {
        if (!p.in_bounds(c)) {
            throw OutOfBoundsCircleError(c, "circle " + to_string(c) + " is outside the grid");
        }
        p.circle_index_[p.index(c)] = static_cast<int>(p.circles_.size());
        p.circles_.push_back(c);
    }

    p.region_circles_.assign(static_cast<std::size_t>(p.region_count_), {});
    for (std::size_t i = 0; i < p.circles_.size(); ++i) {
        p.region_circles_[static_cast<std::size_t>(p.region_of(p.circles_[i]))].push_back(
            static_cast<int>(i));
    }
    for (RegionId r = 0; r < p.region_count_; ++r) {
        if (p.region_circles_[static_cast<std::size_t>(r)].empty()) {
            p.circle_free_regions_.push_back(r);
        }
    }

    // Precompute circle triples. Scan start cells row-major; for each direction
    // accept only runs of three circled cells. Start cells are chosen so that a
    // triple is found exactly once. Cells are reported in row-major order.
    p.triples_of_circle_.assign(p.circles_.size(), {});
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (p.circle_index_[p.index({r, c})] < 0) continue;
            for (int d = 0; d < 4; ++d) {
                Cell b{r + kDr[d], c + kDc[d]};
                Cell e{r + 2 * kDr[d], c + 2 * kDc[d]};
                if (!p.in_bounds(b) || !p.in_bounds(e)) continue;
                if (!p.has_circle(b) || !p.has_circle(e)) continue;
                CircleTriple t;
                t.dir = static_cast<Direction>(d);
                t.cells = {Cell{r, c}, b, e};
                std::sort(t.cells.begin(), t.cells.end());
                int id = static_cast<int>(p.triples_.size());
                p.triple_circles_.push_back({p.circle_index(t.cells[0]),
                                             p.circle_index(t.cells[1]),
                                             p.circle_index(t.cells[2])});
                for (int ci : p.triple_circles_.back()) {
                    p.triples_of_circle_[static_cast<std::size_t>(ci)].push_back(id);
                }
                p.triples_.push_back(t);
            }
        }
    }
    return p;
}

const std::vector<CircleTriple>& circle_triples(const Puzzle& p) { return p.triples(); }

std::vector<Violation> verify(const Puzzle& p, const Coloring& coloring) {
    if (coloring.size() != p.circle_count()) {
        throw PartialColoringError("coloring domain does not match the puzzle's circle set");
    }
    if (!coloring.total()) {
        throw PartialColoringError("verify requires a total coloring");
    }
    std::vector<Violation> out;
    for (RegionId r = 0; r < p.region_count(); ++r) {
        int blacks = 0;
        for (int ci : p.region_circles(r)) {
            if (coloring.at(static_cast<std::size_t>(ci)) == Color::Black) ++blacks;
        }
        if (blacks == 0) {
            out.push_back({Violation::Kind::RegionZeroBlack, r, {}, Direction::Horizontal,
                           Color::Unassigned});
        } else if (blacks > 1) {
            out.push_back({Violation::Kind::RegionMultiBlack, r, {}, Direction::Horizontal,
                           Color::Unassigned});
        }
    }
    const auto& tc = p.triple_circles();
    for (std::size_t i = 0; i < tc.size(); ++i) {
        Color a = coloring.at(static_cast<std::size_t>(tc[i][0]));
        if (a == coloring.at(static_cast<std::size_t>(tc[i][1])) &&
            a == coloring.at(static_cast<std::size_t>(tc[i][2]))) {
            out.push_back({Violation::Kind::MonochromeTriple, -1, p.triples()[i].cells,
                           p.triples()[i].dir, a});
        }
    }
    return out;
}

}  // namespace nondango
