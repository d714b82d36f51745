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

#include "nondango/solver.hpp"

#include <algorithm>
#include <cassert>

namespace nondango {

namespace {

// One propagation pass; returns false on contradiction, sets `changed`.
bool propagate_pass(const Puzzle& p, Coloring& c, bool& changed, SearchStats* stats) {
    changed = false;
    auto assign = [&](int ci, Color col) -> bool {
        Color cur = c.at(static_cast<std::size_t>(ci));
        if (cur == col) return true;
        if (cur != Color::Unassigned) return false;  // conflicting forcings
        c.set(static_cast<std::size_t>(ci), col);
        changed = true;
        if (stats) ++stats->propagation_steps;
        return true;
    };

    for (RegionId r = 0; r < p.region_count(); ++r) {
        const auto& circles = p.region_circles(r);
        if (circles.empty()) return false;  // unsatisfiable, see header
        int blacks = 0, whites = 0;
        for (int ci : circles) {
            Color col = c.at(static_cast<std::size_t>(ci));
            if (col == Color::Black) ++blacks;
            if (col == Color::White) ++whites;
        }
        if (blacks > 1) return false;
        if (whites == static_cast<int>(circles.size())) return false;
        if (blacks == 1) {
            for (int ci : circles) {
                if (c.at(static_cast<std::size_t>(ci)) == Color::Unassigned &&
                    !assign(ci, Color::White))
                    return false;
            }
        } else if (whites == static_cast<int>(circles.size()) - 1) {
            for (int ci : circles) {
                if (c.at(static_cast<std::size_t>(ci)) == Color::Unassigned &&
                    !assign(ci, Color::Black))
                    return false;
            }
        }
    }

    for (const auto& t : p.triple_circles()) {
        Color a = c.at(static_cast<std::size_t>(t[0]));
        Color b = c.at(static_cast<std::size_t>(t[1]));
        Color d = c.at(static_cast<std::size_t>(t[2]));
        int n_black = (a == Color::Black) + (b == Color::Black) + (d == Color::Black);
        int n_white = (a == Color::White) + (b == Color::White) + (d == Color::White);
        if (n_black == 3 || n_white == 3) return false;
        if (n_black == 2 && n_white == 0) {
            for (int k = 0; k < 3; ++k)
                if (c.at(static_cast<std::size_t>(t[k])) == Color::Unassigned &&
                    !assign(t[k], Color::White))
                    return false;
        } else if (n_white == 2 && n_black == 0) {
            for (int k = 0; k < 3; ++k)
                if (c.at(static_cast<std::size_t>(t[k])) == Color::Unassigned &&
                    !assign(t[k], Color::Black))
                    return false;
        }
    }
    return true;
}

bool propagate_inplace(const Puzzle& p, Coloring& c, SearchStats* stats) {
    bool changed = true;
    while (changed) {
        if (!propagate_pass(p, c, changed, stats)) return false;
    }
    return true;
}

int lowest_unassigned(const Coloring& c) {
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c.at(i) == Color::Unassigned) return static_cast<int>(i);
    }
    return -1;
}

// Shared DFS for solve and enumerate. Emits solutions in canonical order
// because branching picks the lowest unassigned circle with Black first and
// propagation only ever assigns forced values.
bool search(const Puzzle& p, Coloring c, std::vector<Coloring>& out,
            std::optional<std::uint64_t> limit, SearchStats& stats) {
    ++stats.nodes_expanded;
    if (!propagate_inplace(p, c, &stats)) return true;
    int branch = lowest_unassigned(c);
    if (branch < 0) {
        assert(verify(p, c).empty());
        out.push_back(std::move(c));
        ++stats.solutions_found;
        return !(limit && stats.solutions_found >= *limit);
    }
    for (Color col : {Color::Black, Color::White}) {
        Coloring child = c;
        child.set(static_cast<std::size_t>(branch), col);
        if (!search(p, std::move(child), out, limit, stats)) return false;
    }
    return true;
}

}  // namespace

std::optional<Coloring> propagate(const Puzzle& p, const Coloring& partial,
                                  SearchStats* stats) {
    if (partial.size() != p.circle_count()) {
        throw PartialColoringError("coloring domain does not match the puzzle's circle set");
    }
    Coloring c = partial;
    if (!propagate_inplace(p, c, stats)) return std::nullopt;
    return c;
}

std::optional<Coloring> solve(const Puzzle& p, SearchStats* stats) {
    auto [sols, st] = enumerate_solutions(p, 1);
    if (stats) *stats = st;
    if (sols.empty()) return std::nullopt;
    return sols.front();
}

std::pair<std::vector<Coloring>, SearchStats> enumerate_solutions(
    const Puzzle& p, std::optional<std::uint64_t> limit) {
    std::vector<Coloring> out;
    SearchStats stats;
    if (limit && *limit == 0) return {out, stats};
    search(p, Coloring(p.circle_count()), out, limit, stats);
    // The DFS already emits in canonical order; sort defensively so the
    // contract holds even if the search strategy changes.
    std::sort(out.begin(), out.end());
    stats.solutions_found = out.size();
    return {std::move(out), stats};
}

std::vector<Coloring> dumb_enumerate(const Puzzle& p, std::size_t circle_cap) {
    if (p.circle_count() > circle_cap) {
        throw TooManyCirclesError("puzzle has " + std::to_string(p.circle_count()) +
                                  " circles, oracle cap is " + std::to_string(circle_cap));
    }
    const std::size_t n = p.circle_count();

    // A region or triple is "completed" once its highest circle index is
    // assigned; precompute those trigger lists.
    std::vector<std::vector<RegionId>> regions_done_at(n);
    for (RegionId r = 0; r < p.region_count(); ++r) {
        const auto& circles = p.region_circles(r);
        if (circles.empty()) return {};  // rule 1 can never hold
        int last = *std::max_element(circles.begin(), circles.end());
        regions_done_at[static_cast<std::size_t>(last)].push_back(r);
    }
    std::vector<std::vector<int>> triples_done_at(n);
    const auto& tc = p.triple_circles();
    for (std::size_t t = 0; t < tc.size(); ++t) {
        int last = std::max({tc[t][0], tc[t][1], tc[t][2]});
        triples_done_at[static_cast<std::size_t>(last)].push_back(static_cast<int>(t));
    }

    std::vector<Coloring> out;
    // A puzzle always has at least one region; with no circles at all the
    // region loop above has already returned empty.
    if (n == 0) return out;

    Coloring c(n);
    std::vector<Color> stack(n, Color::Unassigned);
    // Iterative DFS over circle indices.
    std::size_t depth = 0;
    std::vector<int> choice(n + 1, 0);  // 0 = try Black next, 1 = try White, 2 = exhausted
    while (true) {
        if (choice[depth] == 2) {
            if (depth == 0) break;
            --depth;
            c.set(depth, Color::Unassigned);
            continue;
        }
        Color col = (choice[depth] == 0) ? Color::Black : Color::White;
        ++choice[depth];
        c.set(depth, col);
        // Local checks on constraints completed by this assignment.
        bool ok = true;
        for (RegionId r : regions_done_at[depth]) {
            int blacks = 0;
            for (int ci : p.region_circles(r))
                blacks += (c.at(static_cast<std::size_t>(ci)) == Color::Black);
            if (blacks != 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            for (int t : triples_done_at[depth]) {
                Color a = c.at(static_cast<std::size_t>(tc[static_cast<std::size_t>(t)][0]));
                if (a == c.at(static_cast<std::size_t>(tc[static_cast<std::size_t>(t)][1])) &&
                    a == c.at(static_cast<std::size_t>(tc[static_cast<std::size_t>(t)][2]))) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) {
            c.set(depth, Color::Unassigned);
            continue;
        }
        if (depth + 1 == n) {
            assert(verify(p, c).empty());
            out.push_back(c);
            c.set(depth, Color::Unassigned);
            continue;
        }
        ++depth;
        choice[depth] = 0;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace nondango
