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

#ifndef NONDANGO_TESTS_TEST_UTIL_HPP
#define NONDANGO_TESTS_TEST_UTIL_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "nondango/core.hpp"
#include "nondango/io.hpp"
#include "nondango/reducer.hpp"

namespace nondango::test {

inline std::string golden_path(const std::string& name) {
    return std::string(NONDANGO_GOLDEN_DIR) + "/" + name;
}

inline std::string golden(const std::string& name) { return read_file(golden_path(name)); }

// Random puzzle with 4-connected regions grown from random seeds and a capped
// number of circles. Deterministic for a given engine state.
inline Puzzle random_puzzle(std::mt19937_64& rng, int max_rows = 6, int max_cols = 6,
                            std::size_t max_circles = 20) {
    const int rows = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_rows));
    const int cols = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_cols));
    const int cells = rows * cols;
    const int n_regions = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::min(cells, 8)));

    std::vector<int> order(static_cast<std::size_t>(cells));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<RegionId> region(static_cast<std::size_t>(cells), -1);
    for (int k = 0; k < n_regions; ++k) region[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int idx : order) {
            if (region[static_cast<std::size_t>(idx)] >= 0) continue;
            int r = idx / cols, c = idx % cols;
            constexpr int dr[4] = {1, -1, 0, 0};
            constexpr int dc[4] = {0, 0, 1, -1};
            int start = static_cast<int>(rng() % 4);
            for (int k = 0; k < 4; ++k) {
                int d = (start + k) % 4;
                int nr = r + dr[d], nc = c + dc[d];
                if (nr < 0 || nr >= rows || nc < 0 || nc >= cols) continue;
                RegionId nb = region[static_cast<std::size_t>(nr * cols + nc)];
                if (nb >= 0) {
                    region[static_cast<std::size_t>(idx)] = nb;
                    progress = true;
                    break;
                }
            }
        }
    }

    std::vector<Cell> circles;
    std::vector<int> cells_order(static_cast<std::size_t>(cells));
    std::iota(cells_order.begin(), cells_order.end(), 0);
    std::shuffle(cells_order.begin(), cells_order.end(), rng);
    std::size_t want = rng() % (max_circles + 1);
    for (int idx : cells_order) {
        if (circles.size() >= want) break;
        circles.push_back({idx / cols, idx % cols});
    }
    return new_puzzle(rows, cols, region, circles);
}

// Random valid 1-in-3-SAT+ formula with n <= max_n, m <= max_m.
inline Formula random_formula(std::mt19937_64& rng, int max_n = 5, int max_m = 3) {
    for (int attempt = 0;; ++attempt) {
        int n = 3 + static_cast<int>(rng() % static_cast<unsigned>(max_n - 2));
        int m = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_m));
        if (attempt > 200) m = std::max(m, (n + 2) / 3);
        std::vector<std::array<int, 3>> clauses;
        for (int j = 0; j < m; ++j) {
            std::vector<int> vars(static_cast<std::size_t>(n));
            std::iota(vars.begin(), vars.end(), 1);
            std::shuffle(vars.begin(), vars.end(), rng);
            std::array<int, 3> cl{vars[0], vars[1], vars[2]};
            std::sort(cl.begin(), cl.end());
            clauses.push_back(cl);
        }
        std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
        for (const auto& cl : clauses)
            for (int v : cl) used[static_cast<std::size_t>(v)] = 1;
        if (std::all_of(used.begin() + 1, used.end(), [](char u) { return u != 0; }))
            return validate_formula(n, clauses);
    }
}

inline bool assignment_satisfies_1in3(const Formula& f, const std::map<int, bool>& a) {
    for (const auto& cl : f.clauses) {
        int trues = 0;
        for (int v : cl) trues += a.count(v) && a.at(v);
        if (trues != 1) return false;
    }
    return true;
}

}  // namespace nondango::test

#endif  // NONDANGO_TESTS_TEST_UTIL_HPP
