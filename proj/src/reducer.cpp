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

#include "nondango/reducer.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace nondango {

Formula validate_formula(int n_vars, const std::vector<std::array<int, 3>>& clauses) {
    if (clauses.empty() || n_vars <= 0) throw EmptyFormulaError("formula has no clauses or no variables");
    std::vector<char> used(static_cast<std::size_t>(n_vars) + 1, 0);
    for (std::size_t j = 0; j < clauses.size(); ++j) {
        const auto& cl = clauses[j];
        for (int v : cl) {
            if (v < 1 || v > n_vars)
                throw VarOutOfRangeError("clause " + std::to_string(j + 1) + ": variable " +
                                         std::to_string(v) + " out of range 1.." +
                                         std::to_string(n_vars));
            used[static_cast<std::size_t>(v)] = 1;
        }
        if (cl[0] == cl[1] || cl[0] == cl[2] || cl[1] == cl[2])
            throw DuplicateVarInClauseError("clause " + std::to_string(j + 1) +
                                            " repeats a variable");
    }
    for (int v = 1; v <= n_vars; ++v) {
        if (!used[static_cast<std::size_t>(v)])
            throw UnusedVariableError(v, "variable " + std::to_string(v) +
                                             " occurs in no clause");
    }
    return Formula{n_vars, clauses};
}

std::uint64_t count_1in3(const Formula& f) {
    if (f.n_vars > 24)
        throw TooManyVariablesError("count_1in3 enumerates 2^n assignments; n_vars <= 24 required");
    std::vector<std::uint32_t> masks;
    masks.reserve(f.clauses.size());
    for (const auto& cl : f.clauses) {
        std::uint32_t m = 0;
        for (int v : cl) m |= 1u << (v - 1);
        masks.push_back(m);
    }
    std::uint64_t count = 0;
    const std::uint64_t limit = 1ull << f.n_vars;
    for (std::uint64_t a = 0; a < limit; ++a) {
        bool ok = true;
        for (std::uint32_t m : masks) {
            if (std::popcount(static_cast<std::uint32_t>(a) & m) != 1) {
                ok = false;
                break;
            }
        }
        count += ok;
    }
    return count;
}

LayoutPlan plan_layout(const Formula& f) {
    LayoutPlan plan;
    plan.lane_width = kLaneWidth;
    plan.band_height = kBandHeight;
    plan.margin_top = kMarginTop;
    plan.margin_bottom = kMarginBottom;
    const int m = static_cast<int>(f.clauses.size());
    for (int j = 0; j < m; ++j)
        plan.clause_row_of.push_back(kMarginTop + j * (kBandHeight + 1));
    for (int v = 0; v < f.n_vars; ++v)
        plan.column_of.push_back(kChainPortCol + v * kLaneWidth);
    plan.rows = kMarginTop + (m - 1) * (kBandHeight + 1) + 1 + kMarginBottom;
    // lane footprint spans columns c-3..c+4
    plan.cols = plan.column_of.back() + 5;
    plan.area_bound_constant = 160;
    return plan;
}

ReductionArtifact reduce(const Formula& formula) {
    Formula f = validate_formula(formula.n_vars, formula.clauses);
    ReductionArtifact art;
    art.formula = f;
    art.plan = plan_layout(f);

    HostBuilder host(art.plan.rows, art.plan.cols);

    // Clause rows: full-width height-1 regions with the three literal stones
    // at their variables' columns.
    const int m = static_cast<int>(f.clauses.size());
    for (int j = 1; j <= m; ++j) {
        int row = art.plan.clause_row_of[static_cast<std::size_t>(j - 1)];
        host.add_full_row_region(row);
        for (int v : f.clauses[static_cast<std::size_t>(j - 1)]) {
            Cell cell{row, art.plan.column_of[static_cast<std::size_t>(v - 1)]};
            host.add_circle(cell);
            art.literal_cell_of[{j, v}] = cell;
        }
    }

    // Lane chains: one instance per pair of consecutive occurrences.
    for (int v = 1; v <= f.n_vars; ++v) {
        std::vector<int> occ;
        for (int j = 1; j <= m; ++j) {
            const auto& cl = f.clauses[static_cast<std::size_t>(j - 1)];
            if (std::find(cl.begin(), cl.end(), v) != cl.end()) occ.push_back(j);
        }
        const int col = art.plan.column_of[static_cast<std::size_t>(v - 1)];
        for (std::size_t k = 0; k + 1 < occ.size(); ++k) {
            int gap = occ[k + 1] - occ[k] - 1;  // skipped clause rows in between
            GadgetTemplate tmpl = lane_chain_template(gap);
            int top_row = art.plan.clause_row_of[static_cast<std::size_t>(occ[k] - 1)];
            Cell offset{top_row - kChainPortRow, col - kChainPortCol};
            GadgetInstance inst = instantiate(tmpl, offset, host);
            for (const auto& [name, cell] : inst.port_bindings) {
                if (name.rfind("skipped", 0) == 0) art.skip_circles.push_back(cell);
            }
            art.instances.push_back(std::move(inst));
        }
    }

    art.puzzle = host.finalize(&art.fill_circles);

    AuditReport audit = audit_layout(art);
    if (!audit.ok()) {
        std::string msg = "layout audit failed:";
        for (const auto& s : audit.failures) msg += "\n  " + s;
        throw LayoutAuditFailedError(msg);
    }
    return art;
}

std::map<int, bool> extract_assignment(const ReductionArtifact& a, const Coloring& c) {
    if (!verify(a.puzzle, c).empty())
        throw InvalidSolutionError("coloring does not solve the reduced puzzle");
    std::map<int, bool> assignment;
    for (int v = 1; v <= a.formula.n_vars; ++v) {
        for (std::size_t j = 1; j <= a.formula.clauses.size(); ++j) {
            auto it = a.literal_cell_of.find({static_cast<int>(j), v});
            if (it == a.literal_cell_of.end()) continue;
            assignment[v] = a.puzzle.color_at(c, it->second) == Color::Black;
            break;  // first occurrence decides
        }
    }
    return assignment;
}

AuditReport audit_layout(const ReductionArtifact& a) {
    AuditReport rep;
    const Puzzle& p = a.puzzle;

    // (1) every triple is internal to one gadget instance or one clause row
    std::set<int> clause_rows(a.plan.clause_row_of.begin(), a.plan.clause_row_of.end());
    std::vector<std::set<Cell>> footprints;
    footprints.reserve(a.instances.size());
    for (const auto& inst : a.instances)
        footprints.emplace_back(inst.footprint.begin(), inst.footprint.end());
    for (const auto& t : p.triples()) {
        bool same_clause_row = t.cells[0].row == t.cells[1].row &&
                               t.cells[1].row == t.cells[2].row &&
                               clause_rows.count(t.cells[0].row) > 0;
        bool inside_instance = false;
        for (const auto& fp : footprints) {
            if (fp.count(t.cells[0]) && fp.count(t.cells[1]) && fp.count(t.cells[2])) {
                inside_instance = true;
                break;
            }
        }
        if (!same_clause_row && !inside_instance) {
            rep.failures.push_back("triple " + to_string(t.cells[0]) + " " +
                                   to_string(t.cells[1]) + " " + to_string(t.cells[2]) +
                                   " crosses gadget boundaries");
        }
    }

    // (2) clause-row circles of different lanes are >= 3 columns apart
    auto lane_of_col = [&](int col) {
        for (std::size_t v = 0; v < a.plan.column_of.size(); ++v) {
            int c = a.plan.column_of[v];
            if (col >= c - 3 && col <= c + 4) return static_cast<int>(v) + 1;
        }
        return 0;
    };
    for (int row : clause_rows) {
        std::vector<Cell> in_row;
        for (const Cell& cc : p.circles())
            if (cc.row == row) in_row.push_back(cc);
        for (std::size_t i = 0; i < in_row.size(); ++i) {
            for (std::size_t j = i + 1; j < in_row.size(); ++j) {
                if (lane_of_col(in_row[i].col) != lane_of_col(in_row[j].col) &&
                    std::abs(in_row[i].col - in_row[j].col) < 3) {
                    rep.failures.push_back("clause-row circles " + to_string(in_row[i]) + " and " +
                                           to_string(in_row[j]) + " of different lanes are closer than 3 columns");
                }
            }
        }
    }

    // (3) fill circles have circle-free 8-neighborhoods
    for (const Cell& fc : a.fill_circles) {
        for (int dr = -1; dr <= 1; ++dr) {
            for (int dc = -1; dc <= 1; ++dc) {
                if (dr == 0 && dc == 0) continue;
                Cell nb{fc.row + dr, fc.col + dc};
                if (p.has_circle(nb)) {
                    rep.failures.push_back("fill circle " + to_string(fc) +
                                           " touches circle " + to_string(nb));
                }
            }
        }
    }

    // (4) region partition well-formed: every cell regioned, regions
    // 4-connected. new_puzzle established this; re-check cheap parts.
    std::vector<char> seen(static_cast<std::size_t>(p.region_count()), 0);
    for (int r = 0; r < p.rows(); ++r)
        for (int c = 0; c < p.cols(); ++c) {
            RegionId id = p.region_of({r, c});
            if (id < 0 || id >= p.region_count()) {
                rep.failures.push_back("cell " + to_string(Cell{r, c}) + " has no region");
            } else {
                seen[static_cast<std::size_t>(id)] = 1;
            }
        }
    for (RegionId id = 0; id < p.region_count(); ++id)
        if (!seen[static_cast<std::size_t>(id)])
            rep.failures.push_back("region R" + std::to_string(id) + " has no cells");

    return rep;
}

}  // namespace nondango
