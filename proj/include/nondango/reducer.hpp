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

#ifndef NONDANGO_REDUCER_HPP
#define NONDANGO_REDUCER_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nondango/core.hpp"
#include "nondango/gadgets.hpp"

namespace nondango {

struct FormulaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DuplicateVarInClauseError : FormulaError {
    using FormulaError::FormulaError;
};
struct VarOutOfRangeError : FormulaError {
    using FormulaError::FormulaError;
};
struct UnusedVariableError : FormulaError {
    int variable;
    UnusedVariableError(int v, const std::string& msg) : FormulaError(msg), variable(v) {}
};
struct EmptyFormulaError : FormulaError {
    using FormulaError::FormulaError;
};
struct TooManyVariablesError : FormulaError {
    using FormulaError::FormulaError;
};

// 1-in-3-SAT+ instance: positive 3-clauses over variables 1..n_vars.
struct Formula {
    int n_vars = 0;
    std::vector<std::array<int, 3>> clauses;
};

// Checks clause arity/range/distinctness and that every variable occurs.
Formula validate_formula(int n_vars, const std::vector<std::array<int, 3>>& clauses);

// Number of assignments with exactly one true variable per clause, by
// enumeration of all 2^n assignments. Requires n_vars <= 24.
std::uint64_t count_1in3(const Formula& f);

struct LayoutPlan {
    int lane_width = 0;
    int band_height = 0;
    int margin_top = 0;
    int margin_bottom = 0;
    int rows = 0;
    int cols = 0;
    // puzzle area is guaranteed <= area_bound_constant * n_vars * clauses.
    int area_bound_constant = 0;
    std::vector<int> clause_row_of;  // clause j (1-based) -> row, at index j-1
    std::vector<int> column_of;      // variable v (1-based) -> column, at index v-1
};

LayoutPlan plan_layout(const Formula& f);

struct LayoutAuditFailedError : PuzzleError {
    using PuzzleError::PuzzleError;
};
struct InvalidSolutionError : PuzzleError {
    using PuzzleError::PuzzleError;
};

// Everything needed to extract assignments and audit the layout.
struct ReductionArtifact {
    Formula formula;
    LayoutPlan plan;
    Puzzle puzzle;
    std::vector<GadgetInstance> instances;
    // (clause j, variable v), both 1-based -> the literal circle's cell.
    std::map<std::pair<int, int>, Cell> literal_cell_of;
    // Forced-white stones placed in skipped clause rows.
    std::vector<Cell> skip_circles;
    std::vector<Cell> fill_circles;
};

// Compiles a formula into a Nondango puzzle: one full-width height-1 clause
// row per clause with its 3 literal circles, per-variable lane chains between
// consecutive occurrences (connector for adjacent rows, skip crossings
// through every intervening clause row), and one fill region per leftover
// empty area. Throws LayoutAuditFailedError if the composed layout fails its
// own audit.
ReductionArtifact reduce(const Formula& f);

// Reads the assignment off a verified solution: the color at each variable's
// first-occurrence literal cell, Black = true.
// Throws InvalidSolutionError when the coloring does not verify.
std::map<int, bool> extract_assignment(const ReductionArtifact& a, const Coloring& c);

struct AuditReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Composition-safety checks: (1) every circle triple lies within one gadget
// instance's footprint or a single clause row, (2) circles of different lanes
// in the same clause row are >= 3 columns apart, (3) every fill circle has a
// circle-free 8-neighborhood, (4) the region partition is well-formed.
AuditReport audit_layout(const ReductionArtifact& a);

}  // namespace nondango

#endif  // NONDANGO_REDUCER_HPP
