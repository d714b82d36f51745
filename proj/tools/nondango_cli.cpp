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

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nondango/core.hpp"
#include "nondango/gadgets.hpp"
#include "nondango/io.hpp"
#include "nondango/reducer.hpp"
#include "nondango/render.hpp"
#include "nondango/solver.hpp"

namespace {

using namespace nondango;

// Exit codes: 0 success/valid, 1 semantic negative (invalid/unsat/mismatch),
// 2 usage or parse failure.
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

void warn_circle_free(const Puzzle& p) {
    for (RegionId r : p.circle_free_regions())
        std::cerr << "warning: region R" << r << " contains no circle; the puzzle is unsatisfiable\n";
}

int cmd_verify(const std::string& puzzle_path, const std::string& solution_path) {
    Puzzle p = parse_puzzle(read_file(puzzle_path));
    warn_circle_free(p);
    Coloring c = parse_solution(read_file(solution_path), p);
    auto violations = verify(p, c);
    for (const auto& v : violations) std::cout << to_string(v) << '\n';
    if (violations.empty()) {
        std::cout << "valid\n";
        return kOk;
    }
    return kNegative;
}

int cmd_solve(const std::string& puzzle_path, bool count, std::optional<std::uint64_t> enum_n,
              bool stats) {
    Puzzle p = parse_puzzle(read_file(puzzle_path));
    warn_circle_free(p);
    SearchStats st;
    bool any = false;
    if (count || enum_n) {
        auto [sols, s] = enumerate_solutions(p, enum_n);
        st = s;
        any = !sols.empty();
        if (count) std::cout << sols.size() << '\n';
        if (enum_n)
            for (const auto& sol : sols) std::cout << serialize_solution(p, sol);
    } else {
        auto sol = solve(p, &st);
        any = sol.has_value();
        if (sol) std::cout << serialize_solution(p, *sol);
        else std::cout << "unsat\n";
    }
    if (stats)
        std::cerr << "nodes_expanded=" << st.nodes_expanded
                  << " propagation_steps=" << st.propagation_steps
                  << " solutions_found=" << st.solutions_found << '\n';
    return any ? kOk : kNegative;
}

int cmd_reduce(const std::string& formula_path, const std::string& out_path,
               const std::string& map_path) {
    Formula f = parse_formula(read_file(formula_path));
    ReductionArtifact art = reduce(f);
    write_file(out_path, serialize_puzzle(art.puzzle));
    write_file(map_path, serialize_map(map_of(art)));
    return kOk;
}

int cmd_extract(const std::string& map_path, const std::string& solution_path,
                const std::string& puzzle_path) {
    MapFile m = parse_map(read_file(map_path));
    if (!puzzle_path.empty()) {
        Puzzle p = parse_puzzle(read_file(puzzle_path));
        Coloring c = parse_solution(read_file(solution_path), p);
        auto violations = verify(p, c);
        if (!violations.empty()) {
            for (const auto& v : violations) std::cerr << to_string(v) << '\n';
            std::cerr << "error: solution does not verify\n";
            return kNegative;
        }
        for (std::size_t v = 1; v < m.column_of.size(); ++v) {
            for (std::size_t j = 1; j < m.row_of.size(); ++j) {
                auto it = m.literal_cell_of.find({static_cast<int>(j), static_cast<int>(v)});
                if (it == m.literal_cell_of.end()) continue;
                bool val = p.color_at(c, it->second) == Color::Black;
                std::cout << 'x' << v << '=' << (val ? "true" : "false") << '\n';
                break;
            }
        }
        return kOk;
    }
    // Without a puzzle the solution grid is read positionally.
    std::string text = read_file(solution_path);
    // Parse just the grid: reuse the solution format via a throwaway puzzle is
    // not possible without region data, so scan the grid tokens directly.
    std::istringstream is(text);
    std::string line;
    int rows = -1, cols = -1;
    std::vector<std::string> grid;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string a, b;
        ls >> a;
        if (line_no == 1) {
            if (line != "nondango-solution 1") throw SyntaxError(1, "expected 'nondango-solution 1'");
            continue;
        }
        if (a == "rows") { ls >> rows; continue; }
        if (a == "cols") { ls >> cols; continue; }
        if (a == "solution") continue;
        if (!a.empty()) grid.push_back(line);
    }
    if (rows < 0 || cols < 0 || static_cast<int>(grid.size()) != rows)
        throw SyntaxError(line_no, "malformed solution grid");
    auto token_at = [&](Cell cell) -> std::string {
        std::istringstream ls(grid[static_cast<std::size_t>(cell.row)]);
        std::string tok;
        for (int k = 0; k <= cell.col; ++k) ls >> tok;
        return tok;
    };
    for (std::size_t v = 1; v < m.column_of.size(); ++v) {
        for (std::size_t j = 1; j < m.row_of.size(); ++j) {
            auto it = m.literal_cell_of.find({static_cast<int>(j), static_cast<int>(v)});
            if (it == m.literal_cell_of.end()) continue;
            std::string tok = token_at(it->second);
            if (tok != "B" && tok != "W")
                throw SyntaxError(0, "literal cell " + to_string(it->second) + " is not colored");
            std::cout << 'x' << v << '=' << (tok == "B" ? "true" : "false") << '\n';
            break;
        }
    }
    return kOk;
}

int cmd_parsimony(const std::string& formula_path) {
    Formula f = parse_formula(read_file(formula_path));
    ReductionArtifact art = reduce(f);
    auto [sols, stats] = enumerate_solutions(art.puzzle);
    std::uint64_t expected = count_1in3(f);
    std::cout << sols.size() << ' ' << expected << '\n';
    return sols.size() == expected ? kOk : kNegative;
}

int cmd_render(const std::string& puzzle_path, const std::string& solution_path,
               const std::string& svg_path) {
    Puzzle p = parse_puzzle(read_file(puzzle_path));
    std::optional<Coloring> c;
    if (!solution_path.empty()) c = parse_solution(read_file(solution_path), p);
    const Coloring* cp = c ? &*c : nullptr;
    std::cout << render_ascii(p, cp);
    if (!svg_path.empty()) write_file(svg_path, render_svg(p, cp));
    return kOk;
}

int cmd_selftest() {
    bool all_ok = true;
    for (const auto& t : builtin_templates()) {
        ContractReport rep = check_contract(t);
        if (rep.ok) {
            std::cout << "ok " << rep.template_name << ": " << rep.solution_count
                      << " solution" << (rep.solution_count == 1 ? "" : "s") << '\n';
        } else {
            all_ok = false;
            std::cout << "FAIL " << rep.template_name << ":\n";
            for (const auto& f : rep.failures) std::cout << "  " << f << '\n';
        }
    }
    return all_ok ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nondango puzzle engine: verifier, exact solver, 1-in-3-SAT+ reduction"};
    app.require_subcommand(1);

    std::string puzzle_path, solution_path, formula_path, out_path, map_path, svg_path;
    bool count = false, stats = false;
    std::optional<std::uint64_t> enum_n;
    std::uint64_t enum_val = 0;

    auto* verify_cmd = app.add_subcommand("verify", "check a solution against a puzzle");
    verify_cmd->add_option("puzzle", puzzle_path)->required();
    verify_cmd->add_option("solution", solution_path)->required();

    auto* solve_cmd = app.add_subcommand("solve", "solve, count or enumerate solutions");
    solve_cmd->add_option("puzzle", puzzle_path)->required();
    solve_cmd->add_flag("--count", count, "print the number of solutions");
    auto* enum_opt = solve_cmd->add_option("--enumerate", enum_val, "print up to N solutions");
    solve_cmd->add_flag("--stats", stats, "print search statistics to stderr");

    auto* reduce_cmd = app.add_subcommand("reduce", "compile a 1-in-3-SAT+ formula to a puzzle");
    reduce_cmd->add_option("formula", formula_path)->required();
    reduce_cmd->add_option("-o,--output", out_path, "output puzzle file")->required();
    reduce_cmd->add_option("--map", map_path, "output map file")->required();

    auto* extract_cmd = app.add_subcommand("extract", "read an assignment off a solution");
    extract_cmd->add_option("--map", map_path, "map file from reduce")->required();
    extract_cmd->add_option("solution", solution_path)->required();
    extract_cmd->add_option("--puzzle", puzzle_path, "verify the solution against this puzzle first");

    auto* pars_cmd = app.add_subcommand("parsimony", "compare puzzle solution count with count_1in3");
    pars_cmd->add_option("formula", formula_path)->required();

    auto* render_cmd = app.add_subcommand("render", "render a puzzle as text (and optionally SVG)");
    render_cmd->add_option("puzzle", puzzle_path)->required();
    render_cmd->add_option("--solution", solution_path, "overlay this solution");
    render_cmd->add_option("--svg", svg_path, "also write an SVG file");

    app.add_subcommand("selftest", "run all gadget contract checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << '\n';
        return kUsage;
    }

    try {
        if (enum_opt->count() > 0) enum_n = enum_val;
        if (verify_cmd->parsed()) return cmd_verify(puzzle_path, solution_path);
        if (solve_cmd->parsed()) return cmd_solve(puzzle_path, count, enum_n, stats);
        if (reduce_cmd->parsed()) return cmd_reduce(formula_path, out_path, map_path);
        if (extract_cmd->parsed()) return cmd_extract(map_path, solution_path, puzzle_path);
        if (pars_cmd->parsed()) return cmd_parsimony(formula_path);
        if (render_cmd->parsed()) return cmd_render(puzzle_path, solution_path, svg_path);
        return cmd_selftest();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
