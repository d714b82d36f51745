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

#include "nondango/gadgets.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

#include "nondango/template_data.hpp"

namespace nondango {

std::string to_string(Contract c) {
    switch (c) {
        case Contract::ForcedBlack: return "ForcedBlack";
        case Contract::ForcedWhite: return "ForcedWhite";
        case Contract::DiffPorts: return "DiffPorts";
        case Contract::EqualPorts: return "EqualPorts";
        case Contract::SkipEqualPorts: return "SkipEqualPorts";
        case Contract::FillBlack: return "FillBlack";
        case Contract::OneBlackPorts: return "OneBlackPorts";
    }
    return "?";
}

std::optional<Contract> contract_from_string(const std::string& s) {
    for (Contract c : {Contract::ForcedBlack, Contract::ForcedWhite, Contract::DiffPorts,
                       Contract::EqualPorts, Contract::SkipEqualPorts, Contract::FillBlack,
                       Contract::OneBlackPorts}) {
        if (to_string(c) == s) return c;
    }
    return std::nullopt;
}

std::vector<Cell> GadgetTemplate::footprint() const {
    std::set<Cell> cells;
    for (const auto& region : local_regions) cells.insert(region.begin(), region.end());
    cells.insert(circles.begin(), circles.end());
    for (const Port& p : ports) cells.insert(p.cell);
    return {cells.begin(), cells.end()};
}

const Port* GadgetTemplate::find_port(const std::string& port_name) const {
    for (const Port& p : ports)
        if (p.name == port_name) return &p;
    return nullptr;
}

void validate_template(const GadgetTemplate& t) {
    auto inside = [&](Cell c) {
        return c.row >= 0 && c.row < t.rows && c.col >= 0 && c.col < t.cols;
    };
    std::set<Cell> claimed;
    for (const auto& region : t.local_regions) {
        if (region.empty()) throw TemplateError(t.name + ": empty local region");
        for (Cell c : region) {
            if (!inside(c)) throw TemplateError(t.name + ": region cell " + to_string(c) + " outside bounding box");
            if (!claimed.insert(c).second)
                throw TemplateError(t.name + ": cell " + to_string(c) + " in two local regions");
        }
        // 4-connectivity
        std::set<Cell> seen{region.front()};
        std::vector<Cell> stack{region.front()};
        std::set<Cell> cells(region.begin(), region.end());
        while (!stack.empty()) {
            Cell cur = stack.back();
            stack.pop_back();
            for (Cell nb : {Cell{cur.row + 1, cur.col}, Cell{cur.row - 1, cur.col},
                            Cell{cur.row, cur.col + 1}, Cell{cur.row, cur.col - 1}}) {
                if (cells.count(nb) && seen.insert(nb).second) stack.push_back(nb);
            }
        }
        if (seen.size() != cells.size())
            throw TemplateError(t.name + ": local region is not 4-connected");
    }
    std::set<Cell> circ(t.circles.begin(), t.circles.end());
    if (circ.size() != t.circles.size()) throw TemplateError(t.name + ": duplicate circle");
    for (Cell c : t.circles)
        if (!inside(c)) throw TemplateError(t.name + ": circle " + to_string(c) + " outside bounding box");
    std::set<std::string> names;
    for (const Port& p : t.ports) {
        if (!names.insert(p.name).second) throw TemplateError(t.name + ": duplicate port name " + p.name);
        if (!circ.count(p.cell)) throw TemplateError(t.name + ": port " + p.name + " is not a circle");
        if (claimed.count(p.cell))
            throw TemplateError(t.name + ": port " + p.name + " lies in a local region");
    }
    if (t.designated && !circ.count(*t.designated))
        throw TemplateError(t.name + ": designated cell is not a circle");
}

// ---------------------------------------------------------------------------
// Template text format: puzzle grid syntax with '.' for cells outside every
// local region, plus ports:/contract:/designated: lines.

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

}  // namespace

GadgetTemplate parse_template(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int line_no = 0;
    auto next_line = [&]() -> bool {
        ++line_no;
        return static_cast<bool>(std::getline(is, line));
    };
    auto fail = [&](const std::string& why) -> void { throw TemplateError("template line " + std::to_string(line_no) + ": " + why); };

    GadgetTemplate t;
    if (!next_line() || line != "nondango-template 1") fail("expected header 'nondango-template 1'");
    if (!next_line() || split_ws(line).size() != 2 || split_ws(line)[0] != "name") fail("expected 'name <id>'");
    t.name = split_ws(line)[1];
    if (!next_line()) fail("expected 'rows <r>'");
    {
        auto toks = split_ws(line);
        if (toks.size() != 2 || toks[0] != "rows") fail("expected 'rows <r>'");
        t.rows = std::stoi(toks[1]);
    }
    if (!next_line()) fail("expected 'cols <c>'");
    {
        auto toks = split_ws(line);
        if (toks.size() != 2 || toks[0] != "cols") fail("expected 'cols <c>'");
        t.cols = std::stoi(toks[1]);
    }
    if (!next_line() || line != "regions") fail("expected 'regions'");
    std::map<std::string, int> region_ids;
    std::vector<std::vector<Cell>> regions;
    for (int r = 0; r < t.rows; ++r) {
        if (!next_line()) fail("missing region row");
        auto toks = split_ws(line);
        if (static_cast<int>(toks.size()) != t.cols) fail("wrong number of region tokens");
        for (int c = 0; c < t.cols; ++c) {
            if (toks[static_cast<std::size_t>(c)] == ".") continue;
            auto [it, fresh] = region_ids.try_emplace(toks[static_cast<std::size_t>(c)],
                                                      static_cast<int>(regions.size()));
            if (fresh) regions.emplace_back();
            regions[static_cast<std::size_t>(it->second)].push_back({r, c});
        }
    }
    t.local_regions = std::move(regions);
    if (!next_line() || line != "circles") fail("expected 'circles'");
    for (int r = 0; r < t.rows; ++r) {
        if (!next_line()) fail("missing circle row");
        auto toks = split_ws(line);
        if (static_cast<int>(toks.size()) != t.cols) fail("wrong number of circle tokens");
        for (int c = 0; c < t.cols; ++c) {
            const std::string& tok = toks[static_cast<std::size_t>(c)];
            if (tok == "o") t.circles.push_back({r, c});
            else if (tok != ".") fail("circle token must be '.' or 'o'");
        }
    }
    if (!next_line() || line != "ports:") fail("expected 'ports:'");
    while (next_line()) {
        if (line.rfind("contract:", 0) == 0) break;
        auto toks = split_ws(line);
        if (toks.size() != 3) fail("port line must be '<name> <row> <col>'");
        t.ports.push_back({toks[0], {std::stoi(toks[1]), std::stoi(toks[2])}});
    }
    {
        auto toks = split_ws(line);
        if (toks.size() != 2 || toks[0] != "contract:") fail("expected 'contract: <id>'");
        auto c = contract_from_string(toks[1]);
        if (!c) fail("unknown contract id " + toks[1]);
        t.contract = *c;
    }
    if (next_line() && !line.empty()) {
        auto toks = split_ws(line);
        if (toks.size() != 3 || toks[0] != "designated:") fail("expected 'designated: <row> <col>'");
        t.designated = Cell{std::stoi(toks[1]), std::stoi(toks[2])};
    }
    validate_template(t);
    return t;
}

std::string serialize_template(const GadgetTemplate& t) {
    std::ostringstream os;
    os << "nondango-template 1\n";
    os << "name " << t.name << "\n";
    os << "rows " << t.rows << "\ncols " << t.cols << "\n";
    // Region tokens R<k> numbered by first appearance in row-major order.
    std::vector<int> region_of(static_cast<std::size_t>(t.rows) * static_cast<std::size_t>(t.cols), -1);
    for (std::size_t i = 0; i < t.local_regions.size(); ++i)
        for (Cell c : t.local_regions[i])
            region_of[static_cast<std::size_t>(c.row * t.cols + c.col)] = static_cast<int>(i);
    std::map<int, int> order;
    for (int v : region_of)
        if (v >= 0) order.try_emplace(v, -1);
    {
        int next = 0;
        for (int v : region_of)
            if (v >= 0 && order[v] < 0) order[v] = next++;
    }
    std::set<Cell> circ(t.circles.begin(), t.circles.end());
    os << "regions\n";
    for (int r = 0; r < t.rows; ++r) {
        for (int c = 0; c < t.cols; ++c) {
            if (c) os << ' ';
            int id = region_of[static_cast<std::size_t>(r * t.cols + c)];
            if (id < 0) os << '.';
            else os << 'R' << order[id];
        }
        os << '\n';
    }
    os << "circles\n";
    for (int r = 0; r < t.rows; ++r) {
        for (int c = 0; c < t.cols; ++c) {
            if (c) os << ' ';
            os << (circ.count({r, c}) ? 'o' : '.');
        }
        os << '\n';
    }
    os << "ports:\n";
    for (const Port& p : t.ports)
        os << p.name << ' ' << p.cell.row << ' ' << p.cell.col << '\n';
    os << "contract: " << to_string(t.contract) << '\n';
    if (t.designated)
        os << "designated: " << t.designated->row << ' ' << t.designated->col << '\n';
    return os.str();
}

// ---------------------------------------------------------------------------
// Lane chain composer. Relative geometry is transcribed from the paper's
// figures; see data/templates/ for the canonical g=0 and g=1 instances and
// the sync test that pins this generator to them.

namespace {

std::vector<Cell> v_line(int col, int row_a, int row_b) {
    std::vector<Cell> cells;
    for (int r = row_a; r <= row_b; ++r) cells.push_back({r, col});
    return cells;
}

}  // namespace

GadgetTemplate lane_chain_template(int skipped_rows) {
    if (skipped_rows < 0) throw TemplateError("skipped_rows must be non-negative");
    const int g = skipped_rows;
    const int c = kChainPortCol;
    const int up = kChainPortRow;
    const int step = kBandHeight + 1;
    const int lo = up + step * (g + 1);

    GadgetTemplate t;
    t.name = g == 0 ? "connector" : (g == 1 ? "skip" : "skip-" + std::to_string(g));
    t.rows = lo + 2;
    t.cols = 8;
    t.contract = g == 0 ? Contract::EqualPorts : Contract::SkipEqualPorts;

    auto region = [&](std::vector<Cell> cells) { t.local_regions.push_back(std::move(cells)); };
    auto circle = [&](Cell cc) { t.circles.push_back(cc); };
    auto white_forcer_right = [&](int base_row) {
        // Pair region with two singletons stacked above its left circle;
        // forces (base_row, c+1) white.
        region({{base_row, c + 1}, {base_row, c + 2}});
        region({{base_row - 1, c + 1}});
        region({{base_row - 2, c + 1}});
        for (Cell cc : {Cell{base_row, c + 1}, Cell{base_row, c + 2}, Cell{base_row - 1, c + 1},
                        Cell{base_row - 2, c + 1}})
            circle(cc);
    };
    auto white_forcer_left = [&](int base_row) {
        // Mirror image; forces (base_row, c-2) white.
        region({{base_row, c - 3}, {base_row, c - 2}});
        region({{base_row - 1, c - 2}});
        region({{base_row - 2, c - 2}});
        for (Cell cc : {Cell{base_row, c - 3}, Cell{base_row, c - 2}, Cell{base_row - 1, c - 2},
                        Cell{base_row - 2, c - 2}})
            circle(cc);
    };

    // Upper terminal: half junction. The up-right diagonal chain
    // (up+2,c-2),(up+1,c-1),(up,c),(up-1,c+1) runs from a forced-black
    // singleton to the white-forcer's forced-white circle, so the below-circle
    // and the port always differ.
    t.ports.push_back({"up", {up, c}});
    circle({up, c});
    circle({up + 1, c - 1});
    region({{up + 2, c - 2}});
    circle({up + 2, c - 2});
    white_forcer_right(up - 1);

    // Doubler in the top band: the same crossing shape against a width-5 band
    // region whose second circle keeps both band polarities feasible. Its two
    // tap circles always match, making the inversion count of the whole chain
    // even.
    const int m = up + 8;
    region({{m, c}, {m, c + 1}, {m, c + 2}, {m, c + 3}, {m, c + 4}});
    circle({m, c});
    circle({m, c + 4});
    circle({m - 1, c - 1});
    circle({m + 1, c - 1});
    region({{m + 2, c - 2}});
    circle({m + 2, c - 2});
    region({{m + 1, c + 1}});
    circle({m + 1, c + 1});
    white_forcer_right(m - 1);
    white_forcer_left(m - 2);

    // Strip between the upper junction tap and the doubler.
    region(v_line(c - 1, up + 1, m - 1));

    // Descend, crossing every skipped clause row.
    for (int k = 1; k <= g; ++k) {
        const int s = up + step * k;
        // Strip from above down to the crossing's upper diagonal circle at
        // (s-2, c-2); bends at row s-5.
        std::vector<Cell> snake;
        if (k == 1) {
            snake = v_line(c - 1, m + 1, s - 5);
        } else {
            const int prev = up + step * (k - 1);
            snake = v_line(c + 2, prev + 2, prev + 4);
            for (int col : {c + 2, c + 1, c, c - 1}) snake.push_back({prev + 5, col});
            auto rest = v_line(c - 1, prev + 6, s - 5);
            snake.insert(snake.end(), rest.begin(), rest.end());
        }
        for (Cell cc : v_line(c - 2, s - 5, s - 2)) snake.push_back(cc);
        region(std::move(snake));
        circle({s - 2, c - 2});

        // The crossing proper: two black-end singletons diagonal to the stone
        // force it white; the stone is the shared white end of both diagonal
        // chains; the two pair regions carry the signal across the row with
        // one inversion.
        region({{s - 3, c - 3}});
        circle({s - 3, c - 3});
        region({{s - 1, c - 1}, {s - 1, c}});
        circle({s - 1, c - 1});
        circle({s - 1, c});
        region({{s - 1, c + 1}});
        circle({s - 1, c + 1});
        t.ports.push_back({"skipped" + std::to_string(k), {s, c}});
        circle({s, c});
        region({{s + 1, c - 1}});
        circle({s + 1, c - 1});
        region({{s + 1, c}, {s + 1, c + 1}});
        circle({s + 1, c});
        circle({s + 1, c + 1});
        region({{s + 3, c + 3}});
        circle({s + 3, c + 3});
        circle({s + 2, c + 2});
    }

    // Final strip down to the lower junction tap.
    if (g == 0) {
        region(v_line(c - 1, m + 1, lo - 1));
    } else {
        const int s = up + step * g;
        std::vector<Cell> strip = v_line(c + 2, s + 2, s + 4);
        for (int col : {c + 2, c + 1, c, c - 1}) strip.push_back({s + 5, col});
        auto rest = v_line(c - 1, s + 6, lo - 1);
        strip.insert(strip.end(), rest.begin(), rest.end());
        region(std::move(strip));
    }

    // Lower terminal: mirror half junction through the up-left diagonal.
    t.ports.push_back({"down", {lo, c}});
    circle({lo, c});
    circle({lo - 1, c - 1});
    region({{lo + 1, c + 1}});
    circle({lo + 1, c + 1});
    white_forcer_left(lo - 2);

    validate_template(t);
    return t;
}

// ---------------------------------------------------------------------------
// Builtin templates, parsed from the embedded data files.

const std::vector<GadgetTemplate>& builtin_templates() {
    static const std::vector<GadgetTemplate> templates = [] {
        std::vector<GadgetTemplate> out;
        for (const auto& datum : detail::embedded_templates()) {
            out.push_back(parse_template(datum.text));
        }
        // Spec order: single-black, white-forcer, diff, connector, skip,
        // fill, clause-row.
        const std::vector<std::string> order = {"single-black", "white-forcer", "diff",
                                                "connector",    "skip",         "fill",
                                                "clause-row"};
        std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
            auto pos = [&](const std::string& n) {
                return std::find(order.begin(), order.end(), n) - order.begin();
            };
            return pos(a.name) < pos(b.name);
        });
        return out;
    }();
    return templates;
}

const GadgetTemplate& builtin_template(const std::string& name) {
    for (const auto& t : builtin_templates())
        if (t.name == name) return t;
    throw TemplateError("no builtin template named " + name);
}

// ---------------------------------------------------------------------------
// HostBuilder

HostBuilder::HostBuilder(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw DimensionMismatchError("host must be at least 1x1");
    region_of_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), -1);
    circle_.assign(region_of_.size(), 0);
}

RegionId HostBuilder::add_region(const std::vector<Cell>& cells) {
    if (cells.empty()) throw PuzzleError("empty region");
    for (Cell c : cells) {
        if (!in_bounds(c)) throw OutOfBoundsError("region cell " + to_string(c) + " out of bounds");
        if (claimed(c)) throw OverlapError(c, "cell " + to_string(c) + " already claimed");
    }
    RegionId id = next_region_++;
    for (Cell c : cells) region_of_[index(c)] = id;
    return id;
}

RegionId HostBuilder::add_full_row_region(int row) {
    std::vector<Cell> cells;
    for (int c = 0; c < cols_; ++c) cells.push_back({row, c});
    return add_region(cells);
}

void HostBuilder::add_circle(Cell c, bool allow_existing) {
    if (!in_bounds(c)) throw OutOfBoundsError("circle " + to_string(c) + " out of bounds");
    if (circle_[index(c)]) {
        if (allow_existing) return;
        throw OverlapError(c, "cell " + to_string(c) + " already has a circle");
    }
    circle_[index(c)] = 1;
    circle_list_.push_back(c);
}

Puzzle HostBuilder::finalize(std::vector<Cell>* fill_circles) {
    std::vector<int> region_grid = region_of_;
    std::vector<Cell> circles = circle_list_;
    auto chebyshev = [](Cell a, Cell b) {
        return std::max(std::abs(a.row - b.row), std::abs(a.col - b.col));
    };

    std::vector<char> visited(region_grid.size(), 0);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            std::size_t i = index({r, c});
            if (region_grid[i] >= 0 || visited[i]) continue;
            // Collect this empty component.
            std::vector<Cell> comp;
            std::vector<Cell> stack{{r, c}};
            visited[i] = 1;
            while (!stack.empty()) {
                Cell cur = stack.back();
                stack.pop_back();
                comp.push_back(cur);
                for (Cell nb : {Cell{cur.row + 1, cur.col}, Cell{cur.row - 1, cur.col},
                                Cell{cur.row, cur.col + 1}, Cell{cur.row, cur.col - 1}}) {
                    if (!in_bounds(nb)) continue;
                    std::size_t ni = index(nb);
                    if (region_grid[ni] >= 0 || visited[ni]) continue;
                    visited[ni] = 1;
                    stack.push_back(nb);
                }
            }
            std::sort(comp.begin(), comp.end());
            // One region, one fill circle with a circle-free 8-neighborhood,
            // as far from existing circles as possible.
            int best_clear = -1;
            Cell best{-1, -1};
            for (Cell cand : comp) {
                int clear = rows_ + cols_;
                for (Cell cc : circles) clear = std::min(clear, chebyshev(cand, cc));
                if (clear > best_clear) {
                    best_clear = clear;
                    best = cand;
                }
            }
            if (best_clear < 2) {
                throw FillPlacementError("no cell with circle-free 8-neighborhood in empty area at " +
                                         to_string(comp.front()));
            }
            RegionId id = next_region_++;
            for (Cell cc : comp) region_grid[index(cc)] = id;
            circles.push_back(best);
            if (fill_circles) fill_circles->push_back(best);
        }
    }
    return new_puzzle(rows_, cols_, region_grid, circles);
}

// ---------------------------------------------------------------------------
// Instantiation and contract checking

GadgetInstance instantiate(const GadgetTemplate& t, Cell offset, HostBuilder& host) {
    GadgetInstance inst;
    inst.template_name = t.name;
    inst.offset = offset;
    auto translate = [&](Cell c) { return Cell{c.row + offset.row, c.col + offset.col}; };
    for (Cell c : t.footprint()) {
        Cell a = translate(c);
        if (!host.in_bounds(a))
            throw OutOfBoundsError(t.name + " at " + to_string(offset) + ": cell " + to_string(a) +
                                   " out of bounds");
        inst.footprint.push_back(a);
    }
    for (const auto& region : t.local_regions) {
        std::vector<Cell> cells;
        cells.reserve(region.size());
        for (Cell c : region) cells.push_back(translate(c));
        host.add_region(cells);
    }
    std::set<Cell> port_cells;
    for (const Port& p : t.ports) port_cells.insert(p.cell);
    for (Cell c : t.circles) host.add_circle(translate(c), port_cells.count(c) > 0);
    for (const Port& p : t.ports) inst.port_bindings[p.name] = translate(p.cell);
    return inst;
}

namespace {

// First cell in the row that keeps both port colors region-feasible without
// interfering: horizontal distance >= 3 from every circle in the row and a
// circle-free 8-neighborhood.
Cell place_aux(const HostBuilder& host, int row) {
    for (int col = 0; col < host.cols(); ++col) {
        Cell cand{row, col};
        if (host.has_circle(cand)) continue;
        bool ok = true;
        for (Cell cc : host.circles()) {
            if (cc.row == row && std::abs(cc.col - col) < 3) { ok = false; break; }
            if (std::max(std::abs(cc.row - row), std::abs(cc.col - col)) < 2) { ok = false; break; }
        }
        if (ok) return cand;
    }
    throw FillPlacementError("no feasible auxiliary circle in host row " + std::to_string(row));
}

}  // namespace

MinimalHost embed_in_minimal_host(const GadgetTemplate& t, int pad, Cell extra_offset) {
    validate_template(t);
    Cell offset{pad + extra_offset.row, pad + extra_offset.col};
    HostBuilder host(t.rows + 2 * pad + extra_offset.row, t.cols + 2 * pad + extra_offset.col);
    MinimalHost mh;
    mh.instance = instantiate(t, offset, host);

    std::map<int, std::vector<const Port*>> by_row;
    for (const Port& p : t.ports) by_row[p.cell.row + offset.row].push_back(&p);
    for (const auto& [row, ports] : by_row) {
        host.add_full_row_region(row);
        if (ports.size() == 1) {
            Cell aux = place_aux(host, row);
            host.add_circle(aux);
            mh.aux_cells[ports.front()->name] = aux;
        }
    }
    mh.puzzle = host.finalize(&mh.fill_circles);
    return mh;
}

ContractReport check_contract(const GadgetTemplate& t) {
    ContractReport rep;
    rep.template_name = t.name;
    MinimalHost mh = embed_in_minimal_host(t);
    const Puzzle& p = mh.puzzle;
    std::vector<Coloring> sols = dumb_enumerate(p, p.circle_count());
    rep.solution_count = sols.size();
    auto fail = [&](const std::string& msg) { rep.failures.push_back(msg); };

    auto circle_of = [&](Cell rel) {
        Cell abs{rel.row + mh.instance.offset.row, rel.col + mh.instance.offset.col};
        int idx = p.circle_index(abs);
        if (idx < 0) throw TemplateError(t.name + ": no circle at " + to_string(abs));
        return static_cast<std::size_t>(idx);
    };

    switch (t.contract) {
        case Contract::ForcedBlack:
        case Contract::ForcedWhite:
        case Contract::FillBlack: {
            if (!t.designated) throw TemplateError(t.name + ": contract needs a designated circle");
            Color want = t.contract == Contract::ForcedWhite ? Color::White : Color::Black;
            std::size_t ci = circle_of(*t.designated);
            if (sols.empty()) fail("ContractViolated: no solution");
            for (const auto& s : sols)
                if (s.at(ci) != want)
                    fail("ContractViolated: designated circle not forced " +
                         std::string(want == Color::Black ? "black" : "white"));
            if (sols.size() > 1) fail("InteriorAmbiguous: expected exactly 1 solution, got " +
                                      std::to_string(sols.size()));
            break;
        }
        case Contract::DiffPorts:
        case Contract::EqualPorts:
        case Contract::SkipEqualPorts: {
            std::vector<std::size_t> main_ports;  // polarity-carrying ports
            std::vector<std::size_t> skipped;
            for (const Port& port : t.ports) {
                std::size_t ci = circle_of(port.cell);
                if (port.name.rfind("skipped", 0) == 0) skipped.push_back(ci);
                else main_ports.push_back(ci);
            }
            if (main_ports.size() != 2) throw TemplateError(t.name + ": expected 2 ports");
            bool want_equal = t.contract != Contract::DiffPorts;
            std::set<Color> first_polarities;
            std::set<std::vector<Color>> port_tuples;
            for (const auto& s : sols) {
                Color a = s.at(main_ports[0]);
                Color b = s.at(main_ports[1]);
                if (want_equal && a != b) fail("ContractViolated: ports differ in a solution");
                if (!want_equal && a == b) fail("ContractViolated: ports equal in a solution");
                first_polarities.insert(a);
                port_tuples.insert({a, b});
                for (std::size_t ci : skipped)
                    if (s.at(ci) != Color::White)
                        fail("ContractViolated: skipped-row circle not white");
            }
            if (first_polarities.size() < 2)
                fail("PolarityUnreachable: only " + std::to_string(first_polarities.size()) +
                     " port polarity reachable");
            if (sols.size() != port_tuples.size())
                fail("InteriorAmbiguous: " + std::to_string(sols.size()) + " solutions for " +
                     std::to_string(port_tuples.size()) + " port polarities");
            if (sols.size() != 2)
                fail("ContractViolated: expected exactly 2 solutions, got " +
                     std::to_string(sols.size()));
            break;
        }
        case Contract::OneBlackPorts: {
            // The clause row: its own circles carry the one-of-three choice.
            std::vector<std::size_t> cs;
            for (Cell c : t.circles) cs.push_back(circle_of(c));
            std::set<std::size_t> black_positions;
            for (const auto& s : sols) {
                int blacks = 0;
                std::size_t which = 0;
                for (std::size_t k = 0; k < cs.size(); ++k)
                    if (s.at(cs[k]) == Color::Black) { ++blacks; which = k; }
                if (blacks != 1) fail("ContractViolated: not exactly one black stone");
                else black_positions.insert(which);
            }
            if (black_positions.size() != cs.size())
                fail("PolarityUnreachable: some stone is never the black one");
            if (sols.size() != cs.size())
                fail("InteriorAmbiguous: expected " + std::to_string(cs.size()) +
                     " solutions, got " + std::to_string(sols.size()));
            break;
        }
    }
    rep.ok = rep.failures.empty();
    return rep;
}

}  // namespace nondango
