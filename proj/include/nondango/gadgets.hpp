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

#ifndef NONDANGO_GADGETS_HPP
#define NONDANGO_GADGETS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nondango/core.hpp"
#include "nondango/solver.hpp"

namespace nondango {

// Semantic contracts a gadget template can carry. OneBlackPorts is the
// clause-row contract (exactly one of its stones black).
enum class Contract {
    ForcedBlack,
    ForcedWhite,
    DiffPorts,
    EqualPorts,
    SkipEqualPorts,
    FillBlack,
    OneBlackPorts,
};

std::string to_string(Contract c);
std::optional<Contract> contract_from_string(const std::string& s);

// A circle shared with a host structure (a clause row), through which the
// gadget constrains the outside. Port cells never belong to local regions.
struct Port {
    std::string name;
    Cell cell;
};

// Relocatable construction unit: relative geometry plus a semantic contract.
struct GadgetTemplate {
    std::string name;
    int rows = 0;  // bounding box
    int cols = 0;
    std::vector<std::vector<Cell>> local_regions;
    std::vector<Cell> circles;  // includes port circles
    std::vector<Port> ports;
    Contract contract = Contract::ForcedBlack;
    std::optional<Cell> designated;  // contract circle for Forced*/FillBlack

    // Cells the template claims or relies on: local region cells, circles, ports.
    std::vector<Cell> footprint() const;
    const Port* find_port(const std::string& port_name) const;
};

struct TemplateError : PuzzleError {
    using PuzzleError::PuzzleError;
};

// Checks the GadgetTemplate invariants (regions 4-connected and disjoint,
// circles and ports inside the bounding box, ports circled and outside local
// regions, designated cell circled). Throws TemplateError.
void validate_template(const GadgetTemplate& t);

GadgetTemplate parse_template(const std::string& text);
std::string serialize_template(const GadgetTemplate& t);

// The seven builtin templates transcribed from the paper's constructions:
// single-black, white-forcer, diff, connector, skip, fill, clause-row.
// Geometry is loaded from the plain-text template data files.
const std::vector<GadgetTemplate>& builtin_templates();
const GadgetTemplate& builtin_template(const std::string& name);

// Deterministic generator for the per-variable lane structure connecting two
// consecutive occurrence clause rows with `skipped_rows` skipped clause rows
// in between. skipped_rows = 0 yields the connector, 1 the skip; larger gaps
// chain one skip crossing per skipped row. Every generated template contains
// exactly one doubler so the chain of inverting links between the two ports
// has even length for any gap.
GadgetTemplate lane_chain_template(int skipped_rows);

// Layout constants shared by the templates and the reduction planner.
inline constexpr int kLaneWidth = 10;    // chain width 8 + 2 clearance
inline constexpr int kBandHeight = 15;   // rows between adjacent clause rows
inline constexpr int kMarginTop = 3;     // rows above the first clause row
inline constexpr int kMarginBottom = 1;  // rows below the last clause row
inline constexpr int kChainPortCol = 3;  // port column inside a chain template
inline constexpr int kChainPortRow = 3;  // upper port row inside a chain template

struct OverlapError : PuzzleError {
    Cell cell;
    OverlapError(Cell c, const std::string& msg) : PuzzleError(msg), cell(c) {}
};
struct OutOfBoundsError : PuzzleError {
    using PuzzleError::PuzzleError;
};
struct FillPlacementError : PuzzleError {
    using PuzzleError::PuzzleError;
};

// Accumulates regions and circles on a fixed grid, then finalizes into a
// Puzzle. finalize() turns every remaining empty 4-connected component into
// one region holding one fill circle with a circle-free 8-neighborhood.
class HostBuilder {
public:
    HostBuilder(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool in_bounds(Cell c) const {
        return c.row >= 0 && c.row < rows_ && c.col >= 0 && c.col < cols_;
    }
    bool claimed(Cell c) const { return region_of_[index(c)] >= 0; }
    bool has_circle(Cell c) const { return circle_[index(c)]; }

    RegionId add_region(const std::vector<Cell>& cells);
    RegionId add_full_row_region(int row);
    void add_circle(Cell c, bool allow_existing = false);

    const std::vector<Cell>& circles() const { return circle_list_; }

    // Deterministic fill placement; appends the placed fill circles to
    // *fill_circles when given. Throws FillPlacementError when a component has
    // no cell with a circle-free 8-neighborhood.
    Puzzle finalize(std::vector<Cell>* fill_circles = nullptr);

private:
    std::size_t index(Cell c) const {
        return static_cast<std::size_t>(c.row) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c.col);
    }
    int rows_;
    int cols_;
    int next_region_ = 0;
    std::vector<int> region_of_;  // -1 unclaimed
    std::vector<char> circle_;
    std::vector<Cell> circle_list_;
};

// A template placed at a grid offset, with its ports bound to absolute cells.
struct GadgetInstance {
    std::string template_name;
    Cell offset;
    std::map<std::string, Cell> port_bindings;
    std::vector<Cell> footprint;  // translated template footprint
};

// Adds the template's local regions and circles to the host at the given
// offset. Port circles may coincide with circles already present (shared
// ports); any other overlap throws OverlapError.
GadgetInstance instantiate(const GadgetTemplate& t, Cell offset, HostBuilder& host);

// A template embedded in its minimal host: every port row realized as a
// full-width height-1 region with one auxiliary circle (single-port rows
// only), leftover cells filled per the empty-area rule.
struct MinimalHost {
    Puzzle puzzle;
    GadgetInstance instance;
    std::map<std::string, Cell> aux_cells;  // port name -> that row's aux circle
    std::vector<Cell> fill_circles;
};

MinimalHost embed_in_minimal_host(const GadgetTemplate& t, int pad = 4,
                                  Cell extra_offset = {0, 0});

struct ContractReport {
    std::string template_name;
    bool ok = false;
    std::uint64_t solution_count = 0;
    std::vector<std::string> failures;  // tagged ContractViolated / PolarityUnreachable /
                                        // InteriorAmbiguous
};

// Embeds the template in its minimal host, enumerates all solutions with the
// dumb oracle and asserts the contract: (i) the contract property holds in
// every solution, (ii) polarity-carrying contracts reach both polarities,
// (iii) the interior is uniquely determined per port polarity.
ContractReport check_contract(const GadgetTemplate& t);

}  // namespace nondango

#endif  // NONDANGO_GADGETS_HPP
