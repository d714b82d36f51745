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

#include "nondango/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace nondango {

namespace {

struct LineReader {
    explicit LineReader(const std::string& text) : is(text) {}
    std::istringstream is;
    std::string line;
    int line_no = 0;

    bool next() {
        ++line_no;
        return static_cast<bool>(std::getline(is, line));
    }
    void expect(const std::string& what) {
        if (!next()) throw SyntaxError(line_no, "unexpected end of file, expected " + what);
    }
    [[noreturn]] void fail(const std::string& reason) const { throw SyntaxError(line_no, reason); }
    std::vector<std::string> tokens() const {
        std::istringstream ls(line);
        std::vector<std::string> out;
        std::string tok;
        while (ls >> tok) out.push_back(tok);
        return out;
    }
    int expect_int_line(const std::string& key) {
        expect("'" + key + " <value>'");
        auto toks = tokens();
        if (toks.size() != 2 || toks[0] != key) fail("expected '" + key + " <value>'");
        try {
            return std::stoi(toks[1]);
        } catch (const std::exception&) {
            fail("'" + toks[1] + "' is not an integer");
        }
    }
    void expect_exact(const std::string& text) {
        expect("'" + text + "'");
        if (line != text) fail("expected '" + text + "'");
    }
    void expect_eof() {
        while (next()) {
            if (!tokens().empty()) fail("unexpected trailing content");
        }
    }
};

bool alnum_token(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isalnum(c) != 0;
    });
}

}  // namespace

Puzzle parse_puzzle(const std::string& text) {
    LineReader rd(text);
    rd.expect_exact("nondango 1");
    int rows = rd.expect_int_line("rows");
    int cols = rd.expect_int_line("cols");
    if (rows < 1 || cols < 1) rd.fail("rows and cols must be positive");
    rd.expect_exact("regions");
    std::vector<RegionId> grid(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    std::map<std::string, RegionId> ids;
    for (int r = 0; r < rows; ++r) {
        rd.expect("a region row");
        auto toks = rd.tokens();
        if (static_cast<int>(toks.size()) != cols) rd.fail("expected " + std::to_string(cols) + " region tokens");
        for (int c = 0; c < cols; ++c) {
            const std::string& tok = toks[static_cast<std::size_t>(c)];
            if (!alnum_token(tok)) rd.fail("region token '" + tok + "' is not alphanumeric");
            auto [it, fresh] = ids.try_emplace(tok, static_cast<RegionId>(ids.size()));
            grid[static_cast<std::size_t>(r * cols + c)] = it->second;
        }
    }
    rd.expect_exact("circles");
    std::vector<Cell> circles;
    for (int r = 0; r < rows; ++r) {
        rd.expect("a circle row");
        auto toks = rd.tokens();
        if (static_cast<int>(toks.size()) != cols) rd.fail("expected " + std::to_string(cols) + " circle tokens");
        for (int c = 0; c < cols; ++c) {
            const std::string& tok = toks[static_cast<std::size_t>(c)];
            if (tok == "o") circles.push_back({r, c});
            else if (tok != ".") rd.fail("circle token must be '.' or 'o', got '" + tok + "'");
        }
    }
    rd.expect_eof();
    return new_puzzle(rows, cols, grid, circles);
}

std::string serialize_puzzle(const Puzzle& p) {
    std::ostringstream os;
    os << "nondango 1\n";
    os << "rows " << p.rows() << "\ncols " << p.cols() << "\n";
    os << "regions\n";
    for (int r = 0; r < p.rows(); ++r) {
        for (int c = 0; c < p.cols(); ++c) {
            if (c) os << ' ';
            os << 'R' << p.region_of({r, c});
        }
        os << '\n';
    }
    os << "circles\n";
    for (int r = 0; r < p.rows(); ++r) {
        for (int c = 0; c < p.cols(); ++c) {
            if (c) os << ' ';
            os << (p.has_circle({r, c}) ? 'o' : '.');
        }
        os << '\n';
    }
    return os.str();
}

Coloring parse_solution(const std::string& text, const Puzzle& p) {
    LineReader rd(text);
    rd.expect_exact("nondango-solution 1");
    int rows = rd.expect_int_line("rows");
    int cols = rd.expect_int_line("cols");
    if (rows != p.rows() || cols != p.cols())
        rd.fail("solution grid is " + std::to_string(rows) + "x" + std::to_string(cols) +
                " but the puzzle is " + std::to_string(p.rows()) + "x" + std::to_string(p.cols()));
    rd.expect_exact("solution");
    Coloring coloring(p.circle_count());
    for (int r = 0; r < rows; ++r) {
        rd.expect("a solution row");
        auto toks = rd.tokens();
        if (static_cast<int>(toks.size()) != cols) rd.fail("expected " + std::to_string(cols) + " solution tokens");
        for (int c = 0; c < cols; ++c) {
            const std::string& tok = toks[static_cast<std::size_t>(c)];
            int ci = p.circle_index({r, c});
            if (tok == ".") {
                if (ci >= 0) rd.fail("circle cell " + to_string(Cell{r, c}) + " must be B or W");
            } else if (tok == "B" || tok == "W") {
                if (ci < 0) rd.fail("cell " + to_string(Cell{r, c}) + " has no circle");
                coloring.set(static_cast<std::size_t>(ci), tok == "B" ? Color::Black : Color::White);
            } else {
                rd.fail("solution token must be '.', 'B' or 'W', got '" + tok + "'");
            }
        }
    }
    rd.expect_eof();
    return coloring;
}

std::string serialize_solution(const Puzzle& p, const Coloring& coloring) {
    if (coloring.size() != p.circle_count())
        throw PartialColoringError("coloring domain does not match the puzzle's circle set");
    std::ostringstream os;
    os << "nondango-solution 1\n";
    os << "rows " << p.rows() << "\ncols " << p.cols() << "\n";
    os << "solution\n";
    for (int r = 0; r < p.rows(); ++r) {
        for (int c = 0; c < p.cols(); ++c) {
            if (c) os << ' ';
            int ci = p.circle_index({r, c});
            if (ci < 0) {
                os << '.';
            } else {
                Color col = coloring.at(static_cast<std::size_t>(ci));
                if (col == Color::Unassigned)
                    throw PartialColoringError("solution files require a total coloring");
                os << (col == Color::Black ? 'B' : 'W');
            }
        }
        os << '\n';
    }
    return os.str();
}

Formula parse_formula(const std::string& text) {
    LineReader rd(text);
    int n = -1, m = -1;
    std::vector<std::array<int, 3>> clauses;
    while (rd.next()) {
        auto toks = rd.tokens();
        if (toks.empty() || toks[0] == "c") continue;  // comments and blank lines
        if (toks[0] == "p") {
            if (n >= 0) rd.fail("duplicate problem line");
            if (toks.size() != 4 || toks[1] != "onein3") rd.fail("expected 'p onein3 <n> <m>'");
            try {
                n = std::stoi(toks[2]);
                m = std::stoi(toks[3]);
            } catch (const std::exception&) {
                rd.fail("problem line counts must be integers");
            }
            if (n < 0 || m < 0) rd.fail("problem line counts must be non-negative");
            continue;
        }
        if (n < 0) rd.fail("clause before 'p onein3' header");
        if (toks.size() != 3) rd.fail("clause lines carry exactly 3 positive integers");
        std::array<int, 3> cl{};
        for (int k = 0; k < 3; ++k) {
            try {
                cl[static_cast<std::size_t>(k)] = std::stoi(toks[static_cast<std::size_t>(k)]);
            } catch (const std::exception&) {
                rd.fail("'" + toks[static_cast<std::size_t>(k)] + "' is not an integer");
            }
        }
        clauses.push_back(cl);
    }
    if (n < 0) throw SyntaxError(rd.line_no, "missing 'p onein3' header");
    if (static_cast<int>(clauses.size()) != m)
        throw SyntaxError(rd.line_no, "header announces " + std::to_string(m) + " clauses, found " +
                                          std::to_string(clauses.size()));
    return validate_formula(n, clauses);
}

std::string serialize_formula(const Formula& f) {
    std::ostringstream os;
    os << "p onein3 " << f.n_vars << ' ' << f.clauses.size() << '\n';
    for (const auto& cl : f.clauses) os << cl[0] << ' ' << cl[1] << ' ' << cl[2] << '\n';
    return os.str();
}

MapFile parse_map(const std::string& text) {
    LineReader rd(text);
    rd.expect_exact("nondango-map 1");
    MapFile m;
    m.column_of.push_back(-1);  // index 0 unused
    m.row_of.push_back(-1);
    while (rd.next()) {
        auto toks = rd.tokens();
        if (toks.empty()) rd.fail("blank line");
        auto want = [&](std::size_t k) {
            if (toks.size() != k) rd.fail("malformed '" + toks[0] + "' record");
        };
        auto to_int = [&](const std::string& s) {
            try {
                return std::stoi(s);
            } catch (const std::exception&) {
                rd.fail("'" + s + "' is not an integer");
            }
        };
        if (toks[0] == "var") {
            want(4);
            if (toks[2] != "col") rd.fail("expected 'var <i> col <c>'");
            int i = to_int(toks[1]);
            if (i != static_cast<int>(m.column_of.size())) rd.fail("var records must be ascending");
            m.column_of.push_back(to_int(toks[3]));
        } else if (toks[0] == "clause") {
            want(4);
            if (toks[2] != "row") rd.fail("expected 'clause <j> row <r>'");
            int j = to_int(toks[1]);
            if (j != static_cast<int>(m.row_of.size())) rd.fail("clause records must be ascending");
            m.row_of.push_back(to_int(toks[3]));
        } else if (toks[0] == "literal") {
            want(5);
            int j = to_int(toks[1]);
            int i = to_int(toks[2]);
            m.literal_cell_of[{j, i}] = Cell{to_int(toks[3]), to_int(toks[4])};
        } else {
            rd.fail("unknown record '" + toks[0] + "'");
        }
    }
    return m;
}

std::string serialize_map(const MapFile& m) {
    std::ostringstream os;
    os << "nondango-map 1\n";
    for (std::size_t i = 1; i < m.column_of.size(); ++i)
        os << "var " << i << " col " << m.column_of[i] << '\n';
    for (std::size_t j = 1; j < m.row_of.size(); ++j)
        os << "clause " << j << " row " << m.row_of[j] << '\n';
    for (const auto& [key, cell] : m.literal_cell_of)
        os << "literal " << key.first << ' ' << key.second << ' ' << cell.row << ' ' << cell.col
           << '\n';
    return os.str();
}

MapFile map_of(const ReductionArtifact& artifact) {
    MapFile m;
    m.column_of.push_back(-1);
    for (int col : artifact.plan.column_of) m.column_of.push_back(col);
    m.row_of.push_back(-1);
    for (int row : artifact.plan.clause_row_of) m.row_of.push_back(row);
    m.literal_cell_of = artifact.literal_cell_of;
    return m;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace nondango
