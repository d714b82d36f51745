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

#include "nondango/render.hpp"

#include <sstream>

namespace nondango {

namespace {

void check_total(const Puzzle& p, const Coloring* coloring) {
    if (!coloring) return;
    if (coloring->size() != p.circle_count() || !coloring->total())
        throw PartialColoringError("rendering requires a total coloring");
}

// Vertical border between (r,c-1) and (r,c); grid edges count as borders.
bool v_border(const Puzzle& p, int r, int c) {
    if (c == 0 || c == p.cols()) return true;
    return p.region_of({r, c - 1}) != p.region_of({r, c});
}

// Horizontal border between (r-1,c) and (r,c).
bool h_border(const Puzzle& p, int r, int c) {
    if (r == 0 || r == p.rows()) return true;
    return p.region_of({r - 1, c}) != p.region_of({r, c});
}

// Box-drawing junction for four arms; 0 = absent, 1 = light, 2 = heavy.
const char* junction_char(int up, int down, int left, int right) {
    // clang-format off
    static const char* heavy16[16] = {
        //  bits: left=1, right=2, up=4, down=8 (set = heavy arm), all arms present
        "┼", "┽", "┾", "┿", "╀", "╃", "╄", "╇",
        "╁", "╅", "╆", "╈", "╂", "╉", "╊", "╋",
    };
    // clang-format on
    if (up && down && left && right) {
        int bits = (left == 2 ? 1 : 0) | (right == 2 ? 2 : 0) | (up == 2 ? 4 : 0) |
                   (down == 2 ? 8 : 0);
        return heavy16[bits];
    }
    auto pick = [](int arm, const char* light, const char* heavy) {
        return arm == 2 ? heavy : light;
    };
    if (up && down && right) return pick(right, up == 2 && down == 2 ? "┠" : (up == 2 ? "┞" : (down == 2 ? "┟" : "├")),
                                          up == 2 && down == 2 ? "┣" : (up == 2 ? "┡" : (down == 2 ? "┢" : "┝")));
    if (up && down && left) return pick(left, up == 2 && down == 2 ? "┨" : (up == 2 ? "┦" : (down == 2 ? "┧" : "┤")),
                                         up == 2 && down == 2 ? "┫" : (up == 2 ? "┩" : (down == 2 ? "┪" : "┥")));
    if (down && left && right) {
        int bits = (left == 2 ? 1 : 0) | (right == 2 ? 2 : 0) | (down == 2 ? 4 : 0);
        static const char* t[8] = {"┬", "┭", "┮", "┯", "┰", "┱", "┲", "┳"};
        return t[bits];
    }
    if (up && left && right) {
        int bits = (left == 2 ? 1 : 0) | (right == 2 ? 2 : 0) | (up == 2 ? 4 : 0);
        static const char* t[8] = {"┴", "┵", "┶", "┷", "┸", "┹", "┺", "┻"};
        return t[bits];
    }
    if (down && right) return down == 2 ? (right == 2 ? "┏" : "┎") : (right == 2 ? "┍" : "┌");
    if (down && left) return down == 2 ? (left == 2 ? "┓" : "┒") : (left == 2 ? "┑" : "┐");
    if (up && right) return up == 2 ? (right == 2 ? "┗" : "┖") : (right == 2 ? "┕" : "└");
    if (up && left) return up == 2 ? (left == 2 ? "┛" : "┚") : (left == 2 ? "┙" : "┘");
    if (left || right) return (left == 2 || right == 2) ? "━" : "─";
    if (up || down) return (up == 2 || down == 2) ? "┃" : "│";
    return " ";
}

}  // namespace

std::string render_ascii(const Puzzle& p, const Coloring* coloring) {
    check_total(p, coloring);
    std::ostringstream os;
    const int rows = p.rows(), cols = p.cols();
    for (int lr = 0; lr <= rows; ++lr) {
        // Junction + horizontal segment line.
        for (int lc = 0; lc <= cols; ++lc) {
            int up = lr > 0 ? (v_border(p, lr - 1, lc) ? 2 : 1) : 0;
            int down = lr < rows ? (v_border(p, lr, lc) ? 2 : 1) : 0;
            int left = lc > 0 ? (h_border(p, lr, lc - 1) ? 2 : 1) : 0;
            int right = lc < cols ? (h_border(p, lr, lc) ? 2 : 1) : 0;
            os << junction_char(up, down, left, right);
            if (lc < cols) {
                const char* seg = h_border(p, lr, lc) ? "━" : "─";
                os << seg << seg << seg;
            }
        }
        os << '\n';
        if (lr == rows) break;
        // Cell content line.
        for (int c = 0; c <= cols; ++c) {
            os << (v_border(p, lr, c) ? "┃" : "│");
            if (c == cols) break;
            Cell cell{lr, c};
            if (!p.has_circle(cell)) {
                os << "   ";
            } else if (!coloring) {
                os << " o ";
            } else {
                Color col = p.color_at(*coloring, cell);
                os << (col == Color::Black ? " ● " : " ○ ");
            }
        }
        os << '\n';
    }
    return os.str();
}

std::string render_svg(const Puzzle& p, const Coloring* coloring) {
    check_total(p, coloring);
    constexpr int kCell = 32;
    constexpr int kMargin = 8;
    const int w = p.cols() * kCell + 2 * kMargin;
    const int h = p.rows() * kCell + 2 * kMargin;
    auto x = [&](int col) { return kMargin + col * kCell; };
    auto y = [&](int row) { return kMargin + row * kCell; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
    os << "<g stroke=\"#bbbbbb\" stroke-width=\"1\">\n";
    for (int r = 0; r <= p.rows(); ++r)
        os << "<line x1=\"" << x(0) << "\" y1=\"" << y(r) << "\" x2=\"" << x(p.cols())
           << "\" y2=\"" << y(r) << "\"/>\n";
    for (int c = 0; c <= p.cols(); ++c)
        os << "<line x1=\"" << x(c) << "\" y1=\"" << y(0) << "\" x2=\"" << x(c) << "\" y2=\""
           << y(p.rows()) << "\"/>\n";
    os << "</g>\n";
    os << "<g stroke=\"black\" stroke-width=\"3\" stroke-linecap=\"square\">\n";
    for (int r = 0; r < p.rows(); ++r)
        for (int c = 0; c <= p.cols(); ++c)
            if (v_border(p, r, c))
                os << "<line x1=\"" << x(c) << "\" y1=\"" << y(r) << "\" x2=\"" << x(c)
                   << "\" y2=\"" << y(r + 1) << "\"/>\n";
    for (int r = 0; r <= p.rows(); ++r)
        for (int c = 0; c < p.cols(); ++c)
            if (h_border(p, r, c))
                os << "<line x1=\"" << x(c) << "\" y1=\"" << y(r) << "\" x2=\"" << x(c + 1)
                   << "\" y2=\"" << y(r) << "\"/>\n";
    os << "</g>\n";
    for (const Cell& cell : p.circles()) {
        const char* fill = "white";
        if (coloring && p.color_at(*coloring, cell) == Color::Black) fill = "black";
        os << "<circle cx=\"" << x(cell.col) + kCell / 2 << "\" cy=\"" << y(cell.row) + kCell / 2
           << "\" r=\"" << kCell / 3 << "\" fill=\"" << fill
           << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace nondango
