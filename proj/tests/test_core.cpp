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

#include <doctest.h>

#include <random>

#include "nondango/core.hpp"
#include "nondango/io.hpp"
#include "test_util.hpp"

using namespace nondango;

namespace {

Coloring color_all(const Puzzle& p, Color c) {
    Coloring col(p.circle_count());
    for (std::size_t i = 0; i < p.circle_count(); ++i) col.set(i, c);
    return col;
}

}  // namespace

TEST_CASE("new_puzzle accepts a 1x1 single-circle puzzle") {
    Puzzle p = new_puzzle(1, 1, {0}, {{0, 0}});
    CHECK(p.circle_count() == 1);
    CHECK(p.region_count() == 1);
}

TEST_CASE("new_puzzle rejects a disconnected region") {
    // 2x2 with region A on the main diagonal only.
    std::vector<RegionId> grid = {0, 1, 1, 0};
    CHECK_THROWS_AS(new_puzzle(2, 2, grid, {}), DisconnectedRegionError);
}

TEST_CASE("new_puzzle rejects out-of-bounds circles and bad dimensions") {
    CHECK_THROWS_AS(new_puzzle(1, 1, {0}, {{0, 1}}), OutOfBoundsCircleError);
    CHECK_THROWS_AS(new_puzzle(0, 1, {}, {}), DimensionMismatchError);
    CHECK_THROWS_AS(new_puzzle(2, 2, {0, 0, 0}, {}), DimensionMismatchError);
}

TEST_CASE("circle-free regions are constructible and reported") {
    Puzzle p = new_puzzle(1, 2, {0, 1}, {{0, 0}});
    REQUIRE(p.circle_free_regions().size() == 1);
    CHECK(p.circle_free_regions()[0] == 1);
}

TEST_CASE("fig1 transcription is a valid puzzle") {
    Puzzle p = parse_puzzle(test::golden("fig1.puz"));
    CHECK(p.rows() == 6);
    CHECK(p.cols() == 6);
    CHECK(p.circle_count() == 19);
    // The published solution colors exactly one circle per region black, and
    // it has 10 black circles, so the figure has 10 regions.
    CHECK(p.region_count() == 10);
    CHECK(p.circle_free_regions().empty());
}

TEST_CASE("circle_triples finds runs in all four directions") {
    SUBCASE("1x3 full row: one horizontal triple") {
        Puzzle p = new_puzzle(1, 3, {0, 0, 0}, {{0, 0}, {0, 1}, {0, 2}});
        auto ts = circle_triples(p);
        REQUIRE(ts.size() == 1);
        CHECK(ts[0].dir == Direction::Horizontal);
        CHECK(ts[0].cells == std::array<Cell, 3>{Cell{0, 0}, Cell{0, 1}, Cell{0, 2}});
    }
    SUBCASE("a gap breaks the run") {
        Puzzle p = new_puzzle(1, 3, {0, 0, 0}, {{0, 0}, {0, 2}});
        CHECK(circle_triples(p).empty());
    }
    SUBCASE("3x3 with both main diagonals circled: exactly two triples") {
        std::vector<RegionId> grid(9, 0);
        Puzzle p = new_puzzle(3, 3, grid, {{0, 0}, {1, 1}, {2, 2}, {0, 2}, {2, 0}});
        auto ts = circle_triples(p);
        REQUIRE(ts.size() == 2);
        CHECK(ts[0].dir != ts[1].dir);
        for (const auto& t : ts)
            CHECK((t.dir == Direction::DiagDownRight || t.dir == Direction::DiagUpRight));
    }
    SUBCASE("vertical run of four yields two triples") {
        std::vector<RegionId> grid(4, 0);
        Puzzle p = new_puzzle(4, 1, grid, {{0, 0}, {1, 0}, {2, 0}, {3, 0}});
        CHECK(circle_triples(p).size() == 2);
    }
}

TEST_CASE("verify accepts the published fig1 solution") {
    Puzzle p = parse_puzzle(test::golden("fig1.puz"));
    Coloring c = parse_solution(test::golden("fig1.sol"), p);
    CHECK(verify(p, c).empty());
}

TEST_CASE("verify rejects the fig1 solution under a one-direction diagonal reading") {
    // The published solution relies on both diagonal directions being
    // checked: flipping any diagonal triple to monochrome must be caught.
    // Directly check that fig1 has triples of both diagonal kinds.
    Puzzle p = parse_puzzle(test::golden("fig1.puz"));
    bool down_right = false, up_right = false;
    for (const auto& t : circle_triples(p)) {
        down_right |= t.dir == Direction::DiagDownRight;
        up_right |= t.dir == Direction::DiagUpRight;
    }
    CHECK(down_right);
    CHECK(up_right);
}

TEST_CASE("all-white coloring reports RegionZeroBlack per circled region") {
    Puzzle p = parse_puzzle(test::golden("fig1.puz"));
    auto violations = verify(p, color_all(p, Color::White));
    int zero_black = 0;
    for (const auto& v : violations) zero_black += v.kind == Violation::Kind::RegionZeroBlack;
    CHECK(zero_black == p.region_count());
}

TEST_CASE("monochrome triple is reported") {
    // 1x3, three circles, three singleton regions, colored B,B,B.
    Puzzle p = new_puzzle(1, 3, {0, 1, 2}, {{0, 0}, {0, 1}, {0, 2}});
    auto violations = verify(p, color_all(p, Color::Black));
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].kind == Violation::Kind::MonochromeTriple);
    CHECK(violations[0].dir == Direction::Horizontal);
    CHECK(violations[0].color == Color::Black);
}

TEST_CASE("verify requires a total coloring") {
    Puzzle p = new_puzzle(1, 1, {0}, {{0, 0}});
    CHECK_THROWS_AS(verify(p, Coloring(1)), PartialColoringError);
    CHECK_THROWS_AS(verify(p, Coloring(0)), PartialColoringError);
}

TEST_CASE("multi-black region is reported") {
    Puzzle p = new_puzzle(1, 2, {0, 0}, {{0, 0}, {0, 1}});
    auto violations = verify(p, color_all(p, Color::Black));
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].kind == Violation::Kind::RegionMultiBlack);
}

TEST_CASE("triple count is invariant under transposition and mirroring") {
    std::mt19937_64 rng(20260809);
    for (int i = 0; i < 100; ++i) {
        Puzzle p = test::random_puzzle(rng);
        // transpose
        std::vector<RegionId> tg(static_cast<std::size_t>(p.rows() * p.cols()));
        std::vector<Cell> tc;
        for (int r = 0; r < p.rows(); ++r)
            for (int c = 0; c < p.cols(); ++c) {
                tg[static_cast<std::size_t>(c * p.rows() + r)] = p.region_of({r, c});
                if (p.has_circle({r, c})) tc.push_back({c, r});
            }
        Puzzle tp = new_puzzle(p.cols(), p.rows(), tg, tc);
        CHECK(circle_triples(tp).size() == circle_triples(p).size());
        // horizontal mirror
        std::vector<RegionId> mg(static_cast<std::size_t>(p.rows() * p.cols()));
        std::vector<Cell> mc;
        for (int r = 0; r < p.rows(); ++r)
            for (int c = 0; c < p.cols(); ++c) {
                mg[static_cast<std::size_t>(r * p.cols() + (p.cols() - 1 - c))] = p.region_of({r, c});
                if (p.has_circle({r, c})) mc.push_back({r, p.cols() - 1 - c});
            }
        Puzzle mp = new_puzzle(p.rows(), p.cols(), mg, mc);
        CHECK(circle_triples(mp).size() == circle_triples(p).size());
    }
}

TEST_CASE("triple count stays within the 4*rows*cols scan ceiling") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 100; ++i) {
        Puzzle p = test::random_puzzle(rng, 8, 8, 40);
        CHECK(circle_triples(p).size() <=
              static_cast<std::size_t>(4 * p.rows() * p.cols()));
    }
}
