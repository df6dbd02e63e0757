// Copyright 2026 The hcover Authors
//
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

#include <gtest/gtest.h>

#include <vector>

#include "hcover/error.hpp"
#include "hcover/generators.hpp"
#include "hcover/oracle.hpp"
#include "hcover/star_cover.hpp"
#include "test_util.hpp"

namespace hcover {
namespace {

using testing::hp;
using testing::pt;

StarPolygon square() { return StarPolygon(pt(0, 0), {pt(1, -1), pt(1, 1), pt(-1, 1), pt(-1, -1)}); }

// x >= 1, y >= 1, x <= -1, y <= -1.
std::vector<Halfplane> axis_halfplanes() { return {hp(-1, 0, -1), hp(0, -1, -1), hp(1, 0, -1), hp(0, 1, -1)}; }

bool arc_contains(const Point& o, const Point& from, const Point& to, const Point& a, const Point& b) {
  return direction_in_arc(from - o, to - o, a - o) && direction_in_arc(from - o, to - o, b - o);
}

TEST(StarPolygon, Validation) {
  EXPECT_NO_THROW(square());
  EXPECT_THROW(StarPolygon(pt(0, 0), {pt(1, 1), pt(1, -1), pt(-1, -1), pt(-1, 1)}), Error);
  EXPECT_THROW(StarPolygon(pt(0, 0), {pt(1, 0), pt(0, 1)}), Error);
  // Pentagram order winds twice.
  EXPECT_THROW(StarPolygon(pt(0, 0), {pt(10, 0), pt(-8, 6), pt(3, -10), pt(3, 10), pt(-8, -6)}), Error);
  // Center on an edge.
  EXPECT_THROW(StarPolygon(pt(0, 0), {pt(1, 0), pt(0, 1), pt(-1, 0)}), Error);
  const StarPolygon sq = square();
  EXPECT_TRUE(sq.contains(pt(1, 0)));
  EXPECT_TRUE(sq.contains(pt(-1, -1)));
  EXPECT_FALSE(sq.contains(pt(2, 0)));
}

TEST(StarFeasibility, SquareExamples) {
  const StarPolygon sq = square();
  auto hs = axis_halfplanes();
  EXPECT_TRUE(check_feasible_star(sq, hs).feasible);
  hs.erase(hs.begin());
  const StarFeasibility f = check_feasible_star(sq, hs);
  EXPECT_FALSE(f.feasible);
  EXPECT_EQ(f.witness, 0u);  // the edge x = 1
  EXPECT_FALSE(check_feasible_star(sq, std::vector<Halfplane>{}).feasible);
  // A single triangle-covering halfplane is impossible (o is outside every h),
  // but a star around o covered by three halfplanes is fine.
  const StarPolygon tri(pt(0, 0), {pt(3, -1), pt(0, 2), pt(-3, -1)});
  EXPECT_TRUE(check_feasible_star(tri, std::vector<Halfplane>{hp(0, 1, -1), hp(-1, -1, -1), hp(1, -1, -1)}).feasible);
}

TEST(StarFeasibility, CenterInsideHalfplaneRejected) {
  const StarPolygon sq = square();
  try {
    check_feasible_star(sq, std::vector<Halfplane>{hp(1, 0, 0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kHalfplaneContainsCenter);
  }
  EXPECT_THROW(check_feasible_star(sq, std::vector<Halfplane>{hp(1, 0, 5)}), Error);
}

TEST(StarCandidates, SquareChords) {
  const StarPolygon sq = square();
  auto hs = axis_halfplanes();
  hs.push_back(hp(-1, -1, -2));  // x + y >= 2, touches the corner (1,1)
  hs.push_back(hp(-1, -1, -3));  // x + y >= 3, misses the square
  const StarFeasibility f = check_feasible_star(sq, hs);
  ASSERT_TRUE(f.feasible);
  const auto chords = star_candidates(sq, hs, f.region);
  ASSERT_EQ(chords.size(), 5u);
  EXPECT_EQ(chords[0].halfplane, 0u);
  EXPECT_EQ(chords[0].cw, pt(1, -1));
  EXPECT_EQ(chords[0].ccw, pt(1, 1));
  EXPECT_EQ(chords[4].halfplane, 4u);
  EXPECT_TRUE(chords[4].degenerate());
  EXPECT_EQ(chords[4].cw, pt(1, 1));
}

TEST(StarCover, SquareExamples) {
  const StarPolygon sq = square();
  auto hs = axis_halfplanes();
  CoverSolution sol = solve_star_cover(sq, hs);
  ASSERT_TRUE(sol.optimal());
  EXPECT_EQ(sol.chosen, (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_TRUE(verify_boundary_cover(sq, hs, sol.chosen));
  const std::vector<std::size_t> three = {0, 1, 2};
  EXPECT_FALSE(verify_boundary_cover(sq, hs, three));

  hs.push_back(hp(-1, -1, -1));  // x + y >= 1
  sol = solve_star_cover(sq, hs);
  const CoverSolution truth = oracle::brute_star_cover(sq.vertices(), hs);
  ASSERT_TRUE(sol.optimal());
  EXPECT_EQ(sol.size(), truth.size());
}

TEST(StarCover, ReflexPolygonNeedsMultipleChords) {
  // A notched square: the line y = 1/2 meets it in two separate segments.
  const StarPolygon poly(pt(0, 0), {pt(2, -2), pt(2, 2), pt(1, 2), pt(0, 1), pt(-1, 2), pt(-2, 2), pt(-2, -2)});
  const Halfplane h = hp(0, -2, -1);  // y >= 1/2
  const auto naive = oracle::naive_chords(poly.center(), poly.vertices(), h);
  EXPECT_EQ(naive.size(), 1u);
  const Halfplane g = hp(0, -2, -3);  // y >= 3/2
  EXPECT_EQ(oracle::naive_chords(poly.center(), poly.vertices(), g).size(), 2u);
  const Chord c = chord_through(poly, g, 0, Point{Scalar(-1), make_rational(3, 2)});
  EXPECT_EQ(c.cw, (Point{make_rational(-1, 2), make_rational(3, 2)}));
  EXPECT_EQ(c.ccw, (Point{Scalar(-2), make_rational(3, 2)}));
}

struct RandomStar {
  StarPolygon poly;
  std::vector<Halfplane> hs;
};

RandomStar random_star(std::uint64_t seed, std::size_t max_vertices, std::size_t max_halfplanes) {
  testing::Rng rng(seed);
  const std::size_t k = static_cast<std::size_t>(rng.uniform(3, static_cast<long>(max_vertices)));
  Instance inst = generate("star-random", k, seed);
  inst.halfplanes.resize(std::min(inst.halfplanes.size(), max_halfplanes));
  return {StarPolygon(*inst.center, inst.vertices), inst.halfplanes};
}

TEST(StarCover, MatchesOracle) {
  int feasible = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const RandomStar r = random_star(seed, 8, 8);
    const CoverSolution sol = solve_star_cover(r.poly, r.hs);
    const CoverSolution truth = oracle::brute_star_cover(r.poly.vertices(), r.hs);
    ASSERT_EQ(sol.optimal(), truth.optimal()) << seed;
    if (!sol.optimal()) continue;
    ++feasible;
    EXPECT_EQ(sol.size(), truth.size()) << seed;
    EXPECT_TRUE(verify_boundary_cover(r.poly, r.hs, sol.chosen)) << seed;
  }
  EXPECT_GE(feasible, 60);
  EXPECT_LE(feasible, 240);
}

// Every naive chord arc lies inside some candidate arc, and the candidates
// are themselves naive chords.
TEST(StarCover, CandidateArcsContainNaiveArcs) {
  int checked = 0;
  for (std::uint64_t seed = 1000; seed < 1300; ++seed) {
    const RandomStar r = random_star(seed, 10, 8);
    const StarFeasibility f = check_feasible_star(r.poly, r.hs);
    if (!f.feasible) continue;
    ++checked;
    const Point& o = r.poly.center();
    const auto cand = star_candidates(r.poly, r.hs, f.region);
    std::vector<Chord> naive_all;
    for (std::size_t i = 0; i < r.hs.size(); ++i) {
      for (const auto& c : oracle::naive_chords(o, r.poly.vertices(), r.hs[i])) {
        naive_all.push_back({i, c.cw, c.ccw});
        bool inside = false;
        for (const Chord& s : cand) inside = inside || arc_contains(o, s.cw, s.ccw, c.cw, c.ccw);
        EXPECT_TRUE(inside) << seed << " halfplane " << i;
      }
    }
    for (const Chord& s : cand) {
      bool found = false;
      for (const Chord& c : naive_all) found = found || (c.halfplane == s.halfplane && c.cw == s.cw && c.ccw == s.ccw);
      EXPECT_TRUE(found) << seed;
    }
    const ChordArcs naive_arcs = chord_arcs(o, naive_all);
    const ChordArcs cand_arcs = chord_arcs(o, cand);
    EXPECT_EQ(circle_cover(naive_arcs.ranks, naive_arcs.arcs).size(),
              circle_cover(cand_arcs.ranks, cand_arcs.arcs).size())
        << seed;
  }
  EXPECT_GE(checked, 30);
}

}  // namespace
}  // namespace hcover
