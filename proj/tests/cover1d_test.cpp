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

#include "hcover/cover1d.hpp"
#include "test_util.hpp"

namespace hcover {
namespace {

using testing::Rng;

bool runs_cover(std::size_t n, std::span<const IndexRun> runs, const std::vector<std::size_t>& pick) {
  std::vector<bool> hit(n, false);
  for (std::size_t k : pick) {
    for (std::size_t i = runs[k].i; i <= runs[k].j; ++i) hit[i] = true;
  }
  return std::find(hit.begin(), hit.end(), false) == hit.end();
}

// Steps r -> r+1 covered by the chosen arcs.
bool arcs_cover_circle(std::size_t ranks, std::span<const CyclicArc> arcs,
                       const std::vector<std::size_t>& pick) {
  std::vector<bool> step(ranks, false);
  for (std::size_t k : pick) {
    const std::size_t len = arc_length(arcs[k], ranks);
    for (std::size_t s = 0; s < len; ++s) step[(arcs[k].start + s) % ranks] = true;
  }
  return std::find(step.begin(), step.end(), false) == step.end();
}

bool arcs_cover_points(std::size_t n, std::span<const CyclicArc> arcs,
                       const std::vector<std::size_t>& pick) {
  for (std::size_t r = 0; r < n; ++r) {
    bool hit = false;
    for (std::size_t k : pick) hit = hit || arc_contains_rank(arcs[k], r, n);
    if (!hit) return false;
  }
  return true;
}

template <class Pred>
std::optional<std::size_t> exhaustive_min(std::size_t m, Pred covers) {
  std::optional<std::size_t> best;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<std::size_t> pick;
    for (std::size_t k = 0; k < m; ++k) {
      if (mask & (1u << k)) pick.push_back(k);
    }
    if ((!best || pick.size() < *best) && covers(pick)) best = pick.size();
  }
  return best;
}

TEST(GreedyInterval, Examples) {
  std::vector<IndexRun> runs = {{0, 1, 0}, {1, 3, 1}, {2, 4, 2}};
  CoverSolution s = greedy_interval_cover(5, runs);
  ASSERT_TRUE(s.optimal());
  EXPECT_EQ(s.chosen, (std::vector<std::size_t>{0, 2}));
  std::vector<IndexRun> one = {{0, 4, 0}};
  EXPECT_EQ(greedy_interval_cover(5, one).size(), 1u);
  std::vector<IndexRun> gap = {{1, 2, 0}};
  CoverSolution bad = greedy_interval_cover(3, gap);
  EXPECT_FALSE(bad.optimal());
  EXPECT_EQ(bad.witness, std::optional<std::size_t>(0));
}

TEST(GreedyInterval, MatchesExhaustive) {
  Rng rng(31);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 10));
    const std::size_t m = static_cast<std::size_t>(rng.uniform(0, 10));
    std::vector<IndexRun> runs;
    for (std::size_t k = 0; k < m; ++k) {
      std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
      std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
      if (i > j) std::swap(i, j);
      runs.push_back({i, j, static_cast<std::size_t>(rng.uniform(0, 20))});
    }
    CoverSolution s = greedy_interval_cover(n, runs);
    auto best = exhaustive_min(m, [&](const std::vector<std::size_t>& p) { return runs_cover(n, runs, p); });
    ASSERT_EQ(s.optimal(), best.has_value());
    if (best) {
      ASSERT_EQ(s.size(), *best);
      ASSERT_TRUE(runs_cover(n, runs, s.chosen));
    } else {
      bool hit = false;
      for (const IndexRun& r : runs) hit = hit || (r.i <= *s.witness && *s.witness <= r.j);
      ASSERT_FALSE(hit);
    }
  }
}

TEST(CircleCover, Examples) {
  std::vector<CyclicArc> arcs = {{0, 2, 0}, {2, 4, 1}, {4, 0, 2}, {1, 3, 3}};
  CoverSolution s = circle_cover(6, arcs);
  ASSERT_TRUE(s.optimal());
  EXPECT_EQ(s.chosen, (std::vector<std::size_t>{0, 1, 2}));
  std::vector<CyclicArc> full = {{1, 3, 0}, {0, 0, 1, true}};
  EXPECT_EQ(circle_cover(5, full).chosen, std::vector<std::size_t>{1});
  std::vector<CyclicArc> halves = {{0, 1, 0}, {2, 3, 1}};
  EXPECT_FALSE(circle_cover(4, halves).optimal());
}

// Greedy from every starting arc, rescanning all arcs at each step.
std::optional<std::size_t> naive_circle(std::size_t ranks, std::span<const CyclicArc> arcs) {
  std::optional<std::size_t> best;
  for (const CyclicArc& a : arcs) {
    if (a.full_circle) return 1;
  }
  for (const CyclicArc& first : arcs) {
    const std::size_t s0 = first.start;
    const std::size_t target = s0 + ranks;
    std::size_t reach = s0 + arc_length(first, ranks);
    std::size_t count = 1;
    bool ok = true;
    while (reach < target) {
      std::size_t next = reach;
      for (const CyclicArc& b : arcs) {
        const std::size_t len = arc_length(b, ranks);
        for (std::size_t st : {b.start, b.start + ranks}) {
          if (st <= reach && st + len > next) next = st + len;
        }
      }
      if (next == reach) {
        ok = false;
        break;
      }
      reach = next;
      ++count;
    }
    if (ok && (!best || count < *best)) best = count;
  }
  return best;
}

TEST(CircleCover, MatchesNaiveGreedy) {
  Rng rng(32);
  int feasible = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t ranks = static_cast<std::size_t>(rng.uniform(1, 60));
    const std::size_t m = static_cast<std::size_t>(rng.uniform(1, 200));
    std::vector<CyclicArc> arcs;
    const long maxlen = rng.uniform(0, static_cast<long>(ranks) - 1);
    for (std::size_t k = 0; k < m; ++k) {
      const std::size_t s = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(ranks) - 1));
      const std::size_t len = static_cast<std::size_t>(rng.uniform(0, maxlen));
      arcs.push_back({s, (s + len) % ranks, k, rng.uniform(0, 2000) == 0});
    }
    CoverSolution s = circle_cover(ranks, arcs);
    const auto want = naive_circle(ranks, arcs);
    ASSERT_EQ(s.optimal(), want.has_value());
    if (want) {
      ++feasible;
      ASSERT_EQ(s.size(), *want);
      ASSERT_TRUE(arcs_cover_circle(ranks, arcs, s.chosen));
    }
  }
  EXPECT_GT(feasible, 200);
}

TEST(CircleCover, MatchesExhaustiveSmall) {
  Rng rng(33);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t ranks = static_cast<std::size_t>(rng.uniform(1, 9));
    const std::size_t m = static_cast<std::size_t>(rng.uniform(1, 8));
    std::vector<CyclicArc> arcs;
    for (std::size_t k = 0; k < m; ++k) {
      arcs.push_back({static_cast<std::size_t>(rng.uniform(0, static_cast<long>(ranks) - 1)),
                      static_cast<std::size_t>(rng.uniform(0, static_cast<long>(ranks) - 1)), k});
    }
    auto best = exhaustive_min(m, [&](const std::vector<std::size_t>& p) {
      return arcs_cover_circle(ranks, arcs, p);
    });
    CoverSolution s = circle_cover(ranks, arcs);
    ASSERT_EQ(s.optimal(), best.has_value());
    if (best) ASSERT_EQ(s.size(), *best);
  }
}

TEST(ExtendArcs, Examples) {
  const RankCircle c = RankCircle::of_points(4);
  std::vector<CyclicArc> single = {{4, 4, 0}};
  EXPECT_EQ(extend_arcs(c, single)[0], (CyclicArc{3, 5, 0}));
  std::vector<CyclicArc> half = {{3, 4, 0}};
  EXPECT_EQ(extend_arcs(c, half)[0], (CyclicArc{3, 5, 0}));
  std::vector<CyclicArc> wrap = {{6, 0, 0}};
  EXPECT_EQ(extend_arcs(c, wrap)[0], (CyclicArc{5, 1, 0}));
  std::vector<CyclicArc> all = {{2, 0, 0}};
  EXPECT_TRUE(extend_arcs(c, all)[0].full_circle);
}

TEST(ExtendArcs, KeepsPointsAndContains) {
  Rng rng(34);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 12));
    const RankCircle c = RankCircle::of_points(n);
    const std::size_t s = 2 * static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    const std::size_t e = 2 * static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    const CyclicArc a{s, e, 0};
    const CyclicArc b = extend_arcs(c, std::vector<CyclicArc>{a})[0];
    for (std::size_t r = 0; r < c.size; ++r) {
      if (arc_contains_rank(a, r, c.size)) ASSERT_TRUE(arc_contains_rank(b, r, c.size));
      if (r % 2 == 0) ASSERT_EQ(arc_contains_rank(a, r, c.size), arc_contains_rank(b, r, c.size));
    }
  }
}

TEST(CircularPointCover, Examples) {
  // Points N, E, S, W at ranks 0..3.
  std::vector<CyclicArc> pairs = {{0, 1, 0}, {2, 3, 1}};
  EXPECT_EQ(circular_point_cover(4, pairs).size(), 2u);
  std::vector<CyclicArc> singles = {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {3, 3, 3}};
  EXPECT_EQ(circular_point_cover(4, singles).size(), 4u);
  std::vector<CyclicArc> one = {{1, 0, 0}};
  EXPECT_EQ(circular_point_cover(4, one).size(), 1u);
  std::vector<CyclicArc> miss = {{0, 1, 0}, {3, 3, 1}};
  CoverSolution bad = circular_point_cover(4, miss);
  EXPECT_FALSE(bad.optimal());
  EXPECT_EQ(bad.witness, std::optional<std::size_t>(2));
}

TEST(CircularPointCover, ExhaustiveAndSubsetEquivalence) {
  Rng rng(35);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 8));
    const std::size_t m = static_cast<std::size_t>(rng.uniform(1, 8));
    std::vector<CyclicArc> arcs;
    for (std::size_t k = 0; k < m; ++k) {
      arcs.push_back({static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1)),
                      static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1)), k});
    }
    std::vector<CyclicArc> doubled;
    for (const CyclicArc& a : arcs) doubled.push_back({2 * a.start, 2 * a.end, a.halfplane});
    const std::vector<CyclicArc> ext = extend_arcs(RankCircle::of_points(n), doubled);
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      std::vector<std::size_t> pick;
      for (std::size_t k = 0; k < m; ++k) {
        if (mask & (1u << k)) pick.push_back(k);
      }
      ASSERT_EQ(arcs_cover_points(n, arcs, pick), arcs_cover_circle(2 * n, ext, pick));
    }
    auto best = exhaustive_min(m, [&](const std::vector<std::size_t>& p) {
      return arcs_cover_points(n, arcs, p);
    });
    CoverSolution s = circular_point_cover(n, arcs);
    ASSERT_EQ(s.optimal(), best.has_value());
    if (best) {
      ASSERT_EQ(s.size(), *best);
      ASSERT_TRUE(arcs_cover_points(n, arcs, s.chosen));
    }
  }
}

}  // namespace
}  // namespace hcover
