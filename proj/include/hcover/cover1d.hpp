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

#ifndef HCOVER_COVER1D_HPP_
#define HCOVER_COVER1D_HPP_

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "hcover/solution.hpp"

namespace hcover {

// Indices i..j (inclusive) of a linear sequence, cut out by one halfplane.
struct IndexRun {
  std::size_t i;
  std::size_t j;
  std::size_t halfplane;

  friend bool operator==(const IndexRun&, const IndexRun&) = default;
};

// Ranks start..end going counterclockwise (inclusive) on a circle of ranks.
// start == end is a single rank unless full_circle is set.
struct CyclicArc {
  std::size_t start;
  std::size_t end;
  std::size_t halfplane;
  bool full_circle = false;

  friend bool operator==(const CyclicArc&, const CyclicArc&) = default;
};

// `size` ranks. With `extended`, even ranks are points and odd ranks are the
// fixed interior points of the gaps between them.
struct RankCircle {
  std::size_t size = 0;
  bool extended = false;

  static RankCircle of_points(std::size_t n) { return {2 * n, true}; }
  bool is_point_rank(std::size_t r) const { return !extended || r % 2 == 0; }
};

// Number of unit steps r -> r+1 inside the arc.
inline std::size_t arc_length(const CyclicArc& a, std::size_t ranks) {
  if (a.full_circle) return ranks;
  return (a.end + ranks - a.start) % ranks;
}

inline bool arc_contains_rank(const CyclicArc& a, std::size_t r, std::size_t ranks) {
  if (a.full_circle) return true;
  return (r + ranks - a.start) % ranks <= arc_length(a, ranks);
}

// Minimum number of runs covering indices 0..n-1. Among runs reaching the
// leftmost uncovered index, the one reaching farthest wins, then the smallest
// halfplane index, then the smallest run index.
inline CoverSolution greedy_interval_cover(std::size_t n, std::span<const IndexRun> runs) {
  CoverSolution sol;
  if (n == 0) return sol;
  std::vector<std::size_t> order(runs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&runs](std::size_t a, std::size_t b) { return runs[a].i < runs[b].i; });
  auto better = [&runs](std::size_t a, std::size_t b) {
    if (runs[a].j != runs[b].j) return runs[a].j > runs[b].j;
    if (runs[a].halfplane != runs[b].halfplane) return runs[a].halfplane < runs[b].halfplane;
    return a < b;
  };
  std::size_t uncovered = 0;
  std::size_t pos = 0;
  bool have = false;
  std::size_t best = 0;
  while (uncovered < n) {
    while (pos < order.size() && runs[order[pos]].i <= uncovered) {
      if (!have || better(order[pos], best)) {
        best = order[pos];
        have = true;
      }
      ++pos;
    }
    if (!have || runs[best].j < uncovered) return CoverSolution::infeasible(uncovered);
    sol.chosen.push_back(best);
    uncovered = runs[best].j + 1;
  }
  std::sort(sol.chosen.begin(), sol.chosen.end());
  return sol;
}

// Minimum number of closed arcs whose union is the whole circle of `ranks`
// positions, i.e. every step r -> r+1 lies inside a chosen arc. Greedy jump
// pointers over the doubled circle with binary lifting, minimized over the
// starting arc. The witness of infeasibility is a rank r whose step to r+1
// no arc contains.
inline CoverSolution circle_cover(std::size_t ranks, std::span<const CyclicArc> arcs) {
  CoverSolution sol;
  if (ranks == 0) return sol;
  const std::size_t m = arcs.size();
  auto arc_better = [&arcs](std::size_t a, std::size_t b) {
    if (arcs[a].halfplane != arcs[b].halfplane) return arcs[a].halfplane < arcs[b].halfplane;
    return a < b;
  };
  // A full arc alone is optimal.
  {
    bool have = false;
    std::size_t best = 0;
    for (std::size_t a = 0; a < m; ++a) {
      if (arc_length(arcs[a], ranks) == ranks && (!have || arc_better(a, best))) {
        best = a;
        have = true;
      }
    }
    if (have) {
      sol.chosen = {best};
      return sol;
    }
  }
  // Every step must be inside some arc (difference array over steps).
  {
    std::vector<long> diff(ranks + 1, 0);
    for (const CyclicArc& a : arcs) {
      const std::size_t len = arc_length(a, ranks);
      if (len == 0) continue;
      if (a.start + len <= ranks) {
        ++diff[a.start];
        --diff[a.start + len];
      } else {
        ++diff[a.start];
        --diff[ranks];
        ++diff[0];
        --diff[a.start + len - ranks];
      }
    }
    long run = 0;
    for (std::size_t r = 0; r < ranks; ++r) {
      run += diff[r];
      if (run == 0) return CoverSolution::infeasible(r);
    }
  }

  // Entries of the doubled circle: arc steps [start, start + len).
  struct Entry {
    std::size_t start;
    std::size_t end;
    std::size_t arc;
  };
  std::vector<Entry> entries;
  for (std::size_t a = 0; a < m; ++a) {
    const std::size_t len = arc_length(arcs[a], ranks);
    if (len == 0) continue;
    entries.push_back({arcs[a].start, arcs[a].start + len, a});
    entries.push_back({arcs[a].start + ranks, arcs[a].start + ranks + len, a});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
    if (x.start != y.start) return x.start < y.start;
    return x.arc < y.arc;
  });
  const std::size_t e = entries.size();
  auto entry_better = [&](std::size_t x, std::size_t y) {
    if (entries[x].end != entries[y].end) return entries[x].end > entries[y].end;
    if (entries[x].arc != entries[y].arc) return arc_better(entries[x].arc, entries[y].arc);
    return x < y;
  };
  std::vector<std::size_t> prefix_best(e);
  for (std::size_t k = 0; k < e; ++k) {
    prefix_best[k] = (k > 0 && !entry_better(k, prefix_best[k - 1])) ? prefix_best[k - 1] : k;
  }
  std::vector<std::size_t> starts(e);
  for (std::size_t k = 0; k < e; ++k) starts[k] = entries[k].start;
  // next[k]: best entry starting at or before entries[k].end.
  std::size_t levels = 1;
  while ((std::size_t{1} << levels) < e + 1) ++levels;
  std::vector<std::vector<std::size_t>> up(levels, std::vector<std::size_t>(e));
  for (std::size_t k = 0; k < e; ++k) {
    const auto it = std::upper_bound(starts.begin(), starts.end(), entries[k].end);
    const std::size_t last = static_cast<std::size_t>(it - starts.begin()) - 1;
    up[0][k] = prefix_best[last];
  }
  for (std::size_t l = 1; l < levels; ++l) {
    for (std::size_t k = 0; k < e; ++k) up[l][k] = up[l - 1][up[l - 1][k]];
  }

  bool have = false;
  std::size_t best_count = 0, best_entry = 0;
  for (std::size_t k = 0; k < e; ++k) {
    if (entries[k].start >= ranks) continue;
    const std::size_t target = entries[k].start + ranks;
    std::size_t cur = k, count = 1;
    if (entries[cur].end < target) {
      for (std::size_t l = levels; l-- > 0;) {
        if (entries[up[l][cur]].end < target) {
          cur = up[l][cur];
          count += std::size_t{1} << l;
        }
      }
      cur = up[0][cur];
      ++count;
      if (entries[cur].end < target) continue;
    }
    if (!have || count < best_count ||
        (count == best_count && arc_better(entries[k].arc, entries[best_entry].arc))) {
      have = true;
      best_count = count;
      best_entry = k;
    }
  }
  // Feasibility was checked above, so some start succeeds.
  std::size_t cur = best_entry;
  const std::size_t target = entries[best_entry].start + ranks;
  sol.chosen.push_back(entries[cur].arc);
  while (entries[cur].end < target) {
    cur = up[0][cur];
    sol.chosen.push_back(entries[cur].arc);
  }
  std::sort(sol.chosen.begin(), sol.chosen.end());
  sol.chosen.erase(std::unique(sol.chosen.begin(), sol.chosen.end()), sol.chosen.end());
  return sol;
}

// Grows each arc on an extended circle (even ranks = points, odd = gap
// points) so that an endpoint sitting on a point rank moves out to the
// adjacent gap rank. Covered point ranks do not change.
inline std::vector<CyclicArc> extend_arcs(const RankCircle& circle,
                                          std::span<const CyclicArc> arcs) {
  const std::size_t r = circle.size;
  std::vector<CyclicArc> out;
  out.reserve(arcs.size());
  for (const CyclicArc& a : arcs) {
    if (a.full_circle) {
      out.push_back(a);
      continue;
    }
    const bool grow_start = a.start % 2 == 0;
    const bool grow_end = a.end % 2 == 0;
    const std::size_t len = arc_length(a, r) + (grow_start ? 1 : 0) + (grow_end ? 1 : 0);
    CyclicArc b = a;
    if (len >= r) {
      b.start = b.end = 0;
      b.full_circle = true;
    } else {
      b.start = grow_start ? (a.start + r - 1) % r : a.start;
      b.end = grow_end ? (a.end + 1) % r : a.end;
    }
    out.push_back(b);
  }
  return out;
}

// Minimum number of arcs covering all n point ranks (arcs given over point
// ranks 0..n-1). Solved as a full-circle cover of the extended arcs.
inline CoverSolution circular_point_cover(std::size_t n, std::span<const CyclicArc> arcs) {
  CoverSolution sol;
  if (n == 0) return sol;
  {
    bool have = false;
    std::size_t best = 0;
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      if (arc_length(arcs[a], n) + 1 < n && !arcs[a].full_circle) continue;
      if (!have || arcs[a].halfplane < arcs[best].halfplane) {
        best = a;
        have = true;
      }
    }
    if (have) {
      sol.chosen = {best};
      return sol;
    }
  }
  const RankCircle circle = RankCircle::of_points(n);
  std::vector<CyclicArc> doubled;
  doubled.reserve(arcs.size());
  for (const CyclicArc& a : arcs) {
    doubled.push_back({2 * a.start, 2 * a.end, a.halfplane, a.full_circle});
  }
  const std::vector<CyclicArc> ext = extend_arcs(circle, doubled);
  CoverSolution res = circle_cover(circle.size, ext);
  if (!res.optimal()) {
    // The extended arcs cover the circle iff the arcs cover every point, so
    // some point is in no arc; report the first.
    std::vector<long> diff(n + 1, 0);
    for (const CyclicArc& a : arcs) {
      const std::size_t len = a.full_circle ? n - 1 : arc_length(a, n);
      if (a.start + len < n) {
        ++diff[a.start];
        --diff[a.start + len + 1];
      } else {
        ++diff[a.start];
        --diff[n];
        ++diff[0];
        --diff[a.start + len + 1 - n];
      }
    }
    long run = 0;
    for (std::size_t r = 0; r < n; ++r) {
      run += diff[r];
      if (run == 0) return CoverSolution::infeasible(r);
    }
    return res;
  }
  return res;
}

}  // namespace hcover

#endif  // HCOVER_COVER1D_HPP_
