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

#ifndef HCOVER_ENVELOPE_HPP_
#define HCOVER_ENVELOPE_HPP_

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "hcover/error.hpp"
#include "hcover/geometry.hpp"

namespace hcover {

struct EnvelopeEdge {
  Line line;
  std::size_t source;  // index into the input lines
};

// Upper envelope of non-vertical lines, left to right. Edge k spans
// [breaks[k-1], breaks[k]], with the outer ends unbounded.
struct EnvelopeChain {
  std::vector<EnvelopeEdge> edges;
  std::vector<Scalar> breaks;  // size edges.size() - 1, strictly increasing

  // Edge whose closed span contains x; at a breakpoint the left edge wins.
  std::size_t locate(const Scalar& x) const {
    auto it = std::lower_bound(breaks.begin(), breaks.end(), x);
    return static_cast<std::size_t>(it - breaks.begin());
  }

  Scalar eval(const Scalar& x) const { return edges[locate(x)].line.eval(x); }

  Point vertex(std::size_t k) const {
    return {breaks[k], edges[k].line.eval(breaks[k])};
  }

  // Index of the first edge with slope strictly greater than m, or
  // edges.size() if none. Slopes strictly increase along the chain.
  std::size_t first_steeper(const Scalar& m) const {
    std::size_t lo = 0, hi = edges.size();
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (edges[mid].line.slope > m) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    return lo;
  }
};

inline Scalar crossing_x(const Line& l, const Line& m) {
  return (l.intercept - m.intercept) / (m.slope - l.slope);
}

inline EnvelopeChain upper_envelope(std::span<const Line> lines) {
  if (lines.empty()) throw Error(ErrorCode::kEmptyInput, "upper envelope of no lines");
  std::vector<std::size_t> order(lines.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (const Line& l : lines) {
    if (l.vertical) throw Error(ErrorCode::kInvalidInput, "vertical line in envelope");
  }
  std::sort(order.begin(), order.end(), [&lines](std::size_t i, std::size_t j) {
    const Line& a = lines[i];
    const Line& b = lines[j];
    if (a.slope != b.slope) return a.slope < b.slope;
    if (a.intercept != b.intercept) return a.intercept > b.intercept;
    return i < j;
  });
  std::vector<std::size_t> st;
  std::vector<Scalar> br;  // br[k] = crossing of st[k] and st[k+1]
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const std::size_t i = order[pos];
    if (!st.empty() && lines[st.back()].slope == lines[i].slope) continue;
    while (!st.empty()) {
      const Scalar x = crossing_x(lines[st.back()], lines[i]);
      if (!br.empty() && x <= br.back()) {
        st.pop_back();
        br.pop_back();
        continue;
      }
      br.push_back(x);
      break;
    }
    st.push_back(i);
  }
  EnvelopeChain env;
  env.edges.reserve(st.size());
  for (std::size_t i : st) env.edges.push_back({lines[i], i});
  env.breaks = std::move(br);
  return env;
}

}  // namespace hcover

#endif  // HCOVER_ENVELOPE_HPP_
