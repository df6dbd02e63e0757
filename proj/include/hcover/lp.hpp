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

#ifndef HCOVER_LP_HPP_
#define HCOVER_LP_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "hcover/error.hpp"
#include "hcover/geometry.hpp"

namespace hcover {

// Number of the form big*L + k + eps*E with L >> 1 >> eps, compared
// lexicographically. `big` bounds the symbolic search box, `eps` is the
// infinitesimal shrink that turns strict inequalities into closed ones.
struct Ext {
  Scalar big;
  Scalar k;
  Scalar eps;

  static Ext constant(const Scalar& v) { return {Scalar(0), v, Scalar(0)}; }

  Ext operator+(const Ext& o) const { return {big + o.big, k + o.k, eps + o.eps}; }
  Ext operator-(const Ext& o) const { return {big - o.big, k - o.k, eps - o.eps}; }
  Ext operator*(const Scalar& s) const { return {big * s, k * s, eps * s}; }
  Ext operator/(const Scalar& s) const { return {big / s, k / s, eps / s}; }

  int signum() const {
    if (int s = sign(big)) return s;
    if (int s = sign(k)) return s;
    return sign(eps);
  }
  friend bool operator<(const Ext& a, const Ext& b) { return (a - b).signum() < 0; }
  friend bool operator>(const Ext& a, const Ext& b) { return (a - b).signum() > 0; }

  Scalar at(const Scalar& big_value, const Scalar& eps_value) const {
    return big * big_value + k + eps * eps_value;
  }
};

struct ExtPoint {
  Ext x;
  Ext y;
};

inline Ext dot(const Point& n, const ExtPoint& p) { return p.x * n.x + p.y * n.y; }

// Constraint n . p <= r.
struct LpConstraint {
  Point n;
  Ext r;
};

struct LpOutcome {
  bool feasible = false;
  ExtPoint optimum;                      // lexicographic max of (y, x)
  std::vector<std::size_t> certificate;  // sorted, 2 or 3 indices when infeasible
};

namespace detail {

// Fisher-Yates driven directly by mt19937_64 so the permutation does not
// depend on the standard library's distribution implementation.
inline std::vector<std::size_t> seeded_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(order[i - 1], order[j]);
  }
  return order;
}

}  // namespace detail

// Seidel's randomized incremental 2D LP over the symbolic box |x|,|y| <= big.
// Maximizes y, then x, so the optimum is unique. On infeasibility reports the
// violated constraint together with the one or two earlier constraints that
// empty its line; those are infeasible on their own (the earlier optimum lies
// strictly on the far side of the line, so the pair's feasible set does too).
inline LpOutcome solve_lp(std::span<const LpConstraint> cons, std::uint64_t seed = 0) {
  const std::size_t n = cons.size();
  const Ext big_one{Scalar(1), Scalar(0), Scalar(0)};
  // Box constraints are numbered n..n+3.
  const LpConstraint box[4] = {{{Scalar(1), Scalar(0)}, big_one},
                               {{Scalar(-1), Scalar(0)}, big_one},
                               {{Scalar(0), Scalar(1)}, big_one},
                               {{Scalar(0), Scalar(-1)}, big_one}};
  auto get = [&](std::size_t i) -> const LpConstraint& {
    return i < n ? cons[i] : box[i - n];
  };

  LpOutcome out;
  out.optimum = {big_one, big_one};
  const std::vector<std::size_t> order = detail::seeded_permutation(n, seed);
  std::vector<std::size_t> seen = {n, n + 1, n + 2, n + 3};
  seen.reserve(n + 4);

  for (std::size_t pos = 0; pos < n; ++pos) {
    const std::size_t k = order[pos];
    const LpConstraint& ck = cons[k];
    if (!(dot(ck.n, out.optimum) > ck.r)) {
      seen.push_back(k);
      continue;
    }
    // Re-optimize on the line n_k . p = r_k, parametrized as p0 + t*dir.
    const Scalar nn = dot(ck.n, ck.n);
    const ExtPoint p0{ck.r * (ck.n.x / nn), ck.r * (ck.n.y / nn)};
    const Point dir{-ck.n.y, ck.n.x};
    bool have_lo = false, have_hi = false;
    Ext lo, hi;
    std::size_t lo_src = 0, hi_src = 0;
    for (std::size_t j : seen) {
      const LpConstraint& cj = get(j);
      const Scalar coef = dot(cj.n, dir);
      const Ext val = cj.r - dot(cj.n, p0);
      const int s = sign(coef);
      if (s == 0) {
        if (val.signum() < 0) {
          out.feasible = false;
          out.certificate = {std::min(k, j), std::max(k, j)};
          return out;
        }
        continue;
      }
      const Ext bound = val / coef;
      if (s > 0 && (!have_hi || bound < hi)) {
        hi = bound;
        hi_src = j;
        have_hi = true;
      } else if (s < 0 && (!have_lo || bound > lo)) {
        lo = bound;
        lo_src = j;
        have_lo = true;
      }
    }
    // Box rows guarantee both bounds exist.
    if (lo > hi) {
      if (lo_src >= n || hi_src >= n) {
        throw std::logic_error("solve_lp: box constraint in certificate");
      }
      out.feasible = false;
      out.certificate = {k, lo_src, hi_src};
      std::sort(out.certificate.begin(), out.certificate.end());
      return out;
    }
    const int dy = sign(dir.y);
    const bool take_hi = dy > 0 || (dy == 0 && sign(dir.x) > 0);
    const Ext& t = take_hi ? hi : lo;
    out.optimum = {p0.x + t * dir.x, p0.y + t * dir.y};
    seen.push_back(k);
  }
  out.feasible = true;
  return out;
}

// Picks concrete values for the symbolic box size and shrink amount under
// which `p` satisfies every constraint, and returns the resulting point.
// `shrink` receives the chosen eps value.
inline Point concretize(std::span<const LpConstraint> cons, const ExtPoint& p,
                        Scalar* shrink = nullptr) {
  Scalar eps(1);
  for (const LpConstraint& c : cons) {
    const Ext slack = c.r - dot(c.n, p);
    if (sign(slack.big) == 0 && sign(slack.k) > 0 && sign(slack.eps) < 0) {
      const Scalar lim = slack.k / (-slack.eps);
      if (lim < eps) eps = lim;
    }
  }
  eps /= 2;
  Scalar big(1);
  for (const LpConstraint& c : cons) {
    const Ext slack = c.r - dot(c.n, p);
    if (sign(slack.big) > 0) {
      const Scalar need = (-slack.k - slack.eps * eps) / slack.big;
      if (need > big) big = need;
    }
  }
  big += 1;
  if (shrink != nullptr) *shrink = eps;
  return {p.x.at(big, eps), p.y.at(big, eps)};
}

struct HellyCertificate {
  std::vector<std::size_t> indices;  // halfplanes whose union is the plane
};

struct MaxSlackResult {
  bool has_interior = false;
  Point o;       // in no halfplane of H when has_interior
  Scalar slack;  // min_i (a_i.o - c_i) / (|a_i| + |b_i|), positive
  HellyCertificate certificate;
};

inline Scalar l1_norm(const Halfplane& h) { return abs_value(h.a) + abs_value(h.b); }

// Looks for a point strictly outside every halfplane of hs. Each open
// complement a.p > c is replaced by a.p >= c + eps*(|a|+|b|) for a symbolic
// infinitesimal eps, which is feasible exactly when the open complements
// intersect.
inline MaxSlackResult max_slack_point(std::span<const Halfplane> hs,
                                      std::uint64_t seed = 0) {
  if (hs.empty()) throw Error(ErrorCode::kEmptyInput, "max_slack_point on no halfplanes");
  std::vector<LpConstraint> cons;
  cons.reserve(hs.size());
  for (const Halfplane& h : hs) {
    cons.push_back({{-h.a, -h.b}, Ext{Scalar(0), -h.c, -l1_norm(h)}});
  }
  const LpOutcome lp = solve_lp(cons, seed);
  MaxSlackResult res;
  if (!lp.feasible) {
    res.certificate.indices = lp.certificate;
    return res;
  }
  res.has_interior = true;
  res.o = concretize(cons, lp.optimum);
  bool first = true;
  for (const Halfplane& h : hs) {
    const Scalar s = (h.a * res.o.x + h.b * res.o.y - h.c) / l1_norm(h);
    if (first || s < res.slack) res.slack = s;
    first = false;
  }
  return res;
}

}  // namespace hcover

#endif  // HCOVER_LP_HPP_
