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

#ifndef HCOVER_SCALAR_HPP_
#define HCOVER_SCALAR_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "hcover/error.hpp"

namespace hcover {

// Exact rational coordinate type. mpq_class keeps values canonical as long
// as every construction from a numerator/denominator pair is canonicalized,
// which make_rational and parse_rational do.
using Scalar = mpq_class;

inline Scalar make_rational(long num, long den = 1) {
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

inline int sign(const Scalar& v) { return sgn(v); }

inline Scalar abs_value(const Scalar& v) { return v < 0 ? Scalar(-v) : v; }

// Accepts "p", "-p", "p/q" with q != 0. Whitespace is not allowed.
inline Scalar parse_rational(std::string_view text) {
  auto valid_integer = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!valid_integer(num, true) || !valid_integer(den, false)) {
    throw Error(ErrorCode::kInvalidInput,
                "malformed rational '" + std::string(text) + "'");
  }
  std::string num_str(num);
  if (!num_str.empty() && num_str[0] == '+') num_str.erase(0, 1);
  mpz_class n(num_str, 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorCode::kInvalidInput,
                "zero denominator in '" + std::string(text) + "'");
  }
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Scalar& v) { return v.get_str(10); }

inline bool is_integer(const Scalar& v) { return v.get_den() == 1; }

}  // namespace hcover

#endif  // HCOVER_SCALAR_HPP_
