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

#ifndef HCOVER_SOLUTION_HPP_
#define HCOVER_SOLUTION_HPP_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace hcover {

enum class Status { kOptimal, kInfeasible };

inline std::string_view status_name(Status s) {
  return s == Status::kOptimal ? "optimal" : "infeasible";
}

// `chosen` holds indices into whatever the solver was given (runs, arcs or
// halfplanes), ascending. For an infeasible result `witness` names the first
// element that cannot be covered.
struct CoverSolution {
  Status status = Status::kOptimal;
  std::vector<std::size_t> chosen;
  std::optional<std::size_t> witness;

  bool optimal() const { return status == Status::kOptimal; }
  std::size_t size() const { return chosen.size(); }

  static CoverSolution infeasible(std::size_t witness) {
    CoverSolution s;
    s.status = Status::kInfeasible;
    s.witness = witness;
    return s;
  }
};

}  // namespace hcover

#endif  // HCOVER_SOLUTION_HPP_
