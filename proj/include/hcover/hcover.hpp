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


#ifndef HCOVER_HCOVER_HPP_
#define HCOVER_HCOVER_HPP_

#include "hcover/cover1d.hpp"
#include "hcover/envelope.hpp"
#include "hcover/error.hpp"
#include "hcover/general_cover.hpp"
#include "hcover/generators.hpp"
#include "hcover/geometry.hpp"
#include "hcover/hull.hpp"
#include "hcover/instance.hpp"
#include "hcover/kernel.hpp"
#include "hcover/lower_cover.hpp"
#include "hcover/lp.hpp"
#include "hcover/oracle.hpp"
#include "hcover/polyline_cover.hpp"
#include "hcover/range_tree.hpp"
#include "hcover/region.hpp"
#include "hcover/rotation.hpp"
#include "hcover/scalar.hpp"
#include "hcover/solution.hpp"
#include "hcover/star_cover.hpp"
#include "hcover/svg.hpp"

#endif  // HCOVER_HCOVER_HPP_
