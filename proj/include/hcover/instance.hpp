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

#ifndef HCOVER_INSTANCE_HPP_
#define HCOVER_INSTANCE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hcover/error.hpp"
#include "hcover/geometry.hpp"

namespace hcover {

enum class InstanceKind { kPoints, kStar, kPolyline };

inline std::string kind_name(InstanceKind k) {
  switch (k) {
    case InstanceKind::kPoints: return "points";
    case InstanceKind::kStar: return "star";
    case InstanceKind::kPolyline: return "polyline";
  }
  return "points";
}

struct Instance {
  InstanceKind kind = InstanceKind::kPoints;
  std::vector<Point> points;
  std::vector<Halfplane> halfplanes;
  std::optional<Point> center;          // star only
  std::vector<Point> vertices;          // star / polyline
  std::optional<Scalar> epsilon;        // kernel instances
  std::optional<std::vector<std::size_t>> subset;  // candidate kernel, indices into points
  std::map<std::string, std::int64_t> metadata;    // e.g. planted_size

  friend bool operator==(const Instance&, const Instance&) = default;
};

namespace detail {

using Json = nlohmann::ordered_json;

inline Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Scalar(std::to_string(j.get<std::int64_t>()), 10);
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(ErrorCode::kInvalidInput, "expected an integer or a rational string");
}

inline Point point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw Error(ErrorCode::kInvalidInput, "a point must be a two-element array");
  }
  return {scalar_from_json(j[0]), scalar_from_json(j[1])};
}

inline std::vector<Point> points_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kInvalidInput, "expected an array of points");
  std::vector<Point> out;
  out.reserve(j.size());
  for (const Json& p : j) out.push_back(point_from_json(p));
  return out;
}

inline Json point_to_json(const Point& p) {
  return Json::array({to_string(p.x), to_string(p.y)});
}

inline const Json& required(const Json& doc, const char* key) {
  if (!doc.contains(key)) {
    throw Error(ErrorCode::kInvalidInput, std::string("missing field '") + key + "'");
  }
  return doc.at(key);
}

}  // namespace detail

inline Instance instance_from_json(const nlohmann::ordered_json& doc) {
  using detail::Json;
  if (!doc.is_object()) throw Error(ErrorCode::kInvalidInput, "instance must be a JSON object");
  Instance inst;
  const Json& kind = detail::required(doc, "kind");
  if (!kind.is_string()) throw Error(ErrorCode::kInvalidInput, "'kind' must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "points") {
    inst.kind = InstanceKind::kPoints;
  } else if (k == "star") {
    inst.kind = InstanceKind::kStar;
  } else if (k == "polyline") {
    inst.kind = InstanceKind::kPolyline;
  } else {
    throw Error(ErrorCode::kInvalidInput, "unknown kind '" + k + "'");
  }
  if (inst.kind == InstanceKind::kPoints) {
    inst.points = detail::points_from_json(detail::required(doc, "points"));
  } else if (doc.contains("points")) {
    inst.points = detail::points_from_json(doc.at("points"));
  }
  if (doc.contains("halfplanes")) {
    const Json& hs = doc.at("halfplanes");
    if (!hs.is_array()) throw Error(ErrorCode::kInvalidInput, "'halfplanes' must be an array");
    for (const Json& h : hs) {
      if (!h.is_object()) throw Error(ErrorCode::kInvalidInput, "a halfplane must be an object");
      Halfplane hp{detail::scalar_from_json(detail::required(h, "a")),
                   detail::scalar_from_json(detail::required(h, "b")),
                   detail::scalar_from_json(detail::required(h, "c"))};
      if (sign(hp.a) == 0 && sign(hp.b) == 0) {
        throw Error(ErrorCode::kInvalidInput, "halfplane with a = b = 0");
      }
      inst.halfplanes.push_back(std::move(hp));
    }
  }
  if (inst.kind == InstanceKind::kStar) {
    inst.center = detail::point_from_json(detail::required(doc, "center"));
  }
  if (inst.kind != InstanceKind::kPoints) {
    inst.vertices = detail::points_from_json(detail::required(doc, "vertices"));
  }
  if (doc.contains("epsilon")) inst.epsilon = detail::scalar_from_json(doc.at("epsilon"));
  if (doc.contains("subset")) {
    const Json& s = doc.at("subset");
    if (!s.is_array()) throw Error(ErrorCode::kInvalidInput, "'subset' must be an array");
    std::vector<std::size_t> idx;
    for (const Json& v : s) {
      if (!v.is_number_unsigned()) {
        throw Error(ErrorCode::kInvalidInput, "'subset' entries must be point indices");
      }
      idx.push_back(v.get<std::size_t>());
    }
    inst.subset = std::move(idx);
  }
  if (doc.contains("metadata")) {
    const Json& m = doc.at("metadata");
    if (!m.is_object()) throw Error(ErrorCode::kInvalidInput, "'metadata' must be an object");
    for (const auto& [key, value] : m.items()) {
      if (!value.is_number_integer()) {
        throw Error(ErrorCode::kInvalidInput, "metadata values must be integers");
      }
      inst.metadata[key] = value.get<std::int64_t>();
    }
  }
  return inst;
}

inline Instance parse_instance(const std::string& text) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kInvalidInput, std::string("malformed JSON: ") + e.what());
  }
  try {
    return instance_from_json(doc);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidInput, e.what());
  }
}

inline nlohmann::ordered_json instance_to_json(const Instance& inst) {
  using detail::Json;
  Json doc = Json::object();
  doc["kind"] = kind_name(inst.kind);
  if (inst.kind == InstanceKind::kPoints || !inst.points.empty()) {
    Json pts = Json::array();
    for (const Point& p : inst.points) pts.push_back(detail::point_to_json(p));
    doc["points"] = std::move(pts);
  }
  Json hs = Json::array();
  for (const Halfplane& h : inst.halfplanes) {
    hs.push_back(Json{{"a", to_string(h.a)}, {"b", to_string(h.b)}, {"c", to_string(h.c)}});
  }
  doc["halfplanes"] = std::move(hs);
  if (inst.center) doc["center"] = detail::point_to_json(*inst.center);
  if (inst.kind != InstanceKind::kPoints) {
    Json vs = Json::array();
    for (const Point& p : inst.vertices) vs.push_back(detail::point_to_json(p));
    doc["vertices"] = std::move(vs);
  }
  if (inst.epsilon) doc["epsilon"] = to_string(*inst.epsilon);
  if (inst.subset) doc["subset"] = *inst.subset;
  if (!inst.metadata.empty()) {
    Json m = Json::object();
    for (const auto& [key, value] : inst.metadata) m[key] = value;
    doc["metadata"] = std::move(m);
  }
  return doc;
}

inline std::string serialize_instance(const Instance& inst) {
  return instance_to_json(inst).dump(1) + "\n";
}

}  // namespace hcover

#endif  // HCOVER_INSTANCE_HPP_
