// Copyright 2026 The galois-cpm Authors
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

#include "galois_cpm/serialization.hpp"

#include <json.hpp>

#include "galois_cpm/errors.hpp"

namespace galois_cpm {

namespace {

using json = nlohmann::ordered_json;

json spec_json(const FieldSpec& spec) {
  switch (spec.kind) {
    case FieldKind::kCyclotomic: return json{{"kind", "cyclotomic"}, {"n", spec.conductor}};
    case FieldKind::kFinite: return json{{"kind", "finite"}, {"p", spec.prime}, {"m", spec.degree_over_prime}};
    case FieldKind::kSexticS3: return json{{"kind", "sextic_s3"}};
  }
  throw AlgebraError(ErrorCode::kUnsupportedField, "unknown field kind");
}

FieldSpec spec_from(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "cyclotomic") return FieldSpec{FieldKind::kCyclotomic, j.at("n").get<long>(), 0, 0};
  if (kind == "finite") return FieldSpec{FieldKind::kFinite, 0, j.at("p").get<long>(), j.at("m").get<int>()};
  if (kind == "sextic_s3") return FieldSpec{FieldKind::kSexticS3, 0, 0, 0};
  throw AlgebraError(ErrorCode::kParse, "unknown field kind '" + kind + "'");
}

json element_json(const FieldElement& a) {
  json coords = json::array();
  for (const auto& c : a.rational_coordinates()) coords.push_back(c.to_string());
  return json{{"field", spec_json(a.field()->spec())}, {"coords", coords}};
}

FieldElement element_from(const json& j, const FieldPtr& field) {
  if (!(spec_from(j.at("field")) == field->spec())) throw AlgebraError(ErrorCode::kContextMismatch, "element field differs");
  std::vector<Rational> values;
  for (const auto& c : j.at("coords")) values.push_back(Rational::parse(c.get<std::string>()));
  return FieldElement::from_rationals(field, values);
}

template <typename F>
auto guarded(F&& body) {
  try {
    return body();
  } catch (const json::exception& e) {
    throw AlgebraError(ErrorCode::kParse, e.what());
  }
}

}  // namespace

std::string field_spec_to_json(const FieldSpec& spec) { return spec_json(spec).dump(); }

FieldSpec field_spec_from_json(const std::string& text) {
  return guarded([&] { return spec_from(json::parse(text)); });
}

std::string element_to_json(const FieldElement& a) { return element_json(a).dump(); }

FieldElement element_from_json(const std::string& text) {
  return guarded([&] {
    json j = json::parse(text);
    return element_from(j, Field::from_spec(spec_from(j.at("field"))));
  });
}

std::string matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(element_json(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"field", spec_json(m.field()->spec())}, {"entries", rows}}.dump();
}

Matrix matrix_from_json(const std::string& text) {
  return guarded([&] {
    json j = json::parse(text);
    auto field = Field::from_spec(spec_from(j.at("field")));
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const auto& entries = j.at("entries");
    if (entries.size() != rows) throw AlgebraError(ErrorCode::kDimensionMismatch, "row count mismatch");
    Matrix m(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      if (entries[r].size() != cols) throw AlgebraError(ErrorCode::kDimensionMismatch, "column count mismatch");
      for (std::size_t c = 0; c < cols; ++c) m.set(r, c, element_from(entries[r][c], field));
    }
    return m;
  });
}

}  // namespace galois_cpm
