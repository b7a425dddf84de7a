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

#include "galois_cpm_cli/lattice.hpp"

#include <sstream>

#include <json.hpp>

#include "galois_cpm/cpm.hpp"
#include "galois_cpm/finite_field.hpp"

namespace galois_cpm::cli {

namespace {

std::string signature_of(const RationalPolynomial& p) {
  const int real = sturm_root_count(p, RealInterval::whole_line());
  if (real == p.degree()) return "totally_real";
  if (real == 0) return "totally_imaginary";
  return "mixed";
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

LatticeSummary summarize_lattice(const FieldPtr& field) {
  const GaloisGroup g(field);
  SubgroupLattice lattice(g);
  LatticeSummary out{field->description(), g.order(), {}, lattice.covers()};
  for (const auto& h : lattice.subgroups()) {
    LatticeNode node{h, g.order() / h.order(), {}, std::nullopt, {}, {}};
    if (field->kind() == FieldKind::kFinite) {
      const int m = field->spec().degree_over_prime;
      node.fixed_field = "GF(" + std::to_string(ff_order(field->characteristic(), m / static_cast<int>(h.order()))) + ")";
      node.signature = "finite";
    } else {
      auto ff = fixed_field(h);
      node.fixed_field = ff.min_poly.to_string();
      node.discriminant = discriminant(ff.min_poly);
      node.signature = signature_of(ff.min_poly);
    }
    node.semiring = SemiringClaim::totally_positive(h).tag();
    out.nodes.push_back(std::move(node));
  }
  return out;
}

std::string emit_lattice(const FieldPtr& field, LatticeFormat format) {
  const LatticeSummary s = summarize_lattice(field);
  if (format == LatticeFormat::kJson) {
    nlohmann::ordered_json j;
    j["field"] = s.field;
    j["group_order"] = s.group_order;
    j["nodes"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < s.nodes.size(); ++i) {
      const auto& n = s.nodes[i];
      nlohmann::ordered_json node;
      node["id"] = i;
      node["subgroup"] = n.subgroup.label();
      std::vector<std::string> gens;
      for (const auto& x : n.subgroup.generators()) gens.push_back(field->automorphism_label(x));
      node["generators"] = gens;
      node["order"] = n.subgroup.order();
      node["fixed_degree"] = n.fixed_degree;
      node["fixed_field"] = n.fixed_field;
      node["discriminant"] = n.discriminant ? nlohmann::ordered_json(n.discriminant->to_string()) : nlohmann::ordered_json();
      node["signature"] = n.signature;
      node["semiring"] = n.semiring;
      j["nodes"].push_back(std::move(node));
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : s.covers) j["edges"].push_back({a, b});
    j["exact"] = true;
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "digraph lattice {\n";
  os << "  label=\"" << dot_escape(s.field) << "\";\n";
  os << "  node [shape=box];\n";
  for (std::size_t i = 0; i < s.nodes.size(); ++i) {
    const auto& n = s.nodes[i];
    os << "  H" << i << " [label=\"" << dot_escape(n.subgroup.label()) << " order " << n.subgroup.order()
       << "\\nFix: " << dot_escape(n.fixed_field) << " degree " << n.fixed_degree;
    if (n.discriminant) os << "\\ndisc " << n.discriminant->to_string() << " " << n.signature;
    os << "\\n" << n.semiring << "\"];\n";
  }
  for (const auto& [a, b] : s.covers) os << "  H" << a << " -> H" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace galois_cpm::cli
