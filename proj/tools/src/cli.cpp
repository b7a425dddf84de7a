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

#include "galois_cpm_cli/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "galois_cpm/cpm.hpp"
#include "galois_cpm/errors.hpp"
#include "galois_cpm/field_ops.hpp"
#include "galois_cpm/finite_field.hpp"
#include "galois_cpm/folding.hpp"
#include "galois_cpm/serialization.hpp"
#include "galois_cpm_cli/expression.hpp"
#include "galois_cpm_cli/lattice.hpp"
#include "galois_cpm_cli/verify.hpp"

namespace galois_cpm::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr std::size_t kDefaultMaxDim = 4096;

// Invalid flag values detected after parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<long> conductor;
  std::string ff;
  bool sextic = false;
  std::string subgroup;
  std::string transversal;
  std::string source;
  std::size_t dim = 0;
  std::string matrix;
  std::string state;
  std::string element;
  std::string target;
  int base_degree = 1;
  int bound_height = 3;
  int bound_terms = 8;
  std::uint64_t seed = 42;
  std::string suite;
  bool dot = false;
  bool json_out = false;
};

FieldPtr field_from(const Options& o) {
  const int chosen = (o.conductor ? 1 : 0) + (o.ff.empty() ? 0 : 1) + (o.sextic ? 1 : 0);
  if (chosen != 1) throw UsageError("exactly one of --conductor, --ff, --sextic is required");
  if (o.conductor) return Field::cyclotomic(*o.conductor);
  if (o.sextic) return Field::sextic_s3();
  auto comma = o.ff.find(',');
  if (comma == std::string::npos) throw UsageError("--ff expects p,m");
  try {
    return Field::finite(std::stol(o.ff.substr(0, comma)), std::stoi(o.ff.substr(comma + 1)));
  } catch (const std::logic_error&) {
    throw UsageError("--ff expects p,m");
  }
}

std::size_t max_dim() {
  const char* v = std::getenv("GALOIS_CPM_MAX_DIM");
  if (v == nullptr || *v == '\0') return kDefaultMaxDim;
  try {
    std::size_t pos = 0;
    auto value = std::stoull(v, &pos);
    if (pos != std::string(v).size() || value == 0) throw std::invalid_argument(v);
    return static_cast<std::size_t>(value);
  } catch (const std::logic_error&) {
    throw UsageError(std::string("GALOIS_CPM_MAX_DIM must be a positive integer, got '") + v + "'");
  }
}

void check_dim(std::size_t base, std::size_t factors) {
  const std::size_t cap = max_dim();
  try {
    checked_power(base, factors, cap);
  } catch (const AlgebraError&) {
    throw UsageError("folded dimension " + std::to_string(base) + "^" + std::to_string(factors) +
                     " exceeds GALOIS_CPM_MAX_DIM=" + std::to_string(cap));
  }
}

Subgroup subgroup_from(const FieldPtr& f, const std::string& gens, bool default_full) {
  GaloisGroup g(f);
  if (gens.empty()) return default_full ? g.full() : g.trivial();
  return g.generated_by(g.parse_list(gens));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Either the library's matrix JSON or {"rows", "cols", "entries": [["1-z", ...]]}
// with expression strings over the selected field.
Matrix load_matrix(const std::string& path, const FieldPtr& field) {
  const std::string text = read_file(path);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw AlgebraError(ErrorCode::kParse, e.what());
  }
  if (j.contains("matrix")) j = j["matrix"];
  if (j.contains("field")) {
    Matrix m = matrix_from_json(j.dump());
    if (!m.field()->same_as(*field)) throw AlgebraError(ErrorCode::kContextMismatch, "matrix file uses another field");
    return Matrix::from_elements(field, m.rows(), m.cols(), [&] {
      std::vector<FieldElement> v;
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) v.emplace_back(field, m.coords(r, c));
      return v;
    }());
  }
  if (!j.contains("entries") || !j["entries"].is_array()) throw AlgebraError(ErrorCode::kParse, "matrix needs 'entries'");
  const auto& rows = j["entries"];
  std::vector<FieldElement> entries;
  std::size_t cols = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].is_array() || (r > 0 && rows[r].size() != cols))
      throw AlgebraError(ErrorCode::kDimensionMismatch, "ragged matrix rows");
    cols = rows[r].size();
    for (const auto& e : rows[r]) {
      entries.push_back(parse_expression(e.is_string() ? e.get<std::string>() : e.dump(), field));
    }
  }
  return Matrix::from_elements(field, rows.size(), cols, entries);
}

json matrix_value(const Matrix& m) { return json::parse(matrix_to_json(m)); }
json element_value(const FieldElement& a) { return json::parse(element_to_json(a)); }

void emit(std::ostream& out, json j) {
  j["exact"] = true;
  out << j.dump() << "\n";
}

std::string labels(const FieldPtr& f, const std::vector<GroupElement>& elems) {
  std::string s;
  for (const auto& g : elems) s += (s.empty() ? "" : ",") + f->automorphism_label(g);
  return s;
}

// --- verbs -----------------------------------------------------------------

int do_lattice(const Options& o, std::ostream& out) {
  out << emit_lattice(field_from(o), o.json_out ? LatticeFormat::kJson : LatticeFormat::kDot);
  return kExitOk;
}

int do_fold(const Options& o, std::ostream& out) {
  auto f = field_from(o);
  if (o.matrix.empty()) throw UsageError("fold requires --matrix");
  if (!o.transversal.empty() && o.subgroup.empty()) throw UsageError("--transversal requires --subgroup");
  Matrix m = load_matrix(o.matrix, f);
  GaloisGroup g(f);
  json j;
  if (o.subgroup.empty()) {
    check_dim(std::max(m.rows(), m.cols()), g.order());
    j["subgroup"] = g.trivial().label();
    j["matrix"] = matrix_value(fold_complete(m, g));
  } else {
    Subgroup h = subgroup_from(f, o.subgroup, false);
    Transversal t = o.transversal.empty() ? left_transversal(h) : make_transversal(h, g.parse_list(o.transversal));
    check_dim(std::max(m.rows(), m.cols()), t.reps.size());
    j["subgroup"] = h.label();
    j["transversal"] = labels(f, t.reps);
    j["matrix"] = matrix_value(fold_transversal(m, FoldingData(h, t)));
  }
  emit(out, std::move(j));
  return kExitOk;
}

int do_decohere(const Options& o, std::ostream& out, bool discard) {
  auto f = field_from(o);
  if (o.dim == 0) throw UsageError("--dim must be a positive integer");
  GaloisGroup g(f);
  check_dim(o.dim, g.order());
  Subgroup h = subgroup_from(f, o.subgroup, false);
  json j;
  j["subgroup"] = h.label();
  j["dim"] = o.dim;
  if (discard) {
    EnvEffect e = discard_map(o.dim, g, h);
    j["support"] = e.support().size();
    j["matrix"] = matrix_value(e.realized());
  } else {
    DecoheredObject obj = o.transversal.empty() ? DecoheredObject(o.dim, h)
                                                : DecoheredObject(o.dim, make_transversal(h, g.parse_list(o.transversal)));
    j["transversal"] = labels(f, obj.transversal.reps);
    j["rank"] = obj.tuple_indices().size();
    j["matrix"] = matrix_value(obj.idempotent);
  }
  emit(out, std::move(j));
  return kExitOk;
}

int do_scalar(const Options& o, std::ostream& out) {
  auto f = field_from(o);
  if (o.state.empty()) throw UsageError("scalar requires --state");
  Matrix v = load_matrix(o.state, f);
  if (v.cols() != 1) throw UsageError("--state must be a column vector");
  GaloisGroup g(f);
  check_dim(v.rows(), g.order());
  Subgroup lambda = subgroup_from(f, o.subgroup, false);
  CpmMorphism b = cpm_morphism(v, 1, {EnvBlock{v.rows(), lambda}});
  std::vector<FieldElement> entries;
  for (std::size_t r = 0; r < v.rows(); ++r) entries.push_back(v.at(r, 0));
  const FieldElement scalar = b.realized.at(0, 0);
  const bool agrees = scalar == nested_norm_formula(entries, lambda);
  json j;
  j["subgroup"] = lambda.label();
  j["scalar"] = scalar.to_string();
  j["value"] = element_value(scalar);
  j["nested_norm_formula_agrees"] = agrees;
  emit(out, std::move(j));
  return agrees ? kExitOk : kExitVerificationFailure;
}

int do_norm(const Options& o, std::ostream& out) {
  auto f = field_from(o);
  if (o.element.empty()) throw UsageError("norm requires --element");
  FieldElement a = parse_expression(o.element, f);
  Subgroup h = subgroup_from(f, o.subgroup, true);
  FieldElement n = norm_rel(a, h);
  const std::string text = n.is_rational() ? n.as_rational().to_string() : n.to_string();
  if (!o.json_out) {
    out << text << "\n";
    return kExitOk;
  }
  json j;
  j["element"] = a.to_string();
  j["subgroup"] = h.label();
  j["norm"] = text;
  j["value"] = element_value(n);
  emit(out, std::move(j));
  return kExitOk;
}

int do_tp(const Options& o, std::ostream& out) {
  auto f = field_from(o);
  if (o.element.empty()) throw UsageError("tp requires --element");
  FieldElement a = parse_expression(o.element, f);
  const bool tp = is_totally_positive(a);
  if (!o.json_out) {
    out << (tp ? "true" : "false") << "\n";
    return kExitOk;
  }
  json j;
  j["element"] = a.to_string();
  j["min_poly"] = min_poly(a).to_string();
  j["totally_positive"] = tp;
  emit(out, std::move(j));
  return kExitOk;
}

int do_ff(const Options& o, std::ostream& out) {
  if (o.ff.empty()) throw UsageError("ff requires --ff p,m");
  auto f = field_from(o);
  const int m = f->spec().degree_over_prime;
  if (o.base_degree < 1 || m % o.base_degree != 0) throw UsageError("--base-degree must divide m");
  json j;
  j["field"] = f->description();
  j["modulus"] = f->modulus();
  j["base"] = "GF(" + std::to_string(ff_order(f->characteristic(), o.base_degree)) + ")";
  json image = json::array();
  auto values = ff_norm_image(f, o.base_degree);
  for (const auto& x : values) image.push_back(x.to_string());
  j["norm_image"] = image;
  j["surjective"] = static_cast<long>(values.size()) == ff_order(f->characteristic(), o.base_degree);
  emit(out, std::move(j));
  return kExitOk;
}

int do_search(const Options& o, std::ostream& out) {
  Options with_default = o;
  if (!o.conductor && o.ff.empty() && !o.sextic) with_default.conductor = 5;
  auto f = field_from(with_default);
  if (o.target.empty()) throw UsageError("search requires --target");
  if (o.bound_height < 1 || o.bound_terms < 1) throw UsageError("search bounds must be positive");
  FieldElement target = parse_expression(o.target, f);
  Subgroup h = subgroup_from(f, o.subgroup, true);
  SumOfNormsOptions opts;
  opts.height_bound = o.bound_height;
  opts.term_bound = o.bound_terms;
  if (!o.source.empty()) opts.source = subgroup_from(f, o.source, false);
  auto w = sum_of_norms_search(target, h, opts);
  json j;
  j["field"] = f->description();
  j["target"] = target.to_string();
  j["subgroup"] = h.label();
  j["source"] = opts.source ? opts.source->label() : GaloisGroup(f).trivial().label();
  j["found"] = w.has_value();
  json terms = json::array(), norms = json::array();
  if (w) {
    for (const auto& t : w->terms) terms.push_back(t.to_string());
    for (const auto& n : w->norms) norms.push_back(n.to_string());
  }
  j["terms"] = terms;
  j["norms"] = norms;
  emit(out, std::move(j));
  return kExitOk;
}

int do_verify(const Options& o, std::ostream& out, std::ostream& err) {
  if (!o.suite.empty() && !is_suite(o.suite)) {
    std::string known;
    for (const auto& s : suite_names()) known += " " + s;
    throw UsageError("unknown suite '" + o.suite + "'; known suites:" + known);
  }
  bool ok = true;
  for (const auto& name : suite_names()) {
    if (!o.suite.empty() && name != o.suite) continue;
    VerificationReport r = run_suite(name, o.seed);
    out << r.to_json() << "\n" << std::flush;
    err << name << ": " << r.cases << " cases, " << r.failures.size() << " failures, " << r.elapsed_seconds << " s\n";
    ok = ok && r.passed();
  }
  return ok ? kExitOk : kExitVerificationFailure;
}

void add_field_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--conductor", o.conductor, "Cyclotomic conductor n (field Q(zeta_n))");
  cmd->add_option("--ff", o.ff, "Finite field GF(p^m) given as p,m");
  cmd->add_flag("--sextic", o.sextic, "The S3 field Q(2^(1/3), omega)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact Galois CPM constructions over cyclotomic, finite and sextic fields", "galois_cpm"};
  app.require_subcommand(1);

  auto* lattice = app.add_subcommand("lattice", "Subgroup lattice with fixed fields and semiring tags");
  add_field_flags(lattice, o);
  lattice->add_flag("--dot", o.dot, "DOT output (default)");
  lattice->add_flag("--json", o.json_out, "JSON output");

  auto* fold = app.add_subcommand("fold", "Fold a matrix over the group or a transversal");
  add_field_flags(fold, o);
  fold->add_option("--subgroup", o.subgroup, "Generators g1,g2,... of H");
  fold->add_option("--transversal", o.transversal, "Left coset representatives t1,t2,...");
  fold->add_option("--matrix", o.matrix, "Matrix JSON file")->required();

  auto* decohere = app.add_subcommand("decohere", "H-decoherence projector on fld n");
  auto* discard = app.add_subcommand("discard", "H-discarding effect on fld n");
  for (auto* cmd : {decohere, discard}) {
    add_field_flags(cmd, o);
    cmd->add_option("--subgroup", o.subgroup, "Generators g1,g2,... of H");
    cmd->add_option("--dim", o.dim, "Base dimension n")->required();
  }
  decohere->add_option("--transversal", o.transversal, "Left coset representatives t1,t2,...");

  auto* scalar = app.add_subcommand("scalar", "Scalar of a state under a Lambda-discard");
  add_field_flags(scalar, o);
  scalar->add_option("--subgroup", o.subgroup, "Generators of Lambda");
  scalar->add_option("--state", o.state, "Column vector JSON file")->required();

  auto* norm = app.add_subcommand("norm", "Norm N_{K/Fix(H)} of an element (H defaults to G)");
  auto* tp = app.add_subcommand("tp", "Total positivity of an element");
  for (auto* cmd : {norm, tp}) {
    add_field_flags(cmd, o);
    cmd->add_option("--element", o.element, "Expression in z (or a, w for --sextic)")->required();
    cmd->add_flag("--json", o.json_out, "JSON output");
  }
  norm->add_option("--subgroup", o.subgroup, "Generators of H");

  auto* ff = app.add_subcommand("ff", "Finite-field norm image");
  ff->add_option("--ff", o.ff, "Field GF(p^m) as p,m")->required();
  ff->add_option("--base-degree", o.base_degree, "Degree of the base field over GF(p)");

  auto* search = app.add_subcommand("search", "Bounded sum-of-norms witness search (default Q(zeta_5))");
  add_field_flags(search, o);
  search->add_option("--target", o.target, "Target element, e.g. 7/3")->required();
  search->add_option("--bound-height", o.bound_height, "Coordinate height bound");
  search->add_option("--bound-terms", o.bound_terms, "Maximum number of terms");
  search->add_option("--subgroup", o.subgroup, "Decoherence level H (default G)");
  search->add_option("--source", o.source, "Terms drawn from Fix(S)");

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", o.suite, "Suite name (all suites when omitted)");
  verify->add_option("--seed", o.seed, "Random seed");

  if (argc > 1 && argv[1][0] != '-') {
    const std::string verb = argv[1];
    try {
      app.get_subcommand(verb);
    } catch (const CLI::OptionNotFound&) {
      err << "error: unknown verb '" << verb << "'\n\n" << app.help();
      return kExitUsage;
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    if (*lattice) code = do_lattice(o, out);
    else if (*fold) code = do_fold(o, out);
    else if (*decohere) code = do_decohere(o, out, false);
    else if (*discard) code = do_decohere(o, out, true);
    else if (*scalar) code = do_scalar(o, out);
    else if (*norm) code = do_norm(o, out);
    else if (*tp) code = do_tp(o, out);
    else if (*ff) code = do_ff(o, out);
    else if (*search) code = do_search(o, out);
    else if (*verify) code = do_verify(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.get_subcommands().front()->help();
    return kExitUsage;
  } catch (const AlgebraError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "elapsed: " << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s\n";
  return code;
}

}  // namespace galois_cpm::cli
