// Copyright 2026 The gbent-cayley Authors.
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

#include "gbf/report.hpp"

#include <json.hpp>

#include <cmath>
#include <sstream>

#include "gbf/expression.hpp"

namespace gbf {
namespace {

using json = nlohmann::ordered_json;

double tidy(double v) {
  const double r = std::round(v * 1e12) / 1e12;
  return r == 0.0 ? 0.0 : r;
}

json cyclotomic_json(const CyclotomicInteger& c) {
  return json{{"coeffs", c.coeffs()}, {"text", c.to_string()}};
}

json norm_json(const CyclotomicInteger& c) {
  if (auto v = c.is_integer()) return *v;
  return json{{"coeffs", c.coeffs()}};
}

json optional_json(const std::optional<std::uint64_t>& v) { return v ? json(*v) : json(nullptr); }

json bits_json(const std::vector<std::uint8_t>& bits) {
  std::string s;
  for (auto b : bits) s += static_cast<char>('0' + b);
  return s;
}

std::string vertex_bits(Vertex v, int n) {
  std::string s;
  for (auto b : enc_inverse(v, n)) s += static_cast<char>('0' + b);
  return s;
}

json witness_json(const std::optional<ConstancyWitness>& w, int n) {
  if (!w) return nullptr;
  return json{{"pair", {vertex_bits(w->a, n), vertex_bits(w->b, n)}},
              {"count", w->count_ab},
              {"other_pair", {vertex_bits(w->c, n), vertex_bits(w->d, n)}},
              {"other_count", w->count_cd}};
}

json constancy_json(const ConstancyResult& r, int n) {
  return json{{"constant", r.constant}, {"value", optional_json(r.value)}, {"witness", witness_json(r.witness, n)}};
}

json srg_json(const SrgReport& r, int n) {
  json j{{"x", r.x.to_string()}};
  if (r.generalized) j["x2"] = r.x2.to_string();
  j["y"] = r.y.to_string();
  j["convention"] = to_string(r.convention);
  j["bisection"] = r.bisection;
  j["certified"] = r.certified;
  j["e"] = optional_json(r.e);
  j["d"] = optional_json(r.d);
  j["degenerate"] = r.degenerate;
  j["witness"] = witness_json(r.witness, n);
  if (!r.refuted_class.empty()) j["refuted_class"] = r.refuted_class;
  return j;
}

json table_json(const Gbf& f) {
  json t = json::array();
  for (auto v : f.table()) t.push_back(static_cast<unsigned>(v));
  return t;
}

json bool_table_json(const BooleanFunction& g) {
  json t = json::array();
  for (auto v : g.table()) t.push_back(static_cast<unsigned>(v));
  return t;
}

json gbent_json(const GbentVerdict& v, int n) {
  json j{{"value", v.gbent}};
  j["witness"] = v.witness ? json(vertex_bits(*v.witness, n)) : json(nullptr);
  j["witness_norm"] = v.witness_norm ? norm_json(*v.witness_norm) : json(nullptr);
  return j;
}

json butson_json(const ButsonVerdict& v, int n) {
  json j{{"value", v.butson}, {"method", v.direct ? "matrix" : "autocorrelation"}};
  if (v.row)
    j["witness"] = json{{"row", vertex_bits(*v.row, n)}, {"column", vertex_bits(*v.column, n)}, {"entry", cyclotomic_json(*v.entry)}};
  else
    j["witness"] = nullptr;
  return j;
}

json regularity_json(const WeightedRegularity& wr) {
  return json{{"v", wr.v}, {"r", wr.r}, {"loop_weight", wr.loop_weight}};
}

json spectrum_object(const Spectrum& s) {
  json values = json::array();
  json norms = json::array();
  json complex = json::array();
  for (Vertex u = 0; u < s.size(); ++u) {
    const auto h = s.value(u);
    values.push_back(cyclotomic_json(h));
    norms.push_back(norm_json(norm_squared(h)));
    const auto z = h.to_complex();
    complex.push_back(json::array({tidy(z.real()), tidy(z.imag())}));
  }
  json j{{"n", s.n()}, {"k", s.k()}, {"values", std::move(values)}, {"norms", std::move(norms)}};
  j["gbent"] = is_gbent(s).gbent;
  j["complex"] = std::move(complex);
  return j;
}

// Indented "key: value" rendering used for every text-mode report.
void render_text(const json& j, int indent, std::ostringstream& out);

bool is_scalar(const json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  return j.dump();
}

bool inline_array(const json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const json& e) {
           return is_scalar(e) || (e.is_array() && std::all_of(e.begin(), e.end(), is_scalar));
         });
}

std::string inline_text(const json& j) {
  if (is_scalar(j)) return scalar_text(j);
  std::string s = "[";
  bool first = true;
  for (const auto& e : j) {
    if (!first) s += ", ";
    s += inline_text(e);
    first = false;
  }
  return s + "]";
}

void render_text(const json& j, int indent, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_scalar(value) || inline_array(value)) {
        out << pad << key << ": " << inline_text(value) << "\n";
      } else {
        out << pad << key << ":\n";
        render_text(value, indent + 2, out);
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (is_scalar(e) || inline_array(e)) {
        out << pad << "- " << inline_text(e) << "\n";
      } else {
        out << pad << "-\n";
        render_text(e, indent + 2, out);
      }
    }
  } else {
    out << pad << scalar_text(j) << "\n";
  }
}

std::string emit(const json& j, OutputFormat format) {
  if (format == OutputFormat::Json) return j.dump(2) + "\n";
  std::ostringstream out;
  render_text(j, 0, out);
  return out.str();
}

json header(const char* kind, const Gbf& f) {
  return json{{"schema_version", kSchemaVersion}, {"kind", kind}, {"n", f.n()}, {"k", f.k()}};
}

WeightSet require_set(const std::optional<std::string>& text, const char* flag, unsigned q) {
  if (!text) fail(ErrorCode::InvalidArgument, std::string("this check needs ") + flag);
  return WeightSet::parse(*text, q);
}

BooleanFunction require_boolean(const Gbf& f, const char* what) {
  if (f.k() != 1) fail(ErrorCode::Domain, std::string(what) + " takes a Boolean function (k=1)");
  return BooleanFunction(f.n(), f.table());
}

json check_result(const Gbf& f, const CheckRequest& req) {
  const int n = f.n();
  const unsigned q = f.q();
  const auto& w = req.which;
  if (w == "gbent") return gbent_json(is_gbent(f), n);
  if (w == "bent") {
    const auto g = require_boolean(f, "the bent check");
    const auto v = is_bent(g);
    return json{{"value", v.bent},
                {"witness", v.witness ? json(vertex_bits(*v.witness, n)) : json(nullptr)},
                {"witness_value", v.witness ? json(v.witness_value) : json(nullptr)},
                {"walsh", wht(g)}};
  }
  if (w == "butson") return butson_json(butson_check(f), n);
  if (w == "srg") {
    const auto x = require_set(req.x, "--x", q);
    const auto y = require_set(req.y, "--y", q);
    if (req.x2) return srg_json(srg_check_generalized(f, x, WeightSet::parse(*req.x2, q), y, req.convention), n);
    return srg_json(srg_check(f, x, y, req.convention), n);
  }
  if (w == "gb4") {
    const auto r = gb4_check(f, req.convention);
    return json{{"convention", to_string(r.convention)},
                {"passes", r.passes()},
                {"cond_i", constancy_json(r.cond_i, n)},
                {"cond_ii", constancy_json(r.cond_ii, n)}};
  }
  if (w == "necessary") {
    const auto r = necessary_condition_check(f, req.convention);
    json entries = json::array();
    for (const auto& e : r.entries)
      entries.push_back(json{{"c", bits_json(e.classes.c)},
                             {"x0", e.classes.x0.to_string()},
                             {"x1", e.classes.x1.to_string()},
                             {"reading_a", constancy_json(e.reading_a, n)},
                             {"reading_b", srg_json(e.reading_b, n)},
                             {"reading_b_holds", e.reading_b_holds},
                             {"fc_bent", e.fc_bent.bent}});
    return json{{"convention", to_string(r.convention)},
                {"reading_a_holds", r.reading_a_holds},
                {"reading_b_holds", r.reading_b_holds},
                {"all_fc_bent", r.all_fc_bent},
                {"entries", std::move(entries)}};
  }
  if (w == "local-srg") {
    const auto r = local_srg_check(f);
    json kj = json::object(), lambda = json::array(), mu = json::array();
    for (const auto& [a, v] : r.k) kj[std::to_string(a)] = v;
    for (const auto& [key, v] : r.lambda)
      lambda.push_back(json{{"a1", std::get<0>(key)}, {"a2", std::get<1>(key)}, {"a3", std::get<2>(key)}, {"value", v}});
    for (const auto& [key, v] : r.mu) mu.push_back(json{{"a1", key.first}, {"a2", key.second}, {"value", v}});
    json j{{"certified", r.certified}, {"connected", r.connected}, {"weights", r.weights}, {"k", std::move(kj)},
           {"lambda", std::move(lambda)}, {"mu", std::move(mu)}};
    if (!r.certified) {
      j["failed_parameter"] = r.failed_parameter;
      j["failed_index"] = r.failed_index;
      j["witness"] = witness_json(r.witness, n);
    }
    return j;
  }
  if (w == "counting-identity") {
    const auto x = require_set(req.x, "--x", q);
    const auto rep = srg_check(f, x, x, Convention::ExcludeEndpoints);
    const auto wr = weighted_regularity(f);
    json j{{"report", srg_json(rep, n)}, {"v", wr.v}, {"r_x", wr.r_of(x)}};
    j["identity"] = rep.certified ? json(counting_identity_check(rep, wr)) : json(nullptr);
    return j;
  }
  if (w == "classical-srg") {
    const auto r = classical_srg_check(require_boolean(f, "the classical srg check"));
    json j{{"v", r.v}, {"r", r.r}, {"has_loop", r.has_loop}, {"certified", r.certified}, {"e", optional_json(r.e)},
           {"d", optional_json(r.d)}, {"witness", witness_json(r.witness, n)}, {"connected", r.connected},
           {"components", r.components}, {"component_order", r.component_order},
           {"component_certified", r.component_certified}, {"component_d", optional_json(r.component_d)},
           {"degenerate", r.degenerate}, {"distinct_eigenvalues", r.distinct_eigenvalues}};
    auto opt = [](const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); };
    j["three_eigenvalue_identities"] = opt(r.three_eigenvalue_identities);
    j["counting_identity"] = opt(r.counting_identity);
    j["matrix_identity"] = opt(r.matrix_identity);
    return j;
  }
  if (w == "complement") {
    const auto x = require_set(req.x, "--x", q);
    const auto y = require_set(req.y, "--y", q);
    const auto r = complement_theorem_check(f, x, y, req.convention);
    json j{{"applicable", r.applicable}, {"original", srg_json(r.original, n)}};
    if (r.applicable) {
      j["case"] = r.reflect_fixes_x ? "q-1-X=X" : "q-1-X=Xbar";
      j["literal"] = srg_json(r.literal, n);
      j["literal_holds"] = r.literal_holds;
      j["fixed_bisection"] = srg_json(r.fixed_bisection, n);
      j["fixed_bisection_holds"] = r.fixed_bisection_holds;
    }
    const auto wr = weighted_regularity(f);
    const auto wrbar = weighted_regularity(complement_function(f));
    j["complement_table"] = table_json(complement_function(f));
    j["r"] = wr.r;
    j["r_complement"] = wrbar.r;
    j["reversed"] = complement_regularity_reversed(wr, wrbar);
    return j;
  }
  if (w == "corollary") {
    if (f.k() != 2) fail(ErrorCode::Domain, "the bent-set corollary applies to q=4 (k=2)");
    const auto parts = components(f);
    const auto r = bent_set_corollary_check(parts, req.convention);
    json cases = json::array();
    for (const auto& c : r.cases)
      cases.push_back(json{{"a0", c.a0}, {"a1", c.a1}, {"x", c.x.to_string()}, {"report", srg_json(c.report, n)}});
    json j{{"is_bent_set", r.is_bent_set}, {"holds", r.holds}};
    if (!r.is_bent_set) j["precondition_failure"] = r.precondition_failure;
    j["cases"] = std::move(cases);
    return j;
  }
  if (w == "eigen") {
    const auto r = eigen_verify(f);
    json j{{"exact", r.exact},
           {"failing_character", r.failing_character ? json(vertex_bits(*r.failing_character, n)) : json(nullptr)},
           {"numeric_checked", r.numeric_checked}};
    if (r.numeric_checked) {
      j["numeric_match"] = r.numeric_match;
      j["max_deviation"] = r.max_deviation;
    }
    return j;
  }
  if (w == "dyadic") return json{{"value", dyadic_check(f)}};
  if (w == "wrg") return regularity_json(weighted_regularity(f));
  fail(ErrorCode::InvalidArgument, "unknown check '" + w + "'");
}

const char* scope_name(AuditScope s) {
  switch (s) {
    case AuditScope::Exhaustive:
      return "exhaustive";
    case AuditScope::Random:
      return "random";
    case AuditScope::Fixtures:
      return "fixtures";
  }
  return "unknown";
}

std::string table_text(const std::vector<std::uint8_t>& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(static_cast<unsigned>(t[i]));
  }
  return s;
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  fail(ErrorCode::InvalidArgument, "unknown output format '" + std::string(name) + "' (expected text or json)");
}

std::string spectrum_json(const Spectrum& s) { return spectrum_object(s).dump(2) + "\n"; }

std::string analyze_report(const Gbf& f, OutputFormat format) {
  auto j = header("analyze", f);
  j["q"] = f.q();
  j["table"] = table_json(f);
  json parts = json::array();
  int index = 0;
  for (const auto& a : components(f))
    parts.push_back(json{{"index", index++},
                         {"table", bool_table_json(a)},
                         {"degree", algebraic_degree(a)},
                         {"weight", hamming_weight(a)}});
  j["components"] = std::move(parts);
  const auto s = gwht_fast(f);
  j["spectrum"] = spectrum_object(s);
  j["gbent"] = gbent_json(is_gbent(s), f.n());
  j["weighted_regularity"] = regularity_json(weighted_regularity(f));
  j["strength"] = strength(f, 0);
  j["butson"] = butson_json(butson_check(f), f.n());
  return emit(j, format);
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "gbent", "bent", "butson", "srg", "gb4", "necessary", "local-srg", "counting-identity",
      "classical-srg", "complement", "corollary", "eigen", "dyadic", "wrg"};
  return names;
}

std::string check_report(const Gbf& f, const CheckRequest& request, OutputFormat format) {
  auto j = header("check", f);
  j["check"] = request.which;
  j["result"] = check_result(f, request);
  return emit(j, format);
}

std::string audit_json(const AuditReport& r) {
  const auto& o = r.options;
  json j{{"schema_version", kSchemaVersion}, {"kind", "audit"}, {"n", o.n}, {"k", o.k}, {"scope", scope_name(o.scope)}};
  if (o.scope == AuditScope::Random) j["count"] = o.count;
  if (o.scope != AuditScope::Exhaustive) j["seed"] = o.seed;
  json conventions = json::array();
  for (auto c : o.conventions) conventions.push_back(to_string(c));
  j["conventions"] = std::move(conventions);
  j["total"] = r.total;
  j["fixtures"] = r.fixtures;
  j["gbent"] = r.gbent;
  j["forbidden"] = r.forbidden;
  json claims = json::array();
  for (const auto& c : r.claims) {
    json ex = json::array();
    for (const auto& e : c.exceptions)
      ex.push_back(json{{"table", table_text(e.table)}, {"detail", e.detail}, {"permitted", e.permitted}});
    claims.push_back(json{{"name", c.name},
                          {"statement", c.statement},
                          {"binding", c.binding},
                          {"checked", c.checked},
                          {"premise", c.premise},
                          {"holds", c.holds},
                          {"violations", c.violations},
                          {"permitted", c.permitted},
                          {"truncated", c.truncated},
                          {"exceptions", std::move(ex)}});
  }
  j["claims"] = std::move(claims);
  if (o.per_function) {
    json records = json::array();
    auto opt = [](const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); };
    for (const auto& rec : r.records)
      records.push_back(json{{"table", table_text(rec.table)},
                             {"gbent", rec.gbent},
                             {"butson", rec.butson},
                             {"decomposition", opt(rec.decomposition)},
                             {"gb4_all_vertices", opt(rec.gb4_all_vertices)},
                             {"gb4_exclude_endpoints", opt(rec.gb4_exclude_endpoints)},
                             {"necessary", opt(rec.necessary)},
                             {"all_fc_bent", opt(rec.all_fc_bent)}});
    j["records"] = std::move(records);
  }
  return j.dump(2) + "\n";
}

std::string audit_summary(const AuditReport& r) {
  const auto& o = r.options;
  std::ostringstream out;
  out << "audit n=" << o.n << " k=" << o.k << " scope=" << scope_name(o.scope);
  if (o.scope == AuditScope::Random) out << " count=" << o.count;
  if (o.scope != AuditScope::Exhaustive) out << " seed=" << o.seed;
  out << "\nfunctions=" << r.total << " fixtures=" << r.fixtures << " gbent=" << r.gbent << "\n";
  std::size_t width = 5;
  for (const auto& c : r.claims) width = std::max(width, c.name.size());
  char line[256];
  std::snprintf(line, sizeof line, "%-*s  %-13s %10s %10s %10s %10s %10s\n", static_cast<int>(width), "claim", "kind",
                "checked", "premise", "holds", "violations", "permitted");
  out << line;
  for (const auto& c : r.claims) {
    std::snprintf(line, sizeof line, "%-*s  %-13s %10llu %10llu %10llu %10llu %10llu\n", static_cast<int>(width),
                  c.name.c_str(), c.binding ? "binding" : "informational", static_cast<unsigned long long>(c.checked),
                  static_cast<unsigned long long>(c.premise), static_cast<unsigned long long>(c.holds),
                  static_cast<unsigned long long>(c.violations), static_cast<unsigned long long>(c.permitted));
    out << line;
  }
  out << "forbidden exceptions: " << r.forbidden << (r.forbidden ? "  VIOLATION\n" : "\n");
  return out.str();
}

std::string search_report(const SearchOptions& options, const SearchResult& result, OutputFormat format) {
  if (format == OutputFormat::Json) {
    json fs = json::array();
    for (const auto& f : result.found) fs.push_back(table_text(f.table()));
    const char* mode = options.mode == SearchMode::Exhaustive ? "exhaustive"
                       : options.mode == SearchMode::Random   ? "random"
                                                              : "construct";
    json j{{"schema_version", kSchemaVersion}, {"kind", "search"}, {"n", options.n}, {"k", options.k},
           {"mode", mode}, {"examined", result.examined}, {"found", result.found.size()}, {"functions", std::move(fs)}};
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  for (const auto& f : result.found) out << format_gbf(f);
  out << "# found " << result.found.size() << " gbent of " << result.examined << " examined\n";
  return out.str();
}

}  // namespace gbf
