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

#include <json.hpp>

#include <sstream>

#include "gbf/graph.hpp"

namespace gbf {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string bits_label(Vertex v, int n) {
  std::string s;
  for (auto b : enc_inverse(v, n)) s += static_cast<char>('0' + b);
  return s;
}

struct Edge {
  Vertex source, target;
  unsigned weight;
};

std::vector<Edge> collect_edges(const Gbf& f, GraphVariant variant) {
  std::vector<Edge> edges;
  const bool modified = variant == GraphVariant::Modified;
  for (Vertex a = 0; a < f.size(); ++a) {
    if (!modified && f[0] != 0) edges.push_back({a, a, f[0]});
    for (Vertex b = a + 1; b < f.size(); ++b) {
      const unsigned w = f[a ^ b];
      if (modified && w == 0) continue;
      edges.push_back({a, b, w});
    }
  }
  return edges;
}

std::string root_label(unsigned w, int k) { return CyclotomicInteger::root(w, k).to_string(); }

const char* variant_name(GraphVariant v) { return v == GraphVariant::Full ? "full" : "modified"; }

std::string export_dot(const Gbf& f, GraphVariant variant) {
  std::ostringstream out;
  out << "graph cayley {\n";
  out << "  // n=" << f.n() << " k=" << f.k() << " variant=" << variant_name(variant) << "\n";
  for (Vertex v = 0; v < f.size(); ++v) out << "  " << v << " [label=\"" << bits_label(v, f.n()) << "\"];\n";
  for (const auto& e : collect_edges(f, variant))
    out << "  " << e.source << " -- " << e.target << " [weight=" << e.weight << ", zeta_power=" << e.weight
        << ", label=\"" << root_label(e.weight, f.k()) << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string export_graphml(const Gbf& f, GraphVariant variant) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      << "  <key id=\"bits\" for=\"node\" attr.name=\"bits\" attr.type=\"string\"/>\n"
      << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"int\"/>\n"
      << "  <key id=\"zeta_power\" for=\"edge\" attr.name=\"zeta_power\" attr.type=\"int\"/>\n"
      << "  <key id=\"root\" for=\"edge\" attr.name=\"root\" attr.type=\"string\"/>\n"
      << "  <graph id=\"cayley\" edgedefault=\"undirected\">\n"
      << "    <data key=\"bits\">n=" << f.n() << " k=" << f.k() << " variant=" << variant_name(variant) << "</data>\n";
  for (Vertex v = 0; v < f.size(); ++v)
    out << "    <node id=\"v" << v << "\"><data key=\"bits\">" << bits_label(v, f.n()) << "</data></node>\n";
  std::size_t index = 0;
  for (const auto& e : collect_edges(f, variant))
    out << "    <edge id=\"e" << index++ << "\" source=\"v" << e.source << "\" target=\"v" << e.target << "\">"
        << "<data key=\"weight\">" << e.weight << "</data>"
        << "<data key=\"zeta_power\">" << e.weight << "</data>"
        << "<data key=\"root\">" << root_label(e.weight, f.k()) << "</data></edge>\n";
  out << "  </graph>\n</graphml>\n";
  return out.str();
}

std::string export_json(const Gbf& f, GraphVariant variant) {
  ordered_json doc;
  doc["schema_version"] = 1;
  doc["kind"] = "cayley_graph";
  doc["n"] = f.n();
  doc["k"] = f.k();
  doc["variant"] = variant_name(variant);
  doc["loop_weight"] = f[0];
  auto vertices = ordered_json::array();
  for (Vertex v = 0; v < f.size(); ++v) vertices.push_back(ordered_json{{"id", v}, {"bits", bits_label(v, f.n())}});
  doc["vertices"] = std::move(vertices);
  auto edges = ordered_json::array();
  for (const auto& e : collect_edges(f, variant))
    edges.push_back(ordered_json{{"source", e.source},
                                 {"target", e.target},
                                 {"weight", e.weight},
                                 {"zeta_power", e.weight},
                                 {"root", root_label(e.weight, f.k())}});
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

}  // namespace

ExportFormat parse_export_format(std::string_view name) {
  if (name == "dot") return ExportFormat::Dot;
  if (name == "graphml") return ExportFormat::GraphMl;
  if (name == "json") return ExportFormat::Json;
  fail(ErrorCode::InvalidArgument, "unknown export format '" + std::string(name) + "' (expected dot, graphml or json)");
}

GraphVariant parse_graph_variant(std::string_view name) {
  if (name == "full") return GraphVariant::Full;
  if (name == "modified") return GraphVariant::Modified;
  fail(ErrorCode::InvalidArgument, "unknown graph variant '" + std::string(name) + "' (expected full or modified)");
}

std::string export_graph(const Gbf& f, ExportFormat format, GraphVariant variant) {
  if (f.n() > kExportMaxN) fail(ErrorCode::LimitExceeded, "graph export is limited to n <= " + std::to_string(kExportMaxN));
  switch (format) {
    case ExportFormat::Dot:
      return export_dot(f, variant);
    case ExportFormat::GraphMl:
      return export_graphml(f, variant);
    case ExportFormat::Json:
      return export_json(f, variant);
  }
  fail(ErrorCode::InvalidArgument, "unknown export format");
}

Gbf function_from_graph_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("graph JSON: ") + e.what());
  }
  try {
    if (doc.at("kind").get<std::string>() != "cayley_graph") fail(ErrorCode::Parse, "graph JSON: kind is not cayley_graph");
    const int n = doc.at("n").get<int>();
    const int k = doc.at("k").get<int>();
    check_dimensions(n, k);
    if (n > kExportMaxN) fail(ErrorCode::LimitExceeded, "graph JSON: n exceeds the export limit");
    const std::size_t size = std::size_t{1} << n;
    std::vector<std::uint8_t> table(size, 0);
    const unsigned loop = doc.at("loop_weight").get<unsigned>();
    if (loop >= (1u << k)) fail(ErrorCode::Parse, "graph JSON: loop weight outside Z_q");
    table[0] = static_cast<std::uint8_t>(loop);
    std::vector<bool> seen(size, false);
    for (const auto& e : doc.at("edges")) {
      const auto s = e.at("source").get<Vertex>();
      const auto t = e.at("target").get<Vertex>();
      const auto w = e.at("weight").get<unsigned>();
      if (s >= size || t >= size || w >= (1u << k)) fail(ErrorCode::Parse, "graph JSON: edge outside the vertex set or Z_q");
      const Vertex z = s ^ t;
      if (z == 0) {
        if (w != loop) fail(ErrorCode::Parse, "graph JSON: loop weight disagrees with loop_weight");
        continue;
      }
      if (seen[z] && table[z] != w) fail(ErrorCode::Parse, "graph JSON: edge weights are not a Cayley graph");
      seen[z] = true;
      table[z] = static_cast<std::uint8_t>(w);
    }
    return Gbf(n, k, std::move(table));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("graph JSON: ") + e.what());
  }
}

}  // namespace gbf
