// Copyright 2026 The igpipe Authors.
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

#include "igpipe/graph_export.h"

#include "json.hpp"

namespace igpipe {
namespace {

std::string XmlEscape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string DotQuote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string HypergraphToGraphML(const Hypergraph &h) {
  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      "  <key id=\"type\" for=\"node\" attr.name=\"type\" "
      "attr.type=\"string\"/>\n"
      "  <key id=\"label\" for=\"node\" attr.name=\"label\" "
      "attr.type=\"string\"/>\n"
      "  <key id=\"kind\" for=\"node\" attr.name=\"kind\" "
      "attr.type=\"string\"/>\n"
      "  <key id=\"doc_id\" for=\"node\" attr.name=\"doc_id\" "
      "attr.type=\"string\"/>\n"
      "  <graph id=\"H\" edgedefault=\"undirected\">\n";
  for (size_t i = 0; i < h.vertices.size(); ++i) {
    const Vertex &v = h.vertices[i];
    out += "    <node id=\"e" + std::to_string(i) + "\">";
    out += "<data key=\"type\">entity</data>";
    out += "<data key=\"label\">" + XmlEscape(v.name) + "</data>";
    out += "<data key=\"kind\">" + std::string(EntityKindName(v.kind)) +
           "</data></node>\n";
  }
  for (size_t i = 0; i < h.edges.size(); ++i) {
    const Hyperedge &e = h.edges[i];
    out += "    <node id=\"s" + std::to_string(i) + "\">";
    out += "<data key=\"type\">statement</data>";
    out += "<data key=\"label\">" + XmlEscape(e.statement_id) + "</data>";
    out += "<data key=\"doc_id\">" + XmlEscape(e.doc_id) + "</data></node>\n";
  }
  for (size_t i = 0; i < h.edges.size(); ++i) {
    for (size_t m : h.edges[i].members) {
      out += "    <edge source=\"s" + std::to_string(i) + "\" target=\"e" +
             std::to_string(m) + "\"/>\n";
    }
  }
  out += "  </graph>\n</graphml>\n";
  return out;
}

std::string TwoSectionToDot(const SimpleGraph &g) {
  std::string out = "graph two_section {\n";
  for (size_t i = 0; i < g.size(); ++i) {
    bool actor = g.kinds[i] == EntityKind::kActor;
    out += "  " + DotQuote(g.names[i]) + " [kind=" +
           (actor ? "actor" : "object") +
           ", color=" + (actor ? "blue" : "green") + "];\n";
  }
  for (size_t u = 0; u < g.size(); ++u) {
    for (size_t v : g.adjacency[u]) {
      if (v > u) {
        out += "  " + DotQuote(g.names[u]) + " -- " + DotQuote(g.names[v]) +
               ";\n";
      }
    }
  }
  out += "}\n";
  return out;
}

std::string HypergraphToJson(const Hypergraph &h) {
  using json = nlohmann::ordered_json;
  json vertices = json::array();
  for (const Vertex &v : h.vertices) {
    vertices.push_back({{"name", v.name}, {"kind", EntityKindName(v.kind)}});
  }
  json edges = json::array();
  for (const Hyperedge &e : h.edges) {
    json members = json::array();
    for (size_t m : e.members) members.push_back(h.vertices[m].name);
    edges.push_back({{"doc_id", e.doc_id},
                     {"statement_id", e.statement_id},
                     {"members", members}});
  }
  return json{{"vertices", vertices},
              {"hyperedges", edges},
              {"isolated", h.isolated}}
             .dump(2) +
         "\n";
}

}  // namespace igpipe
