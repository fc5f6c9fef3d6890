#include "zdmd/graph_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace zdmd {
namespace {

bool plain_dot_id(const std::string& s) {
  if (s.empty()) return false;
  const bool numeral =
      std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
  if (numeral) return true;
  if (std::isdigit(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

std::string dot_id(const std::string& s) {
  if (plain_dot_id(s)) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) os << "  " << dot_id(g.name(v)) << ";\n";
  }
  for (const auto& [u, v] : g.edges()) {
    os << "  " << dot_id(g.name(u)) << " -- " << dot_id(g.name(v)) << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_json(const Graph& g) {
  nlohmann::json doc;
  doc["n"] = g.vertex_count();
  auto edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  if (g.has_labels()) {
    auto labels = nlohmann::json::object();
    for (Vertex v = 0; v < g.vertex_count(); ++v) labels[std::to_string(v)] = g.name(v);
    doc["labels"] = std::move(labels);
  }
  return doc.dump();
}

Graph graph_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("graph JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_unsigned()) {
    throw std::invalid_argument("graph JSON: missing non-negative integer field \"n\"");
  }
  const auto n = doc["n"].get<std::size_t>();
  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
          !e[1].is_number_unsigned()) {
        throw std::invalid_argument("graph JSON: each edge must be a pair of ids");
      }
      edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
  }
  Graph g;
  try {
    g = Graph::from_edge_list(n, edges);
  } catch (const std::out_of_range& e) {
    throw std::invalid_argument(std::string("graph JSON: ") + e.what());
  }
  if (doc.contains("labels")) {
    std::vector<std::string> labels(n);
    for (Vertex v = 0; v < n; ++v) labels[v] = std::to_string(v);
    for (const auto& [key, value] : doc["labels"].items()) {
      std::size_t id = 0;
      try {
        id = std::stoul(key);
      } catch (const std::exception&) {
        throw std::invalid_argument("graph JSON: label key \"" + key + "\" is not an id");
      }
      if (id >= n) throw std::invalid_argument("graph JSON: label id out of range");
      labels[id] = value.get<std::string>();
    }
    g = g.with_labels(std::move(labels));
  }
  return g;
}

}  // namespace zdmd
