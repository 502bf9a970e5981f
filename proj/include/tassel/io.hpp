#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "tassel/arrays.hpp"
#include "tassel/graph.hpp"
#include "tassel/lang.hpp"
#include "tassel/probes.hpp"
#include "tassel/treewidth.hpp"

namespace tassel {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  int line() const { return line_; }  // 0 when the error is not tied to a line

 private:
  int line_;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << body;
}

// FNV-1a, 64 bit.
inline std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[i] = digits[v & 15];
  return s;
}

// ---- PACE .gr ----

// Edges in lexicographic order, 1-indexed.
inline std::string write_gr(const Graph& g) {
  std::string out = "p tw " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

namespace detail {

inline std::vector<std::string> words(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string w;
  while (ss >> w) out.push_back(w);
  return out;
}

inline long long to_int(const std::string& w, int line) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(w, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != w.size()) throw ParseError(line, "expected an integer, got \"" + w + "\"");
  return v;
}

}  // namespace detail

inline Graph read_gr(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  long long n = -1, m = -1;
  std::vector<Edge> es;
  std::vector<VertexSet> seen;
  while (std::getline(in, line)) {
    ++lineno;
    auto w = detail::words(line);
    if (w.empty() || w[0] == "c") continue;
    if (w[0] == "p") {
      if (n >= 0) throw ParseError(lineno, "second problem line");
      if (w.size() != 4 || w[1] != "tw") throw ParseError(lineno, "expected \"p tw <n> <m>\"");
      n = detail::to_int(w[2], lineno);
      m = detail::to_int(w[3], lineno);
      if (n < 0 || m < 0) throw ParseError(lineno, "negative count");
      seen.assign(n, VertexSet(static_cast<int>(n)));
      continue;
    }
    if (n < 0) throw ParseError(lineno, "edge before the problem line");
    if (w.size() != 2) throw ParseError(lineno, "expected \"u v\"");
    long long u = detail::to_int(w[0], lineno), v = detail::to_int(w[1], lineno);
    if (u < 1 || v < 1 || u > n || v > n) throw ParseError(lineno, "vertex id outside 1.." + std::to_string(n));
    if (u == v) throw ParseError(lineno, "self-loop at " + std::to_string(u));
    if (seen[u - 1].contains(static_cast<int>(v - 1))) throw ParseError(lineno, "duplicate edge");
    seen[u - 1].insert(static_cast<int>(v - 1));
    seen[v - 1].insert(static_cast<int>(u - 1));
    es.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
  }
  if (n < 0) throw ParseError(0, "missing problem line");
  if (static_cast<long long>(es.size()) != m)
    throw ParseError(0, "header announces " + std::to_string(m) + " edges, found " + std::to_string(es.size()));
  return Graph::from_edges(static_cast<int>(n), es);
}

// ---- PACE .td ----

inline std::string write_td(const TreeDecomposition& td, int n) {
  std::string out = "s td " + std::to_string(td.bags.size()) + " " + std::to_string(td.width() + 1) + " " +
                    std::to_string(n) + "\n";
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    out += "b " + std::to_string(i + 1);
    for (Vertex v : td.bags[i]) out += " " + std::to_string(v + 1);
    out += "\n";
  }
  for (auto [a, b] : td.tree_edges) out += std::to_string(a + 1) + " " + std::to_string(b + 1) + "\n";
  return out;
}

struct ParsedTd {
  TreeDecomposition td;
  int n = 0;
  int declared_width_plus_one = 0;
};

inline ParsedTd read_td(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  long long bags = -1;
  ParsedTd out;
  std::vector<bool> defined;
  while (std::getline(in, line)) {
    ++lineno;
    auto w = detail::words(line);
    if (w.empty() || w[0] == "c") continue;
    if (w[0] == "s") {
      if (bags >= 0) throw ParseError(lineno, "second solution line");
      if (w.size() != 5 || w[1] != "td") throw ParseError(lineno, "expected \"s td <bags> <width+1> <n>\"");
      bags = detail::to_int(w[2], lineno);
      out.declared_width_plus_one = static_cast<int>(detail::to_int(w[3], lineno));
      out.n = static_cast<int>(detail::to_int(w[4], lineno));
      if (bags < 0 || out.n < 0) throw ParseError(lineno, "negative count");
      out.td.bags.assign(bags, {});
      defined.assign(bags, false);
      continue;
    }
    if (bags < 0) throw ParseError(lineno, "content before the solution line");
    if (w[0] == "b") {
      if (w.size() < 2) throw ParseError(lineno, "bag line without index");
      long long i = detail::to_int(w[1], lineno);
      if (i < 1 || i > bags) throw ParseError(lineno, "bag index outside 1.." + std::to_string(bags));
      if (defined[i - 1]) throw ParseError(lineno, "bag " + std::to_string(i) + " defined twice");
      defined[i - 1] = true;
      for (std::size_t k = 2; k < w.size(); ++k) {
        long long v = detail::to_int(w[k], lineno);
        if (v < 1 || v > out.n) throw ParseError(lineno, "vertex id outside 1.." + std::to_string(out.n));
        out.td.bags[i - 1].push_back(static_cast<Vertex>(v - 1));
      }
      std::sort(out.td.bags[i - 1].begin(), out.td.bags[i - 1].end());
      continue;
    }
    if (w.size() != 2) throw ParseError(lineno, "expected a tree edge \"i j\"");
    long long a = detail::to_int(w[0], lineno), b = detail::to_int(w[1], lineno);
    if (a < 1 || b < 1 || a > bags || b > bags) throw ParseError(lineno, "tree edge endpoint outside 1.." + std::to_string(bags));
    out.td.tree_edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
  }
  if (bags < 0) throw ParseError(0, "missing solution line");
  for (long long i = 0; i < bags; ++i)
    if (!defined[i]) throw ParseError(0, "bag " + std::to_string(i + 1) + " is never defined");
  return out;
}

// ---- JSON ----

using Json = nlohmann::json;

inline Json graph_to_json(const Graph& g) {
  Json j;
  j["n"] = g.vertex_count();
  j["edges"] = Json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  if (!g.labels().empty()) {
    Json labels = Json::object();
    for (int v = 0; v < g.vertex_count(); ++v) labels[std::to_string(v)] = g.labels()[v];
    j["labels"] = labels;
  }
  return j;
}

inline Graph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) throw ParseError(0, "graph JSON needs \"n\" and \"edges\"");
  int n = j.at("n").get<int>();
  std::vector<Edge> es;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw ParseError(0, "edge must be a pair");
    es.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  Graph g = Graph::from_edges(n, es);
  if (j.contains("labels")) {
    std::vector<std::string> labels(n);
    for (auto& [k, v] : j.at("labels").items()) {
      int id = std::stoi(k);
      if (id < 0 || id >= n) throw ParseError(0, "label for unknown vertex " + k);
      labels[id] = v.get<std::string>();
    }
    g = g.with_labels(labels);
  }
  return g;
}

inline Graph read_graph_file(const std::string& path) {
  std::string body = read_file(path);
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") return graph_from_json(Json::parse(body));
  return read_gr(body);
}

inline std::vector<Sequence> sequences_from_json(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(0, std::string("missing \"") + key + "\"");
  return j.at(key).get<std::vector<Sequence>>();
}

inline Json tassel_to_json(const Tassel& t) { return {{"kind", "tassel"}, {"neck", t.neck}, {"paths", t.paths}}; }
inline Json hassle_to_json(const Hassle& h) { return {{"kind", "hassle"}, {"neck", h.neck}, {"walks", h.walks}}; }
inline Json array_to_json(const ArrayWitness& a) {
  return {{"kind", "array"}, {"paths", a.paths}, {"apexes", a.apexes}};
}

inline std::string witness_kind(const Json& j) {
  if (!j.contains("kind")) throw ParseError(0, "witness JSON needs \"kind\"");
  return j.at("kind").get<std::string>();
}

inline Tassel tassel_from_json(const Graph& g, const Json& j) {
  if (witness_kind(j) != "tassel") throw ParseError(0, "witness kind is not tassel");
  return {g, j.at("neck").get<Vertex>(), sequences_from_json(j, "paths")};
}

inline Hassle hassle_from_json(const Graph& g, const Json& j) {
  if (witness_kind(j) != "hassle") throw ParseError(0, "witness kind is not hassle");
  return {g, j.at("neck").get<Vertex>(), sequences_from_json(j, "walks")};
}

inline ArrayWitness array_from_json(const Json& j) {
  if (witness_kind(j) != "array") throw ParseError(0, "witness kind is not array");
  return {sequences_from_json(j, "paths"), j.at("apexes").get<std::vector<Vertex>>()};
}

inline Json block_certificate_to_json(const BlockCertificate& c) {
  Json systems = Json::array();
  for (const auto& [pair, paths] : c.systems) systems.push_back({{"pair", {pair.first, pair.second}}, {"paths", paths}});
  return {{"kind", "block"}, {"block", c.block}, {"systems", systems}};
}

inline BlockCertificate block_certificate_from_json(const Json& j) {
  BlockCertificate c;
  c.block = j.at("block").get<std::vector<Vertex>>();
  for (const auto& s : j.at("systems")) {
    auto pair = s.at("pair").get<std::vector<Vertex>>();
    if (pair.size() != 2) throw ParseError(0, "system pair must have two vertices");
    c.systems[make_pair_key(pair[0], pair[1])] = s.at("paths").get<std::vector<Sequence>>();
  }
  return c;
}

inline Json web_certificate_to_json(const WebCertificate& c) {
  Json paths = Json::array();
  for (const auto& [pair, p] : c.paths) paths.push_back({{"pair", {pair.first, pair.second}}, {"path", p}});
  return {{"kind", "web"}, {"web", c.web}, {"paths", paths}};
}

inline WebCertificate web_certificate_from_json(const Json& j) {
  WebCertificate c;
  c.web = j.at("web").get<std::vector<Vertex>>();
  for (const auto& s : j.at("paths")) {
    auto pair = s.at("pair").get<std::vector<Vertex>>();
    if (pair.size() != 2) throw ParseError(0, "web pair must have two vertices");
    c.paths[make_pair_key(pair[0], pair[1])] = s.at("path").get<Sequence>();
  }
  return c;
}

inline Json decomposition_to_json(const TreeDecomposition& td) {
  return {{"width", td.width()}, {"bags", td.bags}, {"tree_edges", td.tree_edges}};
}

// ---- pattern files ----

// One binary string per line; '#' starts a comment; blank lines are skipped.
inline PatternSet read_patterns(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  PatternSet out;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto w = detail::words(line);
    if (w.empty()) continue;
    if (w.size() != 1) throw ParseError(lineno, "one pattern per line");
    for (char ch : w[0])
      if (ch != '0' && ch != '1') throw ParseError(lineno, "\"" + w[0] + "\" is not a binary string");
    out.push_back(w[0]);
  }
  if (out.empty()) throw ParseError(0, "no patterns");
  return out;
}

}  // namespace tassel
