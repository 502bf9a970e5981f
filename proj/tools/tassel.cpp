#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "support/battery.hpp"
#include "tassel/tassel.hpp"

namespace {

using namespace tassel;

constexpr const char* kVersion = "0.1.0";

enum Exit { kHolds = 0, kFails = 1, kUsage = 2 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Collects the report of one run. Text mode prints "key: value" lines;
// JSON mode prints one object.
class Report {
 public:
  Report(std::string command, bool json) : json_mode_(json) {
    j_["tool"] = "tassel";
    j_["version"] = kVersion;
    j_["command"] = std::move(command);
    j_["inputs"] = Json::array();
  }

  void input(const std::string& path, const std::string& body) {
    j_["inputs"].push_back({{"path", path}, {"fnv1a64", hex64(fnv1a64(body))}});
  }
  void set(const std::string& key, const Json& value) {
    j_[key] = value;
    order_.push_back(key);
  }
  void line(const std::string& text) { lines_.push_back(text); }
  void divert_to_stderr() { out_ = &std::cerr; }

  void print(int code) {
    j_["exit"] = code;
    std::ostream& out = *out_;
    if (json_mode_) {
      out << j_.dump(2) << "\n";
      return;
    }
    for (const auto& key : order_) {
      const Json& v = j_[key];
      out << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    for (const auto& l : lines_) out << l << "\n";
  }

 private:
  bool json_mode_;
  std::ostream* out_ = &std::cout;
  Json j_;
  std::vector<std::string> order_;
  std::vector<std::string> lines_;
};

long long env_budget() {
  const char* v = std::getenv("TASSEL_BUDGET");
  if (!v || !*v) return -1;
  try {
    return std::stoll(v);
  } catch (const std::exception&) {
    throw UsageError(std::string("TASSEL_BUDGET is not an integer: ") + v);
  }
}

Graph load_graph(Report& rep, const std::string& path) {
  std::string body = read_file(path);
  rep.input(path, body);
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") return graph_from_json(Json::parse(body));
  return read_gr(body);
}

Json load_json(Report& rep, const std::string& path) {
  std::string body = read_file(path);
  rep.input(path, body);
  return Json::parse(body);
}

std::vector<Vertex> parse_ids(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("bad vertex id \"" + item + "\"");
    }
  }
  return out;
}

void emit_graph(Report& rep, const Graph& g, const std::string& output) {
  rep.set("vertices", g.vertex_count());
  rep.set("edges", g.edge_count());
  std::string body = write_gr(g);
  if (output.empty() || output == "-") {
    std::cout << body;
    rep.divert_to_stderr();
  } else {
    write_file(output, body);
    rep.set("output", output);
  }
}

void emit_json(Report& rep, const Json& j, const std::string& output, const std::string& key) {
  if (output.empty()) {
    rep.set(key, j);
  } else {
    write_file(output, j.dump(2) + "\n");
    rep.set(key + "_output", output);
  }
}

std::string status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::none: return "none";
    case SearchStatus::exhausted: return "exhausted";
  }
  return "?";
}

// ---- options shared by handlers ----

struct Options {
  bool json = false;
  std::string input, output, witness, witness_out, pattern_file, td_out, certificate, vertices, walk, bits;
  std::string strategy = "structural", c_text = "1", graphs_dir;
  int t = 3, n = 1, a = 1, b = 1, lo = 1, hi = 1, count = 1, c = 1, d = 1, k = 2, extra = 0, limit = 22, only = 0;
  std::optional<std::uint64_t> seed;
  std::optional<long long> budget;
  std::optional<int> max_len_opt, d_opt, array_n, fancy;
  std::string kind;
  bool strong = false, lower_bound_only = false;
};

long long budget_of(const Options& o) { return o.budget ? *o.budget : env_budget(); }

// ---- gen ----

int gen_graph(const Options& o, const std::string& what, Report& rep) {
  Graph g;
  if (what == "wall") {
    g = wall(o.t);
    rep.set("t", o.t);
  } else if (what == "complete") {
    g = complete(o.n);
  } else if (what == "biclique") {
    g = complete_bipartite(o.a, o.b);
  } else if (what == "path") {
    g = path_graph(o.n);
  } else if (what == "cycle") {
    g = cycle_graph(o.n);
  } else if (what == "subdivide") {
    g = subdivide(load_graph(rep, o.input), o.extra);
  } else if (what == "line") {
    g = line_graph(load_graph(rep, o.input));
  } else if (what == "obstruction") {
    auto kind = obstruction_kind_from_string(o.kind);
    if (!kind) throw UsageError("unknown obstruction kind " + o.kind);
    switch (*kind) {
      case ObstructionKind::complete: g = complete(o.t + 1); break;
      case ObstructionKind::complete_bipartite: g = complete_bipartite(o.t, o.t); break;
      case ObstructionKind::wall_subdivision: g = subdivide(wall(o.t), o.extra); break;
      case ObstructionKind::line_of_wall_subdivision: g = line_graph(subdivide(wall(o.t), o.extra)); break;
    }
    rep.set("t", o.t);
    rep.set("kind", to_string(*kind));
  } else if (what == "array") {
    if (!o.seed) throw UsageError("gen array needs --seed");
    auto a = random_array(o.n, o.lo, o.hi, *o.seed);
    rep.set("seed", *o.seed);
    g = a.graph;
    if (!o.witness_out.empty()) write_file(o.witness_out, array_to_json(a.witness).dump(2) + "\n");
  } else if (what == "tassel") {
    Tassel t = build_tassel(o.bits, o.count);
    g = t.graph;
    rep.set("neck", t.neck);
    if (!o.witness_out.empty()) write_file(o.witness_out, tassel_to_json(t).dump(2) + "\n");
  }
  emit_graph(rep, g, o.output);
  return kHolds;
}

// ---- check ----

int check_witness(const Options& o, const std::string& what, Report& rep) {
  Graph g = load_graph(rep, o.input);
  Check result;
  if (what == "tassel") {
    result = is_c_tassel(tassel_from_json(g, load_json(rep, o.witness)), o.c);
    rep.set("c", o.c);
  } else if (what == "hassle") {
    result = is_c_hassle(hassle_from_json(g, load_json(rep, o.witness)), o.c);
    rep.set("c", o.c);
  } else if (what == "array") {
    auto w = array_from_json(load_json(rep, o.witness));
    int n = o.array_n.value_or(static_cast<int>(w.paths.size()));
    result = is_n_array(g, w, n);
    rep.set("n", n);
  } else if (what == "td") {
    auto parsed = read_td(read_file(o.witness));
    rep.input(o.witness, read_file(o.witness));
    auto v = verify_decomposition(g, parsed.td);
    rep.set("kind", "td");
    rep.set("valid", v.ok);
    rep.set("width", parsed.td.width());
    if (!v.ok) rep.set("violation", v.clause + ": " + v.message);
    return v.ok ? kHolds : kFails;
  }
  rep.set("kind", what);
  rep.set("valid", result.ok);
  if (!result.ok) rep.set("violation", result.violation);
  return result.ok ? kHolds : kFails;
}

// ---- construct ----

int construct(const Options& o, const std::string& what, Report& rep) {
  if (what == "array-from-tassel") {
    Graph g = load_graph(rep, o.input);
    Tassel t = tassel_from_json(g, load_json(rep, o.witness));
    auto a = array_from_tassel(t);
    rep.set("n", static_cast<int>(a.witness.paths.size()));
    emit_graph(rep, a.graph, o.output);
    emit_json(rep, array_to_json(a.witness), o.witness_out, "witness");
    return kHolds;
  }
  if (what == "tassel-from-walk") {
    Graph host = load_graph(rep, o.input);
    Tassel t = tassel_from_walk(host, parse_ids(o.walk), o.bits, o.c);
    rep.set("neck_degree", t.graph.degree(t.neck));
    emit_graph(rep, t.graph, o.output);
    emit_json(rep, tassel_to_json(t), o.witness_out, "witness");
    return kHolds;
  }
  if (what == "hassle-from-cluster") {
    Graph g = load_graph(rep, o.input);
    Json cl = load_json(rep, o.certificate);
    auto r = hassle_from_cluster(g, cl.at("apexes").get<std::vector<Vertex>>(), sequences_from_json(cl, "paths"), o.c, o.d);
    rep.set("built", r.ok);
    if (!r.ok) {
      rep.set("failure", r.failure);
      return kFails;
    }
    rep.set("neck_in_host", r.neck_in_host);
    rep.set("chosen_paths", r.chosen_paths);
    rep.set("original", r.original);
    emit_graph(rep, r.hassle.graph, o.output);
    emit_json(rep, hassle_to_json(r.hassle), o.witness_out, "witness");
    return kHolds;
  }
  throw UsageError("unknown construction " + what);
}

// ---- tw ----

int run_tw(const Options& o, Report& rep) {
  Graph g = load_graph(rep, o.input);
  if (o.lower_bound_only) {
    rep.set("lower_bound", treewidth_lowerbound(g));
    return kHolds;
  }
  TreewidthResult r;
  try {
    r = treewidth_exact(g, o.limit);
  } catch (const TreewidthLimitExceeded& e) {
    rep.set("error", e.what());
    rep.set("lower_bound", treewidth_lowerbound(g));
    return kUsage;
  }
  rep.set("width", r.width);
  rep.set("bags", static_cast<int>(r.decomposition.bags.size()));
  rep.set("verified", verify_decomposition(g, r.decomposition).ok);
  std::string td = write_td(r.decomposition, g.vertex_count());
  if (!o.td_out.empty()) {
    write_file(o.td_out, td);
    rep.set("td_output", o.td_out);
  }
  return kHolds;
}

// ---- match ----

int run_match(const Options& o, Report& rep) {
  Graph pattern = load_graph(rep, o.pattern_file);
  Graph host = load_graph(rep, o.input);
  auto r = find_induced(pattern, host, budget_of(o));
  rep.set("status", status_name(r.status));
  if (r.status == SearchStatus::found) rep.set("embedding", r.embedding.mapping);
  if (r.status == SearchStatus::exhausted) return kUsage;
  return r.status == SearchStatus::found ? kHolds : kFails;
}

// ---- clean ----

int run_clean(const Options& o, Report& rep) {
  Graph g = load_graph(rep, o.input);
  CleanStrategy strategy;
  if (o.strategy == "structural") strategy = CleanStrategy::structural;
  else if (o.strategy == "catalog") strategy = CleanStrategy::catalog;
  else throw UsageError("strategy must be structural or catalog");
  auto r = t_clean_check(g, o.t, budget_of(o), strategy);
  rep.set("t", o.t);
  rep.set("verdict", to_string(r.verdict));
  if (r.verdict == CleanVerdict::obstruction) {
    rep.set("obstruction", to_string(r.kind));
    rep.set("embedding", r.embedding.mapping);
  }
  rep.set("families_searched", r.families_searched);
  rep.set("families_skipped", r.families_skipped);
  rep.set("nodes", r.nodes);
  if (r.verdict == CleanVerdict::clean) return kHolds;
  return r.verdict == CleanVerdict::obstruction ? kFails : kUsage;
}

// ---- block ----

int run_block(const Options& o, Report& rep) {
  Graph g = load_graph(rep, o.input);
  if (!o.witness.empty()) {
    auto cert = block_certificate_from_json(load_json(rep, o.witness));
    auto v = verify_block_certificate(g, cert, o.k, o.d_opt, o.strong);
    rep.set("certificate_valid", v.ok);
    if (!v.ok) rep.set("violation", v.violation);
    return v.ok ? kHolds : kFails;
  }
  auto b = parse_ids(o.vertices);
  bool ok = is_k_block(g, b, o.k);
  rep.set("k", o.k);
  rep.set("is_block", ok);
  if (ok && !o.certificate.empty()) {
    write_file(o.certificate, block_certificate_to_json(menger_certificate(g, b)).dump(2) + "\n");
    rep.set("certificate_output", o.certificate);
  }
  return ok ? kHolds : kFails;
}

// ---- probe ----

int run_probe(const Options& o, const std::string& what, Report& rep) {
  Graph g = load_graph(rep, o.input);
  Json cert = load_json(rep, o.certificate);
  if (what == "cluster") {
    auto s = cert.at("apexes").get<std::vector<Vertex>>();
    auto l = sequences_from_json(cert, "paths");
    Check c = is_cluster(g, s, l);
    rep.set("cluster", c.ok);
    if (!c.ok) rep.set("violation", c.violation);
    if (c.ok && o.d_opt) {
      Check m = is_d_meager(g, s, l, *o.d_opt);
      rep.set("meager", m.ok);
      if (!m.ok) rep.set("violation", m.violation);
      c = m;
    }
    return c.ok ? kHolds : kFails;
  }
  if (what == "polypath") {
    auto w = sequences_from_json(cert, "paths");
    Check c = is_polypath(g, w);
    rep.set("polypath", c.ok);
    if (!c.ok) {
      rep.set("violation", c.violation);
      return kFails;
    }
    bool ok = true;
    if (o.d_opt) {
      bool loose = is_d_loose(g, w, *o.d_opt);
      rep.set("loose", loose);
      ok = ok && loose;
    }
    if (o.fancy) {
      auto f = fancy_subsets(g, w, *o.fancy);
      rep.set("fancy_supported", f.supported);
      if (f.supported) rep.set("fancy_subsets", f.subsets);
    }
    return ok ? kHolds : kFails;
  }
  if (what == "web") {
    auto w = web_certificate_from_json(cert);
    auto v = verify_web(g, w, o.d_opt);
    rep.set("web", v.ok);
    if (!v.ok) rep.set("violation", v.clause + ": " + v.message);
    return v.ok ? kHolds : kFails;
  }
  throw UsageError("unknown probe " + what);
}

// ---- lang ----

std::vector<Graph> load_family(Report& rep, const std::string& dir) {
  std::vector<std::string> files;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    auto ext = e.path().extension().string();
    if (e.is_regular_file() && (ext == ".gr" || ext == ".json")) files.push_back(e.path().string());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw UsageError("no .gr or .json graphs in " + dir);
  std::vector<Graph> out;
  for (const auto& f : files) out.push_back(load_graph(rep, f));
  return out;
}

int run_lang(const Options& o, const std::string& what, Report& rep) {
  if (what == "necks") {
    Graph k = load_graph(rep, o.input);
    Json necks = Json::array();
    for (const auto& comp : neck_decomposition(k)) {
      Json options = Json::array();
      for (const auto& opt : comp.options) options.push_back({{"neck", opt.neck}, {"strings", opt.strings}});
      necks.push_back({{"component", comp.vertices}, {"necks", options}});
    }
    rep.set("components", necks);
    return kHolds;
  }
  if (what == "tasselled") {
    auto family = load_family(rep, o.graphs_dir);
    if (o.c_text == "auto") {
      auto r = tasselled_search(family);
      if (r.status == TasselledStatus::unsupported) {
        rep.set("verdict", "unsupported");
        rep.set("reason", r.last.reason);
        return kUsage;
      }
      if (r.status == TasselledStatus::tasselled) {
        rep.set("verdict", "tasselled");
        rep.set("c", r.c);
        return kHolds;
      }
      rep.set("verdict", "not-tasselled-up-to-bound");
      rep.set("bound", r.bound);
      rep.set("witness", r.last.witness);
      return kFails;
    }
    int c = std::stoi(o.c_text);
    auto r = tasselled_decide(family, c);
    rep.set("c", c);
    if (r.status == TasselledStatus::unsupported) {
      rep.set("verdict", "unsupported");
      rep.set("reason", r.reason);
      return kUsage;
    }
    if (r.status == TasselledStatus::tasselled) {
      rep.set("verdict", "tasselled-at-c");
      return kHolds;
    }
    rep.set("verdict", "witness");
    rep.set("witness", r.witness);
    rep.set("uncovered", r.uncovered);
    return kFails;
  }
  std::string body = read_file(o.pattern_file);
  rep.input(o.pattern_file, body);
  PatternSet p = read_patterns(body);
  if (what == "unavoidable" || what == "witness") {
    if (o.c_text == "auto") {
      if (what == "witness") throw UsageError("lang witness needs a numeric --c");
      auto c = minimal_c(p);
      rep.set("verdict", c ? "unavoidable" : "avoidable-for-every-c");
      if (c) rep.set("c_min", *c);
      return c ? kHolds : kFails;
    }
    int c = std::stoi(o.c_text);
    auto v = unavoidable(p, c);
    if (what == "witness") {
      if (v.unavoidable) return kHolds;
      std::cout << v.witness << "\n";
      return kFails;
    }
    rep.set("c", c);
    rep.set("verdict", v.unavoidable ? "unavoidable" : "witness");
    if (!v.unavoidable) rep.set("witness", v.witness);
    return v.unavoidable ? kHolds : kFails;
  }
  if (what == "brute-force") {
    int c = std::stoi(o.c_text);
    auto v = brute_force_unavoidable(p, c, o.max_len_opt.value_or(kBruteForceMaxLength));
    rep.set("c", c);
    rep.set("verdict", v.unavoidable ? "unavoidable" : "witness");
    if (!v.unavoidable) rep.set("witness", v.witness);
    return v.unavoidable ? kHolds : kFails;
  }
  throw UsageError("unknown lang command " + what);
}

// ---- verify ----

int run_verify(const Options& o, Report& rep) {
  Json rows = Json::array();
  int failed = 0;
  for (const auto& c : battery::criteria()) {
    if (o.only && c.id != o.only) continue;
    auto r = battery::run(c);
    failed += !r.pass;
    rows.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s %2d ", r.pass ? "PASS" : "FAIL", r.id);
    rep.line(buf + r.name + ": " + r.detail);
  }
  rep.set("criteria", static_cast<int>(rows.size()));
  rep.set("failed", failed);
  rep.set("results", rows);
  return failed == 0 ? kHolds : kFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Treewidth obstructions, tassels and padded-string avoidance"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Machine-readable report");
  app.set_version_flag("--version", kVersion);

  std::string command_echo;
  for (int i = 1; i < argc; ++i) command_echo += (i > 1 ? " " : "") + std::string(argv[i]);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph as .gr");
  gen->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> gens;
  for (auto [name, about] : std::initializer_list<std::pair<const char*, const char*>>{
           {"wall", "Brick wall of height t"}, {"complete", "K_n"}, {"biclique", "K_{a,b}"}, {"path", "Path on n vertices"},
           {"cycle", "Cycle on n vertices"}, {"subdivide", "Add extra vertices on every edge"}, {"line", "Line graph"},
           {"obstruction", "A t-basic obstruction"}, {"array", "Seeded random n-array"}, {"tassel", "Tassel of a bit pattern"}}) {
    auto* s = gen->add_subcommand(name, about);
    s->add_option("--output,-o", o.output, "Output .gr file (default: stdout, report on stderr)");
    gens.emplace_back(name, s);
  }
  gen->get_subcommand("wall")->add_option("--t", o.t)->required();
  gen->get_subcommand("complete")->add_option("--n", o.n)->required();
  gen->get_subcommand("path")->add_option("--n", o.n)->required();
  gen->get_subcommand("cycle")->add_option("--n", o.n)->required();
  gen->get_subcommand("biclique")->add_option("--a", o.a)->required();
  gen->get_subcommand("biclique")->add_option("--b", o.b)->required();
  for (const char* name : {"subdivide", "line"}) gen->get_subcommand(name)->add_option("--input,-i", o.input)->required();
  gen->get_subcommand("subdivide")->add_option("--extra", o.extra)->required();
  {
    auto* s = gen->get_subcommand("obstruction");
    s->add_option("--t", o.t)->required();
    s->add_option("--kind", o.kind, "complete, complete-bipartite, wall-subdivision or line-of-wall-subdivision")->required();
    s->add_option("--subdivide", o.extra, "Extra vertices on every wall edge");
  }
  {
    auto* s = gen->get_subcommand("array");
    s->add_option("--n", o.n)->required();
    s->add_option("--lo", o.lo)->required();
    s->add_option("--hi", o.hi)->required();
    s->add_option("--seed", o.seed, "Mandatory RNG seed");
    s->add_option("--witness-out", o.witness_out);
  }
  {
    auto* s = gen->get_subcommand("tassel");
    s->add_option("--pattern", o.bits)->required();
    s->add_option("--count", o.count)->required();
    s->add_option("--witness-out", o.witness_out);
  }

  // check
  auto* check = app.add_subcommand("check", "Validate a witness against a graph");
  check->require_subcommand(1);
  for (auto [name, about] : std::initializer_list<std::pair<const char*, const char*>>{
           {"tassel", "c-tassel witness"}, {"hassle", "c-hassle witness"}, {"array", "n-array witness"}, {"td", "Tree decomposition"}}) {
    auto* s = check->add_subcommand(name, about);
    s->add_option("--input,-i", o.input)->required();
    s->add_option("--witness,-w", o.witness, name == std::string("td") ? "Decomposition .td" : "Witness JSON")->required();
  }
  check->get_subcommand("tassel")->add_option("--c", o.c);
  check->get_subcommand("hassle")->add_option("--c", o.c);
  check->get_subcommand("array")->add_option("--n", o.array_n, "Array order (default: number of paths)");

  // construct
  auto* cons = app.add_subcommand("construct", "Run a constructive step");
  cons->require_subcommand(1);
  for (auto [name, about] : std::initializer_list<std::pair<const char*, const char*>>{
           {"array-from-tassel", "Array from a 1-tassel"}, {"tassel-from-walk", "Tassel from a walk and neck bits"},
           {"hassle-from-cluster", "Hassle from a meager cluster"}}) {
    auto* s = cons->add_subcommand(name, about);
    s->add_option("--input,-i", o.input)->required();
    s->add_option("--output,-o", o.output);
    s->add_option("--witness-out", o.witness_out);
  }
  cons->get_subcommand("array-from-tassel")->add_option("--witness,-w", o.witness)->required();
  cons->get_subcommand("tassel-from-walk")->add_option("--walk", o.walk, "Comma-separated host vertices")->required();
  cons->get_subcommand("tassel-from-walk")->add_option("--bits", o.bits)->required();
  cons->get_subcommand("tassel-from-walk")->add_option("--c", o.c)->required();
  cons->get_subcommand("hassle-from-cluster")->add_option("--cluster", o.certificate)->required();
  cons->get_subcommand("hassle-from-cluster")->add_option("--c", o.c)->required();
  cons->get_subcommand("hassle-from-cluster")->add_option("--d", o.d)->required();

  // tw
  auto* tw = app.add_subcommand("tw", "Exact treewidth");
  tw->add_option("--input,-i", o.input)->required();
  tw->add_option("--decomposition,--td-out", o.td_out, "Write the decomposition as .td");
  tw->add_flag("--lower-bound-only", o.lower_bound_only);
  tw->add_option("--limit", o.limit, "Vertex limit of the exact solver");

  // match
  auto* match = app.add_subcommand("match", "Induced subgraph search");
  match->add_option("--pattern,-p", o.pattern_file)->required();
  match->add_option("--input,-i", o.input)->required();
  match->add_option("--budget", o.budget);

  // clean
  auto* clean = app.add_subcommand("clean", "t-clean check");
  clean->add_option("--t", o.t)->required();
  clean->add_option("--input,-i", o.input)->required();
  clean->add_option("--budget", o.budget);
  clean->add_option("--strategy", o.strategy, "structural or catalog");

  // block
  auto* block = app.add_subcommand("block", "k-block test or certificate check");
  block->add_option("--input,-i", o.input)->required();
  block->add_option("--k", o.k)->required();
  block->add_option("--vertices", o.vertices, "Comma-separated block vertices");
  block->add_option("--certificate", o.certificate, "Write a Menger certificate");
  block->add_option("--verify", o.witness, "Check a certificate JSON");
  block->add_option("--d", o.d_opt, "Path length bound");
  block->add_flag("--strong", o.strong);

  // probe
  auto* probe = app.add_subcommand("probe", "Check a cluster, polypath or web");
  probe->require_subcommand(1);
  for (auto [name, about] : std::initializer_list<std::pair<const char*, const char*>>{
           {"cluster", "Cluster and meagerness"}, {"polypath", "Polypath looseness and fancy sets"}, {"web", "Web certificate"}}) {
    auto* s = probe->add_subcommand(name, about);
    s->add_option("--input,-i", o.input)->required();
    s->add_option("--certificate", o.certificate)->required();
    s->add_option("--d", o.d_opt, name == std::string("cluster") ? "Meagerness" : name == std::string("web") ? "Web size" : "Looseness");
  }
  probe->get_subcommand("polypath")->add_option("--fancy", o.fancy, "Fancy subset size");

  // lang
  auto* lang = app.add_subcommand("lang", "Padded-string avoidance");
  lang->require_subcommand(1);
  for (auto [name, about] : std::initializer_list<std::pair<const char*, const char*>>{
           {"unavoidable", "Decide c-unavoidability"}, {"witness", "Print the shortest avoiding string"},
           {"brute-force", "Exhaustive cross-check"}}) {
    auto* s = lang->add_subcommand(name, about);
    s->add_option("--patterns", o.pattern_file)->required();
    s->add_option("--c", o.c_text, "Padding, or auto")->required();
  }
  lang->get_subcommand("brute-force")->add_option("--max-length", o.max_len_opt);
  auto* tas = lang->add_subcommand("tasselled", "Decide whether a family of graphs is tasselled");
  tas->add_option("--graphs", o.graphs_dir)->required();
  tas->add_option("--c", o.c_text, "Padding, or auto")->required();
  lang->add_subcommand("necks", "Necks and their strings")->add_option("--input,-i", o.input)->required();

  // verify
  auto* verify = app.add_subcommand("verify", "Acceptance battery");
  verify->require_subcommand(1);
  verify->add_subcommand("suite", "Run every acceptance criterion")->add_option("--only", o.only, "Run one criterion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return kHolds;
  } catch (const CLI::CallForVersion& e) {
    app.exit(e);
    return kHolds;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  Report rep(command_echo, o.json);
  int code = kUsage;
  try {
    auto leaf = [](CLI::App* parent) { return parent->get_subcommands().front()->get_name(); };
    if (gen->parsed()) code = gen_graph(o, leaf(gen), rep);
    else if (check->parsed()) code = check_witness(o, leaf(check), rep);
    else if (cons->parsed()) code = construct(o, leaf(cons), rep);
    else if (tw->parsed()) code = run_tw(o, rep);
    else if (match->parsed()) code = run_match(o, rep);
    else if (clean->parsed()) code = run_clean(o, rep);
    else if (block->parsed()) {
      if (o.witness.empty() && o.vertices.empty()) throw UsageError("block needs --vertices or --verify");
      code = run_block(o, rep);
    } else if (probe->parsed()) code = run_probe(o, leaf(probe), rep);
    else if (lang->parsed()) {
      std::string what = leaf(lang);
      if (what == "witness" && o.c_text != "auto") {
        // the witness string alone goes to stdout
        Report quiet(command_echo, false);
        return run_lang(o, what, quiet);
      }
      code = run_lang(o, what, rep);
    } else if (verify->parsed()) code = run_verify(o, rep);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    rep.set("error", e.what());
    rep.print(kUsage);
    return kUsage;
  }
  rep.print(code);
  return code;
}
