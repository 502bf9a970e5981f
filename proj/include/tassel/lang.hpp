#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tassel/arrays.hpp"
#include "tassel/bits.hpp"
#include "tassel/graph.hpp"
#include "tassel/induced.hpp"

namespace tassel {

using PatternSet = std::vector<BitString>;

inline void require_patterns(const PatternSet& p) {
  if (p.empty()) throw std::invalid_argument("pattern set is empty");
  for (const auto& s : p) {
    if (s.empty()) throw std::invalid_argument("pattern set contains the empty string");
    require_bits(s);
  }
}

inline int max_pattern_length(const PatternSet& p) {
  int s = 0;
  for (const auto& x : p) s = std::max(s, static_cast<int>(x.size()));
  return s;
}

inline PatternSet reverse_closure(const PatternSet& p) {
  std::set<BitString> out(p.begin(), p.end());
  for (const auto& s : p) out.insert(reversed(s));
  return {out.begin(), out.end()};
}

// text contains no member of p, nor the reverse of one.
inline bool avoids(const BitString& text, const PatternSet& p) {
  for (const auto& s : p)
    if (occurs_up_to_reversal(text, s)) return false;
  return true;
}

// ---- necks ----

inline bool is_neck(const Graph& k, Vertex v) {
  require_vertex(k, v);
  VertexSet rest = k.all();
  rest.erase(v);
  for (const auto& comp : components(k, rest))
    if (!is_path(induced_subgraph(k, comp).graph)) return false;
  return true;
}

inline std::vector<Vertex> necks_of(const Graph& k) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < k.vertex_count(); ++v)
    if (is_neck(k, v)) out.push_back(v);
  return out;
}

// One canonical string per component of K - v, sorted, duplicates kept.
inline std::vector<BitString> strings_of_neck(const Graph& k, Vertex v) {
  if (!is_neck(k, v)) throw std::invalid_argument("vertex " + std::to_string(v) + " is not a neck");
  VertexSet rest = k.all();
  rest.erase(v);
  std::vector<BitString> out;
  for (const auto& comp : components(k, rest)) {
    auto sub = induced_subgraph(k, comp);
    auto order = *path_order(sub.graph);
    Sequence path;
    for (Vertex u : order) path.push_back(sub.original[u]);
    out.push_back(canonical(neck_bits(k, v, path)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- multi-pattern automaton ----

namespace detail {

// Aho-Corasick automaton over {0,1}; out[q] is the mask of patterns ending
// at state q, including those reached through failure links.
class PatternAutomaton {
 public:
  explicit PatternAutomaton(const std::vector<std::pair<BitString, int>>& words) {
    next_.push_back({-1, -1});
    out_.push_back(0);
    for (const auto& [w, id] : words) {
      int q = 0;
      for (char ch : w) {
        int b = ch - '0';
        if (next_[q][b] == -1) {
          next_[q][b] = static_cast<int>(next_.size());
          next_.push_back({-1, -1});
          out_.push_back(0);
        }
        q = next_[q][b];
      }
      out_[q] |= 1u << id;
    }
    std::vector<int> fail(next_.size(), 0);
    std::deque<int> queue;
    for (int b = 0; b < 2; ++b) {
      if (next_[0][b] == -1) next_[0][b] = 0;
      else queue.push_back(next_[0][b]);
    }
    while (!queue.empty()) {
      int q = queue.front();
      queue.pop_front();
      out_[q] |= out_[fail[q]];
      for (int b = 0; b < 2; ++b) {
        int r = next_[q][b];
        if (r == -1) {
          next_[q][b] = next_[fail[q]][b];
        } else {
          fail[r] = q == 0 ? 0 : next_[fail[q]][b];
          queue.push_back(r);
        }
      }
    }
  }

  int size() const { return static_cast<int>(next_.size()); }
  int step(int q, int b) const { return next_[q][b]; }
  std::uint32_t out(int q) const { return out_[q]; }

 private:
  std::vector<std::array<int, 2>> next_;
  std::vector<std::uint32_t> out_;
};

// Padding phases: 0..c count leading zeros before any one; c+1..2c+1 count
// the trailing zero run (capped at c) after the first one. -1 is dead.
inline int pad_step(int phase, int b, int c) {
  if (phase <= c) {
    if (b == 0) return std::min(phase + 1, c);
    return phase == c ? c + 1 : -1;
  }
  if (b == 1) return c + 1;
  return std::min(phase + 1, 2 * c + 1);
}

inline bool pad_accepting(int phase, int c) { return phase == 2 * c + 1; }

// Breadth-first search over (automaton state, seen mask, padding phase),
// expanding 0 before 1, so the first accepted state found carries the
// shortest and then lexicographically least string. dead(mask) prunes.
template <class Dead, class Accept>
std::optional<BitString> shortest_accepted(const PatternAutomaton& a, int c, Dead dead, Accept accept) {
  struct Node {
    int q;
    std::uint32_t mask;
    int phase;
    auto operator<=>(const Node&) const = default;
  };
  std::vector<Node> nodes;
  std::deque<int> queue;
  std::map<Node, int> index;
  Node start{0, a.out(0), 0};
  nodes.push_back(start);
  index[start] = 0;
  std::vector<std::pair<int, char>> from = {{-1, 0}};
  queue.push_back(0);
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    Node cur = nodes[i];
    if (pad_accepting(cur.phase, c) && accept(cur.mask)) {
      BitString s;
      for (int j = i; from[j].first != -1; j = from[j].first) s += from[j].second;
      std::reverse(s.begin(), s.end());
      return s;
    }
    for (int b = 0; b < 2; ++b) {
      int phase = pad_step(cur.phase, b, c);
      if (phase < 0) continue;
      int q = a.step(cur.q, b);
      Node nxt{q, cur.mask | a.out(q), phase};
      if (dead(nxt.mask) || index.count(nxt)) continue;
      index[nxt] = static_cast<int>(nodes.size());
      nodes.push_back(nxt);
      from.emplace_back(i, static_cast<char>('0' + b));
      queue.push_back(static_cast<int>(nodes.size()) - 1);
    }
  }
  return std::nullopt;
}

}  // namespace detail

// ---- c-unavoidability ----

struct AvoidVerdict {
  bool unavoidable = false;
  BitString witness;  // shortest, then lexicographically least c-padded string avoiding P
};

inline void require_positive_c(int c) {
  if (c < 1) throw std::invalid_argument("c must be >= 1");
}

inline AvoidVerdict unavoidable(const PatternSet& p, int c) {
  require_patterns(p);
  require_positive_c(c);
  std::vector<std::pair<BitString, int>> words;
  for (const auto& s : reverse_closure(p)) words.emplace_back(s, 0);
  detail::PatternAutomaton a(words);
  auto w = detail::shortest_accepted(
      a, c, [](std::uint32_t mask) { return mask != 0; }, [](std::uint32_t) { return true; });
  if (!w) return {true, {}};
  if (!is_c_padded(*w, c) || !avoids(*w, p)) throw std::logic_error("avoidance witness \"" + *w + "\" fails re-verification");
  return {false, *w};
}

inline constexpr int kBruteForceMaxLength = 10;
inline constexpr long long kBruteForceNodeBudget = 200'000'000;

// Exhaustive search over c-padded strings. A shortest avoiding string never
// repeats a length-s window containing a one (cutting between the two copies
// keeps every window of length at most s and the padding) and never has a
// zero run longer than max(s, c) (shrinking such a run loses no window), so
// prefixes doing either are pruned and the search is finite. Returns the
// shortest, then lexicographically least, witness.
inline AvoidVerdict brute_force_unavoidable(const PatternSet& p, int c, int max_length = kBruteForceMaxLength) {
  require_patterns(p);
  require_positive_c(c);
  const int s = max_pattern_length(p);
  if (s > max_length)
    throw std::invalid_argument("brute-force bound exceeds budget: pattern length " + std::to_string(s) + " > " +
                                std::to_string(max_length));
  const PatternSet closure = reverse_closure(p);
  const int run_cap = std::max(s, c);
  std::vector<int> window_count(std::size_t{1} << s, 0);
  BitString cur(c, '0');
  std::optional<BitString> best;
  long long nodes = 0;
  auto ends_with_pattern = [&]() {
    for (const auto& w : closure)
      if (cur.size() >= w.size() && cur.compare(cur.size() - w.size(), w.size(), w) == 0) return true;
    return false;
  };
  auto check_padding_prefix = [&]() {
    for (const auto& w : closure)
      if (cur.find(w) != BitString::npos) return false;
    return true;
  };
  if (!check_padding_prefix()) return {true, {}};
  std::function<void(int)> dfs = [&](int zero_run) {
    if (++nodes > kBruteForceNodeBudget) throw std::runtime_error("brute-force search exceeded its node budget");
    if (best && cur.size() + c > best->size()) return;
    if (has_one(cur)) {
      // close with c zeros and test
      BitString full = cur;
      bool ok = true;
      for (int k = 0; k < c && ok; ++k) {
        full += '0';
        for (const auto& w : closure)
          if (full.size() >= w.size() && full.compare(full.size() - w.size(), w.size(), w) == 0) ok = false;
      }
      if (ok && (!best || full.size() < best->size() || (full.size() == best->size() && full < *best))) best = full;
    }
    for (char b : {'0', '1'}) {
      int run = b == '0' ? zero_run + 1 : 0;
      if (run > run_cap) continue;
      cur += b;
      bool keep = !ends_with_pattern();
      std::size_t code = 0;
      bool counted = false;
      if (keep && static_cast<int>(cur.size()) >= s) {
        BitString win = cur.substr(cur.size() - s);
        if (has_one(win)) {
          code = std::stoull(win, nullptr, 2);
          if (window_count[code] > 0) keep = false;
          else {
            ++window_count[code];
            counted = true;
          }
        }
      }
      if (keep) dfs(run);
      if (counted) --window_count[code];
      cur.pop_back();
    }
  };
  dfs(c);
  if (!best) return {true, {}};
  return {false, *best};
}

// Least c for which p is c-unavoidable. p is c-unavoidable for some c iff it
// is s-unavoidable: prepending and appending zeros to an s-padded witness only
// creates windows inside zero runs of length at least s that it already has.
inline std::optional<int> minimal_c(const PatternSet& p) {
  require_patterns(p);
  const int s = max_pattern_length(p);
  if (!unavoidable(p, s).unavoidable) return std::nullopt;
  int c = s;
  while (c > 1 && unavoidable(p, c - 1).unavoidable) --c;
  return c;
}

// ---- tasselled families ----

inline constexpr int kMaxSeenPatterns = 12;

struct NeckOption {
  Vertex neck = -1;
  std::vector<BitString> strings;  // distinct canonical strings
};

struct ComponentNecks {
  std::vector<Vertex> vertices;  // component vertices in the member graph
  std::vector<NeckOption> options;
};

inline std::vector<ComponentNecks> neck_decomposition(const Graph& h) {
  if (h.vertex_count() == 0) throw std::invalid_argument("family member is the empty graph");
  std::vector<ComponentNecks> out;
  for (const auto& comp : components(h)) {
    auto sub = induced_subgraph(h, comp);
    ComponentNecks cn;
    cn.vertices = comp;
    for (Vertex v : necks_of(sub.graph)) {
      auto strs = strings_of_neck(sub.graph, v);
      strs.erase(std::unique(strs.begin(), strs.end()), strs.end());
      cn.options.push_back({sub.original[v], strs});
    }
    out.push_back(std::move(cn));
  }
  return out;
}

enum class TasselledStatus { tasselled, witness, unsupported };

struct TasselledVerdict {
  TasselledStatus status = TasselledStatus::tasselled;
  BitString witness;
  std::vector<std::string> uncovered;  // per member, the first component without a satisfiable neck
  std::string reason;                  // set when unsupported
};

namespace detail {

struct FamilyIndex {
  std::vector<BitString> patterns;
  // member -> component -> option -> required pattern mask
  std::vector<std::vector<std::vector<std::uint32_t>>> need;
  int longest = 0;

  bool covers(std::size_t member, std::uint32_t mask) const {
    for (const auto& comp : need[member]) {
      bool any = false;
      for (std::uint32_t req : comp)
        if ((req & ~mask) == 0) any = true;
      if (!any) return false;
    }
    return true;
  }
  bool any_covers(std::uint32_t mask) const {
    for (std::size_t m = 0; m < need.size(); ++m)
      if (covers(m, mask)) return true;
    return false;
  }
};

inline FamilyIndex index_family(const std::vector<Graph>& family) {
  FamilyIndex fi;
  std::map<BitString, int> id;
  for (const auto& h : family) {
    std::vector<std::vector<std::uint32_t>> member;
    for (const auto& comp : neck_decomposition(h)) {
      std::vector<std::uint32_t> opts;
      for (const auto& opt : comp.options) {
        std::uint32_t req = 0;
        for (const auto& s : opt.strings) {
          auto [it, fresh] = id.emplace(s, static_cast<int>(fi.patterns.size()));
          if (fresh) fi.patterns.push_back(s);
          fi.longest = std::max(fi.longest, static_cast<int>(s.size()));
          if (it->second < kMaxSeenPatterns) req |= 1u << it->second;
        }
        opts.push_back(req);
      }
      member.push_back(std::move(opts));
    }
    fi.need.push_back(std::move(member));
  }
  return fi;
}

}  // namespace detail

// Whether every c-padded string S lets some member H have, in every
// component, a neck whose strings all occur in S up to reversal.
inline TasselledVerdict tasselled_decide(const std::vector<Graph>& family, int c) {
  require_positive_c(c);
  if (family.empty()) throw std::invalid_argument("graph family is empty");
  auto fi = detail::index_family(family);
  TasselledVerdict out;
  if (static_cast<int>(fi.patterns.size()) > kMaxSeenPatterns) {
    out.status = TasselledStatus::unsupported;
    out.reason = std::to_string(fi.patterns.size()) + " distinct neck strings exceed the seen-mask width of " +
                 std::to_string(kMaxSeenPatterns);
    return out;
  }
  std::vector<std::pair<BitString, int>> words;
  for (int i = 0; i < static_cast<int>(fi.patterns.size()); ++i) {
    words.emplace_back(fi.patterns[i], i);
    words.emplace_back(reversed(fi.patterns[i]), i);
  }
  detail::PatternAutomaton a(words);
  auto w = detail::shortest_accepted(
      a, c, [&](std::uint32_t mask) { return fi.any_covers(mask); }, [](std::uint32_t) { return true; });
  if (!w) return out;
  if (!is_c_padded(*w, c)) throw std::logic_error("tasselled witness \"" + *w + "\" is not padded");
  std::uint32_t mask = 0;
  for (int i = 0; i < static_cast<int>(fi.patterns.size()); ++i)
    if (occurs_up_to_reversal(*w, fi.patterns[i])) mask |= 1u << i;
  if (fi.any_covers(mask)) throw std::logic_error("tasselled witness \"" + *w + "\" fails re-verification");
  out.status = TasselledStatus::witness;
  out.witness = *w;
  for (std::size_t m = 0; m < fi.need.size(); ++m)
    for (std::size_t k = 0; k < fi.need[m].size(); ++k) {
      bool any = false;
      for (std::uint32_t req : fi.need[m][k])
        if ((req & ~mask) == 0) any = true;
      if (!any) {
        out.uncovered.push_back("member " + std::to_string(m) + ": component " + std::to_string(k) +
                                (fi.need[m][k].empty() ? " has no neck" : " has no neck whose strings all occur"));
        break;
      }
    }
  return out;
}

struct TasselledSearch {
  TasselledStatus status = TasselledStatus::tasselled;
  int c = 0;      // least c when tasselled
  int bound = 0;  // largest c tried
  TasselledVerdict last;
};

// Tries c = 1..max(s, 1) with s the longest neck string; by the same
// appended-zeros argument as minimal_c, no larger c can succeed.
inline TasselledSearch tasselled_search(const std::vector<Graph>& family) {
  auto fi = detail::index_family(family);
  TasselledSearch out;
  out.bound = std::max(fi.longest, 1);
  for (int c = 1; c <= out.bound; ++c) {
    out.last = tasselled_decide(family, c);
    if (out.last.status != TasselledStatus::witness) {
      out.status = out.last.status;
      out.c = c;
      return out;
    }
  }
  out.status = TasselledStatus::witness;
  return out;
}

struct TasselOracleResult {
  bool all_covered = true;
  BitString pattern;
  std::optional<Tassel> counterexample;
  int tassels_checked = 0;
};

// Graph-level check: for every canonical c-padded pattern of length at most
// max_len, the tassel with max(c, largest component) copies of its strand
// must contain, for some member, every component as an induced subgraph.
inline TasselOracleResult tassel_oracle(const std::vector<Graph>& family, int c, int max_len) {
  require_positive_c(c);
  if (family.empty()) throw std::invalid_argument("graph family is empty");
  if (max_len > 12) throw std::invalid_argument("tassel oracle strand length is limited to 12");
  std::vector<std::vector<Graph>> parts;
  int largest = 1;
  for (const auto& h : family) {
    std::vector<Graph> comps;
    for (const auto& comp : components(h)) {
      comps.push_back(induced_subgraph(h, comp).graph);
      largest = std::max(largest, static_cast<int>(comp.size()));
    }
    parts.push_back(std::move(comps));
  }
  TasselOracleResult out;
  for (int len = 2 * c + 1; len <= max_len; ++len)
    for (std::uint32_t code = 0; code < (1u << len); ++code) {
      BitString bits;
      for (int i = len - 1; i >= 0; --i) bits += ((code >> i) & 1) ? '1' : '0';
      if (!is_c_padded(bits, c) || canonical(bits) != bits) continue;
      Tassel t = build_tassel(bits, std::max(c, largest));
      ++out.tassels_checked;
      bool covered = false;
      for (const auto& comps : parts) {
        bool all = true;
        for (const auto& k : comps)
          if (!contains_induced(t.graph, k)) {
            all = false;
            break;
          }
        if (all) {
          covered = true;
          break;
        }
      }
      if (!covered) {
        out.all_covered = false;
        out.pattern = bits;
        out.counterexample = std::move(t);
        return out;
      }
    }
  return out;
}

}  // namespace tassel
