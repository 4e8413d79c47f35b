#include "cuntz/gamma.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "cuntz/errors.hpp"

namespace cuntz {

namespace {

std::vector<Word> set_union(const std::vector<Word>& a, const std::vector<Word>& b) {
  std::set<Word> s(a.begin(), a.end());
  s.insert(b.begin(), b.end());
  return std::vector<Word>(s.begin(), s.end());
}

}  // namespace

GammaGraph build_gamma(const PolyUnitary& u) {
  GammaGraph g;
  g.n = u.alphabet();

  std::vector<Word> code;  // the alpha words, sorted
  for (const auto& [a, b] : u.pairs()) code.push_back(a);
  std::sort(code.begin(), code.end());

  std::map<std::vector<Word>, int> id_of;
  auto add_vertex = [&](const std::vector<Word>& members) {
    auto it = id_of.find(members);
    if (it != id_of.end()) return it->second;
    int id = static_cast<int>(g.vertices.size());
    g.vertices.push_back(members);
    g.edges.emplace_back();
    id_of.emplace(members, id);
    return id;
  };

  for (const Word& a : code) add_vertex({a});
  g.sink = add_vertex({});

  // Initial step: one edge per pair, determined by how the tail of beta sits
  // against the alpha code. The beta words are mutually orthogonal, so the
  // three cases are exclusive and (for tails not covered by a code member)
  // at least two extensions exist.
  std::deque<int> worklist;
  for (const auto& [alpha, beta] : u.pairs()) {
    if (beta.empty()) continue;  // only the single-pair identity presentation
    auto [i, tail] = split_head(beta);
    int src = id_of.at({alpha});
    int dst;
    if (tail.empty()) {
      dst = g.sink;
    } else {
      const Word* covering = nullptr;
      for (const Word& a : code)
        if (is_prefix(a, tail)) covering = &a;
      if (covering) {
        dst = id_of.at({*covering});
      } else {
        std::vector<Word> extensions;
        for (const Word& a : code)
          if (is_prefix(tail, a)) extensions.push_back(a);
        if (extensions.size() < 2) throw InternalError("splitting tail covers fewer than two words");
        bool fresh = !id_of.count(extensions);
        dst = add_vertex(extensions);
        if (fresh) worklist.push_back(dst);
      }
    }
    g.edges[static_cast<std::size_t>(src)].emplace(i, dst);
  }

  // Inductive step: a composite vertex A gets a j-edge exactly when some
  // member's singleton emits one; the targets' member sets are unioned. A
  // member whose singleton edge goes to the sink is necessarily the sole
  // j-contributor. The full code as a union also lands on the sink.
  while (!worklist.empty()) {
    int vid = worklist.front();
    worklist.pop_front();
    std::vector<Word> members = g.vertices[static_cast<std::size_t>(vid)];
    for (int j = 1; j <= g.n; ++j) {
      std::vector<int> targets;
      for (const Word& a : members) {
        const auto& singleton_edges = g.edges[static_cast<std::size_t>(id_of.at({a}))];
        auto it = singleton_edges.find(j);
        if (it != singleton_edges.end()) targets.push_back(it->second);
      }
      if (targets.empty()) continue;
      std::vector<Word> unioned;
      bool hits_sink = false;
      for (int t : targets) {
        if (t == g.sink) hits_sink = true;
        unioned = set_union(unioned, g.vertices[static_cast<std::size_t>(t)]);
      }
      if (hits_sink && targets.size() != 1)
        throw InternalError("sink contributor must be the sole contributor");
      int dst;
      if (unioned.empty() || unioned == code) {
        dst = g.sink;
      } else {
        bool fresh = !id_of.count(unioned);
        dst = add_vertex(unioned);
        if (fresh) worklist.push_back(dst);
      }
      g.edges[static_cast<std::size_t>(vid)].emplace(j, dst);
    }
  }

  return g;
}

std::optional<GammaCycle> find_cycle(const GammaGraph& g) {
  const int V = static_cast<int>(g.vertices.size());
  std::optional<GammaCycle> best;

  for (int start = 0; start < V; ++start) {
    // BFS back to the start; label-ordered expansion keeps ties deterministic.
    std::vector<int> dist(static_cast<std::size_t>(V), -1);
    std::vector<std::pair<int, int>> parent(static_cast<std::size_t>(V), {-1, -1});
    std::deque<int> q;
    dist[static_cast<std::size_t>(start)] = 0;
    q.push_back(start);
    int closing_from = -1, closing_label = -1, cycle_len = -1;
    while (!q.empty() && closing_from < 0) {
      int v = q.front();
      q.pop_front();
      for (const auto& [label, to] : g.edges[static_cast<std::size_t>(v)]) {
        if (to == start) {
          closing_from = v;
          closing_label = label;
          cycle_len = dist[static_cast<std::size_t>(v)] + 1;
          break;
        }
        if (dist[static_cast<std::size_t>(to)] < 0) {
          dist[static_cast<std::size_t>(to)] = dist[static_cast<std::size_t>(v)] + 1;
          parent[static_cast<std::size_t>(to)] = {v, label};
          q.push_back(to);
        }
      }
    }
    if (closing_from < 0) continue;
    if (best && static_cast<int>(best->vertices.size()) <= cycle_len) continue;
    GammaCycle c;
    std::vector<std::pair<int, int>> rev;  // (vertex, outgoing label)
    int v = closing_from;
    int lbl = closing_label;
    while (v != start) {
      rev.push_back({v, lbl});
      auto [pv, plbl] = parent[static_cast<std::size_t>(v)];
      v = pv;
      lbl = plbl;
    }
    rev.push_back({start, lbl});
    for (auto it = rev.rbegin(); it != rev.rend(); ++it) {
      c.vertices.push_back(it->first);
      c.labels.push_back(it->second);
    }
    best = std::move(c);
  }
  return best;
}

std::vector<Word> DiagonalVerdict::witness_vertex() const {
  if (!cycle || cycle->vertices.empty()) return {};
  return graph.vertices[static_cast<std::size_t>(cycle->vertices.front())];
}

DiagonalVerdict decide_diagonal(const PolyUnitary& u) {
  DiagonalVerdict v;
  v.graph = build_gamma(u);
  v.cycle = find_cycle(v.graph);
  v.automorphism = !v.cycle.has_value();
  return v;
}

namespace {

std::string plain_word(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && w.at(i - 1) > 9) s += ".";
    s += std::to_string(w.at(i));
  }
  return s;
}

std::string vertex_name(const GammaGraph& g, int id) {
  const auto& members = g.vertices[static_cast<std::size_t>(id)];
  if (members.empty()) return "∅";
  std::string s;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i > 0) s += ",";
    s += plain_word(members[i]);
  }
  return s;
}

}  // namespace

std::string to_dot(const GammaGraph& g) {
  std::ostringstream os;
  os << "digraph gamma {\n";
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v)
    os << "  \"" << vertex_name(g, v) << "\";\n";
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v)
    for (const auto& [label, to] : g.edges[static_cast<std::size_t>(v)])
      os << "  \"" << vertex_name(g, v) << "\" -> \"" << vertex_name(g, to)
         << "\" [label=\"(" << label << ")\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace cuntz
