#include "cuntz/invertibility.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "cuntz/errors.hpp"

namespace cuntz {

namespace {

std::string plain(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (int l : w.letters()) s += std::to_string(l);
  return s;
}

Word repeated(int letter, int count) {
  return Word(std::vector<int>(static_cast<std::size_t>(count), letter));
}

}  // namespace

UniformPresentation uniform_presentation_at(const PolyUnitary& u, int k) {
  PolyMap cf = canonical_form(u.as_poly());
  UniformPresentation up;
  up.n = u.alphabet();
  for (const PolyTerm& t : cf.terms()) {
    long long diff =
        static_cast<long long>(t.alpha.size()) - static_cast<long long>(t.beta.size());
    if (diff < -1 || diff > 1)
      throw NotInRestrictedClassError("pair (" + plain(t.alpha) + "," + plain(t.beta) +
                                      ") has length difference " + std::to_string(diff));
    if (static_cast<int>(t.alpha.size()) > k)
      throw CuntzError("presentation level below the canonical alpha length");
  }
  up.k = k;
  for (const PolyTerm& t : cf.terms())
    for (const Word& tail : all_words(up.n, k - static_cast<int>(t.alpha.size())))
      up.pairs.push_back({concat(t.alpha, tail), concat(t.beta, tail)});
  std::sort(up.pairs.begin(), up.pairs.end());
  return up;
}

UniformPresentation uniform_presentation(const PolyUnitary& u) {
  PolyMap cf = canonical_form(u.as_poly());
  int k = 0;
  for (const PolyTerm& t : cf.terms()) k = std::max(k, static_cast<int>(t.alpha.size()));
  return uniform_presentation_at(u, k);
}

int DeltaGraph::index_of(const Word& w) const {
  int idx = 0;
  for (int l : w.letters()) idx = idx * n + (l - 1);
  return idx;
}

DeltaGraph build_delta(const PolyUnitary& u) {
  UniformPresentation up = uniform_presentation(u);
  if (up.k == 0)
    throw CuntzError("level-0 presentation (identity) has no word graph");
  DeltaGraph g;
  g.n = up.n;
  g.k = up.k;
  for (const auto& [a, b] : up.pairs) {
    g.alpha.push_back(a);
    g.beta.push_back(b);
    g.beta_tail.push_back(b.suffix_from(1));
    g.degree.push_back(up.k - static_cast<int>(b.size()) + 1);
  }
  g.out.resize(g.alpha.size());
  for (std::size_t v = 0; v < g.alpha.size(); ++v) {
    // Out-edges are in bijection with the words of length degree(v): the
    // edge labeled w targets beta_tail . w.
    for (const Word& w : all_words(g.n, g.degree[v]))
      g.out[v].push_back({g.index_of(concat(g.beta_tail[v], w)), w});
  }
  return g;
}

Word path_label(const DeltaGraph& g, const DeltaPath& p) {
  Word label;
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    int src = p.vertices[i];
    const Word& target = g.alpha[static_cast<std::size_t>(p.vertices[i + 1])];
    int d = g.degree[static_cast<std::size_t>(src)];
    label = concat(label, target.suffix_from(target.size() - static_cast<std::size_t>(d)));
  }
  return label;
}

int path_degree(const DeltaGraph& g, const DeltaPath& p) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
    d += g.degree[static_cast<std::size_t>(p.vertices[i])];
  return d;
}

namespace {

bool edge_exists(const DeltaGraph& g, int from, int to) {
  return is_prefix(g.beta_tail[static_cast<std::size_t>(from)],
                   g.alpha[static_cast<std::size_t>(to)]);
}

struct PathSet {
  std::vector<DeltaPath> paths;
};

// All paths with 1..depth edges from the given start. Exhaustive DFS with a
// node guard; intended for small depths.
PathSet enumerate_paths(const DeltaGraph& g, int start, int depth) {
  PathSet out;
  constexpr std::size_t kCap = 2000000;
  std::vector<std::pair<DeltaPath, int>> stack;
  stack.push_back({DeltaPath{{start}}, 0});
  while (!stack.empty()) {
    auto [p, edges] = stack.back();
    stack.pop_back();
    if (edges >= 1) out.paths.push_back(p);
    if (out.paths.size() > kCap) throw BudgetExceededError("path enumeration exploded");
    if (edges == depth) continue;
    int v = p.vertices.back();
    for (const auto& [to, label] : g.out[static_cast<std::size_t>(v)]) {
      DeltaPath q = p;
      q.vertices.push_back(to);
      stack.push_back({q, edges + 1});
    }
  }
  return out;
}

Word total_label_of(const DeltaGraph& g, const DeltaPath& x, const DeltaPath& y) {
  // Common full label minus the trailing letters of the less specific final
  // edge; equals L(x') or L(y') depending on which beta tail is longer.
  Word full = path_label(g, x);
  int dx = g.degree[static_cast<std::size_t>(x.vertices[x.vertices.size() - 2])];
  int dy = g.degree[static_cast<std::size_t>(y.vertices[y.vertices.size() - 2])];
  int trim = std::min(dx, dy);
  return full.prefix(full.size() - static_cast<std::size_t>(trim));
}

}  // namespace

std::vector<OmegaPair> enumerate_omega(const DeltaGraph& g, int from, int from_prime, int depth) {
  if (from == from_prime)
    throw CuntzError("membership pairs need distinct start vertices");
  std::vector<OmegaPair> out;
  if (depth <= 0) return out;
  PathSet xs = enumerate_paths(g, from, depth);
  PathSet ys = enumerate_paths(g, from_prime, depth);
  std::map<std::pair<Word, int>, std::vector<std::size_t>> index;
  for (std::size_t j = 0; j < ys.paths.size(); ++j)
    index[{path_label(g, ys.paths[j]), ys.paths[j].vertices.back()}].push_back(j);
  for (const DeltaPath& x : xs.paths) {
    auto it = index.find({path_label(g, x), x.vertices.back()});
    if (it == index.end()) continue;
    for (std::size_t j : it->second) {
      const DeltaPath& y = ys.paths[j];
      out.push_back(OmegaPair{x, y, total_label_of(g, x, y)});
    }
  }
  return out;
}

bool verify_omega_pair(const DeltaGraph& g, const OmegaPair& p, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (p.x.edge_count() < 1 || p.y.edge_count() < 1) return fail("paths need at least one edge");
  if (p.x.vertices.front() == p.y.vertices.front()) return fail("starts coincide");
  for (const DeltaPath* path : {&p.x, &p.y})
    for (std::size_t i = 0; i + 1 < path->vertices.size(); ++i)
      if (!edge_exists(g, path->vertices[i], path->vertices[i + 1]))
        return fail("missing edge");
  if (p.x.vertices.back() != p.y.vertices.back()) return fail("ends differ");
  if (path_degree(g, p.x) != path_degree(g, p.y)) return fail("degrees differ");

  int x1 = p.x.vertices[p.x.vertices.size() - 2];
  int y1 = p.y.vertices[p.y.vertices.size() - 2];
  const Word& bt1 = g.beta_tail[static_cast<std::size_t>(x1)];
  const Word& bt2 = g.beta_tail[static_cast<std::size_t>(y1)];
  DeltaPath xp = p.x;
  xp.vertices.pop_back();
  DeltaPath yp = p.y;
  yp.vertices.pop_back();
  Word lx = path_label(g, xp);
  Word ly = path_label(g, yp);
  Word total;
  if (is_prefix(bt2, bt1)) {
    Word mu = residual(bt2, bt1);
    if (!(lx == concat(ly, mu))) return fail("not balanced");
    total = lx;
  } else if (is_prefix(bt1, bt2)) {
    Word mu = residual(bt1, bt2);
    if (!(concat(lx, mu) == ly)) return fail("not balanced");
    total = ly;
  } else {
    return fail("final beta tails incomparable");
  }
  if (!(total == p.total_label)) return fail("total label mismatch");
  return true;
}

bool verify_omega_product(const DeltaGraph& g, const OmegaPair& p, std::string* why) {
  auto chain = [&](const DeltaPath& path) {
    PolyMap acc = PolyMap::identity(g.n);
    for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
      std::size_t v = static_cast<std::size_t>(path.vertices[i]);
      acc = multiply(acc, PolyMap(g.n, {PolyTerm{g.alpha[v], g.beta_tail[v], 1}}));
    }
    return acc;
  };
  PolyMap product = multiply(chain(p.x), adjoint(chain(p.y)));
  Word a = g.alpha[static_cast<std::size_t>(p.x.vertices.front())];
  Word ap = g.alpha[static_cast<std::size_t>(p.y.vertices.front())];
  PolyMap expected(g.n, {PolyTerm{concat(a, p.total_label), concat(ap, p.total_label), 1}});
  if (!(product == expected)) {
    if (why) *why = "generator chain product does not compress to the matrix unit";
    return false;
  }
  return true;
}

bool verify_certificate(const DeltaGraph& g, const OmegaCertificate& cert, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (cert.pairs.empty()) return fail("empty certificate");
  std::vector<Word> labels;
  for (const OmegaPair& p : cert.pairs) {
    if (p.x.vertices.front() != cert.from || p.y.vertices.front() != cert.from_prime)
      return fail("pair starts do not match the certificate");
    if (!verify_omega_pair(g, p, why)) return false;
    if (!verify_omega_product(g, p, why)) return false;
    labels.push_back(p.total_label);
  }
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (!orthogonal(labels[i], labels[j])) return fail("cover labels overlap");
  CylinderUnion cover = CylinderUnion::normalize(g.n, labels);
  if (!is_partition(cover)) return fail("cover labels do not exhaust the space");
  return true;
}

namespace {

// Per-letter product automaton over total-label candidates. A side state is
// (vertex, pending letter or none): degree-2 edges consume their label in
// two steps. Epsilon moves (degree-0 edges) are optional continuations, so
// a closure keeps every intermediate stop. Values are minimal edge counts.
struct SideStates {
  std::map<int, int> at;  // state id -> min edges; id = vertex * (n+1) + pending (0 = none)
};

void closure(const DeltaGraph& g, SideStates& s, int max_edges) {
  std::deque<std::pair<int, int>> q(s.at.begin(), s.at.end());
  while (!q.empty()) {
    auto [id, e] = q.front();
    q.pop_front();
    if (id % (g.n + 1) != 0) continue;  // mid-edge states take no epsilon moves
    int v = id / (g.n + 1);
    if (g.degree[static_cast<std::size_t>(v)] != 0) continue;
    if (e + 1 > max_edges) continue;
    int t = g.out[static_cast<std::size_t>(v)][0].first;
    int tid = t * (g.n + 1);
    auto it = s.at.find(tid);
    if (it == s.at.end() || it->second > e + 1) {
      s.at[tid] = e + 1;
      q.push_back({tid, e + 1});
    }
  }
}

SideStates step(const DeltaGraph& g, const SideStates& s, int letter, int max_edges) {
  SideStates out;
  auto relax = [&](int id, int e) {
    auto it = out.at.find(id);
    if (it == out.at.end() || it->second > e) out.at[id] = e;
  };
  for (const auto& [id, e] : s.at) {
    int v = id / (g.n + 1);
    int pending = id % (g.n + 1);
    int d = g.degree[static_cast<std::size_t>(v)];
    if (pending == 0) {
      if (d == 1) {
        if (e + 1 <= max_edges)
          relax(g.index_of(concat(g.beta_tail[static_cast<std::size_t>(v)],
                                  Word::single(letter))) * (g.n + 1),
                e + 1);
      } else if (d == 2) {
        relax(v * (g.n + 1) + letter, e);
      }
      // d == 0: any consuming continuation went through the closure already
    } else {
      if (e + 1 <= max_edges) {
        Word full = Word::single(pending).append(letter);
        relax(g.index_of(concat(g.beta_tail[static_cast<std::size_t>(v)], full)) * (g.n + 1),
              e + 1);
      }
    }
  }
  closure(g, out, max_edges);
  return out;
}

// End vertices reachable having consumed the whole label, with edge budget.
std::optional<int> common_end(const DeltaGraph& g, const SideStates& x, const SideStates& y) {
  for (const auto& [id, e] : x.at) {
    if (id % (g.n + 1) != 0) continue;
    auto it = y.at.find(id);
    if (it != y.at.end()) return id / (g.n + 1);
  }
  return std::nullopt;
}

// Shortest path (in edges) from start consuming exactly gamma and ending at
// goal. Exists whenever the automaton accepted; reconstructed fresh so the
// certificate does not depend on search internals.
DeltaPath reconstruct_path(const DeltaGraph& g, int start, const Word& gamma, int goal,
                           int max_edges) {
  struct Node {
    int vertex;
    std::size_t pos;
  };
  auto key = [&](int v, std::size_t pos) {
    return static_cast<long long>(pos) * static_cast<long long>(g.alpha.size()) + v;
  };
  std::map<long long, std::pair<long long, int>> parent;  // key -> (parent key, parent vertex)
  std::map<long long, int> dist;
  std::deque<Node> q;
  q.push_back({start, 0});
  dist[key(start, 0)] = 0;
  while (!q.empty()) {
    Node cur = q.front();
    q.pop_front();
    int e = dist[key(cur.vertex, cur.pos)];
    if (cur.vertex == goal && cur.pos == gamma.size()) {
      std::vector<int> rev{cur.vertex};
      long long k = key(cur.vertex, cur.pos);
      while (parent.count(k)) {
        rev.push_back(parent[k].second);
        k = parent[k].first;
      }
      DeltaPath p;
      p.vertices.assign(rev.rbegin(), rev.rend());
      return p;
    }
    if (e == max_edges) continue;
    int d = g.degree[static_cast<std::size_t>(cur.vertex)];
    std::vector<std::pair<int, std::size_t>> nexts;
    if (d == 0) {
      nexts.push_back({g.out[static_cast<std::size_t>(cur.vertex)][0].first, cur.pos});
    } else if (cur.pos + static_cast<std::size_t>(d) <= gamma.size()) {
      Word lbl(std::vector<int>(gamma.letters().begin() + static_cast<long>(cur.pos),
                                gamma.letters().begin() + static_cast<long>(cur.pos) + d));
      nexts.push_back(
          {g.index_of(concat(g.beta_tail[static_cast<std::size_t>(cur.vertex)], lbl)),
           cur.pos + static_cast<std::size_t>(d)});
    }
    for (auto [to, pos] : nexts) {
      long long k = key(to, pos);
      if (dist.count(k)) continue;
      dist[k] = e + 1;
      parent[k] = {key(cur.vertex, cur.pos), cur.vertex};
      q.push_back({to, pos});
    }
  }
  throw InternalError("accepted label has no reconstructible path");
}

OmegaPair build_pair_for_label(const DeltaGraph& g, int from, int from_prime, const Word& gamma,
                               int end_vertex, int max_edges) {
  DeltaPath x = reconstruct_path(g, from, gamma, end_vertex, max_edges);
  DeltaPath y = reconstruct_path(g, from_prime, gamma, end_vertex, max_edges);
  // Shared final edge: balanced with an empty offset, total label = gamma.
  std::size_t v = static_cast<std::size_t>(end_vertex);
  int ext = g.out[v][0].first;  // lex-least label
  x.vertices.push_back(ext);
  y.vertices.push_back(ext);
  return OmegaPair{x, y, gamma};
}

}  // namespace

MatrixUnitResult matrix_unit_in_range(const DeltaGraph& g, int from, int from_prime, int depth) {
  if (from == from_prime)
    throw CuntzError("membership pairs need distinct start vertices");
  MatrixUnitResult result;
  if (depth <= 0) return result;
  const int max_edges = depth - 1;
  const int max_label = 2 * max_edges;
  constexpr long long kNodeCap = 2000000;

  SideStates x0, y0;
  x0.at[from * (g.n + 1)] = 0;
  y0.at[from_prime * (g.n + 1)] = 0;
  closure(g, x0, max_edges);
  closure(g, y0, max_edges);

  struct TreeNode {
    Word gamma;
    SideStates x, y;
  };
  std::deque<TreeNode> queue;
  queue.push_back({Word(), x0, y0});
  OmegaCertificate cert;
  cert.from = from;
  cert.from_prime = from_prime;
  NAdic covered = NAdic::zero(g.n);
  long long nodes = 0;

  while (!queue.empty()) {
    TreeNode node = std::move(queue.front());
    queue.pop_front();
    if (++nodes > kNodeCap) return result;  // Unknown
    if (auto end = common_end(g, node.x, node.y)) {
      cert.pairs.push_back(
          build_pair_for_label(g, from, from_prime, node.gamma, *end, max_edges));
      covered = covered + NAdic(g.n, 1, static_cast<int>(node.gamma.size()));
      if (covered.is_one()) {
        result.answer = RangeAnswer::Yes;
        result.certificate = cert;
        return result;
      }
      continue;  // descendants are covered; prune the subtree
    }
    if (static_cast<int>(node.gamma.size()) >= max_label) continue;
    for (int c = 1; c <= g.n; ++c) {
      SideStates nx = step(g, node.x, c, max_edges);
      if (nx.at.empty()) continue;
      SideStates ny = step(g, node.y, c, max_edges);
      if (ny.at.empty()) continue;
      queue.push_back({node.gamma.append(c), std::move(nx), std::move(ny)});
    }
  }
  return result;  // Unknown: budget exhausted without a full cover
}

MatrixUnitResult matrix_unit_in_range(const PolyUnitary& u, const Word& alpha,
                                      const Word& alpha_prime, int depth) {
  DeltaGraph g = build_delta(u);
  if (static_cast<int>(alpha.size()) != g.k || static_cast<int>(alpha_prime.size()) != g.k)
    throw CuntzError("matrix unit words must have the presentation length");
  return matrix_unit_in_range(g, g.index_of(alpha), g.index_of(alpha_prime), depth);
}

std::pair<PolyUnitary, PolyUnitary> gauge_fix(const PolyUnitary& u) {
  const int n = u.alphabet();
  if (!gauge_component(u.as_poly(), 0).is_zero()) {
    PolyUnitary v = PolyUnitary::check_unitary(PolyMap::identity(n));
    return {v, u};
  }

  // Some pair has |alpha| > |beta| (the two Kraft sums agree), and the fix
  // conjugates it into a degree-one word. Deterministic choice: first such
  // pair in canonical order.
  const std::pair<Word, Word>* chosen = nullptr;
  for (const auto& pr : u.pairs())
    if (pr.first.size() > pr.second.size()) {
      chosen = &pr;
      break;
    }
  if (!chosen) throw InternalError("vanishing expectation without a long alpha");
  const Word& alpha = chosen->first;
  const Word beta_tail = chosen->second.suffix_from(1);

  std::vector<std::pair<Word, Word>> prescribed;  // (range word, domain word)
  if (orthogonal(alpha, beta_tail)) {
    prescribed.push_back({Word(std::vector<int>{1, 1}), alpha});
    prescribed.push_back({Word::single(2), beta_tail});
  } else {
    // beta_tail is a proper prefix of alpha here; |mu| >= 2 always.
    Word mu = residual(beta_tail, alpha);
    Word nu = repeated(1, static_cast<int>(mu.size()));
    if (nu == mu) {
      std::vector<int> v = nu.letters();
      v.back() = 2;
      nu = Word(std::move(v));
    }
    prescribed.push_back({Word::single(1), alpha});
    prescribed.push_back({repeated(2, static_cast<int>(mu.size())), concat(beta_tail, nu)});
  }

  std::vector<Word> domain, range;
  for (const auto& [r, d] : prescribed) {
    range.push_back(r);
    domain.push_back(d);
  }
  std::vector<Word> cd = complement(CylinderUnion::normalize(n, domain)).words();
  std::vector<Word> cr = complement(CylinderUnion::normalize(n, range)).words();
  if (cd.empty() || cr.empty()) throw InternalError("gauge completion has an empty side");
  // Counts agree mod n-1; split the lexicographically first word of the
  // smaller side until they match.
  while (cd.size() != cr.size()) {
    std::vector<Word>& smaller = cd.size() < cr.size() ? cd : cr;
    Word w = smaller.front();
    smaller.erase(smaller.begin());
    for (int j = 1; j <= n; ++j) smaller.push_back(w.append(j));
    std::sort(smaller.begin(), smaller.end());
  }
  std::vector<PolyTerm> vterms;
  for (const auto& [r, d] : prescribed) vterms.push_back(PolyTerm{r, d, 1});
  for (std::size_t i = 0; i < cd.size(); ++i) vterms.push_back(PolyTerm{cr[i], cd[i], 1});
  PolyUnitary v = PolyUnitary::check_unitary(PolyMap(n, vterms));

  PolyMap w_map = multiply(multiply(v.as_poly(), u.as_poly()), shift_phi(adjoint(v.as_poly())));
  PolyUnitary w = PolyUnitary::check_unitary(w_map);
  if (gauge_component(w.as_poly(), 0).is_zero())
    throw InternalError("gauge fix failed to produce a zero-degree part");
  return {v, w};
}

std::optional<PolyTerm> find_degree_one_word(const UniformPresentation& up, long long budget) {
  const int k = up.k;
  if (k < 1 || budget < 1) return std::nullopt;
  std::vector<std::pair<Word, Word>> factors;  // generators and their adjoints
  for (const auto& [a, b] : up.pairs) {
    Word bt = b.suffix_from(1);
    factors.push_back({a, bt});
    factors.push_back({bt, a});
  }
  auto hit = [&](const Word& mu, const Word& nu) {
    return static_cast<int>(mu.size()) == k && static_cast<int>(nu.size()) == k - 1;
  };
  std::set<std::pair<Word, Word>> seen;
  std::deque<std::pair<Word, Word>> queue;
  long long used = 0;
  for (const auto& f : factors) {
    if (hit(f.first, f.second)) return PolyTerm{f.first, f.second, 1};
    if (seen.insert(f).second) queue.push_back(f);
  }
  const std::size_t length_cap = static_cast<std::size_t>(4 * k + 4);
  while (!queue.empty() && used < budget) {
    auto [mu, nu] = queue.front();
    queue.pop_front();
    ++used;
    for (const auto& [a, b] : factors) {
      // Right-multiply the single term (mu, nu) by (a, b).
      Relation r = compare_words(nu, a);
      Word m2, n2;
      if (r.kind == Rel::Equal) {
        m2 = mu;
        n2 = b;
      } else if (r.kind == Rel::PrefixOfSecond) {
        m2 = concat(mu, r.residual);
        n2 = b;
      } else if (r.kind == Rel::ExtendsSecond) {
        m2 = mu;
        n2 = concat(b, r.residual);
      } else {
        continue;
      }
      if (hit(m2, n2)) return PolyTerm{m2, n2, 1};
      if (m2.size() + n2.size() > length_cap) continue;
      if (seen.insert({m2, n2}).second) queue.push_back({m2, n2});
    }
  }
  return std::nullopt;
}

namespace {

// u = S_nu S_mu^* + S_mu S_nu^* + (diagonal rest), with the nu tail reaching
// the mu tail through letters avoiding both first letters. Always invertible
// once the diagonal restriction is an automorphism.
bool match_involution_template(const PolyUnitary& u) {
  PolyMap cf = canonical_form(u.as_poly());
  std::vector<std::pair<Word, Word>> off;
  std::vector<Word> diag;
  for (const PolyTerm& t : cf.terms()) {
    if (t.coeff != 1) return false;
    if (t.alpha == t.beta)
      diag.push_back(t.alpha);
    else
      off.push_back({t.alpha, t.beta});
  }
  if (off.size() != 2) return false;
  const auto& [a, b] = off[0];
  if (!(off[1].first == b && off[1].second == a)) return false;
  if (!orthogonal(a, b)) return false;
  CylinderUnion rest = CylinderUnion::normalize(u.alphabet(), diag);
  if (!(rest == complement(CylinderUnion::normalize(u.alphabet(), {a, b})))) return false;

  for (const auto& [nu, mu] : {std::pair<Word, Word>{a, b}, std::pair<Word, Word>{b, a}}) {
    if (nu.empty() || mu.empty()) continue;
    Word nt = nu.suffix_from(1);
    Word mt = mu.suffix_from(1);
    if (nt.size() < mt.size()) continue;
    std::size_t r = nt.size() - mt.size();
    if (!(nt.suffix_from(r) == mt)) continue;
    bool ok = true;
    for (std::size_t i = 0; i < r; ++i)
      if (nt.at(i) == mu.front() || nt.at(i) == nu.front()) ok = false;
    if (ok) return true;
  }
  return false;
}

// u cycles three mutually orthogonal words sharing a first letter i, whose
// tails are a common suffix preceded by words avoiding i; the rest is
// diagonal. Also always invertible on top of a diagonal automorphism.
bool match_three_cycle_template(const PolyUnitary& u) {
  PolyMap cf = canonical_form(u.as_poly());
  std::vector<std::pair<Word, Word>> off;
  std::vector<Word> diag;
  for (const PolyTerm& t : cf.terms()) {
    if (t.coeff != 1) return false;
    if (t.alpha == t.beta)
      diag.push_back(t.alpha);
    else
      off.push_back({t.alpha, t.beta});
  }
  if (off.size() != 3) return false;
  std::map<Word, Word> next;
  std::set<Word> words;
  for (const auto& [x, y] : off) {
    next[x] = y;
    words.insert(x);
    words.insert(y);
  }
  if (words.size() != 3 || next.size() != 3) return false;
  Word start = *words.begin();
  Word w2 = next[start];
  Word w3 = next[w2];
  if (w2 == start || w3 == start || w3 == w2 || !(next[w3] == start)) return false;

  std::vector<Word> cyc{start, w2, w3};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (!orthogonal(cyc[i], cyc[j])) return false;
  for (const Word& w : cyc)
    if (w.empty() || w.front() != start.front()) return false;
  int i_letter = start.front();

  CylinderUnion rest = CylinderUnion::normalize(u.alphabet(), diag);
  if (!(rest == complement(CylinderUnion::normalize(u.alphabet(), cyc)))) return false;

  std::vector<Word> tails;
  std::size_t min_tail = SIZE_MAX;
  for (const Word& w : cyc) {
    tails.push_back(w.suffix_from(1));
    min_tail = std::min(min_tail, tails.back().size());
  }
  for (std::size_t len = 0; len <= min_tail; ++len) {
    Word suffix = tails[0].suffix_from(tails[0].size() - len);
    bool common = true;
    for (const Word& t : tails) common = common && t.suffix_from(t.size() - len) == suffix;
    if (!common) continue;
    bool avoid = true;
    for (const Word& t : tails)
      for (std::size_t i = 0; i + len < t.size(); ++i)
        if (t.at(i) == i_letter) avoid = false;
    if (avoid) return true;
  }
  return false;
}

}  // namespace

InvertibilityVerdict decide_invertible(const PolyUnitary& u, const Budgets& budgets) {
  InvertibilityVerdict verdict;

  DiagonalVerdict dv = decide_diagonal(u);
  if (!dv.automorphism) {
    verdict.kind = Invertibility::NotInvertible;
    verdict.stage = "diagonal";
    verdict.cycle = dv.cycle;
    verdict.witness_vertex = dv.witness_vertex();
    return verdict;
  }

  PolyUnitary working = u;
  if (gauge_component(u.as_poly(), 0).is_zero()) {
    auto [v, w] = gauge_fix(u);
    verdict.gauge_applied = true;
    verdict.gauge_v = v;
    working = w;
  }
  verdict.working = working;

  bool class_gate_failed = false;
  bool budget_short = false;
  try {
    UniformPresentation up = uniform_presentation(working);
    if (up.k == 0) {
      verdict.kind = Invertibility::Invertible;
      verdict.stage = "identity";
      return verdict;
    }
    verdict.presentation = up;
    std::optional<PolyTerm> z = find_degree_one_word(up, budgets.bfs_cap);
    if (!z) {
      budget_short = true;
      verdict.stage = "degree_one_search";
    } else {
      verdict.degree_one = z;
      DeltaGraph g = build_delta(working);
      bool all_yes = true;
      for (int a = 0; a < static_cast<int>(g.alpha.size()) && all_yes; ++a)
        for (int b = 0; b < static_cast<int>(g.alpha.size()) && all_yes; ++b) {
          if (a == b) continue;
          MatrixUnitResult r = matrix_unit_in_range(g, a, b, budgets.depth);
          if (r.answer == RangeAnswer::Yes) {
            verdict.certificates[{g.alpha[static_cast<std::size_t>(a)],
                                  g.alpha[static_cast<std::size_t>(b)]}] = *r.certificate;
          } else {
            all_yes = false;
            budget_short = true;
            verdict.stage = "coverage";
          }
        }
      if (all_yes) {
        verdict.kind = Invertibility::Invertible;
        verdict.stage = "coverage";
        return verdict;
      }
    }
  } catch (const NotInRestrictedClassError&) {
    class_gate_failed = true;
  }

  if (match_involution_template(u)) {
    verdict.kind = Invertibility::Invertible;
    verdict.stage = "template";
    verdict.template_name = "involution";
    return verdict;
  }
  if (match_three_cycle_template(u)) {
    verdict.kind = Invertibility::Invertible;
    verdict.stage = "template";
    verdict.template_name = "three_cycle";
    return verdict;
  }

  verdict.kind = Invertibility::Inconclusive;
  if (class_gate_failed)
    verdict.stage = "class_gate";
  else if (!budget_short)
    verdict.stage = "coverage";
  return verdict;
}

}  // namespace cuntz
