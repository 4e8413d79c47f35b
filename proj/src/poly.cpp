#include "cuntz/poly.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cuntz/errors.hpp"

namespace cuntz {

namespace {

std::vector<PolyTerm> combine(std::vector<PolyTerm> terms) {
  std::map<std::pair<Word, Word>, long long> acc;
  for (auto& t : terms) acc[{t.alpha, t.beta}] += t.coeff;
  std::vector<PolyTerm> out;
  for (auto& [key, c] : acc)
    if (c != 0) out.push_back(PolyTerm{key.first, key.second, c});
  return out;
}

}  // namespace

PolyMap::PolyMap(int n, std::vector<PolyTerm> terms) : n_(n), terms_(combine(std::move(terms))) {
  Alphabet check(n);
}

PolyMap add(const PolyMap& a, const PolyMap& b) {
  std::vector<PolyTerm> terms = a.terms();
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return PolyMap(a.alphabet(), std::move(terms));
}

PolyMap multiply(const PolyMap& a, const PolyMap& b) {
  std::vector<PolyTerm> out;
  for (const PolyTerm& s : a.terms())
    for (const PolyTerm& t : b.terms()) {
      Relation r = compare_words(s.beta, t.alpha);
      switch (r.kind) {
        case Rel::Equal:
          out.push_back(PolyTerm{s.alpha, t.beta, s.coeff * t.coeff});
          break;
        case Rel::PrefixOfSecond:
          out.push_back(PolyTerm{concat(s.alpha, r.residual), t.beta, s.coeff * t.coeff});
          break;
        case Rel::ExtendsSecond:
          out.push_back(PolyTerm{s.alpha, concat(t.beta, r.residual), s.coeff * t.coeff});
          break;
        case Rel::Orthogonal:
          break;
      }
    }
  return PolyMap(a.alphabet(), std::move(out));
}

PolyMap adjoint(const PolyMap& p) {
  std::vector<PolyTerm> out;
  for (const PolyTerm& t : p.terms()) out.push_back(PolyTerm{t.beta, t.alpha, t.coeff});
  return PolyMap(p.alphabet(), std::move(out));
}

PolyMap shift_phi(const PolyMap& p) {
  std::vector<PolyTerm> out;
  for (const PolyTerm& t : p.terms())
    for (int i = 1; i <= p.alphabet(); ++i)
      out.push_back(PolyTerm{concat(Word::single(i), t.alpha),
                             concat(Word::single(i), t.beta), t.coeff});
  return PolyMap(p.alphabet(), std::move(out));
}

PolyMap canonical_form(const PolyMap& p) {
  const int n = p.alphabet();
  std::map<std::pair<Word, Word>, long long> acc;
  for (const PolyTerm& t : p.terms()) acc[{t.alpha, t.beta}] += t.coeff;

  // Merge (g.j, d.j) families sharing the trailing letter j until no family
  // is left. Each term belongs to at most one family, so the reduction is
  // confluent regardless of firing order.
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<Word, Word>, std::vector<std::pair<int, long long>>> families;
    for (const auto& [key, c] : acc) {
      const Word& a = key.first;
      const Word& b = key.second;
      if (c == 0 || a.empty() || b.empty() || a.back() != b.back()) continue;
      families[{a.prefix(a.size() - 1), b.prefix(b.size() - 1)}].push_back({a.back(), c});
    }
    for (const auto& [parent, members] : families) {
      if (static_cast<int>(members.size()) != n) continue;
      long long c = members.front().second;
      bool uniform = true;
      for (const auto& [j, cj] : members) uniform = uniform && cj == c;
      if (!uniform) continue;
      for (int j = 1; j <= n; ++j)
        acc.erase({parent.first.append(j), parent.second.append(j)});
      acc[{parent.first, parent.second}] += c;
      changed = true;
      break;
    }
  }

  std::vector<PolyTerm> out;
  for (const auto& [key, c] : acc)
    if (c != 0) out.push_back(PolyTerm{key.first, key.second, c});
  return PolyMap(n, std::move(out));
}

PolyMap gauge_component(const PolyMap& p, int m) {
  std::vector<PolyTerm> out;
  for (const PolyTerm& t : p.terms())
    if (static_cast<long long>(t.alpha.size()) - static_cast<long long>(t.beta.size()) == m)
      out.push_back(t);
  return PolyMap(p.alphabet(), std::move(out));
}

namespace {

// Distinctness + antichain + full Kraft sum, with a witness for failures.
void check_partition_side(int n, const std::vector<Word>& words, const std::string& side) {
  std::vector<Word> sorted = words;
  std::sort(sorted.begin(), sorted.end());
  auto fail = [&](const Word& witness, const std::string& what) {
    std::string ws;
    for (int l : witness.letters()) ws += std::to_string(l);
    if (ws.empty()) ws = "e";
    throw NotAPartitionError(side, ws, side + " code is not a partition: " + what + " at " + ws);
  };
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    if (sorted[i] == sorted[i + 1]) fail(sorted[i], "duplicate word");
    if (is_prefix(sorted[i], sorted[i + 1])) fail(sorted[i + 1], "overlapping cylinders");
  }
  // With prefix-first sorting, overlaps are always adjacent; still sweep all
  // pairs for the small sizes at hand to keep the check obviously complete.
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j)
      if (!orthogonal(sorted[i], sorted[j])) fail(sorted[j], "overlapping cylinders");
  CylinderUnion cu = CylinderUnion::normalize(n, sorted);
  if (!is_partition(cu)) {
    CylinderUnion missing = complement(cu);
    Word witness = missing.empty() ? Word() : missing.words().front();
    fail(witness, "cylinders do not exhaust the space; missing");
  }
}

}  // namespace

PolyUnitary::PolyUnitary(int n, std::vector<std::pair<Word, Word>> pairs)
    : n_(n), pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  for (const auto& [a, b] : pairs_) {
    ell_ = std::max(ell_, static_cast<int>(a.size()));
    ell_prime_ = std::max({ell_prime_, static_cast<int>(a.size()), static_cast<int>(b.size())});
  }
}

PolyUnitary PolyUnitary::check_unitary(const PolyMap& p) {
  for (const PolyTerm& t : p.terms())
    if (t.coeff != 1)
      throw CoefficientNotOneError("unitary sums of words carry coefficient 1 only");
  std::vector<Word> alphas, betas;
  std::vector<std::pair<Word, Word>> pairs;
  for (const PolyTerm& t : p.terms()) {
    alphas.push_back(t.alpha);
    betas.push_back(t.beta);
    pairs.push_back({t.alpha, t.beta});
  }
  check_partition_side(p.alphabet(), alphas, "left");
  check_partition_side(p.alphabet(), betas, "right");
  return PolyUnitary(p.alphabet(), std::move(pairs));
}

PolyMap PolyUnitary::as_poly() const {
  std::vector<PolyTerm> terms;
  for (const auto& [a, b] : pairs_) terms.push_back(PolyTerm{a, b, 1});
  return PolyMap(n_, std::move(terms));
}

PolyUnitary PolyUnitary::adjoint_unitary() const {
  std::vector<std::pair<Word, Word>> swapped;
  for (const auto& [a, b] : pairs_) swapped.push_back({b, a});
  return PolyUnitary(n_, std::move(swapped));
}

CylinderUnion PolyUnitary::left_code() const {
  std::vector<Word> ws;
  for (const auto& [a, b] : pairs_) ws.push_back(a);
  return CylinderUnion::normalize(n_, std::move(ws));
}

CylinderUnion PolyUnitary::right_code() const {
  std::vector<Word> ws;
  for (const auto& [a, b] : pairs_) ws.push_back(b);
  return CylinderUnion::normalize(n_, std::move(ws));
}

PolyUnitary u_tower(const PolyUnitary& u, int k) {
  if (k < 0) throw CuntzError("tower index must be non-negative");
  PolyMap acc = PolyMap::identity(u.alphabet());
  PolyMap shifted = u.as_poly();
  for (int i = 0; i < k; ++i) {
    acc = multiply(acc, shifted);
    if (i + 1 < k) shifted = shift_phi(shifted);
  }
  return PolyUnitary::check_unitary(acc);
}

PolyMap apply_lambda(const PolyUnitary& u, const PolyMap& p) {
  const int n = u.alphabet();
  // lambda(S_w) built letter by letter: lambda(S_i) = u S_i.
  std::vector<PolyMap> gen;
  gen.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    gen.push_back(multiply(u.as_poly(), PolyMap(n, {PolyTerm{Word::single(i), Word(), 1}})));

  std::map<Word, PolyMap> images;
  images.emplace(Word(), PolyMap::identity(n));
  auto image_of = [&](const Word& w) -> const PolyMap& {
    for (std::size_t len = 1; len <= w.size(); ++len) {
      Word pre = w.prefix(len);
      if (!images.count(pre))
        images.emplace(pre, multiply(images.at(w.prefix(len - 1)),
                                     gen[static_cast<std::size_t>(pre.back() - 1)]));
    }
    return images.at(w);
  };

  PolyMap out = PolyMap::zero(n);
  for (const PolyTerm& t : p.terms()) {
    PolyMap img = multiply(image_of(t.alpha), adjoint(image_of(t.beta)));
    std::vector<PolyTerm> scaled;
    for (const PolyTerm& s : img.terms())
      scaled.push_back(PolyTerm{s.alpha, s.beta, s.coeff * t.coeff});
    out = add(out, PolyMap(n, std::move(scaled)));
  }
  return out;
}

PolyUnitary compose(const PolyUnitary& u, const PolyUnitary& w) {
  if (u.alphabet() != w.alphabet()) throw CuntzError("alphabet mismatch");
  return PolyUnitary::check_unitary(multiply(apply_lambda(u, w.as_poly()), u.as_poly()));
}

CylinderUnion ad_action(const PolyUnitary& u, const CylinderUnion& c) {
  std::vector<Word> out;
  std::vector<Word> work = c.words();
  while (!work.empty()) {
    Word w = work.back();
    work.pop_back();
    bool rewritten = false;
    for (const auto& [a, b] : u.pairs()) {
      if (is_prefix(b, w)) {
        out.push_back(concat(a, residual(b, w)));
        rewritten = true;
        break;
      }
    }
    if (rewritten) continue;
    // Every beta extending w exists deeper; split one level. Terminates once
    // |w| reaches the deepest beta.
    for (int j = 1; j <= u.alphabet(); ++j) work.push_back(w.append(j));
  }
  return CylinderUnion::normalize(u.alphabet(), std::move(out));
}

CylinderUnion ad_shifted_action(const PolyUnitary& u, int m, const CylinderUnion& c) {
  if (m < 0) throw CuntzError("shift depth must be non-negative");
  std::vector<Word> out;
  for (const Word& w : c.words()) {
    if (static_cast<int>(w.size()) <= m) {
      out.push_back(w);
      continue;
    }
    Word head = w.prefix(static_cast<std::size_t>(m));
    Word tail = w.suffix_from(static_cast<std::size_t>(m));
    CylinderUnion moved = ad_action(u, CylinderUnion::normalize(u.alphabet(), {tail}));
    for (const Word& d : moved.words()) out.push_back(concat(head, d));
  }
  return CylinderUnion::normalize(u.alphabet(), std::move(out));
}

CylinderUnion diagonal_support(const PolyMap& p) {
  std::vector<Word> ws;
  for (const PolyTerm& t : p.terms()) {
    if (t.alpha != t.beta || t.coeff != 1)
      throw InternalError("expected a sum of standard projections");
    ws.push_back(t.alpha);
  }
  return CylinderUnion::normalize(p.alphabet(), std::move(ws));
}

}  // namespace cuntz
