#include "cuntz/dynamics.hpp"

#include <algorithm>

#include "cuntz/errors.hpp"
#include "cuntz/gamma.hpp"

namespace cuntz {

namespace {

Word primitive_root(const Word& tau) {
  const std::size_t len = tau.size();
  for (std::size_t p = 1; p <= len; ++p) {
    if (len % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < len && periodic; ++i)
      if (tau.at(i) != tau.at(i - p)) periodic = false;
    if (periodic) return tau.prefix(p);
  }
  return tau;
}

bool ends_with(const Word& w, const Word& suffix) {
  if (suffix.size() > w.size()) return false;
  return w.suffix_from(w.size() - suffix.size()) == suffix;
}

Word rotate_right(const Word& w) {
  std::vector<int> v;
  v.reserve(w.size());
  v.push_back(w.back());
  for (std::size_t i = 0; i + 1 < w.size(); ++i) v.push_back(w.at(i));
  return Word(std::move(v));
}

Word rotate_left(const Word& w, std::size_t count) {
  std::vector<int> v;
  v.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) v.push_back(w.at((i + count) % w.size()));
  return Word(std::move(v));
}

}  // namespace

EpPoint::EpPoint(Word sigma, Word tau) : sigma_(std::move(sigma)), tau_(std::move(tau)) {
  if (tau_.empty()) throw CuntzError("eventually periodic point needs a nonempty period");
  tau_ = primitive_root(tau_);
  // Pull the period as far forward as possible; rotation keeps it primitive.
  while (true) {
    if (ends_with(sigma_, tau_)) {
      sigma_ = sigma_.prefix(sigma_.size() - tau_.size());
    } else if (!sigma_.empty() && sigma_.back() == tau_.back()) {
      sigma_ = sigma_.prefix(sigma_.size() - 1);
      tau_ = rotate_right(tau_);
    } else {
      break;
    }
  }
}

int EpPoint::letter_at(std::size_t i) const {
  if (i < sigma_.size()) return sigma_.at(i);
  return tau_.at((i - sigma_.size()) % tau_.size());
}

Word EpPoint::prefix(std::size_t len) const {
  std::vector<int> v;
  v.reserve(len);
  for (std::size_t i = 0; i < len; ++i) v.push_back(letter_at(i));
  return Word(std::move(v));
}

EpPoint EpPoint::drop(std::size_t count) const {
  if (count <= sigma_.size()) return EpPoint(sigma_.suffix_from(count), tau_);
  std::size_t into_period = (count - sigma_.size()) % tau_.size();
  return EpPoint(Word(), rotate_left(tau_, into_period));
}

std::size_t common_prefix_length(const EpPoint& a, const EpPoint& b, std::size_t cap) {
  std::size_t i = 0;
  while (i < cap && a.letter_at(i) == b.letter_at(i)) ++i;
  return i;
}

EpPoint ad_point_map(const PolyUnitary& u, const EpPoint& x) {
  // The domain code is complete, so a unique beta prefixes x.
  for (const auto& [alpha, beta] : u.pairs()) {
    if (is_prefix(beta, x.prefix(beta.size()))) {
      EpPoint rest = x.drop(beta.size());
      return EpPoint(concat(alpha, rest.preperiod()), rest.period());
    }
  }
  throw InternalError("no domain word prefixes the point");
}

FixedPointReport classify_ad_fixed(const PolyUnitary& u) {
  FixedPointReport report;
  std::vector<Word> clopen_words;
  for (const auto& [alpha, beta] : u.pairs()) {
    Relation r = compare_words(alpha, beta);
    switch (r.kind) {
      case Rel::Equal:
        clopen_words.push_back(beta);
        break;
      case Rel::ExtendsSecond:
        // alpha = beta.mu: the point beta mu mu ... pulls neighbors in.
        report.isolated.push_back({EpPoint(beta, r.residual), FixedKind::Attractor});
        break;
      case Rel::PrefixOfSecond:
        // beta = alpha.mu: the matching fixed point pushes neighbors out.
        report.isolated.push_back({EpPoint(alpha, r.residual), FixedKind::Repeller});
        break;
      case Rel::Orthogonal:
        break;
    }
  }
  report.clopen_part = CylinderUnion::normalize(u.alphabet(), clopen_words);
  return report;
}

namespace {

CylinderUnion image_support(const PolyUnitary& u, const Word& w) {
  PolyMap proj(u.alphabet(), {PolyTerm{w, w, 1}});
  return diagonal_support(canonical_form(apply_lambda(u, proj)));
}

}  // namespace

CylinderUnion fixed_set_approx(const PolyUnitary& u, int d) {
  if (!decide_diagonal(u).automorphism)
    throw NotDiagonalAutomorphismError("fixed set is only computed for diagonal automorphisms");
  CylinderUnion acc = CylinderUnion::empty_set(u.alphabet());
  for (const Word& w : all_words(u.alphabet(), d)) {
    CylinderUnion cyl = CylinderUnion::normalize(u.alphabet(), {w});
    acc = join(acc, meet(cyl, image_support(u, w)));
  }
  return acc;
}

int corner_dimension(const PolyUnitary& u, const Word& gamma, int k) {
  CylinderUnion corner = CylinderUnion::normalize(u.alphabet(), {gamma});
  int count = 0;
  for (const Word& w : all_words(u.alphabet(), k))
    if (!meet(image_support(u, w), corner).empty()) ++count;
  return count;
}

AdCharReport verify_adchar(const PolyUnitary& u, int depth) {
  AdCharReport report;
  auto complain = [&](const std::string& msg) {
    report.ok = false;
    report.violations.push_back(msg);
  };
  auto render = [](const Word& w) {
    if (w.empty()) return std::string("e");
    std::string s;
    for (int l : w.letters()) s += std::to_string(l);
    return s;
  };

  for (const auto& [alpha, beta] : u.pairs())
    for (int len = 0; len <= depth; ++len)
      for (const Word& delta : all_words(u.alphabet(), len)) {
        CylinderUnion in = CylinderUnion::normalize(u.alphabet(), {concat(beta, delta)});
        CylinderUnion expect = CylinderUnion::normalize(u.alphabet(), {concat(alpha, delta)});
        if (!(ad_action(u, in) == expect))
          complain("substitution fails on beta=" + render(beta) + " delta=" + render(delta));
      }

  for (int len = u.ell_prime(); len <= u.ell_prime() + 1; ++len)
    for (const Word& gamma : all_words(u.alphabet(), len)) {
      CylinderUnion img = ad_action(u, CylinderUnion::normalize(u.alphabet(), {gamma}));
      if (img.words().size() != 1)
        complain("image of deep projection P_" + render(gamma) + " is not standard");
    }
  return report;
}

}  // namespace cuntz
