#include "cuntz/clopen.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cuntz {

namespace {

// exp stays small in practice (word lengths); the guard keeps 128-bit
// arithmetic exact rather than wrapping.
void check_exp(int base, int exp) {
  double bits = exp * (base == 2 ? 1.0 : (base <= 4 ? 2.0 : (base <= 8 ? 3.0 : 4.0)));
  if (base > 16 || bits > 120.0)
    throw CuntzError("n-adic exponent out of supported range");
}

unsigned __int128 ipow(int base, int exp) {
  unsigned __int128 r = 1;
  for (int i = 0; i < exp; ++i) r *= static_cast<unsigned>(base);
  return r;
}

}  // namespace

NAdic::NAdic(int base, unsigned __int128 num, int exp) : base_(base), num_(num), exp_(exp) {
  check_exp(base_, exp_);
  normalize();
}

void NAdic::normalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && num_ % static_cast<unsigned>(base_) == 0) {
    num_ /= static_cast<unsigned>(base_);
    --exp_;
  }
}

NAdic NAdic::operator+(const NAdic& other) const {
  int exp = std::max(exp_, other.exp_);
  check_exp(base_, exp + 1);
  unsigned __int128 a = num_ * ipow(base_, exp - exp_);
  unsigned __int128 b = other.num_ * ipow(base_, exp - other.exp_);
  return NAdic(base_, a + b, exp);
}

bool NAdic::operator==(const NAdic& other) const {
  return exp_ == other.exp_ && num_ == other.num_;
}

bool NAdic::operator<(const NAdic& other) const {
  int exp = std::max(exp_, other.exp_);
  return num_ * ipow(base_, exp - exp_) < other.num_ * ipow(base_, exp - other.exp_);
}

std::string NAdic::str() const {
  auto dec = [](unsigned __int128 v) {
    if (v == 0) return std::string("0");
    std::string s;
    while (v > 0) {
      s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
      v /= 10;
    }
    return s;
  };
  return dec(num_) + "/" + std::to_string(base_) + "^" + std::to_string(exp_);
}

CylinderUnion CylinderUnion::normalize(int n, std::vector<Word> raw) {
  Alphabet check(n);
  std::set<Word> s(raw.begin(), raw.end());

  // Absorb words that extend another member.
  std::set<Word> antichain;
  for (const Word& w : s) {
    bool absorbed = false;
    for (std::size_t len = 0; len < w.size(); ++len)
      if (s.count(w.prefix(len))) {
        absorbed = true;
        break;
      }
    if (!absorbed) antichain.insert(w);
  }

  // Merge full sibling families to exhaustion. Merging never creates a
  // prefix violation (a member strictly extending the merged parent would
  // have overlapped one of the siblings), so only new merges can appear.
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<Word, int> children_count;
    for (const Word& w : antichain)
      if (!w.empty()) ++children_count[w.prefix(w.size() - 1)];
    for (const auto& [parent, count] : children_count) {
      if (count != n) continue;
      for (int j = 1; j <= n; ++j) antichain.erase(parent.append(j));
      antichain.insert(parent);
      changed = true;
      break;
    }
  }

  return CylinderUnion(n, std::vector<Word>(antichain.begin(), antichain.end()));
}

std::size_t CylinderUnion::max_word_length() const {
  std::size_t m = 0;
  for (const Word& w : words_) m = std::max(m, w.size());
  return m;
}

NAdic CylinderUnion::kraft() const {
  NAdic sum = NAdic::zero(n_);
  for (const Word& w : words_) sum = sum + NAdic(n_, 1, static_cast<int>(w.size()));
  return sum;
}

std::vector<Word> CylinderUnion::refine_to_level(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) < max_word_length())
    throw LevelTooSmallError("level " + std::to_string(k) + " is below the deepest member");
  std::vector<Word> out;
  for (const Word& w : words_)
    for (const Word& tail : all_words(n_, k - static_cast<int>(w.size())))
      out.push_back(concat(w, tail));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Complement of an antichain, walking the code tree: at every branch either
// descend, emit the untouched sibling cylinder, or stop under a member.
void complement_rec(int n, const Word& prefix, const std::vector<Word>& members,
                    std::vector<Word>& out) {
  if (members.size() == 1 && members[0].empty()) return;  // fully covered
  for (int j = 1; j <= n; ++j) {
    std::vector<Word> sub;
    for (const Word& m : members)
      if (!m.empty() && m.front() == j) sub.push_back(m.suffix_from(1));
    if (sub.empty()) {
      out.push_back(prefix.append(j));
    } else {
      complement_rec(n, prefix.append(j), sub, out);
    }
  }
}

}  // namespace

CylinderUnion complement(const CylinderUnion& c) {
  if (c.empty()) return CylinderUnion::full(c.alphabet());
  std::vector<Word> out;
  complement_rec(c.alphabet(), Word(), c.words(), out);
  return CylinderUnion::normalize(c.alphabet(), std::move(out));
}

CylinderUnion meet(const CylinderUnion& a, const CylinderUnion& b) {
  std::vector<Word> out;
  for (const Word& x : a.words())
    for (const Word& y : b.words()) {
      Relation r = compare_words(x, y);
      if (r.kind == Rel::Equal || r.kind == Rel::ExtendsSecond)
        out.push_back(x);
      else if (r.kind == Rel::PrefixOfSecond)
        out.push_back(y);
    }
  return CylinderUnion::normalize(a.alphabet(), std::move(out));
}

CylinderUnion join(const CylinderUnion& a, const CylinderUnion& b) {
  std::vector<Word> out = a.words();
  out.insert(out.end(), b.words().begin(), b.words().end());
  return CylinderUnion::normalize(a.alphabet(), std::move(out));
}

}  // namespace cuntz
