#ifndef CUNTZ_WORD_HPP
#define CUNTZ_WORD_HPP

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "cuntz/errors.hpp"

namespace cuntz {

// Alphabet {1,...,n}, n >= 2. Letters are small integers, never characters,
// so alphabets with more than nine letters work throughout; rendering as
// digits happens only at the text layer.
struct Alphabet {
  int n;
  explicit Alphabet(int n_) : n(n_) {
    if (n < 2) throw CuntzError("alphabet needs at least two letters");
  }
};

// A finite word over {1,...,n}. The empty word is a valid value.
// Ordering is lexicographic with a prefix sorting before its extensions;
// this is the canonical order used for all deterministic output.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}

  static Word single(int letter) { return Word(std::vector<int>{letter}); }

  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int at(std::size_t i) const { return letters_[i]; }
  int front() const { return letters_.front(); }
  int back() const { return letters_.back(); }

  Word prefix(std::size_t len) const {
    return Word(std::vector<int>(letters_.begin(), letters_.begin() + len));
  }
  Word suffix_from(std::size_t pos) const {
    return Word(std::vector<int>(letters_.begin() + pos, letters_.end()));
  }
  Word append(int letter) const {
    std::vector<int> v = letters_;
    v.push_back(letter);
    return Word(std::move(v));
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<int> letters_;
};

enum class Rel { Equal, PrefixOfSecond, ExtendsSecond, Orthogonal };

// Prefix-order comparison of two words; residual carries the leftover
// letters of the longer word in the comparable cases.
struct Relation {
  Rel kind = Rel::Orthogonal;
  Word residual;
};

Relation compare_words(const Word& a, const Word& b);

inline bool is_prefix(const Word& a, const Word& b) {
  if (a.size() > b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.at(i) != b.at(i)) return false;
  return true;
}

// b with the initial segment a removed; callers guarantee is_prefix(a, b).
inline Word residual(const Word& a, const Word& b) { return b.suffix_from(a.size()); }

inline bool orthogonal(const Word& a, const Word& b) {
  return !is_prefix(a, b) && !is_prefix(b, a);
}

// Splits a nonempty word into (first letter, tail).
std::pair<int, Word> split_head(const Word& a);

Word concat(const Word& a, const Word& b);

// All words of the given length, in canonical order.
std::vector<Word> all_words(int n, int length);

}  // namespace cuntz

#endif
