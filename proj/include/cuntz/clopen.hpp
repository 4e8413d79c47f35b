#ifndef CUNTZ_CLOPEN_HPP
#define CUNTZ_CLOPEN_HPP

#include <string>
#include <vector>

#include "cuntz/word.hpp"

namespace cuntz {

// Exact rational of the form num / n^exp. This is all the arithmetic the
// engine ever needs: cylinder measures are n-adic. Kept normalized (num not
// divisible by n unless exp == 0), with a hard overflow guard instead of
// silent wrap-around.
class NAdic {
 public:
  NAdic(int base, unsigned __int128 num, int exp);
  static NAdic zero(int base) { return NAdic(base, 0, 0); }
  static NAdic one(int base) { return NAdic(base, 1, 0); }

  int base() const { return base_; }
  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return exp_ == 0 && num_ == 1; }

  NAdic operator+(const NAdic& other) const;
  bool operator==(const NAdic& other) const;
  bool operator<(const NAdic& other) const;

  std::string str() const;  // "num/n^exp"

 private:
  int base_;
  unsigned __int128 num_;
  int exp_;
  void normalize();
};

// A clopen subset of the shift space, stored as its unique reduced antichain
// of words: no member is a prefix of another, and no full sibling family
// w1,...,wn (all n one-letter extensions of a common w) is present. The
// empty set is {} and the full space is {empty word}.
class CylinderUnion {
 public:
  static CylinderUnion normalize(int n, std::vector<Word> raw);
  static CylinderUnion empty_set(int n) { return normalize(n, {}); }
  static CylinderUnion full(int n) { return normalize(n, {Word()}); }

  int alphabet() const { return n_; }
  const std::vector<Word>& words() const { return words_; }
  bool empty() const { return words_.empty(); }
  bool is_full() const { return words_.size() == 1 && words_[0].empty(); }
  std::size_t max_word_length() const;

  NAdic kraft() const;

  // The unique representation of this set by words of length exactly k;
  // requires k >= max_word_length().
  std::vector<Word> refine_to_level(int k) const;

  bool operator==(const CylinderUnion&) const = default;

 private:
  CylinderUnion(int n, std::vector<Word> words) : n_(n), words_(std::move(words)) {}
  int n_ = 2;
  std::vector<Word> words_;
};

CylinderUnion complement(const CylinderUnion& c);
CylinderUnion meet(const CylinderUnion& a, const CylinderUnion& b);
CylinderUnion join(const CylinderUnion& a, const CylinderUnion& b);

inline bool is_partition(const CylinderUnion& c) { return c.kraft().is_one(); }

}  // namespace cuntz

#endif
