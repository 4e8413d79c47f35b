#include "cuntz/word.hpp"

namespace cuntz {

Relation compare_words(const Word& a, const Word& b) {
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i)
    if (a.at(i) != b.at(i)) return {Rel::Orthogonal, Word()};
  if (a.size() == b.size()) return {Rel::Equal, Word()};
  if (a.size() < b.size()) return {Rel::PrefixOfSecond, b.suffix_from(a.size())};
  return {Rel::ExtendsSecond, a.suffix_from(b.size())};
}

std::pair<int, Word> split_head(const Word& a) {
  if (a.empty()) throw EmptyWordError();
  return {a.front(), a.suffix_from(1)};
}

Word concat(const Word& a, const Word& b) {
  std::vector<int> v = a.letters();
  v.insert(v.end(), b.letters().begin(), b.letters().end());
  return Word(std::move(v));
}

std::vector<Word> all_words(int n, int length) {
  std::vector<Word> out;
  std::vector<int> cur(static_cast<std::size_t>(length), 1);
  if (length == 0) {
    out.emplace_back();
    return out;
  }
  while (true) {
    out.emplace_back(cur);
    int pos = length - 1;
    while (pos >= 0 && cur[pos] == n) {
      cur[pos] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++cur[pos];
  }
  return out;
}

}  // namespace cuntz
