#include "cuntz/random_gen.hpp"

#include <algorithm>
#include <random>

#include "cuntz/errors.hpp"

namespace cuntz {

namespace {

// rng() % m is deterministic everywhere, unlike the standard distributions.
std::size_t pick(std::mt19937_64& rng, std::size_t m) {
  return static_cast<std::size_t>(rng() % m);
}

std::vector<Word> grow_code(int n, int target, int max_len, std::mt19937_64& rng) {
  std::vector<Word> code{Word()};
  while (static_cast<int>(code.size()) < target) {
    std::vector<std::size_t> splittable;
    for (std::size_t i = 0; i < code.size(); ++i)
      if (static_cast<int>(code[i].size()) < max_len) splittable.push_back(i);
    if (splittable.empty())
      throw InfeasibleSizeError("no code of size " + std::to_string(target) +
                                " within max length " + std::to_string(max_len));
    std::size_t at = splittable[pick(rng, splittable.size())];
    Word w = code[at];
    code.erase(code.begin() + static_cast<long>(at));
    for (int j = 1; j <= n; ++j) code.push_back(w.append(j));
  }
  std::sort(code.begin(), code.end());
  return code;
}

}  // namespace

PolyUnitary random_unitary(int n, int pairs, int max_len, std::uint64_t seed) {
  Alphabet check(n);
  if (pairs < 1) throw InfeasibleSizeError("need at least one pair");
  int target = pairs;
  while (target > 1 && (target - 1) % (n - 1) != 0) ++target;

  std::mt19937_64 rng(seed);
  std::vector<Word> left = grow_code(n, target, max_len, rng);
  std::vector<Word> right = grow_code(n, target, max_len, rng);

  std::vector<std::size_t> perm(left.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  for (std::size_t i = perm.size(); i > 1; --i)
    std::swap(perm[i - 1], perm[pick(rng, i)]);

  std::vector<PolyTerm> terms;
  for (std::size_t i = 0; i < left.size(); ++i)
    terms.push_back(PolyTerm{left[i], right[perm[i]], 1});
  return PolyUnitary::check_unitary(PolyMap(n, std::move(terms)));
}

}  // namespace cuntz
