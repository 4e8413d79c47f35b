#ifndef CUNTZ_TEST_FIXTURES_HPP
#define CUNTZ_TEST_FIXTURES_HPP

#include <initializer_list>
#include <utility>

#include "cuntz/poly.hpp"
#include "cuntz/text.hpp"

namespace cuntz::fixtures {

inline Word W(const char* digits, int n = 9) { return parse_word(digits, n); }

inline PolyUnitary make_unitary(int n,
                                std::initializer_list<std::pair<const char*, const char*>> prs) {
  std::vector<PolyTerm> terms;
  for (const auto& [a, b] : prs) terms.push_back(PolyTerm{W(a, n), W(b, n), 1});
  return PolyUnitary::check_unitary(PolyMap(n, std::move(terms)));
}

inline PolyUnitary identity2() { return make_unitary(2, {{"1", "1"}, {"2", "2"}}); }

// S_1 S_1 S_1^* + S_1 S_2 S_1^* S_2^* + S_2 S_2^* S_2^*: the diagonal
// restriction compresses the corner at [2] to one dimension.
inline PolyUnitary ex33a() { return make_unitary(2, {{"11", "1"}, {"12", "21"}, {"2", "22"}}); }

// S_2 S_1 S_1^* + S_2 S_2 S_1^* S_2^* + S_1 S_2^* S_2^*: P_12 never
// stabilizes.
inline PolyUnitary ex33b() { return make_unitary(2, {{"21", "1"}, {"22", "21"}, {"1", "22"}}); }

// Self-adjoint S_1 S_2^* S_2^* + P_21 + S_2 S_2 S_1^*: P_11 never
// stabilizes; also the five-vertex graph example.
inline PolyUnitary ex33c() { return make_unitary(2, {{"1", "22"}, {"21", "21"}, {"22", "1"}}); }
inline PolyUnitary ex35() { return ex33c(); }

// Six pairs whose graph is acyclic with ten vertices and nine edges.
inline PolyUnitary ex36() {
  return make_unitary(2, {{"12", "21"},
                          {"11", "221"},
                          {"21", "222"},
                          {"2222", "11"},
                          {"2221", "122"},
                          {"221", "121"}});
}

// The involutive automorphism S_11 S_121^* + S_121 S_11^* + P_122 + P_2.
inline PolyUnitary superu() {
  return make_unitary(2, {{"11", "121"}, {"121", "11"}, {"122", "122"}, {"2", "2"}});
}

// Three-cycle on 11 -> 121 -> 1221 plus projections; invertible but outside
// the |alpha|-|beta| <= 1 class.
inline PolyUnitary ex45w() {
  return make_unitary(
      2, {{"11", "121"}, {"121", "1221"}, {"1221", "11"}, {"1222", "1222"}, {"2", "2"}});
}

// Zero expectation; the first long pair (111,11) has its beta tail as a
// prefix, exercising that branch of the gauge fix.
inline PolyUnitary gauge_e0() {
  return make_unitary(2, {{"111", "11"}, {"112", "2"}, {"12", "121"}, {"2", "122"}});
}

// Zero expectation; the first long pair (111,12) has an orthogonal beta
// tail, exercising the other branch.
inline PolyUnitary gauge_ortho() {
  return make_unitary(2, {{"111", "12"}, {"112", "2"}, {"12", "111"}, {"2", "112"}});
}

}  // namespace cuntz::fixtures

#endif
