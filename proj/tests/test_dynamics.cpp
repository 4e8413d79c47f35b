#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "cuntz/dynamics.hpp"
#include "cuntz/gamma.hpp"
#include "cuntz/random_gen.hpp"
#include "fixtures.hpp"

using namespace cuntz;
using fixtures::W;

TEST_CASE("eventually periodic points canonicalize") {
  EpPoint a(W("21"), W("1"));   // 2 1 1 1 ...
  EpPoint b(W("2"), W("1"));
  CHECK(a == b);
  EpPoint c(W("1"), W("21"));   // 1 2 1 2 ... = (12)^inf
  CHECK(c == EpPoint(Word(), W("12")));
  EpPoint d(Word(), W("2222"));  // period collapses to its root
  CHECK(d == EpPoint(Word(), W("2")));
  CHECK(d.letter_at(0) == 2);
  CHECK(c.prefix(4) == W("1212"));
}

TEST_CASE("point map fixes the advertised points") {
  PolyUnitary c = fixtures::ex33c();
  EpPoint x(W("21"), W("1"));
  CHECK(ad_point_map(c, x) == x);

  PolyUnitary a = fixtures::ex33a();
  EpPoint twos(Word(), W("2"));
  CHECK(ad_point_map(a, twos) == twos);
  EpPoint ones(Word(), W("1"));
  CHECK(ad_point_map(a, ones) == ones);
}

TEST_CASE("fixed point classification by pair shape") {
  FixedPointReport ra = classify_ad_fixed(fixtures::ex33a());
  CHECK(ra.clopen_part.empty());
  REQUIRE(ra.isolated.size() == 2);
  bool saw_attractor = false, saw_repeller = false;
  for (const auto& [p, kind] : ra.isolated) {
    if (kind == FixedKind::Attractor) {
      saw_attractor = true;
      CHECK(p == EpPoint(Word(), W("1")));
    } else {
      saw_repeller = true;
      CHECK(p == EpPoint(Word(), W("2")));
    }
  }
  CHECK(saw_attractor);
  CHECK(saw_repeller);

  FixedPointReport rc = classify_ad_fixed(fixtures::ex33c());
  CHECK(rc.clopen_part == CylinderUnion::normalize(2, {W("21")}));
  CHECK(rc.isolated.empty());

  FixedPointReport ri = classify_ad_fixed(fixtures::identity2());
  CHECK(ri.clopen_part.is_full());
  CHECK(ri.isolated.empty());
}

TEST_CASE("orbits converge to attractors and flee repellers") {
  PolyUnitary a = fixtures::ex33a();
  std::mt19937_64 rng(43);
  EpPoint attractor(Word(), W("1"));
  for (int trial = 0; trial < 10; ++trial) {
    int j = 3 + static_cast<int>(rng() % 4);
    std::vector<int> pre(static_cast<std::size_t>(j), 1);
    pre.push_back(2);  // leave the all-ones ray so the point differs from the target
    EpPoint x(Word(pre), Word::single(1 + static_cast<int>(rng() % 2)));
    std::size_t last = common_prefix_length(x, attractor);
    for (int step = 0; step < 20; ++step) {
      x = ad_point_map(a, x);
      std::size_t now = common_prefix_length(x, attractor);
      CHECK(now > last);
      last = now;
    }
  }
  EpPoint repeller(Word(), W("2"));
  for (int trial = 0; trial < 10; ++trial) {
    int j = 3 + static_cast<int>(rng() % 4);
    std::vector<int> pre(static_cast<std::size_t>(j), 2);
    pre.push_back(1);
    EpPoint x(Word(pre), Word::single(1 + static_cast<int>(rng() % 2)));
    std::size_t last = common_prefix_length(x, repeller);
    bool escaped = false;
    for (int step = 0; step < 20 && !escaped; ++step) {
      x = ad_point_map(a, x);
      std::size_t now = common_prefix_length(x, repeller);
      if (x.letter_at(0) != 2) {
        escaped = true;
        break;
      }
      CHECK(now < last);
      last = now;
    }
    CHECK(escaped);
  }
}

TEST_CASE("fixed set approximation: identity fixes everything") {
  for (int d = 1; d <= 4; ++d)
    CHECK(fixed_set_approx(fixtures::identity2(), d).is_full());
  CHECK_THROWS_AS(fixed_set_approx(fixtures::ex33a(), 3), NotDiagonalAutomorphismError);
}

namespace {
bool contains_pattern(const Word& w, const Word& pat, int max_start) {
  for (int s = 0; s <= max_start && s + static_cast<int>(pat.size()) <= static_cast<int>(w.size());
       ++s) {
    bool match = true;
    for (std::size_t i = 0; i < pat.size(); ++i)
      if (w.at(static_cast<std::size_t>(s) + i) != pat.at(i)) match = false;
    if (match) return true;
  }
  return false;
}
}  // namespace

TEST_CASE("forbidden substrings of the involutive automorphism at depth 8") {
  PolyUnitary s = fixtures::superu();
  CylinderUnion f8 = fixed_set_approx(s, 8);
  for (const Word& w : all_words(2, 8)) {
    CylinderUnion cyl = CylinderUnion::normalize(2, {w});
    bool meets = !meet(f8, cyl).empty();
    bool early_violation =
        contains_pattern(w, W("11"), 4) || contains_pattern(w, W("121"), 4);
    bool clean = !contains_pattern(w, W("11"), 7) && !contains_pattern(w, W("121"), 7);
    if (early_violation) CHECK_FALSE(meets);
    if (clean) CHECK(meets);
  }
  // the all-twos ray stays fixed at every depth
  for (int d = 1; d <= 10; ++d) {
    CylinderUnion fd = fixed_set_approx(s, d);
    CylinderUnion ray = CylinderUnion::normalize(2, {Word(std::vector<int>(d, 2))});
    CHECK_FALSE(meet(fd, ray).empty());
  }
}

TEST_CASE("fixed set approximation decreases with depth") {
  PolyUnitary s = fixtures::superu();
  CylinderUnion prev = fixed_set_approx(s, 1);
  for (int d = 2; d <= 6; ++d) {
    CylinderUnion cur = fixed_set_approx(s, d);
    CHECK(meet(cur, prev) == cur);
    prev = cur;
  }
}

TEST_CASE("corner dimensions") {
  PolyUnitary a = fixtures::ex33a();
  for (int k = 1; k <= 6; ++k) CHECK(corner_dimension(a, W("2"), k) == 1);
  CHECK(corner_dimension(fixtures::identity2(), W("2"), 3) == 4);
  CHECK(corner_dimension(fixtures::superu(), W("2"), 3) == 4);
}

TEST_CASE("prefix substitution identities verify") {
  CHECK(verify_adchar(fixtures::ex33a(), 3).ok);
  CHECK(verify_adchar(fixtures::identity2(), 3).ok);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    PolyUnitary u = random_unitary(2 + static_cast<int>(seed % 2), 3, 3, seed);
    AdCharReport r = verify_adchar(u, 2);
    CHECK_MESSAGE(r.ok, (r.violations.empty() ? "" : r.violations.front()));
  }
}

TEST_CASE("inner fixed structure matches the depth approximation") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    PolyUnitary u = random_unitary(2, 3, 2, seed);
    // lambda of this carrier is Ad(u)
    PolyUnitary inner =
        PolyUnitary::check_unitary(multiply(u.as_poly(), shift_phi(adjoint(u.as_poly()))));
    REQUIRE(decide_diagonal(inner).automorphism);
    FixedPointReport rep = classify_ad_fixed(u);
    CylinderUnion f8 = fixed_set_approx(inner, 8);
    for (const Word& w : rep.clopen_part.words()) {
      CylinderUnion cyl = CylinderUnion::normalize(2, {w});
      CHECK(meet(f8, cyl) == cyl);
    }
    for (const auto& [p, kind] : rep.isolated) {
      CylinderUnion cyl = CylinderUnion::normalize(2, {p.prefix(8)});
      CHECK_FALSE(meet(f8, cyl).empty());
    }
    // every depth-8 cell of the approximation holds a fixed object or shrinks
    std::map<int, CylinderUnion> deeper;
    auto approx_at = [&](int d) -> const CylinderUnion& {
      auto it = deeper.find(d);
      if (it == deeper.end()) it = deeper.emplace(d, fixed_set_approx(inner, d)).first;
      return it->second;
    };
    for (const Word& w : f8.refine_to_level(8)) {
      CylinderUnion cyl = CylinderUnion::normalize(2, {w});
      bool has_clopen = !meet(rep.clopen_part, cyl).empty();
      bool has_isolated = false;
      for (const auto& [p, kind] : rep.isolated)
        if (p.prefix(8) == w) has_isolated = true;
      if (!has_clopen && !has_isolated) {
        bool shrank = false;
        for (int d = 9; d <= 12 && !shrank; ++d)
          if (!(meet(approx_at(d), cyl) == cyl)) shrank = true;
        CHECK(shrank);
      }
    }
  }
}
