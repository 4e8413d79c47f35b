#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cuntz/invertibility.hpp"
#include "cuntz/stabilize.hpp"
#include "fixtures.hpp"

using namespace cuntz;
using fixtures::W;

TEST_CASE("uniform presentation refines to a common alpha length") {
  UniformPresentation up = uniform_presentation(fixtures::superu());
  CHECK(up.k == 3);
  REQUIRE(up.pairs.size() == 8);
  std::vector<Word> alphas;
  for (const auto& [a, b] : up.pairs) alphas.push_back(a);
  CHECK(alphas == all_words(2, 3));

  UniformPresentation idp = uniform_presentation(fixtures::identity2());
  CHECK(idp.k == 0);
  REQUIRE(idp.pairs.size() == 1);
  CHECK(idp.pairs[0].first == Word());

  CHECK_THROWS_AS(uniform_presentation(fixtures::gauge_e0()), NotInRestrictedClassError);
  // the three-cycle example carries a +2 pair, so the gate rejects it
  CHECK_THROWS_AS(uniform_presentation(fixtures::ex45w()), NotInRestrictedClassError);
}

TEST_CASE("level graph: degrees and labeled edges") {
  DeltaGraph g = build_delta(fixtures::superu());
  REQUIRE(g.alpha.size() == 8);
  // index order 111,112,121,122,211,212,221,222
  CHECK(g.degree == std::vector<int>{0, 0, 2, 1, 1, 1, 1, 1});
  for (std::size_t v = 0; v < g.alpha.size(); ++v) {
    CHECK(g.out[v].size() ==
          static_cast<std::size_t>(1) << g.degree[v]);  // n^d for n=2
    std::set<int> targets;
    for (const auto& [to, label] : g.out[v]) {
      targets.insert(to);
      CHECK(static_cast<int>(label.size()) == g.degree[v]);
      CHECK(is_prefix(g.beta_tail[v], g.alpha[static_cast<std::size_t>(to)]));
    }
    CHECK(targets.size() == g.out[v].size());
  }
  // the refined diagonal pairs (2w, 2w) have beta tail w and degree 1
  CHECK(g.beta_tail[static_cast<std::size_t>(g.index_of(W("211")))] == W("11"));
  CHECK_THROWS(build_delta(fixtures::identity2()));
}

TEST_CASE("membership pair enumeration") {
  DeltaGraph g = build_delta(fixtures::superu());
  int a = g.index_of(W("111"));
  int ap = g.index_of(W("121"));
  CHECK_THROWS(enumerate_omega(g, a, a, 4));
  CHECK(enumerate_omega(g, a, ap, 0).empty());

  std::vector<OmegaPair> pairs = enumerate_omega(g, a, ap, 8);
  CHECK_FALSE(pairs.empty());
  for (const OmegaPair& p : pairs) {
    std::string why;
    CHECK_MESSAGE(verify_omega_pair(g, p, &why), why);
    CHECK_MESSAGE(verify_omega_product(g, p, &why), why);
  }
}

TEST_CASE("matrix units are covered for the involutive example") {
  DeltaGraph g = build_delta(fixtures::superu());
  int count = 0;
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      if (a == b) continue;
      MatrixUnitResult r = matrix_unit_in_range(g, a, b, 12);
      REQUIRE(r.answer == RangeAnswer::Yes);
      std::string why;
      CHECK_MESSAGE(verify_certificate(g, *r.certificate, &why), why);
      ++count;
    }
  CHECK(count == 56);
}

TEST_CASE("search certificates appear in the direct enumeration") {
  DeltaGraph g = build_delta(fixtures::superu());
  int a = g.index_of(W("111"));
  int ap = g.index_of(W("121"));
  MatrixUnitResult r = matrix_unit_in_range(g, a, ap, 6);
  REQUIRE(r.answer == RangeAnswer::Yes);
  std::vector<OmegaPair> all = enumerate_omega(g, a, ap, 6);
  for (const OmegaPair& cp : r.certificate->pairs) {
    bool found = false;
    for (const OmegaPair& ep : all)
      if (ep.x.vertices == cp.x.vertices && ep.y.vertices == cp.y.vertices) {
        found = true;
        CHECK(ep.total_label == cp.total_label);
      }
    CHECK(found);
  }
}

TEST_CASE("matrix unit membership via words") {
  MatrixUnitResult r = matrix_unit_in_range(fixtures::superu(), W("111"), W("121"), 12);
  CHECK(r.answer == RangeAnswer::Yes);
  CHECK_THROWS(matrix_unit_in_range(fixtures::superu(), W("111"), W("111"), 12));
}

TEST_CASE("gauge fix: identity when the expectation is nonzero") {
  auto [v, w] = gauge_fix(fixtures::superu());
  CHECK(v.pairs().size() == 1);
  CHECK(w == fixtures::superu());
}

TEST_CASE("gauge fix produces a zero-degree part (prefix branch)") {
  PolyUnitary u = fixtures::gauge_e0();
  REQUIRE(gauge_component(u.as_poly(), 0).is_zero());
  auto [v, w] = gauge_fix(u);
  CHECK_FALSE(gauge_component(w.as_poly(), 0).is_zero());
  // w is exactly v u phi(v^*)
  PolyMap expect =
      multiply(multiply(v.as_poly(), u.as_poly()), shift_phi(adjoint(v.as_poly())));
  CHECK(canonical_form(expect) == canonical_form(w.as_poly()));
}

TEST_CASE("gauge fix produces a zero-degree part (orthogonal branch)") {
  PolyUnitary u = fixtures::gauge_ortho();
  REQUIRE(gauge_component(u.as_poly(), 0).is_zero());
  auto [v, w] = gauge_fix(u);
  CHECK_FALSE(gauge_component(w.as_poly(), 0).is_zero());
}

TEST_CASE("degree-one word search") {
  UniformPresentation idp = uniform_presentation_at(fixtures::identity2(), 1);
  auto z = find_degree_one_word(idp, 1000);
  REQUIRE(z.has_value());
  CHECK(z->alpha.size() == 1);
  CHECK(z->beta.size() == 0);

  UniformPresentation sup = uniform_presentation(fixtures::superu());
  auto zs = find_degree_one_word(sup, 100000);
  REQUIRE(zs.has_value());
  CHECK(zs->alpha.size() == 3);
  CHECK(zs->beta.size() == 2);

  CHECK_FALSE(find_degree_one_word(sup, 0).has_value());
}

TEST_CASE("invertibility pipeline") {
  InvertibilityVerdict bad = decide_invertible(fixtures::ex33a());
  CHECK(bad.kind == Invertibility::NotInvertible);
  CHECK(bad.stage == "diagonal");
  CHECK(bad.cycle.has_value());

  InvertibilityVerdict good = decide_invertible(fixtures::superu());
  CHECK(good.kind == Invertibility::Invertible);
  CHECK(good.stage == "coverage");
  CHECK(good.certificates.size() == 56);
  CHECK_FALSE(good.gauge_applied);

  InvertibilityVerdict tpl = decide_invertible(fixtures::ex45w());
  CHECK(tpl.kind == Invertibility::Invertible);
  CHECK(tpl.stage == "template");
  CHECK(tpl.template_name == "three_cycle");

  InvertibilityVerdict ident = decide_invertible(fixtures::identity2());
  CHECK(ident.kind == Invertibility::Invertible);
}

TEST_CASE("negative verdicts are final under bigger budgets") {
  Budgets big;
  big.depth = 20;
  big.k_max = 80;
  InvertibilityVerdict v = decide_invertible(fixtures::ex33a(), big);
  CHECK(v.kind == Invertibility::NotInvertible);
  InvertibilityVerdict b = decide_invertible(fixtures::ex33b(), big);
  CHECK(b.kind == Invertibility::NotInvertible);
}

TEST_CASE("involution consistency on the level words") {
  // the inverse of an involution acts like the map itself
  PolyUnitary s = fixtures::superu();
  for (const Word& gamma : all_words(2, 3)) {
    PolyMap proj(2, {PolyTerm{gamma, gamma, 1}});
    CylinderUnion forward = diagonal_support(canonical_form(apply_lambda(s, proj)));
    CylinderUnion back = inverse_on_diagonal(s, CylinderUnion::normalize(2, {gamma}), 50);
    CHECK(forward == back);
  }
}
