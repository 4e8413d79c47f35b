#include "cuntz/stabilize.hpp"

#include "cuntz/errors.hpp"
#include "cuntz/gamma.hpp"

namespace cuntz {

namespace {
// Safety valve for non-stabilizing unions whose word count keeps growing;
// hitting it is reported as an exhausted budget.
constexpr std::size_t kMaxUnionWords = 100000;
}  // namespace

StabilizationResult stabilize_union(const PolyUnitary& u, const CylinderUnion& c, int k_max) {
  if (k_max < 1) throw CuntzError("stabilization budget must be at least 1");
  const PolyUnitary ustar = u.adjoint_unitary();
  StabilizationResult r;
  CylinderUnion cur = c;
  for (int m = 0; m <= k_max; ++m) {
    r.length_trace.push_back(static_cast<int>(cur.max_word_length()));
    if (cur.max_word_length() <= static_cast<std::size_t>(m)) {
      r.stabilized = true;
      r.k = m;
      r.set = cur;
      return r;
    }
    if (m == k_max || cur.words().size() > kMaxUnionWords) break;
    cur = ad_shifted_action(ustar, m, cur);
  }
  r.stabilized = false;
  r.k = k_max;
  r.set = cur;
  return r;
}

StabilizationResult stabilize_projection(const PolyUnitary& u, const Word& gamma, int k_max) {
  return stabilize_union(u, CylinderUnion::normalize(u.alphabet(), {gamma}), k_max);
}

LevelCheck check_all_level(const PolyUnitary& u, int k_max) {
  LevelCheck out;
  out.all_stabilized = true;
  for (const Word& gamma : all_words(u.alphabet(), u.ell_prime())) {
    StabilizationResult r = stabilize_projection(u, gamma, k_max);
    if (r.stabilized) {
      out.max_k_used = std::max(out.max_k_used, r.k);
    } else {
      out.all_stabilized = false;
      out.failures.push_back(gamma);
    }
  }
  return out;
}

CylinderUnion inverse_on_diagonal(const PolyUnitary& u, const CylinderUnion& c, int k_max) {
  DiagonalVerdict dv = decide_diagonal(u);
  if (!dv.automorphism)
    throw NotDiagonalAutomorphismError("the diagonal restriction is not an automorphism");
  CylinderUnion acc = CylinderUnion::empty_set(u.alphabet());
  for (const Word& w : c.words()) {
    StabilizationResult r = stabilize_projection(u, w, k_max);
    if (!r.stabilized)
      throw BudgetExceededError("stabilization budget exhausted for a generator word");
    acc = join(acc, r.set);
  }
  // The limit must map back onto c under lambda_u.
  std::vector<PolyTerm> terms;
  for (const Word& w : acc.words()) terms.push_back(PolyTerm{w, w, 1});
  CylinderUnion image = diagonal_support(canonical_form(apply_lambda(u, PolyMap(u.alphabet(), terms))));
  if (!(image == c)) throw InternalError("diagonal inverse round-trip failed");
  return acc;
}

}  // namespace cuntz
