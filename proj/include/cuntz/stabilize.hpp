#ifndef CUNTZ_STABILIZE_HPP
#define CUNTZ_STABILIZE_HPP

#include <vector>

#include "cuntz/poly.hpp"

namespace cuntz {

// Outcome of iterating C_{m+1} = Ad(phi^m(u^*))(C_m) from C_0 = P_gamma,
// i.e. C_m = Ad(u_m^*)(P_gamma) exactly. Stabilization is detected by a
// certificate, not a heuristic: once every word of C_m has length <= m, all
// later conjugations fix C_m pointwise, so the sequence is constant from
// there on. Non-stabilization is only ever budget-bounded.
struct StabilizationResult {
  bool stabilized = false;
  int k = 0;                    // certificate step, or the budget when exceeded
  CylinderUnion set;            // the limit, or the last computed set
  std::vector<int> length_trace;  // max word length per step, starting at C_0

  StabilizationResult() : set(CylinderUnion::empty_set(2)) {}
};

StabilizationResult stabilize_union(const PolyUnitary& u, const CylinderUnion& c, int k_max);
StabilizationResult stabilize_projection(const PolyUnitary& u, const Word& gamma, int k_max);

// Sweeps every word of length ell_prime(u); by the finite reduction this
// decides whether the whole diagonal stabilizes.
struct LevelCheck {
  bool all_stabilized = false;
  int max_k_used = 0;
  std::vector<Word> failures;
};

LevelCheck check_all_level(const PolyUnitary& u, int k_max);

// Preimage of a clopen set under lambda_u restricted to the diagonal,
// assembled from the stabilized limits of the generator words. Requires the
// diagonal restriction to be an automorphism (re-verified here); the result
// is checked to map back onto c.
CylinderUnion inverse_on_diagonal(const PolyUnitary& u, const CylinderUnion& c, int k_max);

}  // namespace cuntz

#endif
