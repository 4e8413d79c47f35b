#ifndef CUNTZ_DYNAMICS_HPP
#define CUNTZ_DYNAMICS_HPP

#include <string>
#include <utility>
#include <vector>

#include "cuntz/poly.hpp"

namespace cuntz {

// An eventually periodic point sigma . tau tau tau ... of the shift space,
// kept canonical: tau is primitive and the preperiod is as short as possible
// (sigma neither ends with tau nor shares its trailing letter, after
// rotating the period into phase). Equality of canonical forms is equality
// of points.
class EpPoint {
 public:
  EpPoint(Word sigma, Word tau);

  const Word& preperiod() const { return sigma_; }
  const Word& period() const { return tau_; }

  int letter_at(std::size_t i) const;
  Word prefix(std::size_t len) const;
  // The point with its first `count` letters removed.
  EpPoint drop(std::size_t count) const;

  bool operator==(const EpPoint&) const = default;

 private:
  Word sigma_, tau_;
};

std::size_t common_prefix_length(const EpPoint& a, const EpPoint& b, std::size_t cap = 256);

// The homeomorphism induced by Ad(u) on points: the unique beta word
// prefixing x rewrites to its paired alpha. Under this orientation a pair
// alpha = beta.mu yields an attracting fixed point beta mu mu ... .
EpPoint ad_point_map(const PolyUnitary& u, const EpPoint& x);

enum class FixedKind { Attractor, Repeller };

struct FixedPointReport {
  CylinderUnion clopen_part;
  std::vector<std::pair<EpPoint, FixedKind>> isolated;
  FixedPointReport() : clopen_part(CylinderUnion::empty_set(2)) {}
};

// Fixed points of the point map of Ad(u): a clopen set (from diagonal
// pairs) plus finitely many isolated attractors/repellers (from pairs where
// one word extends the other).
FixedPointReport classify_ad_fixed(const PolyUnitary& u);

// Depth-d approximation of the fixed set of the point map of lambda_u
// (requires the diagonal restriction to be an automorphism): the union over
// level-d words w of [w] intersected with the support of lambda_u(P_w).
// Decreasing in d; the intersection over all d is the exact fixed set.
CylinderUnion fixed_set_approx(const PolyUnitary& u, int d);

// Number of level-k words whose image support meets the corner cylinder;
// the images of distinct level-k projections are orthogonal, so nonzero
// compressions are linearly independent and this is a dimension.
int corner_dimension(const PolyUnitary& u, const Word& gamma, int k);

struct AdCharReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Forward verification that Ad(u) acts by prefix substitution: for every
// pair (alpha, beta) and word delta up to the depth, Ad(u)(P_{beta.delta}) =
// P_{alpha.delta}; and images of deep standard projections stay standard.
// A violation indicates an engine bug, not a mathematical possibility.
AdCharReport verify_adchar(const PolyUnitary& u, int depth);

}  // namespace cuntz

#endif
