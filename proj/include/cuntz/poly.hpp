#ifndef CUNTZ_POLY_HPP
#define CUNTZ_POLY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "cuntz/clopen.hpp"
#include "cuntz/word.hpp"

namespace cuntz {

// One summand c * S_alpha S_beta^*.
struct PolyTerm {
  Word alpha;
  Word beta;
  long long coeff = 1;
  friend bool operator==(const PolyTerm&, const PolyTerm&) = default;
};

// A finite integer combination of words S_alpha S_beta^*. Terms are kept
// sorted by (alpha, beta) with like terms combined and zero terms dropped,
// so structural equality is well-defined (operator equality of the
// represented elements is decided by canonical_form).
class PolyMap {
 public:
  PolyMap(int n, std::vector<PolyTerm> terms);
  static PolyMap zero(int n) { return PolyMap(n, {}); }
  static PolyMap identity(int n) { return PolyMap(n, {PolyTerm{Word(), Word(), 1}}); }

  int alphabet() const { return n_; }
  const std::vector<PolyTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool operator==(const PolyMap&) const = default;

 private:
  int n_ = 2;
  std::vector<PolyTerm> terms_;
};

PolyMap add(const PolyMap& a, const PolyMap& b);

// Product under the relations S_i^* S_j = delta_ij: the cross term
// (a,b)*(m,v) contributes (a.(m-b), v) when b < m, (a, v.(b-m)) when m < b,
// (a, v) when b == m, and nothing when b and m are orthogonal.
PolyMap multiply(const PolyMap& a, const PolyMap& b);

PolyMap adjoint(const PolyMap& p);

// The canonical shift x -> sum_i S_i x S_i^*, termwise (a,b) -> (ia, ib).
PolyMap shift_phi(const PolyMap& p);

// Reduced normal form: whenever (g.j, d.j) occurs for every letter j with a
// common coefficient, the family merges to (g, d). Two PolyMaps represent
// the same operator iff their canonical forms are equal.
PolyMap canonical_form(const PolyMap& p);

// Terms with |alpha| - |beta| == m; m = 0 is the expectation onto the
// zero-degree part of the gauge grading.
PolyMap gauge_component(const PolyMap& p, int m);

// A unitary sum of words: both the alpha side and the beta side form a
// partition of unity and the pairing is a bijection. Construction validates;
// instances are immutable and always well-formed.
class PolyUnitary {
 public:
  static PolyUnitary check_unitary(const PolyMap& p);

  int alphabet() const { return n_; }
  const std::vector<std::pair<Word, Word>>& pairs() const { return pairs_; }
  int ell() const { return ell_; }              // max |alpha|
  int ell_prime() const { return ell_prime_; }  // max(|alpha|, |beta|)

  PolyMap as_poly() const;
  PolyUnitary adjoint_unitary() const;
  CylinderUnion left_code() const;   // the alpha words
  CylinderUnion right_code() const;  // the beta words

  bool operator==(const PolyUnitary&) const = default;

 private:
  PolyUnitary(int n, std::vector<std::pair<Word, Word>> pairs);
  int n_ = 2;
  std::vector<std::pair<Word, Word>> pairs_;
  int ell_ = 0;
  int ell_prime_ = 0;
};

// u_k = u phi(u) ... phi^{k-1}(u); u_0 is the identity.
PolyUnitary u_tower(const PolyUnitary& u, int k);

// The endomorphism lambda_u applied to p, extended linearly over terms:
// S_alpha S_beta^* maps to u_k S_alpha S_beta^* u_m^* (k = |alpha|,
// m = |beta|). Images of generator products are memoized per prefix.
PolyMap apply_lambda(const PolyUnitary& u, const PolyMap& p);

// Carrier of the composition lambda_u o lambda_w, i.e. lambda_u(w) * u.
PolyUnitary compose(const PolyUnitary& u, const PolyUnitary& w);

// Exact action of Ad(u) on a clopen set: each word is refined until a beta
// word prefixes it, then beta.mu rewrites to alpha.mu.
CylinderUnion ad_action(const PolyUnitary& u, const CylinderUnion& c);

// Action of Ad(phi^m(u)): depth-m prefixes are frozen (cylinders of depth
// <= m are fixed pointwise) and Ad(u) acts on the tails. Avoids building
// phi^m(u) explicitly.
CylinderUnion ad_shifted_action(const PolyUnitary& u, int m, const CylinderUnion& c);

// Reads a diagonal projection (all terms alpha == beta with coefficient 1)
// back as the clopen set it supports; throws InternalError otherwise.
CylinderUnion diagonal_support(const PolyMap& p);

}  // namespace cuntz

#endif
