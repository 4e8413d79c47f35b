#ifndef CUNTZ_INVERTIBILITY_HPP
#define CUNTZ_INVERTIBILITY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cuntz/gamma.hpp"
#include "cuntz/poly.hpp"

namespace cuntz {

// Presentation of a unitary with all alpha words refined to a common length
// k (then the alpha words exhaust all words of length k). Only defined for
// the restricted class |alpha| - |beta| in {0, +-1}; the differences are
// invariant under refinement and merging, so the gate is checked on the
// canonical form.
struct UniformPresentation {
  int n = 2;
  int k = 0;
  std::vector<std::pair<Word, Word>> pairs;  // sorted by alpha; alphas = all length-k words
};

UniformPresentation uniform_presentation(const PolyUnitary& u);

// Same, refined to a caller-chosen level (>= the canonical alpha length).
UniformPresentation uniform_presentation_at(const PolyUnitary& u, int k);

// The level-k word graph: one vertex per length-k word alpha, which emits
// n^d edges (d = k - |beta_tail|, its degree) to every word extending its
// beta tail. The edge to beta_tail.w carries label w, so out-edges are in
// bijection with all words of length d and the target is determined by the
// label. Degree-0 vertices have a single unlabeled edge.
struct DeltaGraph {
  int n = 2;
  int k = 0;
  std::vector<Word> alpha;      // lex order; index = base-n rank
  std::vector<Word> beta;
  std::vector<Word> beta_tail;  // beta minus its first letter
  std::vector<int> degree;      // k - |beta_tail|, in {0, 1, 2}
  std::vector<std::vector<std::pair<int, Word>>> out;  // (target, label)

  int index_of(const Word& w) const;
};

DeltaGraph build_delta(const PolyUnitary& u);

// A directed path, stored as its vertex sequence (>= 1 vertex; edges are
// the consecutive steps, each determined by the target's trailing letters).
struct DeltaPath {
  std::vector<int> vertices;
  std::size_t edge_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

Word path_label(const DeltaGraph& g, const DeltaPath& p);
int path_degree(const DeltaGraph& g, const DeltaPath& p);

// A pair of paths witnessing that the compressed matrix unit
// S_alpha P_gamma S_alpha'^* lies in the multiplicative family generated by
// the S_alpha S_beta_tail^*: same end vertex, distinct start vertices, equal
// degrees, balanced final edges. gamma is the total label.
struct OmegaPair {
  DeltaPath x;
  DeltaPath y;
  Word total_label;
};

// All pairs with the given starts and both edge counts <= depth.
// Exhaustive; intended for small depths (tests and certificates).
std::vector<OmegaPair> enumerate_omega(const DeltaGraph& g, int from, int from_prime, int depth);

// Literal re-check of the three membership conditions plus the total label,
// independent of how a pair was found.
bool verify_omega_pair(const DeltaGraph& g, const OmegaPair& p, std::string* why = nullptr);

// Multiplies out the generator chains of both paths and checks the product
// equals S_alpha P_gamma S_alpha'^* exactly.
bool verify_omega_product(const DeltaGraph& g, const OmegaPair& p, std::string* why = nullptr);

struct OmegaCertificate {
  int from = 0;        // start vertex of the x paths
  int from_prime = 0;  // start vertex of the y paths
  std::vector<OmegaPair> pairs;  // total labels form a partition of unity
};

bool verify_certificate(const DeltaGraph& g, const OmegaCertificate& cert,
                        std::string* why = nullptr);

enum class RangeAnswer { Yes, Unknown };

struct MatrixUnitResult {
  RangeAnswer answer = RangeAnswer::Unknown;
  std::optional<OmegaCertificate> certificate;
};

// Decides whether S_alpha S_alpha'^* lies in the range: searches achieved
// total labels shortest-first via the product label automaton of the two
// start vertices, greedily keeping mutually orthogonal labels until they
// partition the space. Unknown only on budget exhaustion.
MatrixUnitResult matrix_unit_in_range(const DeltaGraph& g, int from, int from_prime, int depth);
MatrixUnitResult matrix_unit_in_range(const PolyUnitary& u, const Word& alpha,
                                      const Word& alpha_prime, int depth);

// Inner gauge correction: a unitary v with E(v u phi(v^*)) != 0, verified
// symbolically; v is the identity when E(u) != 0 already. Returns (v, w)
// with w = v u phi(v^*).
std::pair<PolyUnitary, PolyUnitary> gauge_fix(const PolyUnitary& u);

// Bounded breadth-first search over single-term products of the level-k
// generators S_alpha S_beta_tail^* and their adjoints for a word of degree
// one and total letter count 2k-1 (so |mu| = k, |nu| = k-1).
std::optional<PolyTerm> find_degree_one_word(const UniformPresentation& up, long long budget);

struct Budgets {
  int k_max = 50;
  int depth = 12;
  long long bfs_cap = 1000000;
};

enum class Invertibility { Invertible, NotInvertible, Inconclusive };

struct InvertibilityVerdict {
  Invertibility kind = Invertibility::Inconclusive;
  std::string stage;  // deciding stage, or the stage that ran out of road

  // Diagonal-gate witness when NotInvertible.
  std::optional<GammaCycle> cycle;
  std::vector<Word> witness_vertex;

  // Evidence when Invertible.
  bool gauge_applied = false;
  std::optional<PolyUnitary> gauge_v;
  std::optional<PolyUnitary> working;  // the gauge-fixed unitary the search ran on
  std::optional<UniformPresentation> presentation;
  std::optional<PolyTerm> degree_one;
  std::map<std::pair<Word, Word>, OmegaCertificate> certificates;
  std::string template_name;  // set when a template shape settled it
};

// Pipeline: diagonal gate (a cycle is final), gauge fix when the
// expectation vanishes, full matrix-unit coverage for the restricted class,
// and the two recognized always-invertible template shapes as a fallback.
InvertibilityVerdict decide_invertible(const PolyUnitary& u, const Budgets& budgets = {});

}  // namespace cuntz

#endif
