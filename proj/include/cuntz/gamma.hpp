#ifndef CUNTZ_GAMMA_HPP
#define CUNTZ_GAMMA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cuntz/poly.hpp"

namespace cuntz {

// The finite labeled directed graph attached to a unitary sum of words.
// Vertices are subsets of the alpha code (the empty subset is the unique
// sink); every vertex emits at most n edges with pairwise distinct labels,
// and every singleton vertex emits exactly one edge, labeled by the first
// letter of its paired beta word. Vertex ids: singletons in word order,
// then the sink, then composite vertices in creation order — only vertices
// reachable from the singletons are materialized.
struct GammaGraph {
  int n = 2;
  std::vector<std::vector<Word>> vertices;  // sorted member lists; {} is the sink
  int sink = 0;
  std::vector<std::map<int, int>> edges;  // per vertex: label -> target id

  std::size_t edge_count() const {
    std::size_t c = 0;
    for (const auto& e : edges) c += e.size();
    return c;
  }
};

GammaGraph build_gamma(const PolyUnitary& u);

// A closed directed path: edge i runs vertices[i] --labels[i]--> the next
// vertex (cyclically).
struct GammaCycle {
  std::vector<int> vertices;
  std::vector<int> labels;
};

// Shortest closed directed path, if any (self-loops count). Deterministic:
// ties broken by earliest start vertex id, then by label order.
std::optional<GammaCycle> find_cycle(const GammaGraph& g);

struct DiagonalVerdict {
  bool automorphism = false;
  GammaGraph graph;
  std::optional<GammaCycle> cycle;
  // Member words of the cycle's first vertex; the projection onto their
  // union is a concrete witness that never stabilizes.
  std::vector<Word> witness_vertex() const;
};

// The restriction of lambda_u to the diagonal is an automorphism iff the
// graph has no closed directed path.
DiagonalVerdict decide_diagonal(const PolyUnitary& u);

std::string to_dot(const GammaGraph& g);

}  // namespace cuntz

#endif
