// Exact Pluecker-coordinate computations on the Grassmannian of n-planes in
// 2n-space: graph planes, torus-graded pieces, orbit limits, and the matrix
// inversion realized by the flow between the extremal fixed points.
// All arithmetic is exact rational; no floating point anywhere.
#pragma once

#include <map>
#include <optional>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rhact/check.hpp"

namespace rhact {

using Rat = boost::multiprecision::cpp_rational;
using RatMatrix = std::vector<std::vector<Rat>>;

RatMatrix identity_matrix(int n);
RatMatrix matmul(const RatMatrix& a, const RatMatrix& b);
Rat det(RatMatrix a);                       // fraction-free on a copy
int matrix_rank(RatMatrix a);
RatMatrix inverse(RatMatrix a);             // throws on singular input
bool is_scalar_multiple(const RatMatrix& a, const RatMatrix& b);

// Subsets of {1..2n} of size n in colexicographic order.
class SubsetIndexer {
 public:
  explicit SubsetIndexer(int n);
  int n() const { return n_; }
  int count() const { return count_; }
  int index_of(const std::vector<int>& subset) const;  // sorted subset
  const std::vector<int>& subset_at(int index) const;

 private:
  int n_, count_;
  std::vector<std::vector<int>> subsets_;
};

// Number of elements of the subset in the second block {n+1..2n}.
int subset_weight(const std::vector<int>& subset, int n);

struct PlueckerVector {
  int n = 0;
  std::vector<Rat> c;  // colex-indexed coordinates

  bool is_zero() const;
};

// Pluecker vector of the graph plane rows(I_n | A^T)... precisely: the span
// of the columns of [I_n; A], so coordinate S equals the n x n minor of that
// matrix on rows S.
PlueckerVector plucker_of_graph(const RatMatrix& a);

// Check the quadratic Grassmann relations; exhaustive for n <= 4, sampled
// (with `samples` draws) otherwise.
bool plucker_relations_hold(const PlueckerVector& p, std::mt19937_64& rng,
                            int samples = 500);

// Decomposition by subset weight; reassembly is exact.
struct GradedSplit {
  int n = 0;
  std::map<int, std::vector<Rat>> pieces;  // weight -> full-length vector
};
GradedSplit graded_split(const PlueckerVector& p);
PlueckerVector reassemble(const GradedSplit& g);

// Limit of the torus orbit at t -> 0 (direction -1) or t -> infinity
// (direction +1): the extremal nonzero graded piece, plus the neighboring
// piece that controls the first-order behavior.
struct OrbitLimit {
  int weight = 0;
  std::vector<Rat> piece;
  std::optional<int> next_weight;
  std::vector<Rat> next_piece;
};
OrbitLimit orbit_limit(const PlueckerVector& p, int direction);

// Read a linear map off a graded piece: at the sink end (-1) the weight-1
// piece encodes a map V_- -> V_+, at the source end (+1) the weight-(n-1)
// piece encodes a map V_+ -> V_-.  Throws if the piece vanishes.
RatMatrix identify_hom(const GradedSplit& g, int end);

// The map induced between the extremal tangent spaces by the orbit closure
// of the graph of A: satisfies b * a = c * I exactly with c = det a.
struct InversionResult {
  RatMatrix b;
  Rat c;
};
InversionResult inversion_map(const RatMatrix& a);

// Compatibility of a graph plane with the split symplectic ('s') or split
// orthogonal ('o') form on V_- + V_+.
struct FormCheckResult {
  bool isotropic = false;       // graph of a is isotropic for the form
  bool shape_matches = false;   // a symmetric (symplectic) / skew (orthogonal)
  bool closure_ok = false;      // inversion preserves the shape when defined
  bool structurally_singular = false;  // skew of odd size
};
FormCheckResult form_checks(const RatMatrix& a, char form);

// Whether two maximal isotropic subspaces (columns of 2n x n matrices,
// isotropic for the symmetric form q) lie in the same spinor family:
// dim(U cap U') == n (mod 2).
bool family_parity(const RatMatrix& u, const RatMatrix& uprime,
                   const RatMatrix& q);

// The criticality-two identification on the quadric z_- z_+ = q(u): the
// plane through the two poles and a tangent direction v at the sink meets
// the quadric in a conic tangent to v at both poles, so the induced map on
// tangent directions is the identity.  Verifies the conic geometry exactly
// and returns the image direction.
std::vector<Rat> quadric_psi(const RatMatrix& q, const std::vector<Rat>& v);

// Algebraic degree data of the orbit map of p: the weight spread, the gap
// between the two orbit limits, and the gcd of the weight gaps (the order
// of the stabilizer of the parametrization).
struct AmFmResult {
  int degree = 0;
  int delta_mu = 0;
  bool equal = false;
  int weight_gcd = 0;
};
AmFmResult am_vs_fm(const PlueckerVector& p);

}  // namespace rhact
