// Root systems generated from a Dynkin diagram by reflection closure,
// with exact integer arithmetic throughout.
#pragma once

#include <set>
#include <vector>

#include "rhact/diagram.hpp"

namespace rhact {

// A root in simple-root coordinates (index 0 = node 1).
using RootVec = std::vector<int>;

class RootSystem {
 public:
  explicit RootSystem(DynkinDiagram d);

  const DynkinDiagram& diagram() const { return diagram_; }
  int rank() const { return diagram_.rank(); }

  // Positive roots sorted by (height, coordinates).
  const std::vector<RootVec>& positive_roots() const { return positives_; }
  bool is_positive_root(const RootVec& v) const;
  int height(const RootVec& v) const;

  // Simple reflection acting on root coordinates; only coordinate i changes.
  RootVec reflect(int i, const RootVec& v) const;
  // Same action on weight coordinates m (m_k = <v, a_k^vee>).
  std::vector<Long> reflect_weight(int i, const std::vector<Long>& m) const;

  // Root coordinates -> weight coordinates, m = C^T a.
  std::vector<Long> to_weight_coords(const RootVec& v) const;

  // Fundamental weights have rational root coordinates with common
  // denominator weight_scale(); fundamental_weight_scaled(j) returns
  // weight_scale() * lambda_j as integers.
  Long weight_scale() const { return fscale_; }
  const std::vector<Long>& fundamental_weight_scaled(int j) const;

  // dim G/P for the parabolic marked at `marks`: the number of positive
  // roots whose support meets the marks.
  int variety_dimension(const std::set<int>& marks) const;

  // True if the support of v lies inside `nodes`.
  static bool supported_in(const RootVec& v, const std::set<int>& nodes);

  Long weyl_order() const;
  static Long weyl_order_of(const DynkinDiagram& d);

 private:
  DynkinDiagram diagram_;
  std::vector<RootVec> positives_;
  std::set<RootVec> positive_set_;
  Long fscale_ = 1;
  std::vector<std::vector<Long>> fweights_;  // [j-1] = scaled lambda_j
};

}  // namespace rhact
