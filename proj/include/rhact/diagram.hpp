// Dynkin diagrams: Cartan matrices, parsing, marked varieties, subdiagram
// extraction with canonical relabeling, and isomorphism tests.
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "rhact/check.hpp"

namespace rhact {

inline constexpr int kMaxRank = 12;

// One simple factor, e.g. A3 or E7.
struct FactorShape {
  char letter = 'A';
  int rank = 0;

  friend bool operator==(const FactorShape&, const FactorShape&) = default;
  friend auto operator<=>(const FactorShape&, const FactorShape&) = default;
  std::string str() const;
};

// True if (letter, rank) denotes a diagram we accept: A>=1, B>=2, C>=2,
// D>=3, E6..E8, F4, G2.
bool admissible_shape(char letter, int rank);

// A semisimple Dynkin diagram: an ordered product of simple factors.
// Nodes are numbered 1..rank() globally; each factor occupies a contiguous
// block carrying its standard (Bourbaki) labels.
class DynkinDiagram {
 public:
  DynkinDiagram() = default;
  static DynkinDiagram simple(char letter, int rank);
  static DynkinDiagram product(const std::vector<FactorShape>& factors);

  int rank() const { return rank_; }
  const std::vector<FactorShape>& factors() const { return factors_; }
  int factor_count() const { return static_cast<int>(factors_.size()); }

  int factor_of(int node) const;             // 0-based factor index
  int factor_offset(int factor) const;       // global node = offset + local
  int local_label(int node) const;           // Bourbaki label within factor
  int global_node(int factor, int local) const;

  // Cartan matrix entry C[i][j] = 2(a_i, a_j)/(a_j, a_j), nodes 1-based.
  int cartan(int i, int j) const;
  // Symmetrizing weights d_i with d_i*C[i][j] symmetric.
  int symmetrizer(int i) const;

  bool adjacent(int i, int j) const;
  std::vector<int> neighbors(int node) const;

  std::string str() const;  // "A3", "A1xB2", ...

  friend bool operator==(const DynkinDiagram& a, const DynkinDiagram& b) {
    return a.factors_ == b.factors_;
  }

 private:
  int rank_ = 0;
  std::vector<FactorShape> factors_;
  std::vector<int> offsets_;
  std::vector<std::vector<int>> cartan_;  // 0-based storage
  std::vector<int> sym_;
};

// A diagram with a set of marked nodes (global labels); empty marks = point.
struct MarkedVariety {
  DynkinDiagram diagram;
  std::set<int> marks;

  bool is_point() const { return marks.empty(); }
  std::string str() const;  // "A3(2)", "A1(1)xA2(1)", "pt"

  friend bool operator==(const MarkedVariety& a, const MarkedVariety& b) {
    return a.diagram == b.diagram && a.marks == b.marks;
  }
};

// Parse "A3", "E7(7)", "A1(1)xB2(1)", "D5(4,5)".  Marks optional per factor.
// Throws std::runtime_error with a position annotation on malformed input.
MarkedVariety parse_variety(const std::string& text);

// Induced subdiagram on a node subset, classified and canonically relabeled.
// new_to_old[k] is the old label of new node k+1; components are ordered by
// their minimal old label and each gets standard labels with the
// lexicographically minimal new_to_old among valid labelings.
struct Subdiagram {
  DynkinDiagram diagram;
  std::vector<int> new_to_old;
  std::map<int, int> old_to_new;
};
Subdiagram subdiagram(const DynkinDiagram& d, const std::set<int>& keep);

// Display normal form of a marked variety: factors without marks are dropped
// (they contribute a point) and the rest are sorted by (letter, rank, marks).
MarkedVariety canonical_type(const MarkedVariety& v);

// Concatenate two marked varieties into one product variety.
MarkedVariety join_varieties(const MarkedVariety& a, const MarkedVariety& b);

// Equality of marked varieties up to diagram automorphisms and factor order
// (A_k flip, D_k tip swap, D_4 triality, E_6 flip).
bool isomorphic_types(const MarkedVariety& a, const MarkedVariety& b);

}  // namespace rhact
