// Weyl group machinery: group elements as integer matrices on root
// coordinates, coset enumeration W/W_J, and double-coset orbits.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rhact/rootsys.hpp"

namespace rhact {

// A Weyl group element together with its inverse, acting on root coordinates
// by left multiplication (w . a = m * a).
struct WeylElement {
  std::vector<std::vector<Long>> m, minv;

  static WeylElement identity(int rank);
  RootVec apply(const RootVec& v) const;
  RootVec apply_inverse(const RootVec& v) const;
  std::vector<Long> apply_scaled(const std::vector<Long>& v) const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.m == b.m;
  }
};

// r_i * w.
WeylElement left_mul_simple(const RootSystem& rs, int i, const WeylElement& w);
// Element of a reduced word, leftmost letter applied last:
// word = [g1, .., gk] gives r_gk * ... * r_g1.
WeylElement element_of_word(const RootSystem& rs, const std::vector<int>& word);

// Longest element w_0 together with a reduced word.
struct LongestElement {
  WeylElement w;
  std::vector<int> word;
};
LongestElement longest_element(const RootSystem& rs);

// The involution theta(j) defined by -w_0(a_j) = a_theta(j).
std::vector<int> theta_involution(const RootSystem& rs);

// Minimal-length coset representatives of W/W_J, breadth-first from the
// identity with ascending generator order, so the enumeration is
// deterministic.  edge(c, i) is the coset of r_i * (coset c).
class CosetTable {
 public:
  CosetTable(const RootSystem& rs, const std::set<int>& j_nodes,
             const std::string& cache_dir = "");

  int size() const { return static_cast<int>(level_.size()); }
  const std::set<int>& j_nodes() const { return j_nodes_; }
  int level(int c) const { return level_[c]; }
  int edge(int c, int i) const;  // i is 1-based
  // Reduced word of the minimal representative, leftmost letter applied last.
  std::vector<int> word(int c) const;
  WeylElement element(const RootSystem& rs, int c) const;

 private:
  void build(const RootSystem& rs);
  bool load_cache(const RootSystem& rs, const std::string& path);
  void store_cache(const RootSystem& rs, const std::string& path) const;

  std::set<int> j_nodes_;
  std::vector<int> level_, parent_, gen_;
  std::vector<std::vector<int>> edges_;
};

// Orbits of W_K acting on W/W_J by left multiplication (Kilmoyer-style
// double cosets K\W/W_J).  Each orbit reports its unique minimal-length
// coset and its size.
struct DoubleCosetOrbit {
  int min_coset = 0;
  Long size = 0;
  std::vector<int> cosets;
};
std::vector<DoubleCosetOrbit> double_coset_orbits(const CosetTable& table,
                                                  const std::set<int>& k_nodes);

}  // namespace rhact
