// Gradings of a simple Lie algebra induced by a cocharacter, and the
// classification of the short (|weight| <= 1) ones.
#pragma once

#include <map>
#include <vector>

#include "rhact/rootsys.hpp"

namespace rhact {

// A cocharacter given by its values on the simple roots; size = rank.
using Cochar = std::vector<Long>;

Cochar cochar_single(int rank, int node);
Long eval_cochar(const Cochar& sigma, const RootVec& v);

// Dimension of each graded piece g_w (w = 0 includes the Cartan).
std::map<Long, Long> grade(const RootSystem& rs, const Cochar& sigma);

// True if all roots have weight in {-1, 0, 1}.
bool is_short_grading(const RootSystem& rs, const Cochar& sigma);

// All (diagram, node) pairs with a short grading, scanning A_1.., B_2..,
// C_2.., D_3.. up to max_rank plus E6, E7, E8, F4, G2.  The transversal is
// the subdiagram on the remaining nodes.
struct ShortGradingRow {
  char letter;
  int rank;
  int node;
  DynkinDiagram transversal;
};
std::vector<ShortGradingRow> classify_short_gradings(int max_rank);

// True if every positive root moving the marked parabolic has
// |sigma(root)| <= 1: the torus action on the marked variety is equalized.
bool equalized_action(const RootSystem& rs, const std::set<int>& marks,
                      const Cochar& sigma);

}  // namespace rhact
