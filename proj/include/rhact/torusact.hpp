// Torus actions on flag varieties: fixed components with weights and
// Bialynicki-Birula data, products, and the one-point blowup family Xbar.
#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rhact/grading.hpp"
#include "rhact/weyl.hpp"

namespace rhact {

// Ample linearization lambda = sum of fundamental weights over the marks,
// shifted so the minimal fixed-point weight is zero.
struct Linearization {
  std::set<int> marks;
  Long offset = 0;
};

struct FixedComponent {
  MarkedVariety ctype;         // canonical type; point if no marks survive
  std::vector<int> rep_word;   // reduced word of the minimal representative
  Long weight = 0;             // normalized so the sink sits at 0
  int dim = 0;
  int nu_plus = 0;             // rank of the negative part of the tangent action
  int nu_minus = 0;            // rank of the positive part
  Long hfixed = 0;             // number of T-fixed points on the component
};

struct ActionReport {
  MarkedVariety variety;
  Cochar sigma;
  Linearization lin;
  std::vector<FixedComponent> components;  // sorted by (weight, dim, type)
  Long bandwidth = 0;
  Long criticality = 0;
  bool equalized = false;
  bool isolated_sink = false;
  bool isolated_source = false;
  std::vector<std::string> warnings;
};

// Weight of the linearization at the fixed point wP: sigma(lambda - w lambda).
Long mu(const RootSystem& rs, const WeylElement& w, const std::set<int>& marks,
        const Cochar& sigma);

// Torus weights on the tangent space at the fixed point wP, sorted; the
// multiset has size dim G/P.
std::vector<Long> tangent_weights(const RootSystem& rs, const WeylElement& w,
                                  const std::set<int>& marks,
                                  const Cochar& sigma);

// Full fixed-locus report for the action of `sigma` on the variety
// (rs.diagram(), marks).  Non-short cocharacters produce a warning and an
// unequalized report, never an error.
ActionReport fixed_components(const RootSystem& rs, const std::set<int>& marks,
                              const Cochar& sigma,
                              const std::string& cache_dir = "");

// Combine reports of factor actions into the report of the product action.
ActionReport product_report(const std::vector<ActionReport>& parts);

// Families (variety, node) whose standard action has both endpoints
// isolated, scanned up to max_rank, with duplicates under diagram
// automorphisms removed.
struct IsolatedBothRow {
  MarkedVariety variety;
  int node = 0;
  int dim = 0;
  Long delta = 0;
};
std::vector<IsolatedBothRow> classify_isolated_both(int max_rank);

// The cocharacter of the transversal variety in the blowup construction:
// for a short pair (d, i), the transversal D_i = d minus node i carries the
// cocharacter supported on the former neighbors of i, and J collects the
// theta-images of those neighbors inside each component (old labels kept
// separately).  Rejects pairs without a short grading.
struct SigmaPlusData {
  Subdiagram sub;             // d minus node i, canonically labeled
  Cochar sigma;               // on sub.diagram
  std::set<int> j_new;        // marks of the transversal variety, new labels
  std::set<int> j_old;        // the same nodes in the labels of d
};
SigmaPlusData sigma_plus(const DynkinDiagram& d, int i);

// Fixed-component report of the variety Xbar fibered over D_i(J) with fiber
// the minimal degeneration curve; weight 0 holds the base section Y_0 and
// the remaining components come from the transversal action, placed by the
// ambient linearization.
struct XbarReport {
  DynkinDiagram diagram;      // the ambient diagram d
  int node = 0;               // i
  SigmaPlusData sp;
  MarkedVariety y0;           // base section type D_i(J)
  int dim_xbar = 0;
  std::vector<FixedComponent> components;  // includes Y_0 at weight 0
  Long bandwidth = 0;
  bool isolated_source = false;
};
XbarReport xbar_report(const DynkinDiagram& d, int i,
                       const std::string& cache_dir = "");

// Exceptional loci of the induced birational map and its inverse: empty
// when the map extends to an isomorphism, otherwise the inner fixed
// components at weights 1 and 2.
struct ExcLoci {
  MarkedVariety y0;
  int dim_y0 = 0;
  std::vector<MarkedVariety> exc_psi;
  std::vector<MarkedVariety> exc_psi_inv;
  bool is_isomorphism = false;
};
ExcLoci exc_loci(const DynkinDiagram& d, int i,
                 const std::string& cache_dir = "");

}  // namespace rhact
