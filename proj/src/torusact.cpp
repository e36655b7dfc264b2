// Fixed-point analysis of cocharacter actions on flag varieties, product
// actions, and the blowup family with its exceptional loci.
#include "rhact/torusact.hpp"

#include <algorithm>
#include <map>

namespace rhact {

Long mu(const RootSystem& rs, const WeylElement& w, const std::set<int>& marks,
        const Cochar& sigma) {
  int n = rs.rank();
  std::vector<Long> lambda(n, 0);
  for (int j : marks) {
    const auto& fw = rs.fundamental_weight_scaled(j);
    for (int k = 0; k < n; ++k) lambda[k] += fw[k];
  }
  auto moved = w.apply_scaled(lambda);
  Long num = 0;
  for (int k = 0; k < n; ++k) num += sigma[k] * (lambda[k] - moved[k]);
  check(num % rs.weight_scale() == 0, "weight is not integral");
  return num / rs.weight_scale();
}

std::vector<Long> tangent_weights(const RootSystem& rs, const WeylElement& w,
                                  const std::set<int>& marks,
                                  const Cochar& sigma) {
  std::vector<Long> out;
  for (const auto& v : rs.positive_roots()) {
    bool moving = false;
    for (int m : marks)
      if (v[m - 1] != 0) {
        moving = true;
        break;
      }
    if (!moving) continue;
    // Tangent directions are w(alpha) for alpha in the negative moving part.
    RootVec img = w.apply(v);
    out.push_back(-eval_cochar(sigma, img));
  }
  std::sort(out.begin(), out.end());
  check(static_cast<int>(out.size()) == rs.variety_dimension(marks),
        "tangent weight count != variety dimension");
  return out;
}

namespace {

void sort_components(std::vector<FixedComponent>* comps) {
  std::sort(comps->begin(), comps->end(),
            [](const FixedComponent& a, const FixedComponent& b) {
              if (a.weight != b.weight) return a.weight < b.weight;
              if (a.dim != b.dim) return a.dim < b.dim;
              return a.ctype.str() < b.ctype.str();
            });
}

void finalize_report(ActionReport* rep) {
  sort_components(&rep->components);
  check(!rep->components.empty(), "report without components");
  std::set<Long> weights;
  for (const auto& c : rep->components) weights.insert(c.weight);
  rep->bandwidth = *weights.rbegin();
  check(*weights.begin() == 0, "weights are not normalized to start at 0");
  rep->criticality = static_cast<Long>(weights.size()) - 1;
  int at_sink = 0, at_source = 0;
  for (const auto& c : rep->components) {
    if (c.weight == 0) ++at_sink;
    if (c.weight == rep->bandwidth) ++at_source;
  }
  rep->isolated_sink = at_sink == 1 && rep->components.front().dim == 0;
  rep->isolated_source = at_source == 1 && rep->components.back().dim == 0;
}

}  // namespace

ActionReport fixed_components(const RootSystem& rs, const std::set<int>& marks,
                              const Cochar& sigma,
                              const std::string& cache_dir) {
  check(!marks.empty(), "variety needs at least one marked node");
  check(static_cast<int>(sigma.size()) == rs.rank(), "cocharacter rank mismatch");
  ActionReport rep;
  rep.variety = MarkedVariety{rs.diagram(), marks};
  rep.sigma = sigma;
  rep.lin.marks = marks;

  std::set<int> j_nodes, k_nodes;
  for (int k = 1; k <= rs.rank(); ++k) {
    if (!marks.count(k)) j_nodes.insert(k);
    if (sigma[k - 1] == 0) k_nodes.insert(k);
  }
  CosetTable table(rs, j_nodes, cache_dir);
  auto orbits = double_coset_orbits(table, k_nodes);

  Subdiagram sub = subdiagram(rs.diagram(), k_nodes);
  int total_dim = rs.variety_dimension(marks);
  Long total_fixed = 0;
  for (const auto& orb : orbits) {
    FixedComponent fc;
    fc.rep_word = table.word(orb.min_coset);
    WeylElement w = table.element(rs, orb.min_coset);
    fc.weight = mu(rs, w, marks, sigma);

    auto tw = tangent_weights(rs, w, marks, sigma);
    for (Long t : tw) {
      if (t == 0) ++fc.dim;
      else if (t < 0) ++fc.nu_plus;
      else ++fc.nu_minus;
    }
    check(fc.dim + fc.nu_plus + fc.nu_minus == total_dim,
          "tangent ranks do not add up to the dimension");

    // Marked nodes of the component: zero-weight simple roots whose
    // w-preimage moves the parabolic.
    std::set<int> marked_old;
    for (int k : k_nodes) {
      RootVec e(rs.rank(), 0);
      e[k - 1] = 1;
      if (!RootSystem::supported_in(w.apply_inverse(e), j_nodes))
        marked_old.insert(k);
    }
    MarkedVariety raw_type;
    raw_type.diagram = sub.diagram;
    for (int k : marked_old) raw_type.marks.insert(sub.old_to_new.at(k));
    fc.ctype = canonical_type(raw_type);

    // The component dimension must match its flag-variety dimension.
    int type_dim = 0;
    for (const auto& v : rs.positive_roots()) {
      if (!RootSystem::supported_in(v, k_nodes)) continue;
      for (int m : marked_old)
        if (v[m - 1] != 0) {
          ++type_dim;
          break;
        }
    }
    check(type_dim == fc.dim, "component type dimension mismatch");

    fc.hfixed = orb.size;
    total_fixed += orb.size;
    rep.components.push_back(std::move(fc));
  }
  check(total_fixed == static_cast<Long>(table.size()),
        "fixed-point counts do not sum to |W/W_J|");

  Long min_w = rep.components.front().weight;
  for (const auto& c : rep.components) min_w = std::min(min_w, c.weight);
  rep.lin.offset = -min_w;
  for (auto& c : rep.components) c.weight += rep.lin.offset;

  rep.equalized = equalized_action(rs, marks, sigma);
  if (!is_short_grading(rs, sigma))
    rep.warnings.push_back(
        "cocharacter does not induce a short grading; the action need not "
        "be equalized");
  finalize_report(&rep);
  return rep;
}

ActionReport product_report(const std::vector<ActionReport>& parts) {
  check(!parts.empty(), "empty product");
  ActionReport acc = parts[0];
  for (size_t p = 1; p < parts.size(); ++p) {
    const ActionReport& b = parts[p];
    ActionReport out;
    int shift = acc.variety.diagram.rank();
    out.variety = join_varieties(acc.variety, b.variety);
    out.sigma = acc.sigma;
    out.sigma.insert(out.sigma.end(), b.sigma.begin(), b.sigma.end());
    out.lin.marks = acc.lin.marks;
    for (int m : b.lin.marks) out.lin.marks.insert(m + shift);
    out.lin.offset = acc.lin.offset + b.lin.offset;
    for (const auto& ca : acc.components)
      for (const auto& cb : b.components) {
        FixedComponent fc;
        fc.ctype = canonical_type(join_varieties(ca.ctype, cb.ctype));
        fc.rep_word = ca.rep_word;
        for (int g : cb.rep_word) fc.rep_word.push_back(g + shift);
        fc.weight = ca.weight + cb.weight;
        fc.dim = ca.dim + cb.dim;
        fc.nu_plus = ca.nu_plus + cb.nu_plus;
        fc.nu_minus = ca.nu_minus + cb.nu_minus;
        fc.hfixed = ca.hfixed * cb.hfixed;
        out.components.push_back(std::move(fc));
      }
    out.equalized = acc.equalized && b.equalized;
    out.warnings = acc.warnings;
    out.warnings.insert(out.warnings.end(), b.warnings.begin(),
                        b.warnings.end());
    finalize_report(&out);
    acc = std::move(out);
  }
  return acc;
}

std::vector<IsolatedBothRow> classify_isolated_both(int max_rank) {
  std::vector<IsolatedBothRow> rows;
  for (const auto& sg : classify_short_gradings(max_rank)) {
    // Remove duplicates under diagram automorphisms: D3 duplicates A3, the
    // D4 triality copies of the quadric, and the mirror spinor family.
    if (sg.letter == 'D' && sg.rank == 3) continue;
    if (sg.letter == 'D' && sg.rank == 4 && sg.node >= 3) continue;
    if (sg.letter == 'D' && sg.node == sg.rank - 1 && sg.rank % 2 == 0)
      continue;
    DynkinDiagram d = DynkinDiagram::simple(sg.letter, sg.rank);
    RootSystem rs(d);
    auto rep = fixed_components(rs, {sg.node}, cochar_single(sg.rank, sg.node));
    if (!(rep.equalized && rep.isolated_sink && rep.isolated_source)) continue;
    IsolatedBothRow row;
    row.variety = rep.variety;
    row.node = sg.node;
    row.dim = rs.variety_dimension({sg.node});
    row.delta = rep.bandwidth;
    rows.push_back(std::move(row));
  }
  return rows;
}

SigmaPlusData sigma_plus(const DynkinDiagram& d, int i) {
  check(d.factor_count() == 1, "blowup construction needs a simple diagram");
  if (i < 1 || i > d.rank()) input_error("node out of range");
  RootSystem rs(d);
  if (!is_short_grading(rs, cochar_single(d.rank(), i)))
    input_error("node " + std::to_string(i) + " of " + d.str() +
                " does not carry a short grading");

  SigmaPlusData sp;
  std::set<int> rest;
  for (int k = 1; k <= d.rank(); ++k)
    if (k != i) rest.insert(k);
  sp.sub = subdiagram(d, rest);
  sp.sigma.assign(sp.sub.diagram.rank(), 0);

  // One former neighbor of i per component; J collects their theta images.
  std::map<int, int> comp_neighbor;  // factor -> new label of the neighbor
  for (int u : d.neighbors(i)) {
    int nu = sp.sub.old_to_new.at(u);
    sp.sigma[nu - 1] = 1;
    int f = sp.sub.diagram.factor_of(nu);
    check(!comp_neighbor.count(f), "two neighbors in one component");
    comp_neighbor[f] = nu;
  }
  check(static_cast<int>(comp_neighbor.size()) == sp.sub.diagram.factor_count(),
        "a component of the transversal does not touch the node");

  for (auto [f, nu] : comp_neighbor) {
    FactorShape shape = sp.sub.diagram.factors()[f];
    RootSystem frs(DynkinDiagram::simple(shape.letter, shape.rank));
    auto theta = theta_involution(frs);
    int jnew = sp.sub.diagram.global_node(f, theta[sp.sub.diagram.local_label(nu)]);
    sp.j_new.insert(jnew);
    sp.j_old.insert(sp.sub.new_to_old[jnew - 1]);
  }
  return sp;
}

XbarReport xbar_report(const DynkinDiagram& d, int i,
                       const std::string& cache_dir) {
  XbarReport xr;
  xr.diagram = d;
  xr.node = i;
  xr.sp = sigma_plus(d, i);

  RootSystem rsub(xr.sp.sub.diagram);
  ActionReport fib = fixed_components(rsub, xr.sp.j_new, xr.sp.sigma, cache_dir);
  check(fib.lin.offset == 0, "fiber weights were not already normalized");

  RootSystem rs(d);
  std::set<int> marks_amb = xr.sp.j_old;
  marks_amb.insert(i);
  Cochar sigma_amb = cochar_single(d.rank(), i);

  MarkedVariety y0_raw{xr.sp.sub.diagram, xr.sp.j_new};
  xr.y0 = canonical_type(y0_raw);
  int dim_y0 = rsub.variety_dimension(xr.sp.j_new);
  xr.dim_xbar = dim_y0 + 1;

  FixedComponent y0c;
  y0c.ctype = xr.y0;
  y0c.weight = 0;
  y0c.dim = dim_y0;
  y0c.nu_plus = 1;
  y0c.nu_minus = 0;
  y0c.hfixed = 0;
  for (const auto& c : fib.components) y0c.hfixed += c.hfixed;
  xr.components.push_back(y0c);

  for (const auto& c : fib.components) {
    // Place the fiber component by the ambient linearization at r_i w'.
    std::vector<int> word_old;
    for (int g : c.rep_word) word_old.push_back(xr.sp.sub.new_to_old[g - 1]);
    WeylElement w = element_of_word(rs, word_old);
    w = left_mul_simple(rs, i, w);
    Long weight = mu(rs, w, marks_amb, sigma_amb);
    check(weight == 1 + c.weight,
          "ambient weight disagrees with the transversal placement");

    FixedComponent fc;
    fc.ctype = c.ctype;
    fc.rep_word = word_old;
    fc.rep_word.push_back(i);
    fc.weight = weight;
    fc.dim = c.dim;
    fc.nu_plus = c.nu_plus;
    fc.nu_minus = c.nu_minus + 1;
    fc.hfixed = c.hfixed;
    check(fc.dim + fc.nu_plus + fc.nu_minus == xr.dim_xbar,
          "blowup tangent ranks do not add up");
    xr.components.push_back(std::move(fc));
  }
  sort_components(&xr.components);
  xr.bandwidth = 1 + fib.bandwidth;
  xr.isolated_source = fib.isolated_source;
  return xr;
}

ExcLoci exc_loci(const DynkinDiagram& d, int i, const std::string& cache_dir) {
  XbarReport xr = xbar_report(d, i, cache_dir);
  ExcLoci out;
  out.y0 = xr.y0;
  out.dim_y0 = xr.dim_xbar - 1;

  // The map extends to an isomorphism exactly when nothing sits strictly
  // between weight 1 and the source.
  bool inner_at_2 = false;
  for (const auto& c : xr.components)
    if (c.weight == 2 && c.weight < xr.bandwidth) inner_at_2 = true;
  out.is_isomorphism = !inner_at_2;
  if (!out.is_isomorphism) {
    for (const auto& c : xr.components) {
      if (c.weight == 1) out.exc_psi.push_back(c.ctype);
      if (c.weight == 2) out.exc_psi_inv.push_back(c.ctype);
    }
  }
  return out;
}

}  // namespace rhact
