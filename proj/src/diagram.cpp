// Dynkin diagram construction, parsing, and canonical subdiagram labeling.
#include "rhact/diagram.hpp"

#include <algorithm>
#include <sstream>

namespace rhact {

namespace {

// Bourbaki Cartan matrix of a simple factor, 0-based storage.
std::vector<std::vector<int>> simple_cartan(char letter, int rank) {
  std::vector<std::vector<int>> c(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) c[i][i] = 2;
  auto bond = [&](int i, int j) {  // single edge, 1-based
    c[i - 1][j - 1] = -1;
    c[j - 1][i - 1] = -1;
  };
  switch (letter) {
    case 'A':
      for (int i = 1; i < rank; ++i) bond(i, i + 1);
      break;
    case 'B':  // node n short: C[n-1][n] = -2
      for (int i = 1; i < rank; ++i) bond(i, i + 1);
      c[rank - 2][rank - 1] = -2;
      break;
    case 'C':  // node n long: C[n][n-1] = -2
      for (int i = 1; i < rank; ++i) bond(i, i + 1);
      c[rank - 1][rank - 2] = -2;
      break;
    case 'D':
      for (int i = 1; i + 1 <= rank - 1; ++i) bond(i, i + 1);
      bond(rank - 2, rank);
      break;
    case 'E':
      bond(1, 3);
      bond(3, 4);
      bond(2, 4);
      for (int i = 4; i < rank; ++i) bond(i, i + 1);
      break;
    case 'F':
      bond(1, 2);
      bond(2, 3);
      bond(3, 4);
      c[1][2] = -2;
      break;
    case 'G':
      c[0][1] = -1;
      c[1][0] = -3;
      break;
    default:
      check(false, "unknown diagram letter");
  }
  return c;
}

std::vector<int> simple_symmetrizer(char letter, int rank) {
  std::vector<int> d(rank, 1);
  switch (letter) {
    case 'B':
      d.assign(rank, 1);
      d[rank - 1] = 2;
      break;
    case 'C':
      d.assign(rank, 2);
      d[rank - 1] = 1;
      break;
    case 'F':
      d = {1, 1, 2, 2};
      break;
    case 'G':
      d = {3, 1};
      break;
    default:
      break;  // simply laced
  }
  return d;
}

}  // namespace

std::string FactorShape::str() const {
  return std::string(1, letter) + std::to_string(rank);
}

bool admissible_shape(char letter, int rank) {
  if (rank < 1 || rank > kMaxRank) return false;
  switch (letter) {
    case 'A':
      return rank >= 1;
    case 'B':
    case 'C':
      return rank >= 2;
    case 'D':
      return rank >= 3;
    case 'E':
      return rank >= 6 && rank <= 8;
    case 'F':
      return rank == 4;
    case 'G':
      return rank == 2;
    default:
      return false;
  }
}

DynkinDiagram DynkinDiagram::simple(char letter, int rank) {
  return product({FactorShape{letter, rank}});
}

DynkinDiagram DynkinDiagram::product(const std::vector<FactorShape>& factors) {
  DynkinDiagram d;
  d.factors_ = factors;
  for (const auto& f : factors)
    check(admissible_shape(f.letter, f.rank),
          "inadmissible factor " + f.str());
  d.rank_ = 0;
  for (const auto& f : factors) {
    d.offsets_.push_back(d.rank_);
    d.rank_ += f.rank;
  }
  d.cartan_.assign(d.rank_, std::vector<int>(d.rank_, 0));
  d.sym_.assign(d.rank_, 1);
  for (size_t f = 0; f < factors.size(); ++f) {
    auto c = simple_cartan(factors[f].letter, factors[f].rank);
    auto s = simple_symmetrizer(factors[f].letter, factors[f].rank);
    int off = d.offsets_[f];
    for (int i = 0; i < factors[f].rank; ++i) {
      d.sym_[off + i] = s[i];
      for (int j = 0; j < factors[f].rank; ++j)
        d.cartan_[off + i][off + j] = c[i][j];
    }
  }
  for (int i = 0; i < d.rank_; ++i)
    for (int j = 0; j < d.rank_; ++j)
      check(d.sym_[i] * d.cartan_[i][j] == d.sym_[j] * d.cartan_[j][i],
            "symmetrizer does not symmetrize the Cartan matrix");
  return d;
}

int DynkinDiagram::factor_of(int node) const {
  check(node >= 1 && node <= rank_, "node out of range");
  int f = 0;
  while (f + 1 < factor_count() && offsets_[f + 1] < node) ++f;
  return f;
}

int DynkinDiagram::factor_offset(int factor) const { return offsets_[factor]; }

int DynkinDiagram::local_label(int node) const {
  return node - offsets_[factor_of(node)];
}

int DynkinDiagram::global_node(int factor, int local) const {
  check(factor >= 0 && factor < factor_count(), "factor out of range");
  check(local >= 1 && local <= factors_[factor].rank, "local label out of range");
  return offsets_[factor] + local;
}

int DynkinDiagram::cartan(int i, int j) const {
  check(i >= 1 && i <= rank_ && j >= 1 && j <= rank_, "node out of range");
  return cartan_[i - 1][j - 1];
}

int DynkinDiagram::symmetrizer(int i) const {
  check(i >= 1 && i <= rank_, "node out of range");
  return sym_[i - 1];
}

bool DynkinDiagram::adjacent(int i, int j) const {
  return i != j && cartan(i, j) != 0;
}

std::vector<int> DynkinDiagram::neighbors(int node) const {
  std::vector<int> out;
  for (int j = 1; j <= rank_; ++j)
    if (adjacent(node, j)) out.push_back(j);
  return out;
}

std::string DynkinDiagram::str() const {
  std::string s;
  for (size_t f = 0; f < factors_.size(); ++f) {
    if (f) s += "x";
    s += factors_[f].str();
  }
  return s;
}

std::string MarkedVariety::str() const {
  if (diagram.rank() == 0) return "pt";
  std::string s;
  for (int f = 0; f < diagram.factor_count(); ++f) {
    if (f) s += "x";
    s += diagram.factors()[f].str();
    std::vector<int> local;
    for (int m : marks)
      if (diagram.factor_of(m) == f) local.push_back(diagram.local_label(m));
    if (!local.empty()) {
      s += "(";
      for (size_t k = 0; k < local.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(local[k]);
      }
      s += ")";
    }
  }
  return s;
}

MarkedVariety parse_variety(const std::string& text) {
  size_t pos = 0;
  auto error = [&](const std::string& msg) {
    input_error("pos " + std::to_string(pos + 1) + ": " + msg);
  };
  auto parse_int = [&]() {
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) error("expected a number");
    return std::stoi(text.substr(start, pos - start));
  };

  if (text == "pt") return MarkedVariety{};

  std::vector<FactorShape> factors;
  std::vector<std::vector<int>> local_marks;
  while (true) {
    if (pos >= text.size()) error("expected a diagram letter A-G");
    char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
    if (letter < 'A' || letter > 'G') error("expected a diagram letter A-G");
    ++pos;
    int rank = parse_int();
    if (!admissible_shape(letter, rank))
      error("inadmissible diagram " + std::string(1, letter) + std::to_string(rank));
    std::vector<int> marks;
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      while (true) {
        int m = parse_int();
        if (m < 1 || m > rank) error("mark out of range for rank " + std::to_string(rank));
        marks.push_back(m);
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        break;
      }
      if (pos >= text.size() || text[pos] != ')') error("expected ')'");
      ++pos;
    }
    factors.push_back({letter, rank});
    local_marks.push_back(marks);
    if (pos < text.size() && (text[pos] == 'x' || text[pos] == 'X')) {
      ++pos;
      continue;
    }
    break;
  }
  if (pos != text.size()) error("unexpected trailing input");

  MarkedVariety v;
  v.diagram = DynkinDiagram::product(factors);
  for (size_t f = 0; f < factors.size(); ++f)
    for (int m : local_marks[f])
      v.marks.insert(v.diagram.global_node(static_cast<int>(f), m));
  return v;
}

namespace {

// Classify one connected component (given by old labels and the adjacency of
// the parent) and return its shape plus the Bourbaki relabeling old list.
struct ClassifiedComponent {
  FactorShape shape;
  std::vector<int> new_to_old;  // new_to_old[k] = old label of new node k+1
};

ClassifiedComponent classify_component(const DynkinDiagram& d,
                                       const std::vector<int>& nodes) {
  ClassifiedComponent out;
  int k = static_cast<int>(nodes.size());
  auto deg = [&](int u) {
    int n = 0;
    for (int v : nodes)
      if (v != u && d.adjacent(u, v)) ++n;
    return n;
  };
  auto nbrs = [&](int u) {
    std::vector<int> r;
    for (int v : nodes)
      if (v != u && d.adjacent(u, v)) r.push_back(v);
    return r;
  };
  auto mult = [&](int u, int v) { return d.cartan(u, v) * d.cartan(v, u); };

  if (k == 1) {
    out.shape = {'A', 1};
    out.new_to_old = {nodes[0]};
    return out;
  }

  // Locate double/triple edges.
  std::vector<std::pair<int, int>> doubles;  // (long, short): C[long][short] = -2
  std::pair<int, int> triple{0, 0};
  for (int u : nodes)
    for (int v : nodes)
      if (u < v && d.adjacent(u, v)) {
        // cartan(u, v) = -m means v is the short node of the edge.
        int m = mult(u, v);
        if (m == 3)
          triple = d.cartan(u, v) == -3 ? std::make_pair(u, v)
                                        : std::make_pair(v, u);
        else if (m == 2)
          doubles.push_back(d.cartan(u, v) == -2 ? std::make_pair(u, v)
                                                 : std::make_pair(v, u));
      }

  if (triple.first) {
    check(k == 2, "triple edge outside G2");
    out.shape = {'G', 2};
    out.new_to_old = {triple.second, triple.first};  // node 1 short
    return out;
  }

  // Walk a path component from `start` away from `avoid`.
  auto walk = [&](int start, int avoid) {
    std::vector<int> path{start};
    int prev = avoid, cur = start;
    while (true) {
      int next = 0;
      for (int v : nbrs(cur))
        if (v != prev) next = v;
      if (!next) break;
      path.push_back(next);
      prev = cur;
      cur = next;
    }
    return path;
  };

  if (!doubles.empty()) {
    check(doubles.size() == 1, "more than one double edge in a component");
    auto [lng, sht] = doubles[0];
    int dl = deg(lng), ds = deg(sht);
    if (k == 2) {
      out.shape = {'B', 2};
      out.new_to_old = {lng, sht};
      return out;
    }
    for (int u : nodes) check(deg(u) <= 2, "branch node with a double edge");
    if (ds == 1 && dl == 2) {
      // Short end: type B, short node last.
      auto path = walk(lng, sht);  // from long partner away from the short end
      std::reverse(path.begin(), path.end());
      path.push_back(sht);
      out.shape = {'B', k};
      out.new_to_old = path;
      return out;
    }
    if (dl == 1 && ds == 2) {
      // Long end: type C, long node last.
      auto path = walk(sht, lng);
      std::reverse(path.begin(), path.end());
      path.push_back(lng);
      out.shape = {'C', k};
      out.new_to_old = path;
      return out;
    }
    // Interior double edge: F4, long side first.
    check(k == 4 && dl == 2 && ds == 2, "unrecognized doubly laced diagram");
    auto left = walk(lng, sht);   // [lng, end-near-long]
    auto right = walk(sht, lng);  // [sht, end-near-short]
    check(left.size() == 2 && right.size() == 2, "unrecognized F4 shape");
    out.shape = {'F', 4};
    out.new_to_old = {left[1], lng, sht, right[1]};
    return out;
  }

  // Simply laced.
  int branch = 0;
  for (int u : nodes)
    if (deg(u) == 3) {
      check(!branch, "two branch nodes in a component");
      branch = u;
    } else {
      check(deg(u) <= 2, "node of degree > 3");
    }

  if (!branch) {
    // Path: type A; orient to start at the smaller end.
    std::vector<int> ends;
    for (int u : nodes)
      if (deg(u) == 1) ends.push_back(u);
    check(ends.size() == 2, "path without two ends");
    auto path = walk(std::min(ends[0], ends[1]), 0);
    out.shape = {'A', k};
    out.new_to_old = path;
    return out;
  }

  // Branch node: arms sorted by length.
  std::vector<std::vector<int>> arms;  // from neighbor of branch to tip
  for (int v : nbrs(branch)) arms.push_back(walk(v, branch));
  check(arms.size() == 3, "branch arity mismatch");
  std::sort(arms.begin(), arms.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
  size_t l1 = arms[0].size(), l2 = arms[1].size(), l3 = arms[2].size();

  if (l1 == 1 && l2 == 1) {
    out.shape = {'D', k};
    if (l3 == 1) {
      // D4: tips in ascending order become nodes 1, 3, 4.
      std::vector<int> tips{arms[0][0], arms[1][0], arms[2][0]};
      std::sort(tips.begin(), tips.end());
      out.new_to_old = {tips[0], branch, tips[1], tips[2]};
    } else {
      // D_k, k >= 5: long arm from its tip down to the branch, then tips.
      std::vector<int> path = arms[2];
      std::reverse(path.begin(), path.end());
      path.push_back(branch);
      int t1 = std::min(arms[0][0], arms[1][0]);
      int t2 = std::max(arms[0][0], arms[1][0]);
      path.push_back(t1);
      path.push_back(t2);
      out.new_to_old = path;
    }
    return out;
  }

  check(l1 == 1 && l2 == 2 && l3 >= 2 && l3 <= 4, "unrecognized branched diagram");
  out.shape = {'E', static_cast<int>(k)};
  check(k >= 6 && k <= 8, "E-type rank out of range");
  // Node 2 = the length-1 arm tip, node 4 = branch, nodes 3,1 = the 2-arm,
  // nodes 5.. = the long arm.  For E6 the two 2-arms are swappable: pick the
  // orientation whose new_to_old is lexicographically smaller.
  auto assemble = [&](const std::vector<int>& two_arm,
                      const std::vector<int>& long_arm) {
    std::vector<int> n2o(k);
    n2o[0] = two_arm[1];
    n2o[1] = arms[0][0];
    n2o[2] = two_arm[0];
    n2o[3] = branch;
    for (size_t t = 0; t < long_arm.size(); ++t) n2o[4 + t] = long_arm[t];
    return n2o;
  };
  out.new_to_old = assemble(arms[1], arms[2]);
  if (l2 == l3) {
    auto alt = assemble(arms[2], arms[1]);
    if (alt < out.new_to_old) out.new_to_old = alt;
  }
  return out;
}

}  // namespace

Subdiagram subdiagram(const DynkinDiagram& d, const std::set<int>& keep) {
  for (int u : keep) check(u >= 1 && u <= d.rank(), "subdiagram node out of range");

  // Connected components in ascending order of their minimal node.
  std::set<int> todo = keep;
  std::vector<std::vector<int>> comps;
  while (!todo.empty()) {
    std::vector<int> comp{*todo.begin()};
    todo.erase(todo.begin());
    for (size_t q = 0; q < comp.size(); ++q)
      for (auto it = todo.begin(); it != todo.end();) {
        if (d.adjacent(comp[q], *it)) {
          comp.push_back(*it);
          it = todo.erase(it);
        } else {
          ++it;
        }
      }
    std::sort(comp.begin(), comp.end());
    comps.push_back(comp);
  }
  std::sort(comps.begin(), comps.end());

  Subdiagram out;
  std::vector<FactorShape> shapes;
  for (const auto& comp : comps) {
    auto cc = classify_component(d, comp);
    shapes.push_back(cc.shape);
    for (int old : cc.new_to_old) out.new_to_old.push_back(old);
  }
  out.diagram = keep.empty() ? DynkinDiagram() : DynkinDiagram::product(shapes);
  for (int k = 0; k < static_cast<int>(out.new_to_old.size()); ++k)
    out.old_to_new[out.new_to_old[k]] = k + 1;

  // The relabeled Cartan matrix must reproduce the parent's entries.
  for (int i = 1; i <= out.diagram.rank(); ++i)
    for (int j = 1; j <= out.diagram.rank(); ++j)
      check(out.diagram.cartan(i, j) ==
                d.cartan(out.new_to_old[i - 1], out.new_to_old[j - 1]),
            "canonical relabeling does not preserve the Cartan matrix");
  return out;
}

MarkedVariety canonical_type(const MarkedVariety& v) {
  struct Piece {
    FactorShape shape;
    std::vector<int> local_marks;
    bool operator<(const Piece& o) const {
      if (shape != o.shape) return shape < o.shape;
      return local_marks < o.local_marks;
    }
  };
  std::vector<Piece> pieces;
  for (int f = 0; f < v.diagram.factor_count(); ++f) {
    Piece p{v.diagram.factors()[f], {}};
    for (int m : v.marks)
      if (v.diagram.factor_of(m) == f) p.local_marks.push_back(v.diagram.local_label(m));
    std::sort(p.local_marks.begin(), p.local_marks.end());
    if (!p.local_marks.empty()) pieces.push_back(p);
  }
  std::sort(pieces.begin(), pieces.end());

  MarkedVariety out;
  if (pieces.empty()) return out;
  std::vector<FactorShape> shapes;
  for (const auto& p : pieces) shapes.push_back(p.shape);
  out.diagram = DynkinDiagram::product(shapes);
  for (size_t f = 0; f < pieces.size(); ++f)
    for (int m : pieces[f].local_marks)
      out.marks.insert(out.diagram.global_node(static_cast<int>(f), m));
  return out;
}

MarkedVariety join_varieties(const MarkedVariety& a, const MarkedVariety& b) {
  std::vector<FactorShape> shapes = a.diagram.factors();
  for (const auto& f : b.diagram.factors()) shapes.push_back(f);
  MarkedVariety out;
  if (shapes.empty()) return out;
  out.diagram = DynkinDiagram::product(shapes);
  for (int m : a.marks) out.marks.insert(m);
  for (int m : b.marks) out.marks.insert(m + a.diagram.rank());
  return out;
}

namespace {

// Automorphisms of a simple diagram as permutations of 1..rank.
std::vector<std::vector<int>> diagram_automorphisms(const FactorShape& f) {
  int n = f.rank;
  std::vector<int> id(n + 1);
  for (int i = 0; i <= n; ++i) id[i] = i;
  std::vector<std::vector<int>> autos{id};
  auto add_swap = [&](std::vector<std::pair<int, int>> swaps) {
    auto p = id;
    for (auto [a, b] : swaps) {
      p[a] = b;
      p[b] = a;
    }
    autos.push_back(p);
  };
  if (f.letter == 'A' && n >= 2) {
    auto p = id;
    for (int i = 1; i <= n; ++i) p[i] = n + 1 - i;
    autos.push_back(p);
  } else if (f.letter == 'D' && n == 4) {
    autos.clear();
    std::vector<int> tips{1, 3, 4};
    std::vector<int> perm = tips;
    std::sort(perm.begin(), perm.end());
    do {
      auto p = id;
      for (int t = 0; t < 3; ++t) p[tips[t]] = perm[t];
      autos.push_back(p);
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else if (f.letter == 'D' && n >= 5) {
    add_swap({{n - 1, n}});
  } else if (f.letter == 'E' && n == 6) {
    add_swap({{1, 6}, {3, 5}});
  } else if (f.letter == 'D' && n == 3) {
    add_swap({{2, 3}});  // D3 = A3 written on the branch labels
  }
  return autos;
}

// Orbit-minimal form of a factor's marks under its diagram automorphisms.
std::vector<int> orbit_min_marks(const FactorShape& f, std::vector<int> marks) {
  std::sort(marks.begin(), marks.end());
  std::vector<int> best = marks;
  for (const auto& p : diagram_automorphisms(f)) {
    std::vector<int> img;
    for (int m : marks) img.push_back(p[m]);
    std::sort(img.begin(), img.end());
    if (img < best) best = img;
  }
  return best;
}

std::vector<std::pair<FactorShape, std::vector<int>>> iso_key(
    const MarkedVariety& v) {
  MarkedVariety c = canonical_type(v);
  std::vector<std::pair<FactorShape, std::vector<int>>> key;
  for (int f = 0; f < c.diagram.factor_count(); ++f) {
    std::vector<int> local;
    for (int m : c.marks)
      if (c.diagram.factor_of(m) == f) local.push_back(c.diagram.local_label(m));
    key.emplace_back(c.diagram.factors()[f],
                     orbit_min_marks(c.diagram.factors()[f], local));
  }
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace

bool isomorphic_types(const MarkedVariety& a, const MarkedVariety& b) {
  return iso_key(a) == iso_key(b);
}

}  // namespace rhact
