// Weyl elements, longest element, coset enumeration, double-coset orbits.
#include "rhact/weyl.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <queue>

#include "json.hpp"

namespace rhact {

namespace {

using Matrix = std::vector<std::vector<Long>>;

Matrix identity(int n) {
  Matrix m(n, std::vector<Long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix mul(const Matrix& a, const Matrix& b) {
  int n = static_cast<int>(a.size());
  Matrix c(n, std::vector<Long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

// Simple reflection acting on root coordinates: identity except row i,
// where (R_i)[i][j] = delta_ij - C[j][i].
Matrix reflection_matrix(const RootSystem& rs, int i) {
  int n = rs.rank();
  Matrix m = identity(n);
  for (int j = 1; j <= n; ++j)
    m[i - 1][j - 1] = (i == j ? 1 : 0) - rs.diagram().cartan(j, i);
  return m;
}

std::vector<Long> matvec(const Matrix& m, const std::vector<Long>& v) {
  int n = static_cast<int>(m.size());
  std::vector<Long> out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += m[i][j] * v[j];
  return out;
}

}  // namespace

WeylElement WeylElement::identity(int rank) {
  WeylElement w;
  w.m = rhact::identity(rank);
  w.minv = w.m;
  return w;
}

RootVec WeylElement::apply(const RootVec& v) const {
  std::vector<Long> lv(v.begin(), v.end());
  auto out = matvec(m, lv);
  RootVec r(out.size());
  for (size_t i = 0; i < out.size(); ++i) r[i] = static_cast<int>(out[i]);
  return r;
}

RootVec WeylElement::apply_inverse(const RootVec& v) const {
  std::vector<Long> lv(v.begin(), v.end());
  auto out = matvec(minv, lv);
  RootVec r(out.size());
  for (size_t i = 0; i < out.size(); ++i) r[i] = static_cast<int>(out[i]);
  return r;
}

std::vector<Long> WeylElement::apply_scaled(const std::vector<Long>& v) const {
  return matvec(m, v);
}

WeylElement left_mul_simple(const RootSystem& rs, int i, const WeylElement& w) {
  Matrix r = reflection_matrix(rs, i);
  WeylElement out;
  out.m = mul(r, w.m);
  out.minv = mul(w.minv, r);
  return out;
}

WeylElement element_of_word(const RootSystem& rs, const std::vector<int>& word) {
  WeylElement w = WeylElement::identity(rs.rank());
  for (int g : word) w = left_mul_simple(rs, g, w);
  return w;
}

LongestElement longest_element(const RootSystem& rs) {
  int n = rs.rank();
  std::vector<Long> v(n, 1);  // strictly dominant weight
  LongestElement out;
  out.w = WeylElement::identity(n);
  while (true) {
    int pick = 0;
    for (int i = 1; i <= n; ++i)
      if (v[i - 1] > 0) {
        pick = i;
        break;
      }
    if (!pick) break;
    v = rs.reflect_weight(pick, v);
    out.word.push_back(pick);
    out.w = left_mul_simple(rs, pick, out.w);
  }
  check(static_cast<int>(out.word.size()) ==
            static_cast<int>(rs.positive_roots().size()),
        "longest element length mismatch");
  return out;
}

std::vector<int> theta_involution(const RootSystem& rs) {
  auto w0 = longest_element(rs).w;
  int n = rs.rank();
  std::vector<int> theta(n + 1, 0);
  for (int j = 1; j <= n; ++j) {
    RootVec e(n, 0);
    e[j - 1] = 1;
    RootVec img = w0.apply(e);
    int target = 0;
    for (int k = 1; k <= n; ++k) {
      if (img[k - 1] == 0) continue;
      check(img[k - 1] == -1 && target == 0,
            "-w0 does not permute the simple roots");
      target = k;
    }
    check(target != 0, "w0 sent a simple root to zero");
    theta[j] = target;
  }
  return theta;
}

CosetTable::CosetTable(const RootSystem& rs, const std::set<int>& j_nodes,
                       const std::string& cache_dir)
    : j_nodes_(j_nodes) {
  for (int j : j_nodes_) check(j >= 1 && j <= rs.rank(), "J node out of range");
  std::string path;
  if (!cache_dir.empty()) {
    path = cache_dir + "/" + rs.diagram().str() + "_J";
    for (int j : j_nodes_) path += std::to_string(j) + "-";
    path += ".coset.json";
    if (load_cache(rs, path)) return;
  }
  build(rs);
  if (!path.empty()) store_cache(rs, path);
}

void CosetTable::build(const RootSystem& rs) {
  int n = rs.rank();
  std::vector<Long> xi(n, 0);
  for (int k = 1; k <= n; ++k)
    if (!j_nodes_.count(k)) xi[k - 1] = 1;

  std::map<std::vector<Long>, int> index;
  std::vector<std::vector<Long>> fps;
  index[xi] = 0;
  fps.push_back(xi);
  level_ = {0};
  parent_ = {-1};
  gen_ = {0};
  edges_.push_back(std::vector<int>(n, -1));

  for (int c = 0; c < static_cast<int>(fps.size()); ++c) {
    for (int i = 1; i <= n; ++i) {
      if (edges_[c][i - 1] >= 0) continue;
      auto img = rs.reflect_weight(i, fps[c]);
      auto it = index.find(img);
      int target;
      if (it == index.end()) {
        target = static_cast<int>(fps.size());
        index[img] = target;
        fps.push_back(img);
        level_.push_back(level_[c] + 1);
        parent_.push_back(c);
        gen_.push_back(i);
        edges_.push_back(std::vector<int>(n, -1));
      } else {
        target = it->second;
      }
      edges_[c][i - 1] = target;
    }
  }

  Long sub_order = RootSystem::weyl_order_of(
      subdiagram(rs.diagram(), j_nodes_).diagram);
  check(static_cast<Long>(fps.size()) * sub_order == rs.weyl_order(),
        "coset count does not match the Weyl order");
}

int CosetTable::edge(int c, int i) const {
  check(c >= 0 && c < size(), "coset index out of range");
  check(i >= 1 && i <= static_cast<int>(edges_[c].size()),
        "generator out of range");
  return edges_[c][i - 1];
}

std::vector<int> CosetTable::word(int c) const {
  check(c >= 0 && c < size(), "coset index out of range");
  std::vector<int> w;
  while (parent_[c] >= 0) {
    w.push_back(gen_[c]);
    c = parent_[c];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

WeylElement CosetTable::element(const RootSystem& rs, int c) const {
  auto w = word(c);
  check(static_cast<int>(w.size()) == level_[c], "word length != level");
  return element_of_word(rs, w);
}

bool CosetTable::load_cache(const RootSystem& rs, const std::string& path) {
  std::ifstream in(path);
  if (!in) return false;
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception&) {
    return false;
  }
  if (!j.is_object() || j.value("version", "") != "1" ||
      j.value("diagram", "") != rs.diagram().str())
    return false;
  std::vector<int> jn = j.value("j", std::vector<int>());
  if (std::set<int>(jn.begin(), jn.end()) != j_nodes_) return false;
  std::vector<int> parent = j.value("parent", std::vector<int>());
  std::vector<int> gen = j.value("gen", std::vector<int>());
  if (parent.size() != gen.size() || parent.empty()) return false;

  // Rebuild fingerprints, levels, and edges; any inconsistency falls back.
  int n = rs.rank();
  std::vector<Long> xi(n, 0);
  for (int k = 1; k <= n; ++k)
    if (!j_nodes_.count(k)) xi[k - 1] = 1;
  std::vector<std::vector<Long>> fps(parent.size());
  std::vector<int> levels(parent.size(), 0);
  std::map<std::vector<Long>, int> index;
  for (size_t c = 0; c < parent.size(); ++c) {
    if (c == 0) {
      if (parent[0] != -1) return false;
      fps[0] = xi;
    } else {
      if (parent[c] < 0 || parent[c] >= static_cast<int>(c)) return false;
      if (gen[c] < 1 || gen[c] > n) return false;
      fps[c] = rs.reflect_weight(gen[c], fps[parent[c]]);
      levels[c] = levels[parent[c]] + 1;
    }
    if (!index.emplace(fps[c], static_cast<int>(c)).second) return false;
  }
  Long sub_order = RootSystem::weyl_order_of(
      subdiagram(rs.diagram(), j_nodes_).diagram);
  if (static_cast<Long>(parent.size()) * sub_order != rs.weyl_order())
    return false;

  parent_ = parent;
  gen_ = gen;
  level_ = levels;
  edges_.assign(parent.size(), std::vector<int>(n, -1));
  for (size_t c = 0; c < parent.size(); ++c)
    for (int i = 1; i <= n; ++i) {
      auto it = index.find(rs.reflect_weight(i, fps[c]));
      if (it == index.end()) return false;
      edges_[c][i - 1] = it->second;
    }
  return true;
}

void CosetTable::store_cache(const RootSystem& rs,
                             const std::string& path) const {
  nlohmann::json j;
  j["version"] = "1";
  j["diagram"] = rs.diagram().str();
  j["j"] = std::vector<int>(j_nodes_.begin(), j_nodes_.end());
  j["parent"] = parent_;
  j["gen"] = gen_;
  std::filesystem::path p(path);
  if (p.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(p.parent_path(), ec);
  }
  std::ofstream out(path);
  if (out) out << j.dump() << "\n";
}

std::vector<DoubleCosetOrbit> double_coset_orbits(const CosetTable& table,
                                                  const std::set<int>& k_nodes) {
  int n = table.size();
  std::vector<int> orbit_of(n, -1);
  std::vector<DoubleCosetOrbit> orbits;
  for (int seed = 0; seed < n; ++seed) {
    if (orbit_of[seed] >= 0) continue;
    int id = static_cast<int>(orbits.size());
    DoubleCosetOrbit orb;
    std::vector<int> queue{seed};
    orbit_of[seed] = id;
    while (!queue.empty()) {
      int c = queue.back();
      queue.pop_back();
      orb.cosets.push_back(c);
      for (int i : k_nodes) {
        int t = table.edge(c, i);
        if (orbit_of[t] < 0) {
          orbit_of[t] = id;
          queue.push_back(t);
        }
      }
    }
    std::sort(orb.cosets.begin(), orb.cosets.end());
    orb.size = static_cast<Long>(orb.cosets.size());
    int min_level = table.level(orb.cosets[0]);
    int count_min = 0;
    orb.min_coset = orb.cosets[0];
    for (int c : orb.cosets) {
      if (table.level(c) < min_level) {
        min_level = table.level(c);
        orb.min_coset = c;
        count_min = 1;
      } else if (table.level(c) == min_level) {
        ++count_min;
        if (c < orb.min_coset) orb.min_coset = c;
      }
    }
    check(count_min == 1, "double coset with non-unique minimal element");
    orbits.push_back(std::move(orb));
  }
  return orbits;
}

}  // namespace rhact
