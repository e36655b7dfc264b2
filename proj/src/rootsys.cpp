// Root system generation by reflection closure and exact weight data.
#include "rhact/rootsys.hpp"

#include <algorithm>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

namespace rhact {

namespace {

// Exact solve of C^T x = e_j over rationals; returns the columns of
// (C^T)^{-1} scaled to integers by the common denominator.
void fundamental_weights(const DynkinDiagram& d, Long* fscale,
                         std::vector<std::vector<Long>>* out) {
  using Rat = boost::multiprecision::cpp_rational;
  using Int = boost::multiprecision::cpp_int;
  int n = d.rank();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = d.cartan(j + 1, i + 1);  // C^T
    m[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    check(piv >= 0, "Cartan matrix is singular");
    std::swap(m[col], m[piv]);
    Rat lead = m[col][col];
    for (int c = 0; c < 2 * n; ++c) m[col][c] /= lead;
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (int c = 0; c < 2 * n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  Int lcm = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Int den = boost::multiprecision::denominator(m[i][n + j]);
      lcm = boost::multiprecision::lcm(lcm, den);
    }
  *fscale = lcm.convert_to<Long>();
  out->assign(n, std::vector<Long>(n, 0));
  // lambda_j = column j of (C^T)^{-1}: (*out)[j][k] = coefficient of a_{k+1}.
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      Rat v = m[k][n + j] * Rat(lcm);
      check(boost::multiprecision::denominator(v) == 1,
            "weight scaling is not integral");
      (*out)[j][k] = boost::multiprecision::numerator(v).convert_to<Long>();
    }
}

}  // namespace

RootSystem::RootSystem(DynkinDiagram d) : diagram_(std::move(d)) {
  int n = rank();
  std::vector<RootVec> frontier;
  for (int i = 0; i < n; ++i) {
    RootVec e(n, 0);
    e[i] = 1;
    positive_set_.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<RootVec> next;
    for (const auto& v : frontier)
      for (int i = 1; i <= n; ++i) {
        RootVec w = reflect(i, v);
        bool pos = false, neg = false;
        for (int c : w) {
          if (c > 0) pos = true;
          if (c < 0) neg = true;
        }
        check(!(pos && neg), "reflection produced a mixed-sign vector");
        if (neg) continue;
        if (positive_set_.insert(w).second) next.push_back(w);
      }
    frontier = std::move(next);
  }
  positives_.assign(positive_set_.begin(), positive_set_.end());
  std::sort(positives_.begin(), positives_.end(),
            [this](const RootVec& a, const RootVec& b) {
              int ha = height(a), hb = height(b);
              if (ha != hb) return ha < hb;
              return a < b;
            });
  fundamental_weights(diagram_, &fscale_, &fweights_);
}

bool RootSystem::is_positive_root(const RootVec& v) const {
  return positive_set_.count(v) > 0;
}

int RootSystem::height(const RootVec& v) const {
  return std::accumulate(v.begin(), v.end(), 0);
}

RootVec RootSystem::reflect(int i, const RootVec& v) const {
  check(i >= 1 && i <= rank(), "reflection index out of range");
  RootVec w = v;
  Long s = 0;
  for (int j = 1; j <= rank(); ++j) s += diagram_.cartan(j, i) * v[j - 1];
  w[i - 1] -= static_cast<int>(s);
  return w;
}

std::vector<Long> RootSystem::reflect_weight(int i,
                                             const std::vector<Long>& m) const {
  check(i >= 1 && i <= rank(), "reflection index out of range");
  std::vector<Long> out = m;
  for (int k = 1; k <= rank(); ++k)
    out[k - 1] -= m[i - 1] * diagram_.cartan(i, k);
  return out;
}

std::vector<Long> RootSystem::to_weight_coords(const RootVec& v) const {
  std::vector<Long> m(rank(), 0);
  for (int k = 1; k <= rank(); ++k)
    for (int j = 1; j <= rank(); ++j)
      m[k - 1] += diagram_.cartan(j, k) * v[j - 1];
  return m;
}

const std::vector<Long>& RootSystem::fundamental_weight_scaled(int j) const {
  check(j >= 1 && j <= rank(), "weight index out of range");
  return fweights_[j - 1];
}

int RootSystem::variety_dimension(const std::set<int>& marks) const {
  int dim = 0;
  for (const auto& v : positives_) {
    for (int m : marks)
      if (v[m - 1] != 0) {
        ++dim;
        break;
      }
  }
  return dim;
}

bool RootSystem::supported_in(const RootVec& v, const std::set<int>& nodes) {
  for (size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0 && !nodes.count(static_cast<int>(k) + 1)) return false;
  return true;
}

Long RootSystem::weyl_order() const { return weyl_order_of(diagram_); }

Long RootSystem::weyl_order_of(const DynkinDiagram& d) {
  auto factorial = [](int n) {
    Long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  Long order = 1;
  for (const auto& f : d.factors()) {
    switch (f.letter) {
      case 'A':
        order *= factorial(f.rank + 1);
        break;
      case 'B':
      case 'C':
        order *= factorial(f.rank) << f.rank;
        break;
      case 'D':
        order *= factorial(f.rank) << (f.rank - 1);
        break;
      case 'E':
        order *= f.rank == 6 ? 51840LL : f.rank == 7 ? 2903040LL : 696729600LL;
        break;
      case 'F':
        order *= 1152;
        break;
      case 'G':
        order *= 12;
        break;
      default:
        check(false, "unknown diagram letter");
    }
  }
  return order;
}

}  // namespace rhact
