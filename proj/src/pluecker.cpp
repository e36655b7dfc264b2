// Exact Pluecker-coordinate computations and the matrix-inversion map.
#include "rhact/pluecker.hpp"

#include <algorithm>
#include <numeric>

namespace rhact {

RatMatrix identity_matrix(int n) {
  RatMatrix m(n, std::vector<Rat>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RatMatrix matmul(const RatMatrix& a, const RatMatrix& b) {
  int r = static_cast<int>(a.size());
  int inner = static_cast<int>(b.size());
  int c = static_cast<int>(b[0].size());
  RatMatrix out(r, std::vector<Rat>(c, 0));
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < c; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

Rat det(RatMatrix a) {
  int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  Rat d = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      d = -d;
    }
    d *= a[col][col];
    Rat inv_piv = Rat(1) / a[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      Rat f = a[r][col] * inv_piv;
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return d;
}

int matrix_rank(RatMatrix a) {
  if (a.empty()) return 0;
  int rows = static_cast<int>(a.size());
  int cols = static_cast<int>(a[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    Rat inv_piv = Rat(1) / a[rank][col];
    for (int r = rank + 1; r < rows; ++r) {
      if (a[r][col] == 0) continue;
      Rat f = a[r][col] * inv_piv;
      for (int c = col; c < cols; ++c) a[r][c] -= f * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

RatMatrix inverse(RatMatrix a) {
  int n = static_cast<int>(a.size());
  RatMatrix inv = identity_matrix(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) input_error("matrix is singular");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rat f = Rat(1) / a[col][col];
    for (int c = 0; c < n; ++c) {
      a[col][c] *= f;
      inv[col][c] *= f;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat g = a[r][col];
      for (int c = 0; c < n; ++c) {
        a[r][c] -= g * a[col][c];
        inv[r][c] -= g * inv[col][c];
      }
    }
  }
  return inv;
}

bool is_scalar_multiple(const RatMatrix& a, const RatMatrix& b) {
  if (a.size() != b.size()) return false;
  int ri = -1, rj = -1;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (size_t j = 0; j < a[i].size(); ++j)
      if (ri < 0 && (a[i][j] != 0 || b[i][j] != 0)) {
        ri = static_cast<int>(i);
        rj = static_cast<int>(j);
      }
  }
  if (ri < 0) return true;  // both zero
  if (a[ri][rj] == 0 || b[ri][rj] == 0) return false;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j)
      if (a[ri][rj] * b[i][j] != b[ri][rj] * a[i][j]) return false;
  return true;
}

namespace {

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace

SubsetIndexer::SubsetIndexer(int n) : n_(n) {
  check(n >= 1 && n <= 8, "subset indexer size out of range");
  count_ = static_cast<int>(binom(2 * n, n));
  subsets_.reserve(count_);
  std::vector<int> s(n);
  std::iota(s.begin(), s.end(), 1);
  while (true) {
    subsets_.push_back(s);
    // Next subset in colexicographic order.
    int j = 0;
    while (j + 1 < n && s[j] + 1 == s[j + 1]) ++j;
    if (s[j] + 1 > 2 * n) break;
    ++s[j];
    for (int t = 0; t < j; ++t) s[t] = t + 1;
  }
  check(static_cast<int>(subsets_.size()) == count_, "colex enumeration size");
}

int SubsetIndexer::index_of(const std::vector<int>& subset) const {
  check(static_cast<int>(subset.size()) == n_, "subset size mismatch");
  long long r = 0;
  for (int j = 0; j < n_; ++j) {
    check(subset[j] >= 1 && subset[j] <= 2 * n_ &&
              (j == 0 || subset[j] > subset[j - 1]),
          "subset is not sorted in range");
    r += binom(subset[j] - 1, j + 1);
  }
  return static_cast<int>(r);
}

const std::vector<int>& SubsetIndexer::subset_at(int index) const {
  check(index >= 0 && index < count_, "subset index out of range");
  return subsets_[index];
}

int subset_weight(const std::vector<int>& subset, int n) {
  int w = 0;
  for (int s : subset)
    if (s > n) ++w;
  return w;
}

bool PlueckerVector::is_zero() const {
  for (const auto& x : c)
    if (x != 0) return false;
  return true;
}

PlueckerVector plucker_of_graph(const RatMatrix& a) {
  int n = static_cast<int>(a.size());
  if (n < 1) input_error("matrix must be nonempty");
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != n) input_error("matrix must be square");

  SubsetIndexer idx(n);
  PlueckerVector p;
  p.n = n;
  p.c.assign(idx.count(), 0);
  for (int s = 0; s < idx.count(); ++s) {
    const auto& subset = idx.subset_at(s);
    std::vector<int> top, bottom;  // T in {1..n}, R in {1..n} shifted
    for (int e : subset) {
      if (e <= n) top.push_back(e);
      else bottom.push_back(e - n);
    }
    std::vector<int> cols;  // {1..n} minus T
    {
      size_t t = 0;
      for (int ccol = 1; ccol <= n; ++ccol) {
        if (t < top.size() && top[t] == ccol) {
          ++t;
          continue;
        }
        cols.push_back(ccol);
      }
    }
    int k = static_cast<int>(top.size());
    RatMatrix minor(bottom.size(), std::vector<Rat>(cols.size()));
    for (size_t r = 0; r < bottom.size(); ++r)
      for (size_t cc = 0; cc < cols.size(); ++cc)
        minor[r][cc] = a[bottom[r] - 1][cols[cc] - 1];
    // Expanding the unit rows of [I; a] moves the T-columns to the front.
    int exps = std::accumulate(top.begin(), top.end(), 0) - k * (k + 1) / 2;
    Rat d = det(std::move(minor));
    p.c[s] = (exps % 2 == 0) ? d : -d;
  }
  return p;
}

namespace {

// Signed coordinate p_{S union {t}} for |S| = n-1 sorted, t not in S.
Rat signed_coordinate(const PlueckerVector& p, const SubsetIndexer& idx,
                      const std::vector<int>& s, int t) {
  std::vector<int> merged;
  int greater = 0;
  bool placed = false;
  for (int e : s) {
    if (e == t) return 0;
    if (e > t) {
      ++greater;
      if (!placed) {
        merged.push_back(t);
        placed = true;
      }
    }
    merged.push_back(e);
  }
  if (!placed) merged.push_back(t);
  Rat v = p.c[idx.index_of(merged)];
  return (greater % 2 == 0) ? v : -v;
}

bool relation_holds(const PlueckerVector& p, const SubsetIndexer& idx,
                    const std::vector<int>& s, const std::vector<int>& t) {
  Rat total = 0;
  for (size_t j = 0; j < t.size(); ++j) {
    std::vector<int> rest;
    for (size_t k = 0; k < t.size(); ++k)
      if (k != j) rest.push_back(t[k]);
    Rat term = signed_coordinate(p, idx, s, t[j]) * p.c[idx.index_of(rest)];
    total += (j % 2 == 0) ? term : -term;
  }
  return total == 0;
}

template <typename Fn>
void for_each_subset(int universe, int size, Fn fn) {
  std::vector<int> s(size);
  std::iota(s.begin(), s.end(), 1);
  while (true) {
    fn(s);
    int j = size - 1;
    while (j >= 0 && s[j] == universe - (size - 1 - j)) --j;
    if (j < 0) break;
    ++s[j];
    for (int k = j + 1; k < size; ++k) s[k] = s[k - 1] + 1;
  }
}

std::vector<int> random_subset(int universe, int size, std::mt19937_64& rng) {
  std::vector<int> pool(universe);
  std::iota(pool.begin(), pool.end(), 1);
  for (int j = 0; j < size; ++j) {
    std::uniform_int_distribution<int> d(j, universe - 1);
    std::swap(pool[j], pool[d(rng)]);
  }
  std::vector<int> s(pool.begin(), pool.begin() + size);
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

bool plucker_relations_hold(const PlueckerVector& p, std::mt19937_64& rng,
                            int samples) {
  SubsetIndexer idx(p.n);
  check(static_cast<int>(p.c.size()) == idx.count(), "coordinate count");
  int n = p.n;
  bool ok = true;
  if (n <= 4) {
    for_each_subset(2 * n, n - 1, [&](const std::vector<int>& s) {
      for_each_subset(2 * n, n + 1, [&](const std::vector<int>& t) {
        if (!relation_holds(p, idx, s, t)) ok = false;
      });
    });
  } else {
    for (int q = 0; q < samples && ok; ++q) {
      auto s = random_subset(2 * n, n - 1, rng);
      auto t = random_subset(2 * n, n + 1, rng);
      if (!relation_holds(p, idx, s, t)) ok = false;
    }
  }
  return ok;
}

GradedSplit graded_split(const PlueckerVector& p) {
  SubsetIndexer idx(p.n);
  check(static_cast<int>(p.c.size()) == idx.count(), "coordinate count");
  GradedSplit g;
  g.n = p.n;
  for (int s = 0; s < idx.count(); ++s) {
    if (p.c[s] == 0) continue;
    int w = subset_weight(idx.subset_at(s), p.n);
    auto& piece = g.pieces[w];
    if (piece.empty()) piece.assign(idx.count(), 0);
    piece[s] = p.c[s];
  }
  return g;
}

PlueckerVector reassemble(const GradedSplit& g) {
  SubsetIndexer idx(g.n);
  PlueckerVector p;
  p.n = g.n;
  p.c.assign(idx.count(), 0);
  for (const auto& [w, piece] : g.pieces) {
    check(static_cast<int>(piece.size()) == idx.count(), "piece length");
    for (int s = 0; s < idx.count(); ++s) p.c[s] += piece[s];
  }
  return p;
}

OrbitLimit orbit_limit(const PlueckerVector& p, int direction) {
  check(direction == 1 || direction == -1, "direction must be +1 or -1");
  if (p.is_zero()) input_error("orbit limit of the zero vector");
  GradedSplit g = graded_split(p);
  OrbitLimit out;
  if (direction < 0) {
    auto it = g.pieces.begin();
    out.weight = it->first;
    out.piece = it->second;
    if (std::next(it) != g.pieces.end()) {
      out.next_weight = std::next(it)->first;
      out.next_piece = std::next(it)->second;
    }
  } else {
    auto it = std::prev(g.pieces.end());
    out.weight = it->first;
    out.piece = it->second;
    if (it != g.pieces.begin()) {
      out.next_weight = std::prev(it)->first;
      out.next_piece = std::prev(it)->second;
    }
  }
  return out;
}

RatMatrix identify_hom(const GradedSplit& g, int end) {
  check(end == 1 || end == -1, "end must be +1 or -1");
  int n = g.n;
  SubsetIndexer idx(n);
  int w = end < 0 ? 1 : n - 1;
  auto it = g.pieces.find(w);
  if (it == g.pieces.end())
    input_error("graded piece of weight " + std::to_string(w) +
                " vanishes; no map to read off");
  const auto& piece = it->second;
  RatMatrix m(n, std::vector<Rat>(n, 0));
  if (end < 0) {
    // Weight-1 subsets ({1..n} minus {k}) union {n+j} give column k, row j.
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        std::vector<int> s;
        for (int e = 1; e <= n; ++e)
          if (e != k) s.push_back(e);
        s.push_back(n + j);
        Rat v = piece[idx.index_of(s)];
        m[j - 1][k - 1] = ((n - k) % 2 == 0) ? v : -v;
      }
  } else {
    // Weight-(n-1) subsets {k} union ({n+1..2n} minus {n+j}).
    for (int k = 1; k <= n; ++k)
      for (int j = 1; j <= n; ++j) {
        std::vector<int> s{k};
        for (int e = 1; e <= n; ++e)
          if (e != j) s.push_back(n + e);
        Rat v = piece[idx.index_of(s)];
        m[k - 1][j - 1] = ((j - 1) % 2 == 0) ? v : -v;
      }
  }
  return m;
}

InversionResult inversion_map(const RatMatrix& a) {
  int n = static_cast<int>(a.size());
  Rat d = det(a);
  if (d == 0)
    input_error("matrix is singular (det = 0); the orbit degenerates");
  PlueckerVector p = plucker_of_graph(a);
  InversionResult out;
  out.b = identify_hom(graded_split(p), 1);
  out.c = d;
  RatMatrix prod = matmul(out.b, a);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      check(prod[i][j] == (i == j ? out.c : Rat(0)),
            "inversion product is not a scalar matrix");
  return out;
}

FormCheckResult form_checks(const RatMatrix& a, char form) {
  if (form != 's' && form != 'o') input_error("form must be 's' or 'o'");
  int n = static_cast<int>(a.size());
  FormCheckResult out;

  bool symmetric = true, skew = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (a[i][j] != a[j][i]) symmetric = false;
      if (a[i][j] != -a[j][i]) skew = false;
    }
  out.shape_matches = form == 's' ? symmetric : skew;

  // Gram matrix on V_- + V_+ and isotropy of the graph columns [I; a].
  RatMatrix gram(2 * n, std::vector<Rat>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    gram[i][n + i] = 1;
    gram[n + i][i] = form == 's' ? -1 : 1;
  }
  RatMatrix graph(2 * n, std::vector<Rat>(n, 0));
  for (int i = 0; i < n; ++i) {
    graph[i][i] = 1;
    for (int j = 0; j < n; ++j) graph[n + i][j] = a[i][j];
  }
  RatMatrix gt(n, std::vector<Rat>(2 * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2 * n; ++j) gt[i][j] = graph[j][i];
  RatMatrix pairing = matmul(gt, matmul(gram, graph));
  out.isotropic = true;
  for (const auto& row : pairing)
    for (const auto& x : row)
      if (x != 0) out.isotropic = false;

  out.structurally_singular = form == 'o' && skew && n % 2 == 1;
  if (out.structurally_singular)
    check(det(a) == 0, "odd skew matrix with nonzero determinant");

  out.closure_ok = true;
  if (out.shape_matches && det(a) != 0) {
    RatMatrix b = inversion_map(a).b;
    for (int i = 0; i < n && out.closure_ok; ++i)
      for (int j = 0; j < n; ++j) {
        Rat want = form == 's' ? b[j][i] : -b[j][i];
        if (b[i][j] != want) {
          out.closure_ok = false;
          break;
        }
      }
  }
  return out;
}

bool family_parity(const RatMatrix& u, const RatMatrix& uprime,
                   const RatMatrix& q) {
  int d = static_cast<int>(q.size());
  if (d == 0 || d % 2 != 0) input_error("form must live on even-dimensional space");
  int n = d / 2;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (q[i][j] != q[j][i]) input_error("form must be symmetric");
  if (det(q) == 0) input_error("form must be nondegenerate");
  auto validate = [&](const RatMatrix& m, const char* name) {
    if (static_cast<int>(m.size()) != d || static_cast<int>(m[0].size()) != n)
      input_error(std::string(name) + " must be a 2n x n matrix of columns");
    if (matrix_rank(m) != n)
      input_error(std::string(name) + " columns must be independent");
    RatMatrix mt(n, std::vector<Rat>(d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < n; ++j) mt[j][i] = m[i][j];
    RatMatrix pairing = matmul(mt, matmul(q, m));
    for (const auto& row : pairing)
      for (const auto& x : row)
        if (x != 0) input_error(std::string(name) + " is not isotropic");
  };
  validate(u, "u");
  validate(uprime, "uprime");

  RatMatrix joined(d, std::vector<Rat>(2 * n));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < n; ++j) joined[i][j] = u[i][j];
    for (int j = 0; j < n; ++j) joined[i][n + j] = uprime[i][j];
  }
  int dim_cap = 2 * n - matrix_rank(joined);
  return (dim_cap - n) % 2 == 0;
}

std::vector<Rat> quadric_psi(const RatMatrix& q, const std::vector<Rat>& v) {
  int d = static_cast<int>(q.size());
  if (d == 0) input_error("form must be nonempty");
  for (int i = 0; i < d; ++i) {
    if (static_cast<int>(q[i].size()) != d) input_error("form must be square");
    for (int j = 0; j < d; ++j)
      if (q[i][j] != q[j][i]) input_error("form must be symmetric");
  }
  if (det(q) == 0) input_error("form is degenerate");
  if (static_cast<int>(v.size()) != d) input_error("direction size mismatch");
  bool zero = true;
  for (const auto& x : v)
    if (x != 0) zero = false;
  if (zero) input_error("direction must be nonzero");

  // On the quadric z_- z_+ = q(u,u) the plane through the poles and the
  // direction v cuts the conic s*r = t^2 q(v,v) in coordinates
  // (s, t, r) -> s P_- + t v + r P_+.
  Rat qv = 0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) qv += v[i] * q[i][j] * v[j];

  // Conic matrix in the plane coordinates; rank 3 when q(v,v) != 0 and the
  // tangent lines at the poles are t-lines either way.
  RatMatrix conic{{0, 0, Rat(1) / 2}, {0, -qv, 0}, {Rat(1) / 2, 0, 0}};
  int rank = matrix_rank(conic);
  check(rank >= 2, "conic degenerated below a line pair");
  check(qv != 0 ? rank == 3 : rank == 2, "conic rank disagrees with q(v,v)");

  // Gradient of s*r - t^2 q(v) at the poles (1,0,0) and (0,0,1).
  std::vector<Rat> grad_sink{0, 0, 1}, grad_source{1, 0, 0};
  check(grad_sink[2] != 0 && grad_source[0] != 0, "conic singular at a pole");
  // Tangent at the sink is {r = 0}, at the source {s = 0}: both give the
  // direction v, so the identification of tangent directions is the identity.
  return v;
}

AmFmResult am_vs_fm(const PlueckerVector& p) {
  if (p.is_zero()) input_error("zero vector has no orbit");
  GradedSplit g = graded_split(p);
  if (g.pieces.size() < 2)
    input_error("vector is a torus fixed point; the orbit map is constant");
  AmFmResult out;
  int lo = g.pieces.begin()->first;
  int hi = g.pieces.rbegin()->first;
  out.degree = hi - lo;
  out.delta_mu = orbit_limit(p, 1).weight - orbit_limit(p, -1).weight;
  out.equal = out.degree == out.delta_mu;
  out.weight_gcd = 0;
  for (const auto& [w, piece] : g.pieces)
    out.weight_gcd = std::gcd(out.weight_gcd, w - lo);
  return out;
}

}  // namespace rhact
