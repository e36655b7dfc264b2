// Tests for exact Pluecker computations: graph planes, Grassmann relations,
// graded pieces, orbit limits, the inversion map, form compatibility,
// spinor families, and the quadric identification.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <string>
#include <vector>

#include "rhact/pluecker.hpp"

using namespace rhact;

namespace {

template <class F>
void expect_error(F&& f, const std::string& fragment) {
  try {
    f();
    FAIL_CHECK("expected an error mentioning '" << fragment << "'");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find(fragment) != std::string::npos);
  }
}

RatMatrix random_matrix(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-9, 9);
  RatMatrix a(n, std::vector<Rat>(n));
  do {
    for (auto& row : a)
      for (auto& x : row) x = entry(rng);
  } while (det(a) == 0);
  return a;
}

RatMatrix symmetrize(RatMatrix a, int sign) {
  int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      a[j][i] = sign * a[i][j];
    }
    if (sign < 0) a[i][i] = 0;
  }
  return a;
}

// Transpose of the cofactor matrix, computed from first principles.
RatMatrix adjugate(const RatMatrix& a) {
  int n = static_cast<int>(a.size());
  if (n == 1) return {{1}};
  RatMatrix adj(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RatMatrix minor(n - 1, std::vector<Rat>(n - 1));
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor[rr][cc++] = a[r][c];
        }
        ++rr;
      }
      Rat m = det(minor);
      adj[i][j] = (i + j) % 2 == 0 ? m : -m;
    }
  return adj;
}

RatMatrix stack_graph(const RatMatrix& a) {
  int n = static_cast<int>(a.size());
  RatMatrix m(2 * n, std::vector<Rat>(n, 0));
  for (int i = 0; i < n; ++i) {
    m[i][i] = 1;
    for (int j = 0; j < n; ++j) m[n + i][j] = a[i][j];
  }
  return m;
}

// The split symmetric form pairing V_- with V_+.
RatMatrix split_form(int n) {
  RatMatrix q(2 * n, std::vector<Rat>(2 * n, 0));
  for (int i = 0; i < n; ++i) q[i][n + i] = q[n + i][i] = 1;
  return q;
}

}  // namespace

TEST_CASE("colex subset indexing") {
  SubsetIndexer idx(2);
  CHECK(idx.count() == 6);
  CHECK(idx.subset_at(0) == std::vector<int>{1, 2});
  CHECK(idx.subset_at(1) == std::vector<int>{1, 3});
  CHECK(idx.subset_at(2) == std::vector<int>{2, 3});
  CHECK(idx.subset_at(3) == std::vector<int>{1, 4});
  CHECK(idx.subset_at(4) == std::vector<int>{2, 4});
  CHECK(idx.subset_at(5) == std::vector<int>{3, 4});

  SubsetIndexer idx3(3);
  CHECK(idx3.count() == 20);
  for (int s = 0; s < idx3.count(); ++s)
    CHECK(idx3.index_of(idx3.subset_at(s)) == s);

  CHECK(subset_weight({1, 2}, 2) == 0);
  CHECK(subset_weight({1, 3}, 2) == 1);
  CHECK(subset_weight({3, 4}, 2) == 2);
}

TEST_CASE("pluecker coordinates of graph planes") {
  PlueckerVector p1 = plucker_of_graph({{Rat(5)}});
  CHECK(p1.c == std::vector<Rat>{1, 5});

  Rat a = 2, b = 3, c = 5, d = 7;
  PlueckerVector p = plucker_of_graph({{a, b}, {c, d}});
  SubsetIndexer idx(2);
  CHECK(p.c[idx.index_of({1, 2})] == 1);
  CHECK(p.c[idx.index_of({1, 3})] == b);
  CHECK(p.c[idx.index_of({1, 4})] == d);
  CHECK(p.c[idx.index_of({2, 3})] == -a);
  CHECK(p.c[idx.index_of({2, 4})] == -c);
  CHECK(p.c[idx.index_of({3, 4})] == a * d - b * c);

  // Against row minors of the stacked matrix, for a denser case.
  std::mt19937_64 rng(7);
  RatMatrix m = random_matrix(3, rng);
  PlueckerVector p3 = plucker_of_graph(m);
  RatMatrix stacked = stack_graph(m);
  SubsetIndexer idx3(3);
  for (int s = 0; s < idx3.count(); ++s) {
    const auto& rows = idx3.subset_at(s);
    RatMatrix sub(3, std::vector<Rat>(3));
    for (int r = 0; r < 3; ++r) sub[r] = stacked[rows[r] - 1];
    CHECK(p3.c[s] == det(sub));
  }
}

TEST_CASE("grassmann relations hold on graphs and fail off them") {
  std::mt19937_64 rng(11);
  for (int n = 2; n <= 5; ++n) {
    PlueckerVector p = plucker_of_graph(random_matrix(n, rng));
    CHECK(plucker_relations_hold(p, rng));
  }
  PlueckerVector bad = plucker_of_graph(random_matrix(2, rng));
  bad.c[5] += 1;
  CHECK_FALSE(plucker_relations_hold(bad, rng));
  PlueckerVector bad3 = plucker_of_graph(random_matrix(3, rng));
  bad3.c[0] += 1;
  CHECK_FALSE(plucker_relations_hold(bad3, rng));
}

TEST_CASE("graded split and exact reassembly") {
  std::mt19937_64 rng(13);
  RatMatrix a = random_matrix(3, rng);
  PlueckerVector p = plucker_of_graph(a);
  GradedSplit g = graded_split(p);
  CHECK(g.pieces.size() == 4);
  SubsetIndexer idx(3);
  for (const auto& [w, piece] : g.pieces)
    for (int s = 0; s < idx.count(); ++s)
      if (piece[s] != 0) CHECK(subset_weight(idx.subset_at(s), 3) == w);
  CHECK(g.pieces.at(0)[idx.index_of({1, 2, 3})] == 1);
  PlueckerVector back = reassemble(g);
  CHECK(back.n == p.n);
  CHECK(back.c == p.c);
}

TEST_CASE("orbit limits pick the extremal graded pieces") {
  std::mt19937_64 rng(17);
  RatMatrix a = random_matrix(3, rng);
  PlueckerVector p = plucker_of_graph(a);

  OrbitLimit lo = orbit_limit(p, -1);
  CHECK(lo.weight == 0);
  REQUIRE(lo.next_weight.has_value());
  CHECK(*lo.next_weight == 1);
  SubsetIndexer idx(3);
  CHECK(lo.piece[idx.index_of({1, 2, 3})] == 1);

  OrbitLimit hi = orbit_limit(p, 1);
  CHECK(hi.weight == 3);
  REQUIRE(hi.next_weight.has_value());
  CHECK(*hi.next_weight == 2);
  CHECK(hi.piece[idx.index_of({4, 5, 6})] == det(a));

  // A fixed point has a single piece and no neighbor.
  PlueckerVector fixed = plucker_of_graph(RatMatrix(2, std::vector<Rat>(2, 0)));
  OrbitLimit single = orbit_limit(fixed, -1);
  CHECK(single.weight == 0);
  CHECK_FALSE(single.next_weight.has_value());
  CHECK(orbit_limit(fixed, 1).weight == 0);

  PlueckerVector zero;
  zero.n = 2;
  zero.c.assign(6, 0);
  expect_error([&] { orbit_limit(zero, -1); }, "zero");
}

TEST_CASE("reading maps off graded pieces") {
  std::mt19937_64 rng(19);
  RatMatrix a = random_matrix(3, rng);
  GradedSplit g = graded_split(plucker_of_graph(a));
  CHECK(identify_hom(g, -1) == a);
  CHECK(identify_hom(g, 1) == adjugate(a));

  GradedSplit gi = graded_split(plucker_of_graph(identity_matrix(3)));
  CHECK(identify_hom(gi, -1) == identity_matrix(3));
  CHECK(identify_hom(gi, 1) == identity_matrix(3));

  RatMatrix diag{{2, 0, 0}, {0, 3, 0}, {0, 0, 5}};
  RatMatrix inv_diag{{Rat(1) / 2, 0, 0}, {0, Rat(1) / 3, 0}, {0, 0, Rat(1) / 5}};
  GradedSplit gd = graded_split(plucker_of_graph(diag));
  CHECK(is_scalar_multiple(identify_hom(gd, 1), inv_diag));

  GradedSplit gu = graded_split(plucker_of_graph({{1, 1}, {0, 1}}));
  CHECK(identify_hom(gu, 1) == RatMatrix{{1, -1}, {0, 1}});

  GradedSplit gz = graded_split(plucker_of_graph(RatMatrix(2, std::vector<Rat>(2, 0))));
  expect_error([&] { identify_hom(gz, -1); }, "vanishes");
}

TEST_CASE("inversion map is the exact adjugate") {
  std::mt19937_64 rng(23);
  for (int n = 1; n <= 5; ++n) {
    for (int rep = 0; rep < 10; ++rep) {
      RatMatrix a = random_matrix(n, rng);
      InversionResult r = inversion_map(a);
      CHECK(r.c == det(a));
      CHECK(r.b == adjugate(a));
      RatMatrix prod = matmul(r.b, a);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          CHECK(prod[i][j] == (i == j ? r.c : Rat(0)));
      // Applying the map twice returns to the start projectively.
      CHECK(is_scalar_multiple(inversion_map(r.b).b, a));
    }
  }

  RatMatrix singular{{1, 2}, {2, 4}};
  expect_error([&] { inversion_map(singular); }, "singular (det = 0)");
}

TEST_CASE("inversion is equivariant for the two-sided group action") {
  std::mt19937_64 rng(29);
  for (int rep = 0; rep < 5; ++rep) {
    RatMatrix a = random_matrix(3, rng);
    RatMatrix p = random_matrix(3, rng);
    RatMatrix q = random_matrix(3, rng);
    RatMatrix lhs = inversion_map(matmul(matmul(p, a), q)).b;
    RatMatrix rhs = matmul(matmul(adjugate(q), adjugate(a)), adjugate(p));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("form compatibility of graph planes") {
  std::mt19937_64 rng(31);
  RatMatrix sym = symmetrize(random_matrix(3, rng), 1);
  auto rs = form_checks(sym, 's');
  CHECK(rs.isotropic);
  CHECK(rs.shape_matches);
  CHECK(rs.closure_ok);
  CHECK_FALSE(rs.structurally_singular);
  // The same symmetric matrix is not isotropic for the orthogonal form.
  auto ro = form_checks(sym, 'o');
  CHECK_FALSE(ro.isotropic);
  CHECK_FALSE(ro.shape_matches);

  RatMatrix skew = symmetrize(random_matrix(4, rng), -1);
  while (det(skew) == 0) skew = symmetrize(random_matrix(4, rng), -1);
  auto rk = form_checks(skew, 'o');
  CHECK(rk.isotropic);
  CHECK(rk.shape_matches);
  CHECK(rk.closure_ok);
  CHECK_FALSE(rk.structurally_singular);

  RatMatrix skew3 = symmetrize(random_matrix(3, rng), -1);
  auto r3 = form_checks(skew3, 'o');
  CHECK(r3.isotropic);
  CHECK(r3.shape_matches);
  CHECK(r3.structurally_singular);
  CHECK(det(skew3) == 0);

  RatMatrix generic{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}};
  auto rg = form_checks(generic, 's');
  CHECK_FALSE(rg.isotropic);
  CHECK_FALSE(rg.shape_matches);

  expect_error([&] { form_checks(generic, 'x'); }, "'s' or 'o'");
}

TEST_CASE("spinor family parity") {
  for (int n = 3; n <= 8; ++n) {
    RatMatrix q = split_form(n);
    RatMatrix vminus(2 * n, std::vector<Rat>(n, 0));
    RatMatrix vplus(2 * n, std::vector<Rat>(n, 0));
    for (int i = 0; i < n; ++i) {
      vminus[i][i] = 1;
      vplus[n + i][i] = 1;
    }
    CHECK(family_parity(vminus, vplus, q) == (n % 2 == 0));
    CHECK(family_parity(vminus, vminus, q));
    CHECK(family_parity(vplus, vplus, q));
  }

  // The graph of a skew matrix is isotropic and lands in the family of V_-.
  std::mt19937_64 rng(37);
  RatMatrix skew = symmetrize(random_matrix(4, rng), -1);
  RatMatrix q = split_form(4);
  RatMatrix vminus(8, std::vector<Rat>(4, 0));
  for (int i = 0; i < 4; ++i) vminus[i][i] = 1;
  CHECK(family_parity(vminus, stack_graph(skew), q));

  RatMatrix not_isotropic(8, std::vector<Rat>(4, 0));
  for (int i = 0; i < 4; ++i) not_isotropic[i][i] = not_isotropic[4 + i][i] = 1;
  expect_error([&] { family_parity(vminus, not_isotropic, q); },
               "not isotropic");
}

TEST_CASE("quadric tangent identification") {
  RatMatrix q = identity_matrix(3);
  std::vector<Rat> v{1, 2, 3};
  CHECK(quadric_psi(q, v) == v);
  CHECK(quadric_psi(q, quadric_psi(q, v)) == v);

  // Linearity, checked exactly on a combination.
  std::vector<Rat> u{4, 0, -1};
  std::vector<Rat> combo(3);
  for (int i = 0; i < 3; ++i) combo[i] = 3 * v[i] - 2 * u[i];
  auto pv = quadric_psi(q, v);
  auto pu = quadric_psi(q, u);
  auto pc = quadric_psi(q, combo);
  for (int i = 0; i < 3; ++i) CHECK(pc[i] == 3 * pv[i] - 2 * pu[i]);

  // Null directions still map: the conic degenerates to a line pair but the
  // identification survives.
  RatMatrix hyp{{0, 1}, {1, 0}};
  std::vector<Rat> null{1, 0};
  CHECK(quadric_psi(hyp, null) == null);

  RatMatrix degenerate{{1, 0}, {0, 0}};
  expect_error([&] { quadric_psi(degenerate, null); }, "degenerate");
  expect_error([&] { quadric_psi(q, {0, 0, 0}); }, "nonzero");
  expect_error([&] { quadric_psi(q, {1, 2}); }, "size mismatch");
  RatMatrix asym{{0, 1}, {2, 0}};
  expect_error([&] { quadric_psi(asym, null); }, "symmetric");
}

TEST_CASE("algebraic and fixed-point degrees of orbit maps") {
  std::mt19937_64 rng(41);
  for (int n = 2; n <= 5; ++n) {
    auto r = am_vs_fm(plucker_of_graph(random_matrix(n, rng)));
    CHECK(r.degree == n);
    CHECK(r.delta_mu == n);
    CHECK(r.equal);
    CHECK(r.weight_gcd == 1);
  }

  auto sym = am_vs_fm(plucker_of_graph(symmetrize(random_matrix(3, rng), 1)));
  CHECK(sym.degree == 3);
  CHECK(sym.equal);

  // A skew graph in the ambient embedding: the degree doubles the spinor
  // delta, which is n/2 for these models.
  RatMatrix skew = symmetrize(random_matrix(4, rng), -1);
  while (det(skew) == 0) skew = symmetrize(random_matrix(4, rng), -1);
  auto sk = am_vs_fm(plucker_of_graph(skew));
  CHECK(sk.degree == 4);
  CHECK(sk.degree == 2 * (4 / 2));
  CHECK(sk.equal);

  // Two adjacent graded pieces trace a line.
  auto line = am_vs_fm(plucker_of_graph({{0, 3}, {0, 0}}));
  CHECK(line.degree == 1);
  CHECK(line.equal);

  expect_error(
      [&] { am_vs_fm(plucker_of_graph(RatMatrix(2, std::vector<Rat>(2, 0)))); },
      "fixed point");
  PlueckerVector zero;
  zero.n = 2;
  zero.c.assign(6, 0);
  expect_error([&] { am_vs_fm(zero); }, "zero");
}
