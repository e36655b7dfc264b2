// Tests for Dynkin diagrams: Cartan conventions, parsing, subdiagram
// classification, and isomorphism of marked types.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "rhact/diagram.hpp"

using namespace rhact;

TEST_CASE("admissible shapes") {
  CHECK(admissible_shape('A', 1));
  CHECK(admissible_shape('D', 3));
  CHECK(admissible_shape('E', 8));
  CHECK_FALSE(admissible_shape('B', 1));
  CHECK_FALSE(admissible_shape('C', 1));
  CHECK_FALSE(admissible_shape('D', 2));
  CHECK_FALSE(admissible_shape('E', 5));
  CHECK_FALSE(admissible_shape('E', 9));
  CHECK_FALSE(admissible_shape('F', 3));
  CHECK_FALSE(admissible_shape('G', 3));
  CHECK_FALSE(admissible_shape('A', kMaxRank + 1));
}

TEST_CASE("cartan matrices of the classical families") {
  auto a3 = DynkinDiagram::simple('A', 3);
  CHECK(a3.cartan(1, 1) == 2);
  CHECK(a3.cartan(1, 2) == -1);
  CHECK(a3.cartan(2, 1) == -1);
  CHECK(a3.cartan(1, 3) == 0);

  // B: node n short, so the off-diagonal -2 points at the long side.
  // Symmetrizers scale inversely with the root norms.
  auto b3 = DynkinDiagram::simple('B', 3);
  CHECK(b3.cartan(2, 3) == -2);
  CHECK(b3.cartan(3, 2) == -1);
  CHECK(b3.symmetrizer(1) == 1);
  CHECK(b3.symmetrizer(3) == 2);

  // C: node n long.
  auto c3 = DynkinDiagram::simple('C', 3);
  CHECK(c3.cartan(2, 3) == -1);
  CHECK(c3.cartan(3, 2) == -2);
  CHECK(c3.symmetrizer(1) == 2);
  CHECK(c3.symmetrizer(3) == 1);

  auto f4 = DynkinDiagram::simple('F', 4);
  CHECK(f4.cartan(2, 3) == -2);
  CHECK(f4.cartan(3, 2) == -1);
  CHECK(f4.adjacent(1, 2));
  CHECK_FALSE(f4.adjacent(1, 3));

  auto g2 = DynkinDiagram::simple('G', 2);
  CHECK(g2.cartan(1, 2) == -1);
  CHECK(g2.cartan(2, 1) == -3);

  // Symmetrized Cartan d_i C[i][j] must be symmetric.
  for (char letter : {'B', 'C', 'F', 'G'}) {
    int rank = letter == 'F' ? 4 : letter == 'G' ? 2 : 4;
    auto d = DynkinDiagram::simple(letter, rank);
    for (int i = 1; i <= rank; ++i)
      for (int j = 1; j <= rank; ++j)
        CHECK(d.symmetrizer(i) * d.cartan(i, j) ==
              d.symmetrizer(j) * d.cartan(j, i));
  }
}

TEST_CASE("D and E adjacency") {
  auto d5 = DynkinDiagram::simple('D', 5);
  CHECK(d5.adjacent(3, 4));
  CHECK(d5.adjacent(3, 5));
  CHECK_FALSE(d5.adjacent(4, 5));

  auto e7 = DynkinDiagram::simple('E', 7);
  CHECK(e7.adjacent(2, 4));
  CHECK_FALSE(e7.adjacent(2, 3));
  CHECK(e7.adjacent(1, 3));
  CHECK(e7.adjacent(3, 4));
  CHECK(e7.adjacent(4, 5));
  CHECK(e7.adjacent(5, 6));
  CHECK(e7.adjacent(6, 7));
  CHECK(e7.neighbors(4) == std::vector<int>{2, 3, 5});
}

TEST_CASE("products and node bookkeeping") {
  auto d = DynkinDiagram::product({{'A', 2}, {'B', 3}});
  CHECK(d.rank() == 5);
  CHECK(d.str() == "A2xB3");
  CHECK(d.factor_of(2) == 0);
  CHECK(d.factor_of(3) == 1);
  CHECK(d.local_label(3) == 1);
  CHECK(d.local_label(5) == 3);
  CHECK(d.global_node(1, 2) == 4);
  CHECK_FALSE(d.adjacent(2, 3));
  CHECK(d.cartan(2, 3) == 0);
  CHECK(d.cartan(4, 5) == -2);
}

TEST_CASE("variety literals parse and print") {
  auto v = parse_variety("A3(2)");
  CHECK(v.diagram.str() == "A3");
  CHECK(v.marks == std::set<int>{2});
  CHECK(v.str() == "A3(2)");

  auto w = parse_variety("A1(1)xB2(1)");
  CHECK(w.diagram.factor_count() == 2);
  CHECK(w.marks == std::set<int>{1, 2});
  CHECK(w.str() == "A1(1)xB2(1)");

  auto u = parse_variety("D5(4,5)");
  CHECK(u.marks == std::set<int>{4, 5});

  auto plain = parse_variety("E7");
  CHECK(plain.marks.empty());
  CHECK(plain.is_point());
  CHECK(plain.str() == "E7");
  CHECK(parse_variety("pt").str() == "pt");

  // Marks are per factor: the second factor's (1) is global node 4.
  auto prod = parse_variety("A3xA2(1)");
  CHECK(prod.marks == std::set<int>{4});
}

TEST_CASE("variety literals reject malformed input with positions") {
  auto expect_error = [](const std::string& text, const std::string& fragment) {
    try {
      parse_variety(text);
      FAIL_CHECK("no error for ", text);
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()).find("pos ") == 0);
      CHECK(std::string(e.what()).find(fragment) != std::string::npos);
    }
  };
  expect_error("Q5(1)", "letter");
  expect_error("A", "number");
  expect_error("A3(9)", "mark out of range");
  expect_error("A3(", "number");
  expect_error("A3(2)junk", "trailing");
  expect_error("", "letter");
  expect_error("B1(1)", "inadmissible");
}

TEST_CASE("subdiagram classification relabels canonically") {
  // E6 minus node 1 is D5 with the branch at old node 4.
  auto e6 = DynkinDiagram::simple('E', 6);
  auto s = subdiagram(e6, {2, 3, 4, 5, 6});
  CHECK(s.diagram.str() == "D5");
  CHECK(s.new_to_old == std::vector<int>{6, 5, 4, 2, 3});
  CHECK(s.old_to_new.at(6) == 1);
  CHECK(s.old_to_new.at(2) == 4);

  // E7 minus node 7 is E6 with its own labels kept.
  auto e7 = DynkinDiagram::simple('E', 7);
  auto t = subdiagram(e7, {1, 2, 3, 4, 5, 6});
  CHECK(t.diagram.str() == "E6");
  CHECK(t.new_to_old == std::vector<int>{1, 2, 3, 4, 5, 6});

  // D4 minus a tip is A3 through the center.
  auto d4 = DynkinDiagram::simple('D', 4);
  auto u = subdiagram(d4, {2, 3, 4});
  CHECK(u.diagram.str() == "A3");
  CHECK(u.new_to_old == std::vector<int>{3, 2, 4});

  // B4 minus node 1 keeps the short node last.
  auto b4 = DynkinDiagram::simple('B', 4);
  auto b = subdiagram(b4, {2, 3, 4});
  CHECK(b.diagram.str() == "B3");
  CHECK(b.new_to_old == std::vector<int>{2, 3, 4});

  // C4 minus node 4 is the A3 of short roots.
  auto c4 = DynkinDiagram::simple('C', 4);
  auto c = subdiagram(c4, {1, 2, 3});
  CHECK(c.diagram.str() == "A3");
  CHECK(c.new_to_old == std::vector<int>{1, 2, 3});

  // F4 minus an end node leaves B3 / C3.
  auto f4 = DynkinDiagram::simple('F', 4);
  CHECK(subdiagram(f4, {1, 2, 3}).diagram.str() == "B3");
  CHECK(subdiagram(f4, {2, 3, 4}).diagram.str() == "C3");

  // Dropping an interior node splits into components ordered by old label.
  auto a5 = DynkinDiagram::simple('A', 5);
  auto split = subdiagram(a5, {1, 3, 4, 5});
  CHECK(split.diagram.str() == "A1xA3");
  CHECK(split.new_to_old == std::vector<int>{1, 3, 4, 5});

  // D5 minus the branch node leaves a path and two isolated tips.
  auto d5 = DynkinDiagram::simple('D', 5);
  auto y = subdiagram(d5, {1, 2, 4, 5});
  CHECK(y.diagram.str() == "A2xA1xA1");

  // Low-rank D normalizations arise from abstract classification.
  auto d6 = DynkinDiagram::simple('D', 6);
  CHECK(subdiagram(d6, {3, 4, 5, 6}).diagram.str() == "D4");
  CHECK(subdiagram(d6, {4, 5, 6}).diagram.str() == "A3");
}

TEST_CASE("canonical type drops point factors and sorts") {
  auto v = parse_variety("A3xA2(1)");
  auto c = canonical_type(v);
  CHECK(c.str() == "A2(1)");

  MarkedVariety w;
  w.diagram = DynkinDiagram::product({{'B', 2}, {'A', 1}});
  w.marks = {1, 3};
  CHECK(canonical_type(w).str() == "A1(1)xB2(1)");

  MarkedVariety none;
  none.diagram = DynkinDiagram::simple('A', 4);
  CHECK(canonical_type(none).is_point());
  CHECK(canonical_type(none).str() == "pt");
}

TEST_CASE("join concatenates varieties") {
  auto a = parse_variety("A2(1)");
  auto b = parse_variety("B2(2)");
  auto j = join_varieties(a, b);
  CHECK(j.str() == "A2(1)xB2(2)");
  CHECK(j.marks == std::set<int>{1, 4});
  auto v = join_varieties(parse_variety("A1"), b);
  CHECK(v.diagram.str() == "A1xB2");
  CHECK(v.marks == std::set<int>{3});
}

TEST_CASE("isomorphic types recognizes diagram automorphisms") {
  auto iso = [](const std::string& x, const std::string& y) {
    return isomorphic_types(parse_variety(x), parse_variety(y));
  };
  CHECK(iso("A2(1)", "A2(2)"));
  CHECK(iso("A3(1)", "A3(3)"));
  CHECK_FALSE(iso("A3(1)", "A3(2)"));
  CHECK(iso("D5(4)", "D5(5)"));
  CHECK_FALSE(iso("D5(1)", "D5(5)"));
  CHECK(iso("D4(1)", "D4(3)"));
  CHECK(iso("D4(1)", "D4(4)"));
  CHECK_FALSE(iso("D4(1)", "D4(2)"));
  CHECK(iso("E6(1)", "E6(6)"));
  CHECK(iso("E6(3)", "E6(5)"));
  CHECK_FALSE(iso("E6(1)", "E6(2)"));
  CHECK(iso("A1(1)xA2(1)", "A2(2)xA1(1)"));
  CHECK_FALSE(iso("A1(1)xA2(1)", "A2(1)"));
  CHECK(iso("pt", "pt"));
  CHECK_FALSE(iso("pt", "A1(1)"));
  // D3 = A3: the spinor mark on D3 matches a line mark on A3.
  MarkedVariety d3;
  d3.diagram = DynkinDiagram::simple('D', 3);
  d3.marks = {1};
  CHECK(canonical_type(d3).diagram.str() == "D3");
  // Multiple marks on one factor.
  CHECK(iso("A3(1,2)", "A3(2,3)"));
  CHECK_FALSE(iso("A3(1,2)", "A3(1,3)"));
}
