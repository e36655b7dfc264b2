// Cocharacter gradings and the classification of short ones.
#include "rhact/grading.hpp"

namespace rhact {

Cochar cochar_single(int rank, int node) {
  check(node >= 1 && node <= rank, "cocharacter node out of range");
  Cochar s(rank, 0);
  s[node - 1] = 1;
  return s;
}

Long eval_cochar(const Cochar& sigma, const RootVec& v) {
  check(sigma.size() == v.size(), "cocharacter rank mismatch");
  Long out = 0;
  for (size_t k = 0; k < v.size(); ++k) out += sigma[k] * v[k];
  return out;
}

std::map<Long, Long> grade(const RootSystem& rs, const Cochar& sigma) {
  std::map<Long, Long> dims;
  dims[0] = rs.rank();  // Cartan subalgebra
  for (const auto& v : rs.positive_roots()) {
    Long w = eval_cochar(sigma, v);
    ++dims[w];
    ++dims[-w];
  }
  return dims;
}

bool is_short_grading(const RootSystem& rs, const Cochar& sigma) {
  for (const auto& v : rs.positive_roots())
    if (eval_cochar(sigma, v) > 1) return false;
  return true;
}

std::vector<ShortGradingRow> classify_short_gradings(int max_rank) {
  check(max_rank >= 1 && max_rank <= kMaxRank, "max_rank out of range");
  std::vector<ShortGradingRow> rows;
  auto scan = [&](char letter, int rank) {
    DynkinDiagram d = DynkinDiagram::simple(letter, rank);
    RootSystem rs(d);
    for (int i = 1; i <= rank; ++i) {
      if (!is_short_grading(rs, cochar_single(rank, i))) continue;
      std::set<int> rest;
      for (int k = 1; k <= rank; ++k)
        if (k != i) rest.insert(k);
      rows.push_back({letter, rank, i, subdiagram(d, rest).diagram});
    }
  };
  for (int n = 1; n <= max_rank; ++n) scan('A', n);
  for (int n = 2; n <= max_rank; ++n) scan('B', n);
  for (int n = 2; n <= max_rank; ++n) scan('C', n);
  for (int n = 3; n <= max_rank; ++n) scan('D', n);
  for (int n = 6; n <= 8 && n <= max_rank; ++n) scan('E', n);
  if (max_rank >= 4) scan('F', 4);
  if (max_rank >= 2) scan('G', 2);
  return rows;
}

bool equalized_action(const RootSystem& rs, const std::set<int>& marks,
                      const Cochar& sigma) {
  for (const auto& v : rs.positive_roots()) {
    bool moving = false;
    for (int m : marks)
      if (v[m - 1] != 0) {
        moving = true;
        break;
      }
    if (!moving) continue;
    Long w = eval_cochar(sigma, v);
    if (w > 1 || w < -1) return false;
  }
  return true;
}

}  // namespace rhact
