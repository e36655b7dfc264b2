// Command-line front end: table generation, fixed-point reports, exact
// inversion/quadric verification, and golden-file comparison.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rhact/pluecker.hpp"
#include "rhact/render.hpp"

namespace rhact {

// Exit codes: 0 success, 1 input error, 2 golden mismatch.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

struct TableOptions {
  int max_rank = 0;  // 0 = per-table default (10 for table 1, 8 otherwise)
  std::string cache_dir;
};

// Build catalog table `id` (1..6).
Table build_catalog_table(int id, const TableOptions& opt);

// Exact rational rendering "p/q" (integer part only when q = 1).
std::string rat_str(const Rat& r);

}  // namespace rhact
