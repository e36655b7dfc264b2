// Command-line front end and catalog table builders.
#include "rhact/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "rhact/torusact.hpp"

namespace rhact {

std::string rat_str(const Rat& r) {
  std::ostringstream out;
  out << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1)
    out << "/" << boost::multiprecision::denominator(r);
  return out.str();
}

namespace {

std::string type_str(const MarkedVariety& v) { return v.str(); }

std::string int_str(Long v) { return std::to_string(v); }

std::string set_str(const std::set<int>& s) {
  if (s.empty()) return "-";
  std::string out;
  for (int x : s) {
    if (!out.empty()) out += ",";
    out += std::to_string(x);
  }
  return out;
}

std::string cochar_str(const Cochar& sigma) {
  std::string out;
  for (size_t k = 0; k < sigma.size(); ++k) {
    for (Long c = 0; c < sigma[k]; ++c) {
      if (!out.empty()) out += "+";
      out += "s" + std::to_string(k + 1);
    }
  }
  return out.empty() ? "-" : out;
}

std::string sigma_plus_str(const SigmaPlusData& sp) {
  std::string out;
  for (int k = 1; k <= sp.sub.diagram.rank(); ++k) {
    if (sp.sigma[k - 1] == 0) continue;
    if (!out.empty()) out += "+";
    out += "s" + std::to_string(sp.sub.diagram.local_label(k));
  }
  return out.empty() ? "-" : out;
}

std::string diagram_or_dash(const DynkinDiagram& d) {
  return d.rank() == 0 ? "-" : d.str();
}

std::string type_list_str(const std::vector<MarkedVariety>& list) {
  if (list.empty()) return "none";
  std::string out;
  for (const auto& v : list) {
    if (!out.empty()) out += " + ";
    out += type_str(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exact polynomial fitting for the derived rows of tables 3 and 6.

std::optional<std::vector<Rat>> fit_polynomial(
    std::vector<std::pair<Long, Long>> pts, int max_deg) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  for (size_t k = 1; k < pts.size(); ++k)
    if (pts[k].first == pts[k - 1].first) return std::nullopt;  // inconsistent
  for (int deg = 0; deg <= max_deg && deg < static_cast<int>(pts.size());
       ++deg) {
    RatMatrix v(deg + 1, std::vector<Rat>(deg + 1));
    RatMatrix y(deg + 1, std::vector<Rat>(1));
    for (int r = 0; r <= deg; ++r) {
      Rat x = pts[r].first, p = 1;
      for (int c = 0; c <= deg; ++c) {
        v[r][c] = p;
        p *= x;
      }
      y[r][0] = pts[r].second;
    }
    RatMatrix coeffs = matmul(inverse(v), y);
    bool all_match = true;
    for (const auto& [x, fx] : pts) {
      Rat acc = 0, p = 1;
      for (int c = 0; c <= deg; ++c) {
        acc += coeffs[c][0] * p;
        p *= x;
      }
      if (acc != fx) {
        all_match = false;
        break;
      }
    }
    if (!all_match) continue;
    std::vector<Rat> out(deg + 1);
    for (int c = 0; c <= deg; ++c) out[c] = coeffs[c][0];
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
  }
  return std::nullopt;
}

std::string poly_str(const std::vector<Rat>& coeffs, const std::string& var) {
  using boost::multiprecision::cpp_int;
  cpp_int lcm = 1;
  for (const auto& c : coeffs)
    lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(c));
  std::vector<cpp_int> ints(coeffs.size());
  for (size_t k = 0; k < coeffs.size(); ++k) {
    Rat scaled = coeffs[k] * Rat(lcm);
    ints[k] = boost::multiprecision::numerator(scaled);
  }
  std::string body;
  int terms = 0;
  for (int k = static_cast<int>(ints.size()) - 1; k >= 0; --k) {
    if (ints[k] == 0) continue;
    cpp_int mag = ints[k] < 0 ? cpp_int(-ints[k]) : ints[k];
    std::string term;
    if (mag != 1 || k == 0) term += mag.str();
    if (k >= 1) term += var;
    if (k >= 2) term += "^" + std::to_string(k);
    if (body.empty())
      body = (ints[k] < 0 ? "-" : "") + term;
    else
      body += (ints[k] < 0 ? " - " : " + ") + term;
    ++terms;
  }
  if (body.empty()) body = "0";
  if (lcm == 1) return body;
  if (terms <= 1) return body + "/" + lcm.str();
  return "(" + body + ")/" + lcm.str();
}

// ---------------------------------------------------------------------------
// Catalog tables.

int resolved_max_rank(int id, const TableOptions& opt) {
  if (opt.max_rank > 0) return opt.max_rank;
  return id == 1 ? 10 : 8;
}

Table build_table1(const TableOptions& opt) {
  int mr = resolved_max_rank(1, opt);
  Table t;
  t.id = 1;
  t.title = "Nodes carrying a short grading";
  t.headers = {"diagram", "node", "transversal"};
  for (const auto& row : classify_short_gradings(mr))
    t.rows.push_back({FactorShape{row.letter, row.rank}.str(),
                      std::to_string(row.node), diagram_or_dash(row.transversal)});
  t.params = {{"max_rank", std::to_string(mr)},
              {"rows", std::to_string(t.rows.size())}};
  return t;
}

void append_report_rows(Table* t, const ActionReport& rep) {
  for (const auto& c : rep.components)
    t->rows.push_back({type_str(rep.variety), cochar_str(rep.sigma),
                       int_str(c.weight), type_str(c.ctype),
                       std::to_string(c.dim), std::to_string(c.nu_plus),
                       std::to_string(c.nu_minus), int_str(c.hfixed)});
}

// The fixed domain of standard actions tabulated in table 2.
std::vector<std::pair<MarkedVariety, int>> table2_domain(int mr) {
  std::vector<std::pair<MarkedVariety, int>> dom;
  auto add = [&](char letter, int rank, int mark, int cochar_node) {
    MarkedVariety v;
    v.diagram = DynkinDiagram::simple(letter, rank);
    v.marks = {mark};
    dom.emplace_back(v, cochar_node);
  };
  for (int n = 1; n <= std::min(7, mr); ++n)
    for (int i = 1; i <= n; ++i) {
      add('A', n, i, i);
      if (n + 1 - i != i) add('A', n, i, n + 1 - i);
    }
  for (int n = 2; n <= std::min(6, mr); ++n) add('C', n, n, n);
  for (int n = 2; n <= std::min(8, mr); ++n) add('B', n, 1, 1);
  for (int n = 3; n <= std::min(8, mr); ++n) add('D', n, 1, 1);
  for (int n = 3; n <= std::min(8, mr); ++n) add('D', n, n, n);
  for (int n = 3; n <= std::min(8, mr); ++n)
    add('D', n, n - 1, n % 2 == 1 ? n : n - 1);
  if (mr >= 6) {
    add('E', 6, 1, 1);
    add('E', 6, 6, 1);
  }
  if (mr >= 7) add('E', 7, 7, 7);
  return dom;
}

Table build_table2(const TableOptions& opt) {
  int mr = resolved_max_rank(2, opt);
  Table t;
  t.id = 2;
  t.title = "Fixed components of the standard equalized actions";
  t.headers = {"variety", "cochar", "weight", "component",
               "dim",     "nu_plus", "nu_minus", "hfixed"};
  for (const auto& [v, node] : table2_domain(mr)) {
    RootSystem rs(v.diagram);
    auto rep = fixed_components(rs, v.marks, cochar_single(rs.rank(), node),
                                opt.cache_dir);
    append_report_rows(&t, rep);
  }
  t.params = {{"max_rank", std::to_string(mr)},
              {"rows", std::to_string(t.rows.size())}};
  return t;
}

std::string isolated_family_label(char letter, int rank, int node) {
  if (letter == 'A') return "A(2n-1,n)";
  if (letter == 'B') return "B(n,1)";
  if (letter == 'C') return "C(n,n)";
  if (letter == 'D' && node == 1) return "D(n,1)";
  if (letter == 'D') return "D(n,n)";
  check(letter == 'E' && rank == 7, "unexpected isolated-extremes family");
  return "E7(7)";
}

Table build_table3(const TableOptions& opt) {
  int mr = resolved_max_rank(3, opt);
  Table t;
  t.id = 3;
  t.title = "Equalized actions with isolated sink and source";
  t.headers = {"family", "variety", "dim", "delta", "kind"};

  // Concrete rows up to mr; fitting data extends to kMaxRank so the derived
  // polynomials are pinned by enough ranks.
  auto all_rows = classify_isolated_both(kMaxRank);
  struct FamilyData {
    std::vector<std::array<std::string, 3>> concrete;  // variety, dim, delta
    std::vector<std::pair<Long, Long>> dim_pts, delta_pts;
  };
  std::map<std::string, FamilyData> families;
  for (const auto& row : all_rows) {
    char letter = row.variety.diagram.factors()[0].letter;
    int rank = row.variety.diagram.factors()[0].rank;
    std::string label = isolated_family_label(letter, rank, row.node);
    Long n = letter == 'A' ? (rank + 1) / 2 : rank;
    auto& fam = families[label];
    if (rank <= mr)
      fam.concrete.push_back({type_str(row.variety), std::to_string(row.dim),
                              int_str(row.delta)});
    fam.dim_pts.emplace_back(n, row.dim);
    fam.delta_pts.emplace_back(n, row.delta);
  }
  for (const auto& [label, fam] : families) {
    for (const auto& row : fam.concrete)
      t.rows.push_back({label, row[0], row[1], row[2], "exact"});
    std::set<Long> ranks;
    for (const auto& [x, y] : fam.dim_pts) ranks.insert(x);
    if (ranks.size() < 3) continue;
    auto dim_fit = fit_polynomial(fam.dim_pts, 3);
    auto delta_fit = fit_polynomial(fam.delta_pts, 3);
    if (dim_fit && delta_fit)
      t.rows.push_back({label, label, poly_str(*dim_fit, "n"),
                        poly_str(*delta_fit, "n"), "derived"});
  }
  t.params = {{"max_rank", std::to_string(mr)},
              {"fit_rank", std::to_string(kMaxRank)},
              {"rows", std::to_string(t.rows.size())}};
  return t;
}

Table build_table4(const TableOptions& opt) {
  int mr = resolved_max_rank(4, opt);
  Table t;
  t.id = 4;
  t.title = "Transversal cocharacters of the blowup";
  t.headers = {"diagram", "node", "transversal", "sigma_plus", "j_new", "j_old"};
  for (const auto& row : classify_short_gradings(mr)) {
    DynkinDiagram d = DynkinDiagram::simple(row.letter, row.rank);
    auto sp = sigma_plus(d, row.node);
    t.rows.push_back({d.str(), std::to_string(row.node),
                      diagram_or_dash(sp.sub.diagram), sigma_plus_str(sp),
                      set_str(sp.j_new), set_str(sp.j_old)});
  }
  t.params = {{"max_rank", std::to_string(mr)},
              {"rows", std::to_string(t.rows.size())}};
  return t;
}

// Short-grading pairs whose blowup family is defined (nonempty transversal).
std::vector<std::pair<DynkinDiagram, int>> blowup_domain(int mr) {
  std::vector<std::pair<DynkinDiagram, int>> dom;
  for (const auto& row : classify_short_gradings(mr)) {
    if (row.rank < 2) continue;
    dom.emplace_back(DynkinDiagram::simple(row.letter, row.rank), row.node);
  }
  return dom;
}

Table build_table5(const TableOptions& opt) {
  int mr = resolved_max_rank(5, opt);
  Table t;
  t.id = 5;
  t.title = "Fixed components of the blowup family";
  t.headers = {"diagram", "node", "weight", "component",
               "dim",     "nu_plus", "nu_minus", "hfixed"};
  for (const auto& [d, node] : blowup_domain(mr)) {
    auto xr = xbar_report(d, node, opt.cache_dir);
    for (const auto& c : xr.components)
      t.rows.push_back({d.str(), std::to_string(node), int_str(c.weight),
                        type_str(c.ctype), std::to_string(c.dim),
                        std::to_string(c.nu_plus), std::to_string(c.nu_minus),
                        int_str(c.hfixed)});
  }
  t.params = {{"max_rank", std::to_string(mr)},
              {"rows", std::to_string(t.rows.size())}};
  return t;
}

std::string exc_family_label(char letter, int rank, int node) {
  if (letter == 'A') return "A(n,i)";
  if (letter == 'B') return "B(n,1)";
  if (letter == 'C') return "C(n,n)";
  if (letter == 'D' && node == 1) return "D(n,1)";
  if (letter == 'D' && node == rank) return "D(n,n)";
  if (letter == 'D') return "D(n,n-1)";
  return FactorShape{letter, rank}.str() + "(" + std::to_string(node) + ")";
}

Table build_table6(const TableOptions& opt) {
  int mr = resolved_max_rank(6, opt);
  Table t;
  t.id = 6;
  t.title = "Exceptional loci of the induced birational map";
  t.headers = {"diagram", "node", "y0",          "dim",
               "exc_psi", "exc_psi_inv", "isomorphism", "kind"};
  std::map<std::string, std::vector<std::pair<Long, Long>>> dim_pts;
  for (const auto& [d, node] : blowup_domain(mr)) {
    auto ex = exc_loci(d, node, opt.cache_dir);
    t.rows.push_back({d.str(), std::to_string(node), type_str(ex.y0),
                      std::to_string(ex.dim_y0), type_list_str(ex.exc_psi),
                      type_list_str(ex.exc_psi_inv),
                      ex.is_isomorphism ? "yes" : "no", "exact"});
    char letter = d.factors()[0].letter;
    dim_pts[exc_family_label(letter, d.rank(), node)].emplace_back(d.rank(),
                                                                   ex.dim_y0);
  }
  for (const auto& [label, pts] : dim_pts) {
    std::set<Long> ranks;
    for (const auto& [x, y] : pts) ranks.insert(x);
    if (ranks.size() < 3) continue;
    auto fit = fit_polynomial(pts, 3);
    if (!fit) continue;
    t.rows.push_back({label, "-", "-", poly_str(*fit, "n"), "-", "-", "-",
                      "derived"});
  }
  t.params = {{"max_rank", std::to_string(mr)},
              {"rows", std::to_string(t.rows.size())}};
  return t;
}

}  // namespace

Table build_catalog_table(int id, const TableOptions& opt) {
  switch (id) {
    case 1:
      return build_table1(opt);
    case 2:
      return build_table2(opt);
    case 3:
      return build_table3(opt);
    case 4:
      return build_table4(opt);
    case 5:
      return build_table5(opt);
    case 6:
      return build_table6(opt);
    default:
      input_error("table id must be between 1 and 6");
  }
}

namespace {

// ---------------------------------------------------------------------------
// Verification verbs.

RatMatrix random_matrix(int n, std::mt19937_64& rng, char mode) {
  std::uniform_int_distribution<int> entry(-9, 9);
  while (true) {
    RatMatrix a(n, std::vector<Rat>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[i][j] = entry(rng);
    if (mode == 's') {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) a[j][i] = a[i][j];
    } else if (mode == 'k') {
      for (int i = 0; i < n; ++i) {
        a[i][i] = 0;
        for (int j = i + 1; j < n; ++j) a[j][i] = -a[i][j];
      }
    }
    if (det(a) != 0) return a;
  }
}

std::vector<Rat> random_vector(int d, std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<int> entry(-9, 9);
  while (true) {
    std::vector<Rat> v(d);
    bool any = false;
    for (int i = 0; i < d; ++i) {
      v[i] = entry(rng);
      if (v[i] != 0) any = true;
    }
    if (any || !nonzero) return v;
  }
}

int run_verify_inversion(int n, int count, unsigned long long seed, char mode,
                         std::ostream& out) {
  auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(seed);
  nlohmann::json cases = nlohmann::json::array();
  int passed = 0;
  for (int q = 0; q < count; ++q) {
    nlohmann::json entry;
    entry["case"] = q;
    try {
      RatMatrix a = random_matrix(n, rng, mode);
      auto inv = inversion_map(a);
      check(inv.c == det(a), "scalar is not the determinant");
      auto twice = inversion_map(inv.b);
      check(is_scalar_multiple(twice.b, a),
            "double inversion is not the original map");
      if (mode == 's' || mode == 'k') {
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            check(inv.b[i][j] == (mode == 's' ? inv.b[j][i] : -inv.b[j][i]),
                  "inversion left the symmetry class");
      }
      entry["pass"] = true;
      entry["c"] = rat_str(inv.c);
      ++passed;
    } catch (const std::exception& e) {
      entry["pass"] = false;
      entry["error"] = e.what();
    }
    cases.push_back(entry);
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  nlohmann::json j;
  j["verb"] = "verify-inversion";
  j["n"] = n;
  j["count"] = count;
  j["seed"] = seed;
  j["mode"] = mode == 's' ? "symmetric" : mode == 'k' ? "skew" : "generic";
  j["cases"] = cases;
  j["passed"] = passed;
  j["failed"] = count - passed;
  j["elapsed_ms"] = elapsed;
  out << j.dump(2) << "\n";
  return passed == count ? 0 : 1;
}

int run_verify_quadric(int dim, int count, unsigned long long seed,
                       std::ostream& out) {
  auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(seed);
  nlohmann::json cases = nlohmann::json::array();
  int passed = 0;
  for (int q = 0; q < count; ++q) {
    nlohmann::json entry;
    entry["case"] = q;
    try {
      RatMatrix form = random_matrix(dim, rng, 's');
      auto v = random_vector(dim, rng, true);
      auto w = quadric_psi(form, v);
      check(w == v, "tangent identification is not the identity");
      check(quadric_psi(form, w) == v, "composition is not the identity");
      auto u = random_vector(dim, rng, true);
      std::vector<Rat> lin(dim);
      for (int i = 0; i < dim; ++i) lin[i] = 3 * v[i] - 2 * u[i];
      bool zero = true;
      for (const auto& x : lin)
        if (x != 0) zero = false;
      if (!zero) {
        auto lw = quadric_psi(form, lin);
        auto wu = quadric_psi(form, u);
        for (int i = 0; i < dim; ++i)
          check(lw[i] == 3 * w[i] - 2 * wu[i], "identification is not linear");
      }
      entry["pass"] = true;
      ++passed;
    } catch (const std::exception& e) {
      entry["pass"] = false;
      entry["error"] = e.what();
    }
    cases.push_back(entry);
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  nlohmann::json j;
  j["verb"] = "verify-quadric";
  j["dim"] = dim;
  j["count"] = count;
  j["seed"] = seed;
  j["cases"] = cases;
  j["passed"] = passed;
  j["failed"] = count - passed;
  j["elapsed_ms"] = elapsed;
  out << j.dump(2) << "\n";
  return passed == count ? 0 : 1;
}

// ---------------------------------------------------------------------------

std::string golden_path(const std::string& dir, int id) {
  return dir + "/table" + std::to_string(id) + ".md";
}

int table_output(const Table& t, Format fmt, const std::string& diff_dir,
                 const std::string& write_dir, std::ostream& out,
                 std::ostream& err) {
  if (!write_dir.empty()) {
    std::filesystem::create_directories(write_dir);
    std::string path = golden_path(write_dir, t.id);
    std::ofstream f(path);
    if (!f) input_error("cannot write " + path);
    f << render(t, Format::kMarkdown);
    out << "wrote " << path << "\n";
    return 0;
  }
  if (!diff_dir.empty()) {
    auto res = diff_against_golden(render(t, Format::kMarkdown),
                                   golden_path(diff_dir, t.id));
    if (!res.ok) {
      err << res.message << "\n";
      return 2;
    }
    out << "table " << t.id << " matches golden\n";
    return 0;
  }
  out << render(t, fmt);
  return 0;
}

DynkinDiagram parse_plain_diagram(const std::string& text) {
  MarkedVariety v = parse_variety(text);
  if (!v.marks.empty()) input_error("expected an unmarked diagram, got marks");
  if (v.diagram.factor_count() != 1)
    input_error("expected a simple diagram, got a product");
  return v.diagram;
}

Cochar parse_cochar(const DynkinDiagram& d, const std::string& text) {
  Cochar sigma(d.rank(), 0);
  size_t pos = 0;
  while (pos < text.size()) {
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start)
      input_error("pos " + std::to_string(pos + 1) +
                  ": expected a node number in the cocharacter");
    int node = std::stoi(text.substr(start, pos - start));
    if (node < 1 || node > d.rank())
      input_error("pos " + std::to_string(start + 1) +
                  ": cocharacter node out of range");
    ++sigma[node - 1];
    if (pos < text.size()) {
      if (text[pos] != ',')
        input_error("pos " + std::to_string(pos + 1) +
                    ": expected ',' between cocharacter nodes");
      ++pos;
    }
  }
  if (sigma == Cochar(d.rank(), 0)) input_error("cocharacter must be nonempty");
  return sigma;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Equalized torus actions on rational homogeneous varieties"};
  app.require_subcommand(1);
  int rc = 0;

  std::string format_name = "markdown";
  std::string cache_dir, diff_dir, write_dir;
  int max_rank = 0;
  auto add_common = [&](CLI::App* sub, bool with_golden) {
    sub->add_option("--format", format_name, "markdown, tsv, or json");
    sub->add_option("--cache", cache_dir, "coset table cache directory")
        ->envname("RHACT_CACHE");
    sub->add_option("--max-rank", max_rank, "largest rank to tabulate");
    if (with_golden) {
      sub->add_option("--diff-golden", diff_dir,
                      "compare against golden files in this directory");
      sub->add_option("--write-golden", write_dir,
                      "write golden files into this directory");
    }
  };

  // roots
  std::string literal;
  auto* roots_cmd = app.add_subcommand("roots", "positive roots of a diagram");
  roots_cmd->add_option("literal", literal, "diagram or variety literal")
      ->required();
  add_common(roots_cmd, false);
  roots_cmd->callback([&]() {
    MarkedVariety v = parse_variety(literal);
    RootSystem rs(v.diagram);
    Table t;
    t.title = "Positive roots of " + v.diagram.str();
    t.headers = {"height", "root"};
    for (const auto& root : rs.positive_roots()) {
      std::string coords;
      for (size_t k = 0; k < root.size(); ++k) {
        if (k) coords += " ";
        coords += std::to_string(root[k]);
      }
      t.rows.push_back({std::to_string(rs.height(root)), coords});
    }
    t.params = {{"diagram", v.diagram.str()},
                {"positive_roots", std::to_string(rs.positive_roots().size())},
                {"weyl_order", int_str(rs.weyl_order())}};
    if (!v.marks.empty()) {
      t.params.emplace_back("variety", v.str());
      t.params.emplace_back("dimension",
                            std::to_string(rs.variety_dimension(v.marks)));
    }
    out << render(t, parse_format(format_name));
  });

  // short-gradings
  auto* sg_cmd = app.add_subcommand("short-gradings",
                                    "nodes carrying a short grading");
  add_common(sg_cmd, false);
  sg_cmd->callback([&]() {
    TableOptions opt{max_rank, cache_dir};
    out << render(build_catalog_table(1, opt), parse_format(format_name));
  });

  // fixed-points
  std::string cochar_text;
  auto* fp_cmd = app.add_subcommand("fixed-points",
                                    "fixed components of a cocharacter action");
  fp_cmd->add_option("variety", literal, "marked variety literal")->required();
  fp_cmd->add_option("--cochar", cochar_text,
                     "comma-separated simple-root nodes of the cocharacter")
      ->required();
  add_common(fp_cmd, false);
  fp_cmd->callback([&]() {
    MarkedVariety v = parse_variety(literal);
    if (v.marks.empty()) input_error("variety needs at least one marked node");
    RootSystem rs(v.diagram);
    Cochar sigma = parse_cochar(v.diagram, cochar_text);
    auto rep = fixed_components(rs, v.marks, sigma, cache_dir);
    Table t;
    t.title = "Fixed components of " + v.str();
    t.headers = {"weight", "component", "dim", "nu_plus", "nu_minus", "hfixed"};
    for (const auto& c : rep.components)
      t.rows.push_back({int_str(c.weight), type_str(c.ctype),
                        std::to_string(c.dim), std::to_string(c.nu_plus),
                        std::to_string(c.nu_minus), int_str(c.hfixed)});
    t.params = {{"variety", v.str()},
                {"cochar", cochar_str(rep.sigma)},
                {"offset", int_str(rep.lin.offset)},
                {"bandwidth", int_str(rep.bandwidth)},
                {"criticality", int_str(rep.criticality)},
                {"equalized", rep.equalized ? "yes" : "no"},
                {"isolated_sink", rep.isolated_sink ? "yes" : "no"},
                {"isolated_source", rep.isolated_source ? "yes" : "no"}};
    for (const auto& w : rep.warnings) t.params.emplace_back("warning", w);
    out << render(t, parse_format(format_name));
  });

  // table
  int table_id = 0;
  auto* table_cmd = app.add_subcommand("table", "print a catalog table");
  table_cmd->add_option("id", table_id, "table id (1-6)")
      ->required()
      ->check(CLI::Range(1, 6));
  add_common(table_cmd, true);
  table_cmd->callback([&]() {
    TableOptions opt{max_rank, cache_dir};
    rc = table_output(build_catalog_table(table_id, opt),
                      parse_format(format_name), diff_dir, write_dir, out, err);
  });

  // xbar
  int node = 0;
  auto* xbar_cmd = app.add_subcommand("xbar", "fixed components of the blowup");
  xbar_cmd->add_option("diagram", literal, "simple diagram literal")->required();
  xbar_cmd->add_option("node", node, "node of the diagram")->required();
  add_common(xbar_cmd, false);
  xbar_cmd->callback([&]() {
    DynkinDiagram d = parse_plain_diagram(literal);
    auto xr = xbar_report(d, node, cache_dir);
    Table t;
    t.title = "Blowup fixed components for " + d.str() + " at node " +
              std::to_string(node);
    t.headers = {"weight", "component", "dim", "nu_plus", "nu_minus", "hfixed"};
    for (const auto& c : xr.components)
      t.rows.push_back({int_str(c.weight), type_str(c.ctype),
                        std::to_string(c.dim), std::to_string(c.nu_plus),
                        std::to_string(c.nu_minus), int_str(c.hfixed)});
    t.params = {{"diagram", d.str()},
                {"node", std::to_string(node)},
                {"transversal", diagram_or_dash(xr.sp.sub.diagram)},
                {"sigma_plus", sigma_plus_str(xr.sp)},
                {"j_new", set_str(xr.sp.j_new)},
                {"j_old", set_str(xr.sp.j_old)},
                {"y0", type_str(xr.y0)},
                {"dim", std::to_string(xr.dim_xbar)},
                {"bandwidth", int_str(xr.bandwidth)},
                {"isolated_source", xr.isolated_source ? "yes" : "no"}};
    out << render(t, parse_format(format_name));
  });

  // exc
  auto* exc_cmd = app.add_subcommand("exc",
                                     "exceptional loci of the induced map");
  exc_cmd->add_option("diagram", literal, "simple diagram literal")->required();
  exc_cmd->add_option("node", node, "node of the diagram")->required();
  add_common(exc_cmd, false);
  exc_cmd->callback([&]() {
    DynkinDiagram d = parse_plain_diagram(literal);
    auto ex = exc_loci(d, node, cache_dir);
    Table t;
    t.title = "Exceptional loci for " + d.str() + " at node " +
              std::to_string(node);
    t.headers = {"y0", "dim", "exc_psi", "exc_psi_inv", "isomorphism"};
    t.rows.push_back({type_str(ex.y0), std::to_string(ex.dim_y0),
                      type_list_str(ex.exc_psi), type_list_str(ex.exc_psi_inv),
                      ex.is_isomorphism ? "yes" : "no"});
    t.params = {{"diagram", d.str()}, {"node", std::to_string(node)}};
    out << render(t, parse_format(format_name));
  });

  // verify-inversion
  int vn = 3, vcount = 100;
  unsigned long long vseed = 1;
  bool symmetric = false, skew = false;
  auto* vi_cmd = app.add_subcommand(
      "verify-inversion", "check the exact matrix-inversion identity");
  vi_cmd->add_option("--n", vn, "matrix size")->required()->check(CLI::Range(1, 7));
  vi_cmd->add_option("--count", vcount, "number of random cases")
      ->check(CLI::Range(1, 100000));
  vi_cmd->add_option("--seed", vseed, "rng seed");
  vi_cmd->add_flag("--symmetric", symmetric, "restrict to symmetric matrices");
  vi_cmd->add_flag("--skew", skew, "restrict to skew matrices (even size)");
  vi_cmd->callback([&]() {
    if (symmetric && skew) input_error("choose one of --symmetric, --skew");
    if (skew && vn % 2 == 1)
      input_error("odd skew matrices are singular; choose an even size");
    rc = run_verify_inversion(vn, vcount, vseed,
                              symmetric ? 's' : skew ? 'k' : 'g', out);
  });

  // verify-quadric
  int vdim = 4, vq_count = 25;
  auto* vq_cmd = app.add_subcommand(
      "verify-quadric", "check the criticality-two tangent identification");
  vq_cmd->add_option("--dim", vdim, "dimension of the quadratic form")
      ->required()
      ->check(CLI::Range(1, 12));
  vq_cmd->add_option("--count", vq_count, "number of random cases")
      ->check(CLI::Range(1, 100000));
  vq_cmd->add_option("--seed", vseed, "rng seed");
  vq_cmd->callback([&]() { rc = run_verify_quadric(vdim, vq_count, vseed, out); });

  // report
  auto* report_cmd = app.add_subcommand("report", "all catalog tables");
  add_common(report_cmd, true);
  report_cmd->callback([&]() {
    int worst = 0;
    for (int id = 1; id <= 6; ++id) {
      TableOptions opt{max_rank, cache_dir};
      Table t = build_catalog_table(id, opt);
      int one = table_output(t, parse_format(format_name), diff_dir, write_dir,
                             out, err);
      worst = std::max(worst, one);
      if (diff_dir.empty() && write_dir.empty()) out << "\n";
    }
    if (!diff_dir.empty() && worst == 0) out << "6/6 tables match golden\n";
    rc = worst;
  });

  std::vector<std::string> full = {"rhact"};
  full.insert(full.end(), args.begin(), args.end());
  std::vector<char*> argv;
  argv.reserve(full.size());
  for (auto& s : full) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}

}  // namespace rhact
