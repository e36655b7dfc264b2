// Table renderers and golden-file comparison.
#include "rhact/render.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "rhact/check.hpp"

namespace rhact {

Format parse_format(const std::string& name) {
  if (name == "markdown" || name == "md") return Format::kMarkdown;
  if (name == "tsv") return Format::kTsv;
  if (name == "json") return Format::kJson;
  input_error("unknown format '" + name + "' (markdown, tsv, json)");
}

namespace {

std::string render_markdown(const Table& t) {
  std::ostringstream out;
  out << "# ";
  if (t.id > 0) out << "Table " << t.id << ": ";
  out << t.title << "\n\n";
  auto row_line = [&](const std::vector<std::string>& cells) {
    out << "|";
    for (const auto& c : cells) out << " " << c << " |";
    out << "\n";
  };
  row_line(t.headers);
  std::vector<std::string> rule(t.headers.size(), "---");
  row_line(rule);
  for (const auto& r : t.rows) {
    check(r.size() == t.headers.size(), "row width mismatch");
    row_line(r);
  }
  out << "\n";
  out << "#: engine=" << kEngineVersion << "\n";
  for (const auto& [k, v] : t.params) out << "#: " << k << "=" << v << "\n";
  return out.str();
}

std::string render_tsv(const Table& t) {
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) out << "\t";
      out << cells[i];
    }
    out << "\n";
  };
  line(t.headers);
  for (const auto& r : t.rows) {
    check(r.size() == t.headers.size(), "row width mismatch");
    line(r);
  }
  out << "#: engine=" << kEngineVersion << "\n";
  for (const auto& [k, v] : t.params) out << "#: " << k << "=" << v << "\n";
  return out.str();
}

std::string render_json(const Table& t) {
  nlohmann::json j;
  if (t.id > 0) j["id"] = t.id;
  j["title"] = t.title;
  j["headers"] = t.headers;
  j["rows"] = t.rows;
  nlohmann::json params = nlohmann::json::object();
  params["engine"] = kEngineVersion;
  for (const auto& [k, v] : t.params) params[k] = v;
  j["params"] = params;
  return j.dump(2) + "\n";
}

}  // namespace

std::string render(const Table& t, Format fmt) {
  switch (fmt) {
    case Format::kMarkdown:
      return render_markdown(t);
    case Format::kTsv:
      return render_tsv(t);
    case Format::kJson:
      return render_json(t);
  }
  check(false, "unhandled format");
  return {};
}

std::string comparable_payload(const std::string& rendered) {
  std::istringstream in(rendered);
  std::ostringstream out;
  std::string line;
  std::vector<std::string> kept;
  while (std::getline(in, line)) {
    if (line.rfind("#:", 0) == 0) continue;
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' ||
                             line.back() == '\r'))
      line.pop_back();
    kept.push_back(line);
  }
  while (!kept.empty() && kept.back().empty()) kept.pop_back();
  for (const auto& l : kept) out << l << "\n";
  return out.str();
}

DiffResult diff_against_golden(const std::string& rendered,
                               const std::string& golden_path) {
  std::ifstream in(golden_path);
  if (!in) {
    return {false, "golden file " + golden_path +
                       " not found; bootstrap it with --write-golden <dir> "
                       "and commit the result"};
  }
  std::stringstream buf;
  buf << in.rdbuf();
  std::string want = comparable_payload(buf.str());
  std::string got = comparable_payload(rendered);
  if (want == got) return {true, ""};

  std::istringstream wi(want), gi(got);
  std::string wline, gline;
  int lineno = 0;
  while (true) {
    bool wok = static_cast<bool>(std::getline(wi, wline));
    bool gok = static_cast<bool>(std::getline(gi, gline));
    ++lineno;
    if (!wok && !gok) break;
    if (!wok || !gok || wline != gline) {
      std::string expected = wok ? wline : "<end of file>";
      std::string actual = gok ? gline : "<end of file>";
      return {false, golden_path + ": first divergence at payload line " +
                         std::to_string(lineno) + "\n  expected: " + expected +
                         "\n  actual:   " + actual};
    }
  }
  return {false, golden_path + ": payloads differ"};
}

}  // namespace rhact
