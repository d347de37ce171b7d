// trireg: command-line toolkit for regular K3-regular graphs.
//
// Subcommands: check, classify, table, search, enumerate, construct, convert.
// Exit codes: 0 success/affirmative, 1 domain failure, 2 usage error.

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "trireg/constructions.hpp"
#include "trireg/enumeration.hpp"
#include "trireg/feasibility.hpp"
#include "trireg/graph6.hpp"
#include "trireg/kernels.hpp"
#include "trireg/search.hpp"

using json = nlohmann::ordered_json;
using namespace trireg;

namespace {

std::string read_stream(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string read_input(const std::string& path) {
  if (path == "-") return read_stream(std::cin);
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::FormatError, "cannot open " + path);
  return read_stream(in);
}

std::string first_token_line(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    return line.substr(start);
  }
  return {};
}

Graph parse_graph(const std::string& text, const std::string& format) {
  std::string fmt = format;
  if (fmt == "auto") {
    const std::string head = first_token_line(text);
    fmt = !head.empty() && std::isdigit(static_cast<unsigned char>(head[0]))
              ? "el"
              : "g6";
  }
  if (fmt == "el") return decode_edge_list(text);
  return decode_graph6(first_token_line(text));
}

std::string rational_str(const Rational& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

const char* verdict_name(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::Forbidden: return "forbidden";
    case Verdict::Kind::Exists: return "exists";
    case Verdict::Kind::Unknown: return "unknown";
  }
  return "?";
}

std::string cell_text(const AdmissibilityTable::Cell& cell) {
  switch (cell.verdict.kind) {
    case Verdict::Kind::Unknown:
      return "unknown";
    case Verdict::Kind::Forbidden:
      switch (*cell.verdict.rule) {
        case ForbidRule::UpperBound: return "no(upper)";
        case ForbidRule::TheoremDownGap: return "no(thm)";
        case ForbidRule::PropositionMidGap: return "no(prop)";
        case ForbidRule::EdgeHandshake: return "no(handshake)";
        case ForbidRule::CuratedExhaustive: return "no(exhaustive)";
      }
      return "no(?)";
    case Verdict::Kind::Exists:
      return cell.blow_up_arrow ? "->" : cell.verdict.witness->to_string();
  }
  return "?";
}

std::string render_table_md(const AdmissibilityTable& table) {
  const int cols = table.max_r2 - 1;
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header{"r3\\r2"};
  for (int r2 = 2; r2 <= table.max_r2; ++r2) header.push_back(std::to_string(r2));
  grid.push_back(header);
  for (int r3 = 1; r3 <= table.max_r3; ++r3) {
    std::vector<std::string> row{std::to_string(r3)};
    for (int r2 = 2; r2 <= table.max_r2; ++r2) {
      row.push_back(cell_text(table.cell(r2, r3)));
    }
    grid.push_back(row);
  }

  std::vector<size_t> width(cols + 1, 0);
  for (const auto& row : grid) {
    for (size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  auto emit_row = [&](const std::vector<std::string>& row) {
    out << '|';
    for (size_t c = 0; c < row.size(); ++c) {
      out << ' ' << row[c] << std::string(width[c] - row[c].size(), ' ') << " |";
    }
    out << '\n';
  };
  emit_row(grid[0]);
  out << '|';
  for (size_t c = 0; c <= static_cast<size_t>(cols); ++c) {
    out << ' ' << std::string(width[c], '-') << " |";
  }
  out << '\n';
  for (size_t r = 1; r < grid.size(); ++r) emit_row(grid[r]);
  return out.str();
}

std::string csv_quote(const std::string& cell) {
  if (cell.find_first_of(",\"") == std::string::npos) return cell;
  std::string quoted = "\"";
  for (char c : cell) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string render_table_csv(const AdmissibilityTable& table) {
  std::ostringstream out;
  out << "r3/r2";
  for (int r2 = 2; r2 <= table.max_r2; ++r2) out << ',' << r2;
  out << '\n';
  for (int r3 = 1; r3 <= table.max_r3; ++r3) {
    out << r3;
    for (int r2 = 2; r2 <= table.max_r2; ++r2) {
      out << ',' << csv_quote(cell_text(table.cell(r2, r3)));
    }
    out << '\n';
  }
  return out.str();
}

json graph_json(const Graph& g) {
  json j;
  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  j["graph6"] = encode_graph6(g);
  return j;
}

json verdict_json(const Verdict& v) {
  json j;
  j["verdict"] = verdict_name(v.kind);
  if (v.rule) j["rule"] = to_string(*v.rule);
  if (v.witness) {
    const Parameters p = v.witness->expected_parameters();
    j["witness"] = {{"recipe", v.witness->to_string()},
                    {"parameters", {p.r2, p.r3}}};
  }
  return j;
}

struct CommonOpts {
  bool json_mode = false;
};

int cmd_check(const std::string& file, const std::string& format, bool json_mode) {
  const Graph g = parse_graph(read_input(file), format);
  if (g.vertex_count() == 0) {
    throw Error(ErrorCode::EmptyGraph, "input graph has no vertices");
  }
  std::map<int, int> deg_hist, tri_hist;
  for (int v = 0; v < g.vertex_count(); ++v) {
    ++deg_hist[g.degree(v)];
    ++tri_hist[g.triangle_degree(v)];
  }
  const auto params = g.regularity_parameters();
  const bool connected = g.is_connected();

  if (json_mode) {
    json j;
    j["schema"] = "trireg.check/1";
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["degree_histogram"] = json::object();
    for (auto [d, c] : deg_hist) j["degree_histogram"][std::to_string(d)] = c;
    j["triangle_degree_histogram"] = json::object();
    for (auto [d, c] : tri_hist) j["triangle_degree_histogram"][std::to_string(d)] = c;
    j["regular_k3_regular"] = params.has_value();
    j["parameters"] = params ? json{params->r2, params->r3} : json(nullptr);
    j["connected"] = connected;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "n: " << g.vertex_count() << "  m: " << g.edge_count() << '\n';
    std::cout << "degrees:";
    for (auto [d, c] : deg_hist) std::cout << ' ' << d << 'x' << c;
    std::cout << "\ntriangle degrees:";
    for (auto [d, c] : tri_hist) std::cout << ' ' << d << 'x' << c;
    std::cout << '\n';
    if (params) {
      std::cout << "parameters: (" << params->r2 << ", " << params->r3 << ")\n";
    } else {
      std::cout << "parameters: not regular K3-regular\n";
    }
    std::cout << "connected: " << (connected ? "yes" : "no") << '\n';
  }
  return params ? 0 : 1;
}

int cmd_classify(int r2, int r3, bool json_mode) {
  const Verdict v = classify(r2, r3);
  if (json_mode) {
    json j;
    j["schema"] = "trireg.classify/1";
    j["r2"] = r2;
    j["r3"] = r3;
    j.update(verdict_json(v));
    std::cout << j.dump() << '\n';
  } else {
    switch (v.kind) {
      case Verdict::Kind::Forbidden:
        std::cout << "Forbidden (" << to_string(*v.rule) << ")\n";
        break;
      case Verdict::Kind::Exists: {
        const Parameters p = v.witness->expected_parameters();
        std::cout << "Exists: " << v.witness->to_string() << " with parameters ("
                  << p.r2 << ", " << p.r3 << ")\n";
        break;
      }
      case Verdict::Kind::Unknown:
        std::cout << "Unknown\n";
        break;
    }
  }
  return v.kind == Verdict::Kind::Exists ? 0 : 1;
}

int cmd_table(int max_r2, int max_r3, const std::string& format, bool json_mode) {
  const AdmissibilityTable table = admissibility_table(max_r2, max_r3);
  if (json_mode) {
    json cells = json::array();
    for (int r3 = 1; r3 <= max_r3; ++r3) {
      for (int r2 = 2; r2 <= max_r2; ++r2) {
        const auto& cell = table.cell(r2, r3);
        json c;
        c["r2"] = r2;
        c["r3"] = r3;
        c.update(verdict_json(cell.verdict));
        c["arrow"] = cell.blow_up_arrow;
        cells.push_back(std::move(c));
      }
    }
    json j;
    j["schema"] = "trireg.table/1";
    j["max_r2"] = max_r2;
    j["max_r3"] = max_r3;
    j["cells"] = std::move(cells);
    std::cout << j.dump() << '\n';
  } else if (format == "csv") {
    std::cout << render_table_csv(table);
  } else {
    std::cout << render_table_md(table);
  }
  return 0;
}

json search_report(const SearchConfig& cfg, const SearchResult& res) {
  json j;
  j["schema"] = "trireg.search/1";
  j["config"] = {{"r2", cfg.r2},
                 {"r3", cfg.r3},
                 {"n", cfg.n},
                 {"max_iterations", cfg.max_iterations},
                 {"restarts", cfg.restarts},
                 {"plateau_limit", cfg.plateau_limit},
                 {"seed", cfg.seed}};
  j["status"] = res.status == SearchStatus::Found ? "found" : "exhausted";
  j["best_fitness"] = rational_str(res.best_fitness);
  j["iterations_used"] = res.iterations_used;
  j["winning_restart"] = res.winning_restart;

  // subsample long traces, always keeping first and last
  json trace = json::array();
  const size_t total = res.fitness_trace.size();
  const size_t kMaxPoints = 200;
  const size_t stride = total > kMaxPoints ? (total + kMaxPoints - 1) / kMaxPoints : 1;
  for (size_t i = 0; i < total; ++i) {
    if (i % stride == 0 || i + 1 == total) {
      trace.push_back({res.fitness_trace[i].iteration,
                       rational_str(res.fitness_trace[i].fitness)});
    }
  }
  j["fitness_trace"] = std::move(trace);

  json witness = graph_json(res.best_graph);
  const auto params = res.best_graph.regularity_parameters();
  witness["parameters"] = params ? json{params->r2, params->r3} : json(nullptr);
  j["witness"] = std::move(witness);
  return j;
}

int cmd_search(SearchConfig cfg, bool scan, int n_max, const std::string& out_path,
               bool json_mode) {
  std::vector<int> candidates;
  if (scan) {
    int n0 = cfg.r2 + 1;
    if ((static_cast<long long>(n0) * cfg.r2) % 2 != 0) ++n0;
    const int step = cfg.r2 % 2 == 0 ? 1 : 2;
    const int upper = n_max > 0 ? n_max : n0 + 19;
    for (int n = n0; n <= upper; n += step) candidates.push_back(n);
    if (candidates.empty()) {
      throw Error(ErrorCode::DegreeTooLarge, "empty n-scan range");
    }
  } else {
    candidates.push_back(cfg.n);
  }

  SearchResult result;
  SearchConfig used = cfg;
  for (size_t i = 0; i < candidates.size(); ++i) {
    used.n = candidates[i];
    used.validate();
    if (!json_mode && scan) std::cerr << "n=" << used.n << "...\n";
    result = run_search(used);
    if (result.status == SearchStatus::Found) break;
  }

  const json report = search_report(used, result);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw Error(ErrorCode::FormatError, "cannot write " + out_path);
    out << report.dump(2) << '\n';
  }
  if (json_mode) {
    std::cout << report.dump() << '\n';
  } else {
    if (result.status == SearchStatus::Found) {
      std::cout << "Found on n=" << used.n << " after " << result.iterations_used
                << " proposals (restart " << result.winning_restart << ")\n";
    } else {
      std::cout << "Exhausted: best fitness " << rational_str(result.best_fitness)
                << " on n=" << used.n << '\n';
    }
    std::cout << "witness: " << encode_graph6(result.best_graph) << '\n';
  }
  return result.status == SearchStatus::Found ? 0 : 1;
}

int cmd_enumerate(int n, int r2, bool connected, std::optional<int> r3,
                  long long limit, bool force, bool json_mode) {
  EnumSpec spec;
  spec.n = n;
  spec.r2 = r2;
  spec.connected_only = connected;
  spec.filter_r3 = r3;
  spec.allow_large = force;

  long long count = 0;
  std::vector<std::string> lines;
  enumerate_regular(spec, [&](const Graph& g) {
    ++count;
    const std::string line = encode_graph6(g);
    if (json_mode) {
      lines.push_back(line);
    } else {
      std::cout << line << '\n';
    }
    return limit <= 0 || count < limit;
  });

  if (json_mode) {
    json j;
    j["schema"] = "trireg.enumerate/1";
    j["n"] = n;
    j["r2"] = r2;
    j["connected"] = connected;
    j["r3"] = r3 ? json(*r3) : json(nullptr);
    j["count"] = count;
    j["graphs"] = lines;
    std::cout << j.dump() << '\n';
  }
  return 0;
}

int cmd_construct(const std::string& expr, bool json_mode) {
  const ConstructionRecipe recipe = parse_recipe(expr);
  const Graph g = evaluate(recipe);
  const auto params = g.regularity_parameters();
  if (json_mode) {
    json j;
    j["schema"] = "trireg.construct/1";
    j["recipe"] = recipe.to_string();
    j["parameters"] = params ? json{params->r2, params->r3} : json(nullptr);
    j["n"] = g.vertex_count();
    j["graph6"] = encode_graph6(g);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "recipe: " << recipe.to_string() << '\n';
    if (params) {
      std::cout << "parameters: (" << params->r2 << ", " << params->r3 << ")\n";
    }
    std::cout << "n: " << g.vertex_count() << '\n';
    std::cout << "graph6: " << encode_graph6(g) << '\n';
  }
  return 0;
}

int cmd_convert(const std::string& from, const std::string& to) {
  const std::string text = read_stream(std::cin);
  const Graph g = parse_graph(text, from);
  if (to == "el") {
    std::cout << encode_edge_list(g);
  } else {
    std::cout << encode_graph6(g) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trireg: construct, verify, classify, search for and enumerate "
               "regular K3-regular graphs"};
  app.set_version_flag("--version",
                       std::string("trireg 1.0.0 (kernel: ") + kern::active_kernel() + ")");
  app.require_subcommand(1);

  // check
  auto* check = app.add_subcommand("check", "Inspect a graph file");
  std::string check_file;
  std::string check_format = "auto";
  bool check_json = false;
  check->add_option("file", check_file, "graph file, or - for stdin")->required();
  check->add_option("--format", check_format, "auto|g6|el")
      ->check(CLI::IsMember({"auto", "g6", "el"}));
  check->add_flag("--json", check_json);

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "Classify a parameter pair");
  int cl_r2 = 0, cl_r3 = 0;
  bool cl_json = false;
  classify_cmd->add_option("r2", cl_r2)->required()->check(CLI::NonNegativeNumber);
  classify_cmd->add_option("r3", cl_r3)->required()->check(CLI::NonNegativeNumber);
  classify_cmd->add_flag("--json", cl_json);

  // table
  auto* table_cmd = app.add_subcommand("table", "Render the admissibility table");
  int t_max_r2 = 8, t_max_r3 = 17;
  std::string t_format = "md";
  bool t_json = false;
  table_cmd->add_option("--max-r2", t_max_r2)->check(CLI::Range(2, 32));
  table_cmd->add_option("--max-r3", t_max_r3)->check(CLI::Range(1, 496));
  table_cmd->add_option("--format", t_format)->check(CLI::IsMember({"md", "csv"}));
  table_cmd->add_flag("--json", t_json);

  // search
  auto* search_cmd = app.add_subcommand("search", "Heuristic search for a witness");
  SearchConfig s_cfg;
  bool s_scan = false, s_json = false;
  int s_n = 0, s_n_max = 0;
  std::string s_out;
  search_cmd->add_option("r2", s_cfg.r2)->required()->check(CLI::NonNegativeNumber);
  search_cmd->add_option("r3", s_cfg.r3)->required()->check(CLI::NonNegativeNumber);
  search_cmd->add_option("--n", s_n, "vertex count (omit to scan)");
  search_cmd->add_flag("--n-scan", s_scan, "scan n upward from the smallest feasible value");
  search_cmd->add_option("--n-max", s_n_max, "scan upper bound");
  search_cmd->add_option("--seed", s_cfg.seed);
  search_cmd->add_option("--iters", s_cfg.max_iterations)->check(CLI::PositiveNumber);
  search_cmd->add_option("--restarts", s_cfg.restarts)->check(CLI::PositiveNumber);
  search_cmd->add_option("--plateau", s_cfg.plateau_limit)->check(CLI::PositiveNumber);
  search_cmd->add_option("--out", s_out, "write the JSON report here");
  search_cmd->add_flag("--json", s_json);

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "Stream regular graphs as graph6");
  int e_n = 0, e_r2 = 0;
  bool e_connected = false, e_force = false, e_json = false;
  long long e_limit = 0;
  int e_r3 = -1;
  enum_cmd->add_option("n", e_n)->required()->check(CLI::PositiveNumber);
  enum_cmd->add_option("r2", e_r2)->required()->check(CLI::NonNegativeNumber);
  enum_cmd->add_flag("--connected", e_connected);
  enum_cmd->add_option("--r3", e_r3, "keep only graphs with this triangle degree");
  enum_cmd->add_option("--limit", e_limit, "stop after this many graphs");
  enum_cmd->add_flag("--force", e_force, "lift the desk-scale cap to 14");
  enum_cmd->add_flag("--json", e_json);

  // construct
  auto* construct_cmd = app.add_subcommand("construct", "Evaluate a recipe expression");
  std::string c_expr;
  bool c_json = false;
  construct_cmd->add_option("expr", c_expr, "e.g. \"K5 x K3\" or \"T8,4\"")->required();
  construct_cmd->add_flag("--json", c_json);

  // convert
  auto* convert_cmd = app.add_subcommand("convert", "Convert between graph formats");
  std::string v_from = "g6", v_to = "el";
  convert_cmd->add_option("--from", v_from)->check(CLI::IsMember({"g6", "el"}));
  convert_cmd->add_option("--to", v_to)->check(CLI::IsMember({"g6", "el"}));

  bool any_json = false;
  try {
    app.parse(argc, argv);

    if (*check) return cmd_check(check_file, check_format, any_json = check_json);
    if (*classify_cmd) return cmd_classify(cl_r2, cl_r3, any_json = cl_json);
    if (*table_cmd) return cmd_table(t_max_r2, t_max_r3, t_format, any_json = t_json);
    if (*search_cmd) {
      any_json = s_json;
      const bool scan = s_scan || s_n <= 0;
      s_cfg.n = s_n;
      return cmd_search(s_cfg, scan, s_n_max, s_out, s_json);
    }
    if (*enum_cmd) {
      any_json = e_json;
      return cmd_enumerate(e_n, e_r2, e_connected,
                           e_r3 >= 0 ? std::optional<int>(e_r3) : std::nullopt,
                           e_limit, e_force, e_json);
    }
    if (*construct_cmd) return cmd_construct(c_expr, any_json = c_json);
    if (*convert_cmd) return cmd_convert(v_from, v_to);
    return 2;
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForVersion") {
      return app.exit(e);
    }
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    if (any_json) {
      json j;
      j["schema"] = "trireg.error/1";
      j["code"] = e.code_name();
      j["message"] = e.what();
      std::cout << j.dump() << '\n';
    } else {
      std::cerr << "error: " << e.code_name() << ": " << e.what() << '\n';
    }
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  }
}
