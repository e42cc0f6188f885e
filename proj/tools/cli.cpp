// Copyright 2026 The lapdom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "lapdom/dominance.hpp"
#include "lapdom/error.hpp"
#include "lapdom/graph6.hpp"
#include "lapdom/scan.hpp"
#include "report_json.hpp"

namespace lapdom::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NamedGraph {
  std::string id;
  Graph graph;
};

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open " + path);
  buf << file.rdbuf();
  return buf.str();
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    out.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return out;
}

// Edge-list text if the first meaningful line has a space in it, otherwise
// one graph6 record per line.
std::vector<NamedGraph> parse_graphs(const std::string& text, const std::string& source) {
  const auto lines = lines_of(text);
  bool edge_list = false;
  for (const auto raw : lines) {
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    edge_list = line.find_first_of(" \t") != std::string_view::npos;
    break;
  }
  std::vector<NamedGraph> out;
  if (edge_list) {
    std::istringstream in(text);
    try {
      out.push_back({source, read_edge_list(in)});
    } catch (const ParseError& e) {
      throw UsageError(source + ":" + std::to_string(e.offset()) + ": " + e.what());
    }
    return out;
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto line = trim(lines[i]);
    if (line.empty()) continue;
    try {
      out.push_back({std::string(line), decode_graph6(line)});
    } catch (const ParseError& e) {
      throw UsageError(source + ":" + std::to_string(i + 1) + ": " + e.what() + " (byte " +
                       std::to_string(e.offset()) + ")");
    }
  }
  if (out.empty()) throw UsageError("no graph found in " + source);
  return out;
}

std::string join_ints(std::span<const int> values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? " " : "") + std::to_string(values[i]);
  return s;
}

std::string join_doubles(std::span<const double> values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? " " : "") + format12(values[i]);
  return s;
}

int default_jobs() {
  if (const char* env = std::getenv("LAPDOM_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<int>(v);
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

// ---- analyze ---------------------------------------------------------------

struct AnalyzeArgs {
  std::string input = "-";
  std::string g6;
  bool json = false;
  bool csv = false;
  double tolerance = kDefaultTolerance;
};

void print_verdict(std::ostream& out, const char* name, const Verdict& v,
                   const std::vector<int>& near) {
  out << std::left << std::setw(10) << name << (v.holds ? "holds" : "FAILS") << "  worst k="
      << v.worst_k << " margin " << format12(v.min_margin);
  if (!near.empty()) {
    out << "  equality at k=";
    for (std::size_t i = 0; i < near.size(); ++i) out << (i ? "," : "") << near[i];
  }
  out << '\n';
}

void print_analysis_text(std::ostream& out, const DominanceReport& r) {
  const auto near = near_equality(r);
  const int kw = std::max(r.k_star, 1);
  out << "graph     " << r.id << "  n=" << r.n << " m=" << r.m << '\n'
      << "spectrum  " << join_doubles(r.spectrum.values()) << '\n'
      << "energy    " << format12(r.energy) << "  (k*=" << r.k_star << ", witness "
      << r.entries[static_cast<std::size_t>(kw - 1)].witness.to_string() << " has energy "
      << format12(r.witness_energy) << ")\n";
  print_verdict(out, "gmb", r.gmb, near.gmb);
  print_verdict(out, "brouwer", r.brouwer, near.brouwer);
  print_verdict(out, "std", r.std, near.std);
  if (r.rechecked) out << "note      verdicts recomputed at tightened solver tolerance\n";
  out << std::right << std::setw(4) << "k" << std::setw(16) << "lambda_prefix" << std::setw(8)
      << "gmb" << std::setw(9) << "brouwer" << std::setw(10) << "effective" << std::setw(9)
      << "witness" << std::setw(18) << "margin" << "  witness_graph\n";
  for (const auto& e : r.entries) {
    out << std::setw(4) << e.k << std::setw(16) << format12(e.lambda_prefix) << std::setw(8)
        << e.gmb_bound << std::setw(9) << e.brouwer_bound << std::setw(10) << e.effective_bound
        << std::setw(9) << e.witness_prefix << std::setw(18) << format12(e.margin) << "  "
        << e.witness.to_string() << '\n';
  }
}

void print_analysis_csv(std::ostream& out, const DominanceReport& r) {
  for (const auto& e : r.entries) {
    out << r.id << ',' << e.k << ',' << format12(e.lambda_prefix) << ',' << e.gmb_bound << ','
        << e.brouwer_bound << ',' << e.effective_bound << ',' << e.witness_prefix << ','
        << format12(e.margin) << ',' << e.witness.to_string() << ','
        << (r.gmb.holds ? 1 : 0) << ',' << (r.brouwer.holds ? 1 : 0) << ','
        << (r.std.holds ? 1 : 0) << '\n';
  }
}

int do_analyze(const AnalyzeArgs& a, std::istream& in, std::ostream& out) {
  std::vector<NamedGraph> graphs;
  if (!a.g6.empty()) {
    try {
      graphs.push_back({a.g6, decode_graph6(a.g6)});
    } catch (const ParseError& e) {
      throw UsageError(std::string("--g6: ") + e.what() + " (byte " + std::to_string(e.offset()) +
                       ")");
    }
  } else {
    graphs = parse_graphs(read_source(a.input, in), a.input == "-" ? "stdin" : a.input);
  }
  DominanceOptions options;
  options.tolerance = a.tolerance;
  if (a.csv) {
    out << "id,k,lambda_prefix,gmb_bound,brouwer_bound,effective_bound,witness_prefix,margin,"
           "witness,gmb_holds,brouwer_holds,std_holds\n";
  }
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    auto report = std_constructive(graphs[i].graph, options);
    report.id = graphs[i].id;
    if (a.json) {
      out << analysis_json(report).dump() << '\n';
    } else if (a.csv) {
      print_analysis_csv(out, report);
    } else {
      if (i > 0) out << '\n';
      print_analysis_text(out, report);
    }
  }
  return kExitOk;
}

// ---- build -----------------------------------------------------------------

void print_threshold(std::ostream& out, const ThresholdGraph& t, const std::string& builder,
                     bool json, const Json& extra) {
  if (json) {
    auto j = threshold_json(t, builder);
    for (const auto& [key, value] : extra.items()) j[key] = value;
    out << j.dump() << '\n';
    return;
  }
  const auto g = realize(t);
  for (const auto& [key, value] : extra.items()) {
    out << std::left << std::setw(11) << key << value.dump() << '\n';
  }
  out << std::left << std::setw(11) << "threshold" << t.to_string() << '\n'
      << std::setw(11) << "conjugate" << join_ints(t.conjugate_degrees().values()) << '\n'
      << std::setw(11) << "spectrum" << join_doubles(eigenvalues(g).values()) << '\n'
      << std::setw(11) << "energy" << format12(threshold_energy(t)) << '\n'
      << std::setw(11) << "graph6" << encode_graph6(g) << '\n';
}

std::vector<ThresholdGraph> read_threshold_list(const std::string& text, const std::string& source) {
  std::vector<ThresholdGraph> out;
  const auto lines = lines_of(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto line = trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    try {
      out.push_back(ThresholdGraph::parse(line));
    } catch (const Error& e) {
      throw UsageError(source + ":" + std::to_string(i + 1) + ": " + e.what());
    }
  }
  if (out.empty()) throw UsageError("no threshold graph found in " + source);
  return out;
}

// ---- search ----------------------------------------------------------------

struct SearchArgs {
  std::string input = "-";
  std::string check = "brouwer";
  int jobs = 1;
  bool progress = false;
  int gen_all = 0;
  double tolerance = kDefaultTolerance;
  bool json = false;
  bool timing = false;
};

void print_event(std::ostream& out, const char* label, const ScanEvent& e) {
  out << label << " index=" << e.index << " graph6=" << e.graph6 << " k=" << e.k
      << " margin=" << format12(e.margin) << '\n';
}

int do_search(const SearchArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
  ScanOptions options;
  options.check = *parse_check_kind(a.check);
  options.jobs = a.jobs;
  options.tolerance = a.tolerance;
  if (a.progress) {
    options.progress = [&err](std::uint64_t done) { err << "\rprocessed " << done << std::flush; };
  }
  ScanSummary summary;
  if (a.gen_all > 0) {
    summary = scan_all_labeled(a.gen_all, options);
  } else if (a.input == "-") {
    summary = scan_graph6(in, options);
  } else {
    std::ifstream file(a.input, std::ios::binary);
    if (!file) throw UsageError("cannot open " + a.input);
    summary = scan_graph6(file, options);
  }
  if (a.progress) err << '\n';

  if (a.json) {
    out << scan_json(summary, a.timing).dump() << '\n';
  } else {
    out << "check " << check_kind_name(summary.check) << '\n'
        << "records " << summary.records << '\n'
        << "violations " << summary.violations.size() << '\n'
        << "near_equality " << summary.near_equality << '\n'
        << "input_errors " << summary.input_errors.size() << '\n'
        << "min_margin " << format12(summary.min_margin) << '\n'
        << "max_margin " << format12(summary.max_margin) << '\n'
        << "rechecked " << summary.rechecked << '\n';
    for (const auto& v : summary.violations) print_event(out, "violation", v);
    for (const auto& v : summary.near_samples) print_event(out, "near", v);
    for (const auto& e : summary.input_errors) {
      out << "input_error line=" << e.line << " " << e.message << '\n';
    }
    if (a.timing) {
      out << "wall_seconds " << format12(summary.wall_seconds) << '\n'
          << "jobs " << summary.jobs << '\n';
    }
  }
  err << "search: " << summary.records << " records in " << format12(summary.wall_seconds)
      << " s with " << summary.jobs << " worker(s)\n";
  if (!summary.input_errors.empty()) return kExitUsage;
  return summary.violations.empty() ? kExitOk : kExitViolation;
}

// ---- enumerate-threshold -----------------------------------------------------

int do_enumerate(int n, std::optional<std::int64_t> m, bool json, std::ostream& out) {
  if (n < 1 || n > 20) throw UsageError("enumerate-threshold needs 1 <= n <= 20");
  std::uint64_t count = 0;
  Json graphs = Json::array();
  auto emit = [&](const ThresholdGraph& t) {
    ++count;
    if (json) {
      graphs.push_back(t.to_string());
    } else {
      out << t.to_string() << '\n';
    }
  };
  if (m) {
    ThresholdEnumerator e(n, *m);
    while (auto t = e.next()) emit(*t);
  } else {
    AllThresholdEnumerator e(n);
    while (auto t = e.next()) emit(*t);
  }
  if (json) {
    out << Json{{"kind", "enumeration"},
                {"n", n},
                {"m", m ? Json(*m) : Json(nullptr)},
                {"count", count},
                {"graphs", graphs}}
               .dump()
        << '\n';
  } else {
    out << "count " << count << '\n';
  }
  return kExitOk;
}

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Laplacian spectra, threshold graphs and Brouwer-bound checks", "lapdom"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Spectrum, energy and per-k checks");
  analyze_cmd->add_option("input", analyze.input, "Edge-list or graph6 file, - for stdin");
  analyze_cmd->add_option("--g6", analyze.g6, "Analyze a single graph6 string");
  auto* json_flag = analyze_cmd->add_flag("--json", analyze.json, "JSON Lines output");
  analyze_cmd->add_flag("--csv", analyze.csv, "CSV output")->excludes(json_flag);
  analyze_cmd->add_option("--tolerance", analyze.tolerance,
                          "Slack on every verdict; negative demands a strict margin");

  auto* build_cmd = app.add_subcommand("build", "Threshold-graph constructions");
  build_cmd->require_subcommand(1);
  bool build_json = false;
  auto add_build = [&](const std::string& name, const std::string& help) {
    auto* sub = build_cmd->add_subcommand(name, help);
    sub->add_flag("--json", build_json, "JSON output");
    return sub;
  };
  int bn = 0, bk = 0, bq = 0;
  std::int64_t bm = 0;
  std::string bfile;
  auto* be = add_build("brouwer-extremal", "Threshold graph on (n, m) maximising the top-k sum");
  be->add_option("n", bn)->required();
  be->add_option("m", bm)->required();
  be->add_option("k", bk)->required();
  auto* cd = add_build("cycle-dominator", "Threshold graph dominating the cycle C_n");
  cd->add_option("n", bn)->required();
  auto* pa = add_build("pineapple", "K_q with n - q pendant nodes on one clique node");
  pa->add_option("n", bn)->required();
  pa->add_option("q", bq)->required();
  auto* ci = add_build("clique-isolated", "Clique plus isolated nodes");
  ci->add_option("n", bn)->required();
  auto* um = add_build("union-merge", "Merge a list of threshold graphs, one \"n: c1 ...\" per line");
  um->add_option("file", bfile)->required();
  auto* sd = add_build("split-dominator", "Threshold dominator of a split graph at k");
  sd->add_option("file", bfile)->required();
  sd->add_option("k", bk)->required();

  SearchArgs search;
  search.jobs = default_jobs();
  auto* search_cmd = app.add_subcommand("search", "Scan a graph6 stream for violations");
  search_cmd->add_option("input", search.input, "graph6 file, - for stdin");
  search_cmd->add_option("--check", search.check, "gmb, brouwer or std")
      ->check(CLI::IsMember({"gmb", "brouwer", "std"}));
  search_cmd->add_option("--jobs", search.jobs, "Worker threads (default: LAPDOM_JOBS or all cores)")
      ->check(CLI::Range(1, 1024));
  search_cmd->add_flag("--progress", search.progress, "Report progress on stderr");
  search_cmd->add_option("--gen-all", search.gen_all, "Scan every labeled graph on n <= 7 nodes")
      ->check(CLI::Range(1, 7));
  search_cmd->add_option("--tolerance", search.tolerance,
                         "Slack on every verdict; negative demands a strict margin");
  search_cmd->add_flag("--json", search.json, "JSON summary");
  search_cmd->add_flag("--timing", search.timing, "Include wall time and worker count on stdout");

  int en = 0;
  std::int64_t em = 0;
  bool enum_json = false;
  auto* enum_cmd = app.add_subcommand("enumerate-threshold", "List threshold graphs on n nodes");
  enum_cmd->add_option("n", en)->required();
  auto* em_opt = enum_cmd->add_option("m", em, "Edge count (default: every m)");
  enum_cmd->add_flag("--json", enum_json, "JSON output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    app.exit(e, out, err);
    return kExitUsage;
  }

  if (*analyze_cmd) return do_analyze(analyze, in, out);
  if (*search_cmd) return do_search(search, in, out, err);
  if (*enum_cmd) {
    return do_enumerate(en, em_opt->count() ? std::optional(em) : std::nullopt, enum_json, out);
  }
  if (*be) {
    const auto c = brouwer_extremal_construction(bn, bm, bk);
    print_threshold(out, c.graph, "brouwer-extremal", build_json,
                    Json{{"k", bk},
                         {"case", static_cast<int>(c.which)},
                         {"h", c.h},
                         {"r", c.r},
                         {"prefix_sum", c.prefix_sum}});
  } else if (*cd) {
    print_threshold(out, cycle_dominator(bn), "cycle-dominator", build_json, Json::object());
  } else if (*pa) {
    print_threshold(out, pineapple(bn, bq), "pineapple", build_json, Json::object());
  } else if (*ci) {
    print_threshold(out, clique_plus_isolated_threshold(bn), "clique-isolated", build_json,
                    Json{{"clique", extremal_clique_size(bn)}});
  } else if (*um) {
    const auto parts = read_threshold_list(read_source(bfile, in), bfile);
    print_threshold(out, union_merge(parts), "union-merge", build_json, Json::object());
  } else if (*sd) {
    const auto graphs = parse_graphs(read_source(bfile, in), bfile);
    if (graphs.size() != 1) throw UsageError(bfile + " must hold exactly one graph");
    const auto& g = graphs.front().graph;
    print_threshold(out, split_dominator(g, bk), "split-dominator", build_json,
                    Json{{"k", bk}, {"trace", trace(DegreeSequence::of(g))}});
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  try {
    return dispatch(args, in, out, err);
  } catch (const UsageError& e) {
    err << "lapdom: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "lapdom: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "lapdom: " << e.what() << " (offset " << e.offset() << ")\n";
    return kExitUsage;
  } catch (const LimitExceeded& e) {
    err << "lapdom: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "lapdom: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace lapdom::cli
