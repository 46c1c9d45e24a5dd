#pragma once

// The magiccover command line: construct | label | verify | search | export.
// Exit codes: 0 success, 1 verification failure or no solution, 2 usage or
// input errors.

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "magiccover/dot.hpp"
#include "magiccover/error.hpp"
#include "magiccover/family_spec.hpp"
#include "magiccover/json_io.hpp"
#include "magiccover/search.hpp"
#include "magiccover/verifier.hpp"

namespace magiccover::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

inline void emit(std::ostream& out, const std::optional<std::string>& path, const std::string& text) {
  if (path && !path->empty()) {
    write_text_file(*path, text);
  } else {
    out << text;
  }
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

struct IsoFlags {
  std::size_t max_pattern_vertices = IsoOptions{}.max_pattern_vertices;
  std::size_t max_copies = IsoOptions{}.max_copies;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--max-pattern-vertices", max_pattern_vertices,
                   "Soft limit on pattern size for copy enumeration");
    cmd.add_option("--max-copies", max_copies, "Soft limit on the number of enumerated copies");
  }

  IsoOptions options() const {
    IsoOptions o;
    o.max_pattern_vertices = max_pattern_vertices;
    o.max_copies = max_copies;
    return o;
  }
};

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, label and verify H-supermagic coverings", "magiccover"};
  app.require_subcommand(1);
  bool json_errors = false;
  app.add_flag("--json-errors", json_errors, "Report errors as JSON on stderr");

  std::string family;
  std::optional<std::string> out_path;

  auto* construct = app.add_subcommand("construct", "Emit a family graph as JSON");
  construct->add_option("--family", family, "Family spec, e.g. flower:n=7")->required();
  construct->add_option("--out", out_path, "Output file (default stdout)");

  auto* label = app.add_subcommand("label", "Emit a family graph with its supermagic labeling");
  label->add_option("--family", family, "Family spec, e.g. firecracker:k=5,n=5")->required();
  label->add_option("--out", out_path, "Output file (default stdout)");

  std::string graph_path;
  std::optional<std::string> pattern;
  std::string labeling_path;
  bool as_json = false;
  bool as_text = false;
  detail::IsoFlags iso;

  auto* verify = app.add_subcommand("verify", "Certify that a labeling is H-supermagic");
  verify->add_option("--graph", graph_path, "Graph JSON")->required();
  verify->add_option("--pattern", pattern,
                     "Pattern: JSON file, family spec, or family:<spec>; defaults to the "
                     "labeling file's \"pattern\" field");
  verify->add_option("--labeling", labeling_path, "Labeling JSON")->required();
  auto* json_flag = verify->add_flag("--json", as_json, "JSON report");
  verify->add_flag("--text", as_text, "Text report (default)")->excludes(json_flag);
  verify->add_option("--out", out_path, "Output file (default stdout)");
  iso.add_to(*verify);

  bool count = false;
  std::optional<Label> target;
  std::uint64_t node_limit = SearchOptions{}.node_limit;
  bool symmetry = false;
  auto* search = app.add_subcommand("search", "Search for a supermagic labeling by backtracking");
  search->add_option("--graph", graph_path, "Graph JSON")->required();
  search->add_option("--pattern", pattern, "Pattern: JSON file or family spec")->required();
  auto* count_flag = search->add_flag("--count", count, "Count all solutions");
  search->add_option("--target", target, "Required magic sum")->excludes(count_flag);
  search->add_option("--node-limit", node_limit, "Maximum label assignments")
      ->check(CLI::PositiveNumber);
  search->add_flag("--symmetry-breaking", symmetry, "Order labels of twin vertices (first solution only)");
  search->add_option("--out", out_path, "Output file (default stdout)");
  iso.add_to(*search);

  std::optional<std::string> export_labeling;
  std::string format = "dot";
  auto* export_cmd = app.add_subcommand("export", "Export a (labeled) graph as DOT or JSON");
  export_cmd->add_option("--graph", graph_path, "Graph JSON")->required();
  export_cmd->add_option("--labeling", export_labeling, "Labeling JSON");
  export_cmd->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  export_cmd->add_option("--out", out_path, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    json_errors = json_errors || std::find(args.begin(), args.end(), "--json-errors") != args.end();
    if (json_errors) {
      err << Json{{"error", "Usage"}, {"message", e.what()}}.dump() << '\n';
    } else {
      err << "usage error: " << e.what() << '\n' << app.help();
    }
    return kExitUsage;
  }

  try {
    if (*construct) {
      const auto spec = parse_family_spec(family);
      Json j;
      j["family"] = describe(spec);
      const Json g = graph_to_json(build_family_graph(spec));
      j["vertices"] = g["vertices"];
      j["edges"] = g["edges"];
      detail::emit(out, out_path, detail::dump(j));
      return kExitOk;
    }
    if (*label) {
      const auto spec = parse_family_spec(family);
      const auto inst = label_family(spec);
      Json j;
      j["family"] = describe(spec);
      j["pattern"] = inst.pattern_spec;
      j["expected_magic_sum"] = inst.expected_sum ? Json(*inst.expected_sum) : Json(nullptr);
      const Json g = graph_to_json(inst.graph);
      j["vertices"] = g["vertices"];
      j["edges"] = g["edges"];
      j["labels"] = labels_to_json(inst.graph, inst.labeling.labels());
      detail::emit(out, out_path, detail::dump(j));
      return kExitOk;
    }
    if (*verify) {
      const Graph g = graph_from_json(read_json_file(graph_path));
      const Json lj = read_json_file(labeling_path);
      const auto labels = labels_from_json(g, lj);
      if (!pattern) {
        require(lj.contains("pattern") && lj["pattern"].is_string(), ErrorCode::ParseError,
                "no --pattern given and the labeling file names none");
        pattern = lj["pattern"].get<std::string>();
      }
      const Graph h = resolve_pattern(*pattern);
      const auto report = verify_supermagic(g, h, labels, iso.options());
      detail::emit(out, out_path, as_json ? detail::dump(report_to_json(g, report)) : report_to_text(g, report));
      return report.certified() ? kExitOk : kExitFailed;
    }
    if (*search) {
      const Graph g = graph_from_json(read_json_file(graph_path));
      const Graph h = resolve_pattern(*pattern);
      SearchOptions opts;
      opts.mode = count ? SearchMode::CountAll : target ? SearchMode::TargetSum : SearchMode::FirstSolution;
      if (target) opts.target = *target;
      opts.node_limit = node_limit;
      opts.symmetry_breaking = symmetry;
      opts.iso = iso.options();
      const auto outcome = search_supermagic(g, h, opts);
      detail::emit(out, out_path, detail::dump(outcome_to_json(g, outcome)));
      return outcome.kind == OutcomeKind::Solution || outcome.kind == OutcomeKind::Count ? kExitOk
                                                                                        : kExitFailed;
    }
    if (*export_cmd) {
      const Json gj = read_json_file(graph_path);
      const Graph g = graph_from_json(gj);
      std::optional<LabelVector> labels;
      if (export_labeling) labels = labels_from_json(g, read_json_file(*export_labeling));
      if (format == "dot") {
        std::optional<std::span<const Label>> view;
        if (labels) view = std::span<const Label>(*labels);
        detail::emit(out, out_path, to_dot(g, view));
      } else {
        Json j = graph_to_json(g);
        if (labels) j["labels"] = labels_to_json(g, *labels);
        detail::emit(out, out_path, detail::dump(j));
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    if (json_errors || as_json) {
      err << Json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}.dump() << '\n';
    } else {
      err << "error: " << e.what() << '\n';
    }
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace magiccover::cli
