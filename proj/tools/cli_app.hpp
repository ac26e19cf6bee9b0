#pragma once

// Command-line frontend. Exit codes: 0 success / true, 1 false verdict,
// 2 any error. Results go to `out`, diagnostics to `err`.

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dominance/dominance.hpp"

namespace dominance::cli {

enum class OutputFormat { Plain, Json, Dot };

inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitError = 2;

struct GlobalFlags {
  OutputFormat format = OutputFormat::Plain;
  std::optional<std::size_t> len;
  bool unsorted = false;
  unsigned threads = 1;
  part_t max_n = kDefaultMaxN;
  bool timing = false;
};

namespace detail {

inline std::string dot_id(const Partition& p) { return "\"" + format_stripped(p) + "\""; }

inline Partition read(const std::string& text, const GlobalFlags& g) {
  return parse_partition(text, {.unsorted = g.unsorted});
}

inline Partition maybe_pad(const Partition& p, const GlobalFlags& g) { return g.len ? pad(p, *g.len) : p; }

inline int print_verdict(bool verdict, const GlobalFlags& g, std::ostream& out, ordered_json extra = {}) {
  if (g.format == OutputFormat::Json) {
    ordered_json j{{"result", verdict}};
    if (!extra.is_null()) j.update(extra);
    out << j.dump() << "\n";
  } else {
    out << (verdict ? "true" : "false") << "\n";
  }
  return verdict ? kExitTrue : kExitFalse;
}

}  // namespace detail

inline int cmd_transform(const std::string& text, part_t k, const GlobalFlags& g, std::ostream& out) {
  const auto p = detail::maybe_pad(detail::read(text, g), g);
  const auto t = k_transform(p, k);
  if (g.format == OutputFormat::Json)
    out << ordered_json{{"partition", format(p)}, {"k", k}, {"transform", format(t)}}.dump() << "\n";
  else
    out << format(t) << "\n";
  return kExitTrue;
}

inline int cmd_dominates(const std::string& a, const std::string& b, const GlobalFlags& g, std::ostream& out) {
  const auto pa = detail::read(a, g), pb = detail::read(b, g);
  const auto bad = first_violated_prefix(pa, pb);
  ordered_json extra;
  if (g.format == OutputFormat::Json && bad) extra = {{"first_violated_prefix", *bad}};
  return detail::print_verdict(!bad, g, out, extra);
}

inline int cmd_covers(const std::string& a, const std::string& b, bool brute, const GlobalFlags& g,
                      std::ostream& out) {
  const auto pa = detail::read(a, g), pb = detail::read(b, g);
  if (brute) return detail::print_verdict(covers_bruteforce(pa, pb, g.max_n), g, out);
  const auto move = find_cover_move(pa, pb);
  if (g.format == OutputFormat::Json) {
    ordered_json extra;
    if (move)
      extra = {{"i", move->i}, {"j", move->j}, {"adjacent", move->adjacent}, {"equal_parts", move->equal_parts}};
    return detail::print_verdict(move.has_value(), g, out, extra);
  }
  if (!move) return detail::print_verdict(false, g, out);
  out << "true " << format_move(*move) << "\n";
  return kExitTrue;
}

inline int cmd_chain(const std::string& a, const std::string& b, const GlobalFlags& g, std::ostream& out) {
  const auto chain = cover_chain(detail::read(a, g), detail::read(b, g));
  if (g.format == OutputFormat::Json) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : chain) arr.push_back(format_stripped(p));
    out << ordered_json{{"chain", arr}}.dump() << "\n";
  } else {
    for (const auto& p : chain) out << format_stripped(p) << "\n";
  }
  return kExitTrue;
}

inline int cmd_verify(part_t n, std::optional<part_t> k_max, const GlobalFlags& g, std::ostream& out) {
  const auto report = sweep(n, {.k_max = k_max, .threads = g.threads, .max_n = g.max_n});
  if (g.format == OutputFormat::Json)
    out << to_json(report, g.timing).dump(2) << "\n";
  else
    out << to_plain(report, g.timing);
  return report.holds() ? kExitTrue : kExitFalse;
}

inline int cmd_verify_pair(const std::string& a, const std::string& b, part_t k, const GlobalFlags& g,
                           std::ostream& out) {
  return detail::print_verdict(verify_pair(detail::read(a, g), detail::read(b, g), k), g, out);
}

inline int cmd_hasse(part_t n, const GlobalFlags& g, std::ostream& out) {
  const auto nodes = all_partitions(n, {.max_n = g.max_n});
  const auto edges = hasse_edges(n, g.max_n);
  switch (g.format) {
    case OutputFormat::Dot:
      out << "digraph hasse {\n  rankdir=TB;\n";
      for (const auto& p : nodes) out << "  " << detail::dot_id(p) << ";\n";
      for (const auto& e : edges) out << "  " << detail::dot_id(e.upper) << " -> " << detail::dot_id(e.lower) << ";\n";
      out << "}\n";
      break;
    case OutputFormat::Json: {
      ordered_json jn = ordered_json::array(), je = ordered_json::array();
      for (const auto& p : nodes) jn.push_back(format_stripped(p));
      for (const auto& e : edges)
        je.push_back({{"upper", format_stripped(e.upper)},
                      {"lower", format_stripped(e.lower)},
                      {"i", e.move.i},
                      {"j", e.move.j}});
      out << ordered_json{{"n", n}, {"nodes", jn}, {"edges", je}}.dump() << "\n";
      break;
    }
    case OutputFormat::Plain:
      for (const auto& e : edges)
        out << format_stripped(e.upper) << " -> " << format_stripped(e.lower) << "  " << format_move(e.move) << "\n";
      break;
  }
  return kExitTrue;
}

/// Parses `args` (without the program name) and dispatches.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Dominance order on integer partitions"};
  app.name("dominance");
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  const std::map<std::string, OutputFormat> formats{
      {"plain", OutputFormat::Plain}, {"json", OutputFormat::Json}, {"dot", OutputFormat::Dot}};
  std::string format_name = "plain";
  app.add_option("--format", format_name, "Output format: plain, json or dot")
      ->check(CLI::IsMember({"plain", "json", "dot"}));
  app.add_option("--len", g.len, "Pad partitions to this length before transforming");
  app.add_flag("--unsorted", g.unsorted, "Accept partition parts in any order");
  app.add_option("--threads", g.threads, "Worker threads for verify")->check(CLI::Range(1u, 1024u));
  app.add_option("--max-n", g.max_n, "Enumeration safety bound")->check(CLI::NonNegativeNumber);
  app.add_flag("--timing", g.timing, "Include elapsed time in verify reports");

  std::string a, b;
  part_t k = 0;
  part_t n = 0;
  std::optional<part_t> k_max;
  bool brute = false;
  bool json_flag = false;
  std::vector<std::string> pair;

  auto* transform = app.add_subcommand("transform", "Print lambda^(k): the values |lambda_i - k| sorted");
  transform->add_option("partition", a, "Partition text, e.g. 4,2,1,0")->required();
  transform->add_option("--k,-k", k, "Integer k")->required();

  auto* dom = app.add_subcommand("dominates", "Test whether A dominates B (exit 0 true, 1 false)");
  dom->add_option("a", a)->required();
  dom->add_option("b", b)->required();

  auto* cov = app.add_subcommand("covers", "Test whether A covers B in the dominance order");
  cov->add_option("a", a)->required();
  cov->add_option("b", b)->required();
  cov->add_flag("--brute", brute, "Decide by exhaustive search instead of the move characterization");

  auto* chain = app.add_subcommand("chain", "Print a saturated chain of covers from A down to B");
  chain->add_option("a", a)->required();
  chain->add_option("b", b)->required();

  auto* verify = app.add_subcommand("verify", "Exhaustively check monotonicity over all partitions of n");
  auto* n_opt = verify->add_option("n", n, "Weight");
  verify->add_option("--k-max", k_max, "Largest k to check (default n+1)");
  verify->add_flag("--json", json_flag, "Same as --format json");
  auto* pair_opt = verify->add_option("--pair", pair, "Check a single pair LAMBDA MU instead")->expected(2);
  verify->add_option("--k,-k", k, "k for --pair");
  n_opt->excludes(pair_opt);

  auto* hasse = app.add_subcommand("hasse", "Covering relation of the partitions of n");
  hasse->add_option("n", n, "Weight")->required();

  std::vector<std::string> argv_store{"dominance"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitError;
  }
  g.format = formats.at(format_name);
  if (json_flag) g.format = OutputFormat::Json;

  try {
    if (g.format == OutputFormat::Dot && !hasse->parsed())
      throw invalid_input("--format dot is only valid for the hasse subcommand");
    if (transform->parsed()) return cmd_transform(a, k, g, out);
    if (dom->parsed()) return cmd_dominates(a, b, g, out);
    if (cov->parsed()) return cmd_covers(a, b, brute, g, out);
    if (chain->parsed()) return cmd_chain(a, b, g, out);
    if (verify->parsed()) {
      if (!pair.empty()) return cmd_verify_pair(pair[0], pair[1], k, g, out);
      if (n_opt->count() == 0) throw invalid_input("verify needs n or --pair LAMBDA MU");
      return cmd_verify(n, k_max, g, out);
    }
    if (hasse->parsed()) return cmd_hasse(n, g, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace dominance::cli
