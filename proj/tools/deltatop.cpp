#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "deltatop/covers.hpp"
#include "deltatop/enumerate.hpp"
#include "deltatop/errors.hpp"
#include "deltatop/expr.hpp"
#include "deltatop/json_io.hpp"
#include "deltatop/maps.hpp"
#include "deltatop/theorems.hpp"

using namespace deltatop;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

std::string read_input(const std::string& path) {
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open '" + path + "'");
    ss << in.rdbuf();
  }
  return ss.str();
}

void print_json(const Json& j, bool pretty) { std::cout << (pretty ? j.dump(2) : j.dump()) << "\n"; }

// A space file holds one space, an array of spaces, or newline-delimited spaces.
std::vector<FinSpace> read_spaces(const std::string& path) {
  const std::string text = read_input(path);
  std::vector<FinSpace> out;
  std::istringstream lines(text);
  std::string line;
  std::vector<std::string> docs;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) docs.push_back(line);
  }
  bool ndjson = docs.size() > 1;
  if (ndjson) {
    ndjson = std::all_of(docs.begin(), docs.end(), [](const std::string& d) { return Json::accept(d); });
  }
  if (!ndjson) docs = {text};
  for (const auto& d : docs) {
    const Json j = parse_json(d);
    if (j.is_array()) {
      for (const auto& s : j) out.push_back(space_from_json(s));
    } else {
      out.push_back(space_from_json(j));
    }
  }
  return out;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::not_applicable:
      return "not_applicable";
  }
  return "?";
}

Json check_to_json(const FinSpace& dom, const MapCheck& c) {
  Json j;
  j["verdict"] = verdict_name(c.verdict);
  if (c.witness) j["witness"] = set_to_json(dom, *c.witness);
  return j;
}

int cmd_enumerate(std::size_t points, std::size_t max_points, bool up_to_homeo, bool count_only, std::size_t jobs) {
  std::size_t lo = points;
  std::size_t hi = points;
  if (max_points > 0) {
    lo = 1;
    hi = max_points;
  }
  if (hi == 0) throw MalformedInput("give --points or --max-points");
  if (count_only) {
    std::uint64_t total = 0;
    for (std::size_t n = lo; n <= hi; ++n) total += count_spaces(n, up_to_homeo, jobs);
    std::cout << total << "\n";
    return 0;
  }
  for (std::size_t n = lo; n <= hi; ++n) {
    for_each_space(
        n, up_to_homeo, [](const FinSpace& s) { std::cout << space_to_json(s).dump() << "\n"; }, jobs);
  }
  return 0;
}

int cmd_inspect(const std::string& path, bool pretty) {
  const Json j = parse_json(read_input(path));
  Json out;
  if (j.is_object() && j.contains("dom")) {
    const SpaceMap f = map_from_json(j);
    const MapClass mc = classify_map(f);
    out["map"] = map_to_json(f);
    out["continuous"] = mc.continuous;
    out["open"] = mc.open;
    out["closed"] = mc.closed;
    out["preimage_regular_open"] = check_to_json(f.dom(), preimage_regular_open_ok(f));
    out["preimage_delta_open"] = check_to_json(f.dom(), preimage_delta_open_ok(f));
    out["delta_closed_map"] = check_to_json(f.dom(), is_delta_closed_map(f));
    out["image_delta_compact"] = check_to_json(f.dom(), image_delta_compact_ok(f));
  } else {
    const FinSpace s = space_from_json(j);
    out["space"] = space_to_json(s);
    out["regular_open"] = family_to_json(s, regular_open_family(s));
    out["delta_open"] = family_to_json(s, delta_open_family(s));
    out["delta_closed"] = family_to_json(s, delta_closed_family(s));
    out["separation"] = profile_to_json(separation_profile(s));
  }
  print_json(out, pretty);
  return 0;
}

int cmd_subcover(const std::string& path, bool pretty) {
  const Json j = parse_json(read_input(path));
  Json out;
  if (j.is_object() && j.contains("target") && j["target"].is_string()) {
    const IntervalSet target = parse_interval_set(j["target"].get<std::string>());
    std::vector<IntervalSet> family;
    for (const auto& m : j.at("family")) family.push_back(parse_interval_set(m.get<std::string>()));
    const IntervalSubcover r = extract_min_subcover_r(target, family);
    Json fam = Json::array();
    for (const auto& m : r.family) fam.push_back(format_interval_set(m));
    out["subcover"] = fam;
    out["indices"] = r.indices;
    out["certified"] = r.certified;
  } else {
    const Cover c = cover_from_json(j);
    const Subcover r = extract_min_subcover(c);
    out["subcover"] = family_to_json(c.space(), r.family, true);
    out["indices"] = r.indices;
    out["certified"] = r.certified;
  }
  print_json(out, pretty);
  return 0;
}

int cmd_interval(const std::string& text, std::size_t random, std::uint64_t seed) {
  const Expr e = parse_expr(text);
  if (e.variables().empty() || random == 0) {
    std::cout << format_value(evaluate_real(e)) << "\n";
    return 0;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < random; ++i) {
    std::map<std::string, IntervalSet> vars;
    std::string line;
    for (const auto& v : e.variables()) {
      vars[v] = random_interval_set(rng);
      line += v + "=" + format_interval_set(vars[v]) + " ";
    }
    std::cout << line << "-> " << format_value(evaluate_real(e, vars)) << "\n";
  }
  return 0;
}

std::vector<std::string> split_ids(const std::string& ids) {
  if (ids.empty()) return theorem_ids();
  std::vector<std::string> out;
  std::stringstream ss(ids);
  std::string id;
  while (std::getline(ss, id, ',')) {
    if (!id.empty()) out.push_back(id);
  }
  return out;
}

void print_table(const std::vector<TheoremReport>& reports, bool timing) {
  std::cout << std::left << std::setw(9) << "id" << std::setw(9) << "verdict" << std::right << std::setw(12)
            << "instances" << std::setw(12) << "hypothesis" << std::setw(10) << "failures";
  if (timing) std::cout << std::setw(12) << "ms";
  std::cout << "\n";
  std::vector<std::string> vacuous;
  for (const auto& r : reports) {
    std::cout << std::left << std::setw(9) << r.id << std::setw(9) << to_string(r.verdict()) << std::right
              << std::setw(12) << r.instances_total << std::setw(12) << r.instances_hypothesis_true << std::setw(10)
              << r.counterexample_count;
    if (timing) {
      std::cout << std::setw(12) << std::fixed << std::setprecision(1)
                << std::chrono::duration<double, std::milli>(r.elapsed).count();
    }
    std::cout << "\n";
    if (r.verdict() == TheoremVerdict::vacuous) vacuous.push_back(r.id);
  }
  if (!vacuous.empty()) {
    std::cout << "vacuous:";
    for (const auto& v : vacuous) std::cout << " " << v;
    std::cout << "\n";
  }
  for (const auto& r : reports) {
    for (const auto& c : r.counterexamples) std::cout << r.id << " counterexample: " << c << "\n";
  }
}

int cmd_verify(const std::string& ids, StreamSpec spec, const std::string& space_file, const std::string& format,
               bool timing) {
  if (!space_file.empty()) spec.spaces = read_spaces(space_file);
  const auto reports = run_theorems(split_ids(ids), spec);
  if (format == "json") {
    Json out;
    Json list = Json::array();
    for (const auto& r : reports) list.push_back(report_to_json(r, timing));
    out["reports"] = list;
    out["failed"] = any_failed(reports);
    print_json(out, true);
  } else {
    print_table(reports, timing);
  }
  return any_failed(reports) ? kExitFail : 0;
}

int cmd_search(const std::string& text, const StreamSpec& spec, const std::string& space_file, std::size_t limit,
               bool pretty) {
  const Expr e = parse_expr(text);
  std::vector<FinSpace> spaces;
  if (!space_file.empty()) {
    spaces = read_spaces(space_file);
  } else {
    if (spec.max_points > kMaxSweepPoints) {
      throw OutOfRange("oversize stream: search is limited to " + std::to_string(kMaxSweepPoints) + " points");
    }
    for (std::size_t n = spec.min_points; n <= spec.max_points; ++n) {
      auto batch = enumerate_spaces(n, spec.up_to_homeo, spec.jobs);
      std::move(batch.begin(), batch.end(), std::back_inserter(spaces));
    }
  }
  const SearchResult r = search_counterexamples(e, spaces, limit);
  Json out;
  out["formula"] = text;
  out["spaces"] = spaces.size();
  out["instances"] = r.instances;
  out["counterexample_count"] = r.counterexample_count;
  out["counterexamples"] = r.examples;
  print_json(out, pretty);
  return r.counterexample_count > 0 ? kExitFail : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite and real-line delta-topology toolkit"};
  app.require_subcommand(1);

  std::size_t jobs = 1;
  bool pretty = false;

  auto* en = app.add_subcommand("enumerate", "List topologies on n points as newline-delimited JSON");
  std::size_t en_points = 0;
  std::size_t en_max = 0;
  bool en_homeo = false;
  bool en_count = false;
  auto* en_points_opt = en->add_option("--points", en_points, "Exact number of points")->check(CLI::Range(1, 7));
  en->add_option("--max-points", en_max, "All carriers from 1 up to this size")
      ->check(CLI::Range(1, 7))
      ->excludes(en_points_opt);
  en->add_flag("--up-to-homeo", en_homeo, "One representative per homeomorphism class");
  en->add_flag("--count-only", en_count, "Print only the number of spaces");
  en->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* in = app.add_subcommand("inspect", "Families and separation profile of a space, or classification of a map");
  std::string in_file = "-";
  in->add_option("file", in_file, "Space or map JSON (default stdin)");
  in->add_flag("--pretty", pretty, "Indented output");

  auto* sc = app.add_subcommand("subcover", "Minimum subcover of a cover JSON (finite or interval)");
  std::string sc_file = "-";
  sc->add_option("file", sc_file, "Cover JSON (default stdin)");
  sc->add_flag("--pretty", pretty, "Indented output");

  auto* iv = app.add_subcommand("interval", "Evaluate an expression over interval sets of the real line");
  std::string iv_expr;
  std::size_t iv_random = 0;
  std::uint64_t seed = 1;
  iv->add_option("expr", iv_expr, "Expression")->required();
  iv->add_option("--random", iv_random, "Bind variables to this many random interval sets");
  iv->add_option("--seed", seed, "Seed for --random");

  StreamSpec spec;
  spec.max_points = 3;
  bool homeo = false;
  std::string space_file;
  auto add_stream_flags = [&](CLI::App* sub) {
    sub->add_option("--max-points", spec.max_points, "Largest carrier in the sweep");
    sub->add_option("--min-points", spec.min_points, "Smallest carrier in the sweep");
    sub->add_flag("--up-to-homeo", homeo, "Sweep one space per homeomorphism class");
    sub->add_option("--space", space_file, "Use the spaces in this file instead of the enumeration");
    sub->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  };

  auto* ve = app.add_subcommand("verify", "Run theorem checks over a sweep of finite spaces");
  std::string ids;
  std::string format = "table";
  bool timing = false;
  add_stream_flags(ve);
  ve->add_option("--ids", ids, "Comma-separated theorem ids (default all)");
  ve->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));
  ve->add_flag("--timing", timing, "Include elapsed times");

  auto* se = app.add_subcommand("search", "Look for assignments refuting a formula over a sweep of finite spaces");
  std::string se_expr;
  std::size_t limit = 1;
  se->add_option("formula", se_expr, "Formula over variables A, B, ...")->required();
  add_stream_flags(se);
  se->add_option("--limit", limit, "Counterexamples to print");
  se->add_flag("--pretty", pretty, "Indented output");

  auto* ids_cmd = app.add_subcommand("ids", "List theorem ids with their statements");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  spec.up_to_homeo = homeo;
  spec.jobs = jobs;
  try {
    if (*en) return cmd_enumerate(en_points, en_max, en_homeo, en_count, jobs);
    if (*in) return cmd_inspect(in_file, pretty);
    if (*sc) return cmd_subcover(sc_file, pretty);
    if (*iv) return cmd_interval(iv_expr, iv_random, seed);
    if (*ve) return cmd_verify(ids, spec, space_file, format, timing);
    if (*se) return cmd_search(se_expr, spec, space_file, limit, pretty);
    if (*ids_cmd) {
      for (const auto& id : theorem_ids()) std::cout << id << "\t" << theorem_statement(id) << "\n";
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
