// Command-line front end: parses groups and sets, runs counts, constructions,
// bounds, exhaustive tables/minimization, verification suites, the sum-free
// removal procedure, and Cayley spectra. Reports are emitted as human-readable
// text, JSON, or CSV; all numeric payloads are exact integers or rationals
// rendered as "num/den".

#include <chrono>
#include <cstdio>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "schur/constructions.hpp"
#include "schur/group.hpp"
#include "schur/oracle.hpp"
#include "schur/setfile.hpp"
#include "schur/spectral.hpp"
#include "schur/suites.hpp"
#include "schur/triples.hpp"
#include "schur/version.hpp"

using json = nlohmann::ordered_json;
using namespace schur;

namespace {

json rational_json(const Rational& r) {
  if (r.is_integer()) return r.num();
  return r.str();
}

struct CommonArgs {
  std::string group;
  std::string indices;
  bool indices_given = false;
  std::string coords;
  std::string file;
  std::string format = "human";
  std::string out;
  std::uint64_t seed = 0;
  int workers = 1;
  int64_t cap = kDefaultDenseCap;
  std::string delta;
};

void add_format_flags(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--format", args.format, "Output format")
      ->check(CLI::IsMember({"human", "json", "csv"}));
  cmd->add_option("--seed", args.seed, "Seed for randomized paths (default 0, never wall-clock)");
  cmd->add_option("--workers", args.workers, "Worker threads for exhaustive sweeps")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--cap", args.cap, "Dense-operation cap on the group order");
}

void add_set_flags(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("-g,--group", args.group,
                  "Group spec, e.g. Z7, Z2^5, Z3xZ7 (optional with --file)");
  auto* e = cmd->add_option("-e,--elements", args.indices,
                            "Comma-separated canonical element indices (may be empty)");
  e->expected(0, 1);
  e->trigger_on_parse();  // distinguish "-e" with empty value from absent
  cmd->add_option("-E,--coordinates", args.coords,
                  "Coordinate form, e.g. \"(1,0);(1,1)\"");
  cmd->add_option("--file", args.file, "Set file (group=/elements=/sha256= lines)");
}

GroupSpec parse_group_arg(const CommonArgs& args) { return parse_group_spec(args.group, args.cap); }

ElementSet load_set(const CommonArgs& args, bool& any_source) {
  int sources = (args.indices_given ? 1 : 0) + (!args.coords.empty() ? 1 : 0) +
                (!args.file.empty() ? 1 : 0);
  any_source = sources > 0;
  if (sources > 1)
    throw std::invalid_argument("give exactly one of -e, -E, --file as the set source");
  if (!args.file.empty()) {
    ElementSet s = read_set_file(args.file, args.cap);
    if (!args.group.empty() && s.group() != parse_group_arg(args))
      throw std::invalid_argument("group in file differs from -g");
    return s;
  }
  if (args.group.empty()) throw std::invalid_argument("missing -g (or use --file)");
  GroupSpec g = parse_group_arg(args);
  if (args.indices_given)
    return ElementSet::from_indices(g, parse_index_list(g, args.indices, "-e"));
  return ElementSet::from_indices(g, parse_coord_list(g, args.coords, "-E"));
}

Rational parse_rational(const std::string& text, const std::string& what) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw std::invalid_argument(what + ": expected an integer or num/den rational, got '" +
                                text + "'");
  }
}

json set_json(const ElementSet& s) {
  json arr = json::array();
  s.for_each([&](int64_t i) { arr.push_back(i); });
  return arr;
}

json bound_json(const BoundReport& b) {
  json j;
  j["theorem"] = BoundReport::theorem_name(b.id);
  if (b.p) j["p"] = *b.p;
  if (b.t) j["t"] = *b.t;
  if (b.n) j["n"] = *b.n;
  if (b.a) j["a"] = *b.a;
  if (b.k) j["k"] = *b.k;
  j["value"] = rational_json(b.value);
  j["applicable"] = b.applicable;
  if (!b.applicable) j["reason"] = b.reason;
  return j;
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array()) {
    out.emplace_back(prefix, j.dump());
  } else if (j.is_string()) {
    out.emplace_back(prefix, j.get<std::string>());
  } else {
    out.emplace_back(prefix, j.dump());
  }
}

struct Report {
  json body;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  Report(const std::string& command, int argc, char** argv) {
    body["tool"] = kToolName;
    body["version"] = kToolVersion;
    body["command"] = command;
    json a = json::array();
    for (int i = 1; i < argc; ++i) a.push_back(argv[i]);
    body["argv"] = a;
  }

  void emit(const CommonArgs& args, bool ok) {
    body["status"] = ok ? "ok" : "failed";
    body["wall_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    if (args.format == "json") {
      std::printf("%s\n", body.dump(2).c_str());
      return;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(body["inputs"], "", rows);
    std::vector<std::pair<std::string, std::string>> out_rows;
    flatten(body["outputs"], "", out_rows);
    if (args.format == "csv") {
      std::printf("key,value\n");
      for (const auto& [k, v] : rows) std::printf("in.%s,\"%s\"\n", k.c_str(), v.c_str());
      for (const auto& [k, v] : out_rows) std::printf("out.%s,\"%s\"\n", k.c_str(), v.c_str());
      return;
    }
    for (const auto& [k, v] : rows) std::printf("%-24s %s\n", (k + ":").c_str(), v.c_str());
    for (const auto& [k, v] : out_rows) std::printf("%-24s %s\n", (k + ":").c_str(), v.c_str());
  }
};

int64_t require_flag(const std::optional<int64_t>& v, const std::string& name) {
  if (!v) throw std::invalid_argument("missing required flag " + name);
  return *v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(kToolName) + ": Schur-triple counts, bounds, constructions and "
               "exhaustive verification over finite abelian groups"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);
  CommonArgs args;

  std::optional<int64_t> flag_p, flag_a, flag_t, flag_n;
  Rational eps(0);
  std::string eps_text;
  bool per_element = false, directed = false, enumerate_minimizers = false;
  std::string theorem, suite;

  auto* cmd_count = app.add_subcommand("count", "Count Schur triples of a set");
  add_set_flags(cmd_count, args);
  add_format_flags(cmd_count, args);
  cmd_count->add_flag("--per-element", per_element, "Also report per-element triple counts");

  auto* cmd_construct = app.add_subcommand("construct", "Build an extremal construction");
  cmd_construct->add_option("theorem", theorem, "zp | typeI | z2n | z3n | z3zp")->required();
  cmd_construct->add_option("-g,--group", args.group, "Group (typeI only)");
  cmd_construct->add_option("-p", flag_p, "Prime parameter");
  cmd_construct->add_option("-a", flag_a, "Cardinality parameter");
  cmd_construct->add_option("-t", flag_t, "Excess-size parameter");
  cmd_construct->add_option("-n", flag_n, "Rank parameter");
  cmd_construct->add_option("--delta", args.delta, "Override the theorem delta (num/den)");
  cmd_construct->add_option("--out", args.out, "Write the set to a set file");
  add_format_flags(cmd_construct, args);

  auto* cmd_bound = app.add_subcommand("bound", "Evaluate a lower-bound formula");
  cmd_bound->add_option("theorem", theorem, "zp | typeI | z2n | z3n | z3zp | spectral")
      ->required();
  cmd_bound->add_option("-g,--group", args.group, "Group (typeI, spectral)");
  cmd_bound->add_option("-p", flag_p, "Prime parameter");
  cmd_bound->add_option("-a", flag_a, "Cardinality parameter");
  cmd_bound->add_option("-t", flag_t, "Excess-size parameter");
  cmd_bound->add_option("-n", flag_n, "Rank parameter");
  cmd_bound->add_option("--delta", args.delta, "Override the theorem delta (num/den)");
  auto* be = cmd_bound->add_option("-e,--elements", args.indices, "Set (spectral bound)");
  be->expected(0, 1);
  be->trigger_on_parse();
  cmd_bound->add_option("-E,--coordinates", args.coords, "Set in coordinate form");
  cmd_bound->add_option("--file", args.file, "Set file");
  add_format_flags(cmd_bound, args);

  auto* cmd_table = app.add_subcommand("table", "Exhaustive f_G table");
  cmd_table->add_option("-g,--group", args.group, "Group spec")->required();
  add_format_flags(cmd_table, args);

  auto* cmd_minimize = app.add_subcommand("minimize", "Exhaustive minimum for one cardinality");
  cmd_minimize->add_option("-g,--group", args.group, "Group spec")->required();
  cmd_minimize->add_option("-a", flag_a, "Cardinality")->required();
  cmd_minimize->add_flag("--enumerate-minimizers", enumerate_minimizers,
                         "Collect every minimizer (capped at 10^5)");
  add_format_flags(cmd_minimize, args);

  auto* cmd_verify = app.add_subcommand("verify", "Run an acceptance suite");
  cmd_verify->add_option("suite", suite, "AC-1..AC-11, an alias, or 'all'")->required();
  cmd_verify->add_option("-p", flag_p, "Narrow to one prime");
  cmd_verify->add_option("-n", flag_n, "Narrow to one rank");
  add_format_flags(cmd_verify, args);

  auto* cmd_removal = app.add_subcommand("removal", "Sum-free removal procedure");
  add_set_flags(cmd_removal, args);
  cmd_removal->add_option("--eps", eps_text, "Epsilon as num/den")->required();
  cmd_removal->add_option("--out", args.out, "Write the resulting set to a set file");
  add_format_flags(cmd_removal, args);

  auto* cmd_spectrum = app.add_subcommand("spectrum", "Cayley-graph eigenvalues of a set");
  add_set_flags(cmd_spectrum, args);
  cmd_spectrum->add_flag("--directed", directed, "Directed Cayley graph");
  add_format_flags(cmd_spectrum, args);

  cmd_count->callback([&] { args.indices_given = cmd_count->count("-e") > 0; });
  cmd_bound->callback([&] { args.indices_given = cmd_bound->count("-e") > 0; });
  cmd_removal->callback([&] { args.indices_given = cmd_removal->count("-e") > 0; });
  cmd_spectrum->callback([&] { args.indices_given = cmd_spectrum->count("-e") > 0; });

  CLI11_PARSE(app, argc, argv);

  const std::string command = app.get_subcommands().front()->get_name();
  Report report(command, argc, argv);
  report.body["seed"] = args.seed;
  json& inputs = report.body["inputs"];
  json& outputs = report.body["outputs"];
  inputs = json::object();
  outputs = json::object();

  bool ok = true;
  try {
    if (command == "count") {
      bool any = false;
      ElementSet s = load_set(args, any);
      if (!any) throw std::invalid_argument("give one of -e, -E, --file");
      inputs["group"] = format_group_spec(s.group());
      inputs["set"] = set_json(s);
      int64_t st = count_schur_transform(s);
      outputs["st"] = st;
      outputs["cardinality"] = s.size();
      outputs["sum_free"] = st == 0;
      if (per_element) {
        json pe = json::array();
        s.for_each([&](int64_t x) { pe.push_back({x, st_per_element(s, x)}); });
        outputs["per_element"] = pe;
      }
    } else if (command == "construct") {
      inputs["theorem"] = theorem;
      ElementSet set = [&]() -> ElementSet {
        if (theorem == "zp") {
          int64_t p = require_flag(flag_p, "-p");
          int64_t a = require_flag(flag_a, "-a");
          auto ord = zp_middle_ordering(p);
          GroupSpec g = make_group({p}, args.cap);
          ElementSet s(g);
          if (a < 0 || a > p) throw std::invalid_argument("-a out of range [0, p]");
          for (int64_t i = 0; i < a; ++i) s.insert(ord.elements[static_cast<std::size_t>(i)]);
          return s;
        }
        if (theorem == "typeI") {
          GroupSpec g = parse_group_arg(args);
          return typeI_construction(g, require_flag(flag_p, "-p"), require_flag(flag_t, "-t"),
                                    args.seed);
        }
        if (theorem == "z2n")
          return z2n_extremal_set(require_flag(flag_n, "-n"), require_flag(flag_a, "-a"));
        if (theorem == "z3n")
          return z3n_construction(require_flag(flag_n, "-n"), require_flag(flag_t, "-t"),
                                  args.seed);
        if (theorem == "z3zp")
          return z3zp_construction(require_flag(flag_p, "-p"), require_flag(flag_a, "-a"));
        throw std::invalid_argument("unknown construction theorem: " + theorem);
      }();
      BoundReport bound = [&]() -> BoundReport {
        if (theorem == "zp") return zp_min_formula(*flag_p, *flag_a);
        if (theorem == "typeI") {
          Rational delta = args.delta.empty() ? kTypeIDefaultDelta
                                              : parse_rational(args.delta, "--delta");
          return typeI_bound(parse_group_arg(args), *flag_p, *flag_t, delta);
        }
        if (theorem == "z2n") return z2n_min_formula(*flag_n, *flag_a);
        if (theorem == "z3n") {
          Rational delta = args.delta.empty() ? kZ3nDefaultDelta
                                              : parse_rational(args.delta, "--delta");
          return z3n_bound(*flag_n, *flag_t, delta);
        }
        BoundReport b;  // z3zp upper bound
        b.id = BoundReport::Theorem::Z3ZpUpper;
        b.p = *flag_p;
        b.a = *flag_a;
        b.value = Rational(21 * (*flag_a - *flag_p) * (*flag_a - *flag_p));
        return b;
      }();
      inputs["group"] = format_group_spec(set.group());
      int64_t st = count_schur_transform(set);
      outputs["elements"] = set_json(set);
      outputs["cardinality"] = set.size();
      outputs["st"] = st;
      outputs["bound"] = bound_json(bound);
      if (theorem == "z3zp")
        outputs["within_bound"] = Rational(st) <= bound.value;  // 21(a-p)^2 is an upper bound
      else
        outputs["equal"] = Rational(st) == bound.value;
      if (!args.out.empty()) {
        write_set_file(args.out, set);
        outputs["written"] = args.out;
      }
    } else if (command == "bound") {
      inputs["theorem"] = theorem;
      BoundReport bound = [&]() -> BoundReport {
        if (theorem == "zp")
          return zp_min_formula(require_flag(flag_p, "-p"), require_flag(flag_a, "-a"));
        if (theorem == "typeI") {
          Rational delta = args.delta.empty() ? kTypeIDefaultDelta
                                              : parse_rational(args.delta, "--delta");
          return typeI_bound(parse_group_arg(args), require_flag(flag_p, "-p"),
                             require_flag(flag_t, "-t"), delta);
        }
        if (theorem == "z2n")
          return z2n_min_formula(require_flag(flag_n, "-n"), require_flag(flag_a, "-a"));
        if (theorem == "z3n") {
          Rational delta = args.delta.empty() ? kZ3nDefaultDelta
                                              : parse_rational(args.delta, "--delta");
          return z3n_bound(require_flag(flag_n, "-n"), require_flag(flag_t, "-t"), delta);
        }
        if (theorem == "z3zp") {
          int64_t p = require_flag(flag_p, "-p");
          int64_t a = require_flag(flag_a, "-a");
          BoundReport b;
          b.id = BoundReport::Theorem::Z3ZpUpper;
          b.p = p;
          b.a = a;
          b.value = Rational(21 * (a - p) * (a - p));
          return b;
        }
        if (theorem == "spectral") {
          bool any = false;
          ElementSet s = load_set(args, any);
          if (!any) throw std::invalid_argument("spectral bound needs a set source");
          inputs["group"] = format_group_spec(s.group());
          inputs["set"] = set_json(s);
          BoundReport b;
          b.id = BoundReport::Theorem::Spectral;
          b.a = s.size();
          b.value = st_spectral_lower_bound_z3n(s);
          return b;
        }
        throw std::invalid_argument("unknown bound theorem: " + theorem);
      }();
      outputs["bound"] = bound_json(bound);
    } else if (command == "table") {
      GroupSpec g = parse_group_arg(args);
      inputs["group"] = format_group_spec(g);
      OracleOptions oopt;
      oopt.workers = args.workers;
      FTable t = f_table(g, oopt);
      if (args.format == "csv") {
        std::printf("a,f\n");
        for (std::size_t a = 0; a < t.f.size(); ++a)
          std::printf("%lld,%lld\n", static_cast<long long>(a),
                      static_cast<long long>(t.f[a]));
        return 0;
      }
      json rows = json::array();
      for (std::size_t a = 0; a < t.f.size(); ++a)
        rows.push_back({static_cast<int64_t>(a), t.f[a]});
      outputs["rows"] = rows;
      outputs["a_G"] = t.a_g;
    } else if (command == "minimize") {
      GroupSpec g = parse_group_arg(args);
      inputs["group"] = format_group_spec(g);
      inputs["a"] = *flag_a;
      OracleOptions oopt;
      oopt.workers = args.workers;
      oopt.enumerate_all = enumerate_minimizers;
      MinimizationResult res = brute_force_min(g, *flag_a, oopt);
      outputs["f"] = res.f_value;
      outputs["minimizer_count"] = res.minimizer_count;
      outputs["subsets_examined"] = res.subsets_examined;
      json mins = json::array();
      for (const auto& m : res.minimizers) mins.push_back(set_json(m));
      outputs["minimizers"] = mins;
    } else if (command == "verify") {
      SuiteOptions sopt;
      sopt.p = flag_p;
      sopt.n = flag_n;
      sopt.seed = args.seed;
      sopt.workers = args.workers;
      std::vector<std::string> ids =
          suite == "all" ? acceptance_suite_ids() : std::vector<std::string>{suite};
      json suites = json::array();
      for (const auto& id : ids) {
        SuiteResult res = run_acceptance_suite(id, sopt);
        json sj;
        sj["id"] = res.id;
        sj["title"] = res.title;
        sj["pass"] = res.pass;
        sj["checks"] = res.checks;
        sj["failures"] = res.failures;
        if (!res.pass) sj["first_failure"] = res.first_failure;
        sj["notes"] = res.notes;
        sj["seconds"] = res.seconds;
        suites.push_back(sj);
        ok = ok && res.pass;
        if (args.format == "human") {
          std::printf("%-6s %s  %s (%.2f s)\n", res.id.c_str(), res.pass ? "PASS" : "FAIL",
                      res.title.c_str(), res.seconds);
          for (const auto& note : res.notes) std::printf("        - %s\n", note.c_str());
          if (!res.pass) std::printf("        first failure: %s\n", res.first_failure.c_str());
        }
      }
      inputs["suite"] = suite;
      outputs["suites"] = suites;
      if (args.format == "human") return ok ? 0 : 2;
    } else if (command == "removal") {
      bool any = false;
      ElementSet s = load_set(args, any);
      if (!any) throw std::invalid_argument("give one of -e, -E, --file");
      eps = parse_rational(eps_text, "--eps");
      inputs["group"] = format_group_spec(s.group());
      inputs["set"] = set_json(s);
      inputs["eps"] = eps.str();
      RemovalReport rep = sumfree_removal(s, eps);
      outputs["result"] = set_json(rep.result);
      outputs["result_size"] = rep.result.size();
      outputs["removed"] = s.size() - rep.result.size();
      outputs["c_size"] = rep.c_size;
      outputs["overlap"] = rep.overlap;
      outputs["preconditions_met"] = rep.preconditions_met;
      outputs["result_sum_free"] = rep.result_sum_free;
      outputs["removal_within_eps"] = rep.removal_within_eps;
      ok = rep.result_sum_free && (!rep.preconditions_met || rep.removal_within_eps);
      if (!args.out.empty()) {
        write_set_file(args.out, rep.result);
        outputs["written"] = args.out;
      }
    } else if (command == "spectrum") {
      bool any = false;
      ElementSet s = load_set(args, any);
      if (!any) throw std::invalid_argument("give one of -e, -E, --file");
      inputs["group"] = format_group_spec(s.group());
      inputs["set"] = set_json(s);
      inputs["directed"] = directed;
      SpectrumReport sp = cayley_spectrum(s, directed);
      json evs = json::array();
      for (auto ev : sp.eigenvalues) evs.push_back({ev.real(), ev.imag()});
      outputs["eigenvalues"] = evs;
      outputs["r_min"] = sp.r_min;
      if (sp.lambda_min) outputs["lambda_min"] = *sp.lambda_min;
      const auto& f = s.group().factors();
      bool all2 = std::all_of(f.begin(), f.end(), [](int64_t m) { return m == 2; });
      bool all3 = std::all_of(f.begin(), f.end(), [](int64_t m) { return m == 3; });
      if (all2) outputs["lambda_min_exact"] = lambda_min_z2n(s);
      if (all3) outputs["r_min_exact"] = rational_json(r_min_z3n(s));
    }
  } catch (const std::exception& e) {
    report.body["error"] = e.what();
    report.emit(args, false);
    return 1;
  }

  report.emit(args, ok);
  return ok ? 0 : 2;
}
