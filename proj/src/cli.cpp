#include "patternsort/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "patternsort/bijections.hpp"
#include "patternsort/error.hpp"
#include "patternsort/grid.hpp"
#include "patternsort/machine.hpp"
#include "patternsort/paths.hpp"
#include "patternsort/pattern.hpp"
#include "patternsort/rgf.hpp"
#include "patternsort/sequences.hpp"
#include "patternsort/stats.hpp"
#include "patternsort/verify.hpp"

namespace patternsort {

namespace {

using nlohmann::json;

struct Options {
  std::string format;
  std::string out_path;
  std::optional<std::size_t> cap;

  std::string sigma = "132";
  std::string perm;
  std::string rgf;
  std::string path;
  std::string partition;
  std::string pattern;
  std::string mode = "stack";
  std::string kind;
  std::string sequence;
  std::string scope = "all";
  std::size_t n = 0;
  std::size_t nmax = 7;
  bool trace = false;
  bool count_only = false;
  bool serial = false;
  bool relaxed = false;
  bool steps = false;
  bool list = false;
};

std::size_t resolve_cap(const Options& opt, std::size_t fallback) {
  if (opt.cap) return *opt.cap;
  if (const char* env = std::getenv("PATTERNSORT_CAP")) {
    try {
      std::size_t used = 0;
      const unsigned long value = std::stoul(env, &used);
      if (used == std::string(env).size()) return value;
    } catch (const std::logic_error&) {
    }
    throw InvalidInput(std::string("PATTERNSORT_CAP is not a size: '") + env + "'");
  }
  return fallback;
}

std::string format_or(const Options& opt, const std::string& fallback) {
  return opt.format.empty() ? fallback : opt.format;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw InvalidInput("format '" + format + "' is not available for this command");
}

Permutation need_perm(const Options& opt) {
  require(!opt.perm.empty(), "--perm is required");
  return parse_permutation(opt.perm);
}

Rgf need_rgf(const Options& opt) {
  require(!opt.rgf.empty(), "--rgf is required");
  return parse_rgf(opt.rgf);
}

std::vector<int> need_pattern(const Options& opt) {
  require(!opt.pattern.empty(), "--pattern is required");
  return parse_sequence(opt.pattern);
}

ContainerMode parse_mode(const std::string& mode) {
  if (mode == "stack") return ContainerMode::Stack;
  if (mode == "queue") return ContainerMode::Queue;
  throw InvalidInput("unknown container mode '" + mode + "'");
}

// ---------------------------------------------------------------- simulate / sortable

int cmd_simulate(const Options& opt, std::ostream& out) {
  const Permutation pi = need_perm(opt);
  const Permutation sigma = parse_permutation(opt.sigma);
  const MachineTrace trace = sigma_stack_pass(pi, sigma);
  const bool sortable = !contains(trace.output.values(), std::vector<int>{2, 3, 1});
  const std::string format = format_or(opt, "text");
  require_format(format, {"text", "json"});
  if (format == "json") {
    json doc = json::parse(trace_to_json(trace, pi, sigma));
    doc["sortable"] = sortable;
    if (!opt.trace) doc.erase("events");
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << "s_sigma = " << to_string(trace.output) << '\n';
  out << "sortable = " << (sortable ? "true" : "false") << '\n';
  if (opt.trace) out << trace_to_text(trace);
  return kExitOk;
}

int cmd_sortable(const Options& opt, std::ostream& out) {
  const Permutation pi = need_perm(opt);
  const Permutation sigma = parse_permutation(opt.sigma);
  const bool sortable = is_sigma_sortable(pi, sigma);
  const std::string format = format_or(opt, "text");
  require_format(format, {"text", "json"});
  if (format == "json") {
    out << json{{"schema", 1}, {"input", to_string(pi)}, {"sigma", to_string(sigma)},
                {"sortable", sortable}}
               .dump(2)
        << '\n';
  } else {
    out << (sortable ? "true" : "false") << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- enumerate

std::vector<std::string> enumerate_items(const Options& opt) {
  const std::size_t n = opt.n;
  std::vector<std::string> items;
  auto add_all = [&items](const auto& range) {
    for (const auto& x : range) items.push_back(to_string(x));
  };
  if (opt.kind == "sortable") {
    const std::size_t cap = resolve_cap(opt, kDefaultPermutationCap);
    const Permutation sigma = parse_permutation(opt.sigma);
    add_all(opt.serial ? enumerate_sortable_serial(n, sigma, cap) : enumerate_sortable(n, sigma, cap));
  } else if (opt.kind == "generated") {
    const std::size_t cap = resolve_cap(opt, kDefaultPermutationCap);
    add_all(opt.serial ? generate_sortable_serial(n, cap) : generate_sortable(n, cap));
  } else if (opt.kind == "avoiders") {
    const std::size_t cap = resolve_cap(opt, kDefaultRgfCap);
    const auto q = need_pattern(opt);
    add_all(opt.serial ? enumerate_avoiders_serial(n, q, cap) : enumerate_avoiders(n, q, cap));
  } else if (opt.kind == "rgfs") {
    add_all(enumerate_rgfs(n, resolve_cap(opt, kDefaultRgfCap)));
  } else if (opt.kind == "dyck") {
    const std::size_t cap = resolve_cap(opt, kDefaultPathCap);
    add_all(opt.serial ? enumerate_dyck_serial(n, cap) : enumerate_dyck(n, cap));
  } else if (opt.kind == "motzkin") {
    add_all(enumerate_motzkin(n, resolve_cap(opt, kDefaultPathCap)));
  } else if (opt.kind == "labeled-motzkin") {
    add_all(enumerate_labeled_motzkin(n, resolve_cap(opt, kDefaultPathCap)));
  }
  return items;
}

int cmd_enumerate(const Options& opt, std::ostream& out) {
  const auto items = enumerate_items(opt);
  const std::string format = format_or(opt, "text");
  require_format(format, {"text", "json", "csv"});
  if (format == "json") {
    json doc{{"schema", 1}, {"kind", opt.kind}, {"n", opt.n}, {"count", items.size()}};
    if (opt.kind == "sortable") doc["sigma"] = to_string(parse_permutation(opt.sigma));
    if (opt.kind == "avoiders") doc["pattern"] = to_compact_string(need_pattern(opt));
    if (!opt.count_only) doc["items"] = items;
    out << doc.dump(2) << '\n';
  } else if (format == "csv") {
    if (opt.count_only) {
      out << "kind,n,count\n" << opt.kind << ',' << opt.n << ',' << items.size() << '\n';
    } else {
      out << "index,item\n";
      for (std::size_t i = 0; i < items.size(); ++i) out << i + 1 << ',' << items[i] << '\n';
    }
  } else if (opt.count_only) {
    out << items.size() << '\n';
  } else {
    for (const auto& item : items) out << item << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- decompose

int cmd_decompose(const Options& opt, std::ostream& out) {
  const Permutation pi = need_perm(opt);
  const GridDecomposition grid = decompose(pi);
  const StructuralReport report = structural_check(pi);
  const bool sortable = is_sigma_sortable(pi, Permutation{1, 3, 2});
  const auto active = sortable ? active_cells(pi) : std::vector<std::size_t>{};
  const std::string format = format_or(opt, "text");
  require_format(format, {"text", "json"});
  if (format == "json") {
    json cells = json::object();
    for (std::size_t i = 1; i <= grid.strips(); ++i) {
      for (std::size_t j = i; j <= grid.strips(); ++j) {
        if (!grid.cell(i, j).empty()) {
          cells[std::to_string(i) + "," + std::to_string(j)] = grid.cell(i, j);
        }
      }
    }
    json conditions = json::array();
    for (const auto& c : report.conditions) {
      conditions.push_back({{"name", c.name}, {"holds", c.holds}, {"detail", c.detail}});
    }
    json doc{{"schema", 1},          {"input", to_string(pi)},    {"minima", grid.minima},
             {"blocks", grid.blocks}, {"hstrips", grid.hstrips},   {"cells", cells},
             {"core", grid.core},     {"sortable", sortable},      {"structural", conditions}};
    if (sortable) doc["active_cells"] = active;
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << render_grid(grid);
  out << "core: " << to_string(grid.core) << '\n';
  out << "sortable: " << (sortable ? "true" : "false") << '\n';
  if (sortable) {
    std::vector<int> cells(active.begin(), active.end());
    out << "active cells: " << to_string(cells) << '\n';
  }
  for (const auto& c : report.conditions) {
    out << (c.holds ? "  ok   " : "  FAIL ") << c.name;
    if (!c.detail.empty()) out << " (" << c.detail << ')';
    out << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- map

struct MapResult {
  std::string input;
  std::string output;
  json statistics = json::object();
  json steps = nullptr;
};

json gamma_steps_json(const std::vector<GammaStep>& steps) {
  json arr = json::array();
  for (const auto& s : steps) arr.push_back({{"swap", s.swapped.at}, {"after", to_string(s.after)}});
  return arr;
}

MapResult run_map(const Options& opt) {
  MapResult res;
  const std::string& name = opt.kind;
  if (name == "phi") {
    const Permutation pi = need_perm(opt);
    const Rgf r = phi(pi, opt.relaxed ? PhiMode::Relaxed : PhiMode::Strict);
    res = {to_string(pi), to_string(r)};
    res.statistics = {{"ltr_minima", count_ltr_minima(pi)}, {"max", r.max()}};
  } else if (name == "phi-inverse") {
    const Rgf r = need_rgf(opt);
    const Permutation pi = phi_inverse(r);
    res = {to_string(r), to_string(pi)};
    res.statistics = {{"ltr_minima", count_ltr_minima(pi)}, {"max", r.max()}};
  } else if (name == "psi") {
    const Rgf r = need_rgf(opt);
    const DyckPath p = psi(r);
    res = {to_string(r), to_string(p)};
    res.statistics = {{"max", r.max()}, {"double_rises", double_rises(p)}};
  } else if (name == "psi-inverse") {
    require(!opt.path.empty(), "--path is required");
    const DyckPath p = parse_dyck(opt.path);
    const Rgf r = psi_inverse(p);
    res = {to_string(p), to_string(r)};
    res.statistics = {{"max", r.max()}, {"double_rises", double_rises(p)}};
  } else if (name == "beta" || name == "beta-reduced") {
    require(!opt.path.empty(), "--path is required");
    const LabeledMotzkinPath p = parse_labeled_motzkin(opt.path);
    const ContainerMode mode = parse_mode(opt.mode);
    const Rgf r = name == "beta" ? beta(p, mode) : beta_reduced(p, mode);
    res = {to_string(p), to_string(r)};
    res.statistics = {{"mode", opt.mode}, {"max", r.max()}};
  } else if (name == "beta-inverse" || name == "beta-reduced-inverse") {
    const Rgf r = need_rgf(opt);
    const ContainerMode mode = parse_mode(opt.mode);
    const LabeledMotzkinPath p =
        name == "beta-inverse" ? beta_inverse(r, mode) : beta_reduced_inverse(r, mode);
    res = {to_string(r), to_string(p)};
    res.statistics = {{"mode", opt.mode}, {"max", r.max()}};
  } else if (name == "av321") {
    const Rgf r = need_rgf(opt);
    const Permutation pi = nr_to_av321(r);
    res = {to_string(r), to_string(pi)};
    res.statistics = {{"max", r.max()}, {"ltr_maxima", ltr_extrema(pi).maxima.size()}};
  } else if (name == "av321-inverse") {
    const Permutation pi = need_perm(opt);
    const Rgf r = av321_to_nr(pi);
    res = {to_string(pi), to_string(r)};
    res.statistics = {{"max", r.max()}, {"ltr_maxima", ltr_extrema(pi).maxima.size()}};
  } else if (name == "gamma" || name == "gamma-inverse") {
    const Rgf r = need_rgf(opt);
    const auto steps = name == "gamma" ? gamma_steps(r) : gamma_inverse_steps(r);
    const Rgf image = steps.empty() ? r : steps.back().after;
    res = {to_string(r), to_string(image)};
    res.statistics = {{"max", image.max()}, {"swaps", steps.size()}};
    if (opt.steps) res.steps = gamma_steps_json(steps);
  } else if (name == "alpha") {
    const Rgf r = need_rgf(opt);
    const Rgf a = alpha(r);
    res = {to_string(r), to_string(a)};
    res.statistics = {{"repeated_ltr_maxima", repeated_ltr_maxima(r).size()}};
  } else if (name == "partition") {
    const Rgf r = need_rgf(opt);
    res = {to_string(r), to_string(rgf_to_partition(r))};
    res.statistics = {{"blocks", r.max()}};
  } else if (name == "partition-inverse") {
    require(!opt.partition.empty(), "--partition is required");
    const SetPartition p = parse_partition(opt.partition);
    const Rgf r = partition_to_rgf(p);
    res = {to_string(p), to_string(r)};
    res.statistics = {{"blocks", r.max()}};
  }
  return res;
}

int cmd_map(const Options& opt, std::ostream& out) {
  const MapResult res = run_map(opt);
  const std::string format = format_or(opt, "text");
  require_format(format, {"text", "json"});
  if (format == "json") {
    json doc{{"schema", 1},
             {"map", opt.kind},
             {"input", res.input},
             {"output", res.output},
             {"statistics", res.statistics}};
    if (!res.steps.is_null()) doc["steps"] = res.steps;
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << res.output << '\n';
  if (!res.steps.is_null()) {
    for (const auto& s : res.steps) {
      const auto at = s["swap"].get<std::vector<std::size_t>>();
      out << "  swap " << at[0] << ',' << at[1] << " of (" << at[0] << ',' << at[1] << ','
          << at[2] << ") -> " << s["after"].get<std::string>() << '\n';
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const Options& opt, std::ostream& out) {
  const Scope scope = parse_scope(opt.scope);
  const std::string format = format_or(opt, "text");
  require_format(format, {"text", "json"});
  if (opt.list) {
    for (const auto& name : verify_check_names(scope)) out << name << '\n';
    return kExitOk;
  }
  const VerifyReport report = run_verify_suite(scope, opt.nmax);
  std::size_t passed = 0;
  for (const auto& c : report.checks) passed += c.passed ? 1 : 0;
  if (format == "json") {
    json checks = json::array();
    for (const auto& c : report.checks) {
      json entry{{"scope", to_string(c.scope)}, {"name", c.name}, {"passed", c.passed}};
      if (!c.passed) entry["counterexample"] = c.counterexample;
      checks.push_back(entry);
    }
    out << json{{"schema", 1},
                {"scope", to_string(scope)},
                {"nmax", opt.nmax},
                {"status", report.passed() ? "ok" : "fail"},
                {"checks", checks}}
               .dump(2)
        << '\n';
  } else {
    for (const auto& c : report.checks) {
      out << (c.passed ? "PASS " : "FAIL ") << '[' << to_string(c.scope) << "] " << c.name;
      if (!c.passed) out << ": " << c.counterexample;
      out << '\n';
    }
    out << passed << '/' << report.checks.size() << " checks passed (nmax=" << opt.nmax << ")\n";
  }
  return report.passed() ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------- table

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  bool consistent = true;
};

Table build_table(const Options& opt) {
  Table t;
  const std::size_t n = opt.n;
  if (opt.kind == "sortable-by-minima") {
    require(n >= 1, "--n must be at least 1");
    const auto counts = minima_distribution(n, resolve_cap(opt, kDefaultPermutationCap));
    t.header = {"k", "count", "formula"};
    for (std::size_t k = 1; k <= n; ++k) {
      const BigInt formula = max_distribution_formula(n - 1, k - 1);
      t.consistent = t.consistent && BigInt(counts[k]) == formula;
      t.rows.push_back({std::to_string(k), std::to_string(counts[k]), formula.str()});
    }
  } else if (opt.kind == "rgf-max") {
    const auto words = enumerate_avoiders(n, need_pattern(opt), resolve_cap(opt, kDefaultRgfCap));
    const auto counts = max_distribution(words, n);
    t.header = {"k", "count"};
    for (std::size_t k = n == 0 ? 0 : 1; k <= n; ++k) {
      t.rows.push_back({std::to_string(k), std::to_string(counts[k])});
    }
  } else if (opt.kind == "narayana") {
    require(n >= 1, "--n must be at least 1");
    std::vector<std::size_t> counts(n + 1, 0);
    for (const auto& p : enumerate_dyck(n, resolve_cap(opt, kDefaultPathCap))) {
      ++counts[double_rises(p) + 1];
    }
    t.header = {"k", "count", "formula"};
    for (std::size_t k = 1; k <= n; ++k) {
      t.consistent = t.consistent && BigInt(counts[k]) == narayana(n, k);
      t.rows.push_back({std::to_string(k), std::to_string(counts[k]), narayana(n, k).str()});
    }
  } else if (opt.kind == "a007317") {
    t.header = {"n", "value"};
    for (std::size_t i = 1; i <= n; ++i) t.rows.push_back({std::to_string(i), a007317(i).str()});
  }
  return t;
}

void write_table(const Table& t, const std::string& format, const Options& opt, std::ostream& out) {
  if (format == "json") {
    json rows = json::array();
    for (const auto& row : t.rows) {
      json obj = json::object();
      for (std::size_t c = 0; c < t.header.size(); ++c) obj[t.header[c]] = json::parse(row[c]);
      rows.push_back(obj);
    }
    json doc{{"schema", 1}, {"table", opt.kind}, {"n", opt.n}, {"rows", rows}};
    if (opt.kind == "rgf-max") doc["pattern"] = to_compact_string(need_pattern(opt));
    out << doc.dump(2) << '\n';
  } else if (format == "bfile") {
    for (const auto& row : t.rows) out << row[0] << ' ' << row[1] << '\n';
  } else {
    for (std::size_t c = 0; c < t.header.size(); ++c) out << (c ? "," : "") << t.header[c];
    out << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
      out << '\n';
    }
  }
}

int cmd_table(const Options& opt, std::ostream& out) {
  const std::string format = format_or(opt, "csv");
  require_format(format, {"csv", "json", "bfile"});
  const Table t = build_table(opt);
  write_table(t, format, opt, out);
  return t.consistent ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------- export

int cmd_export(const Options& opt, std::ostream& out) {
  if (opt.kind == "trace") {
    const Permutation pi = need_perm(opt);
    const Permutation sigma = parse_permutation(opt.sigma);
    out << trace_to_json(sigma_stack_pass(pi, sigma), pi, sigma) << '\n';
  } else if (opt.kind == "bfile") {
    std::vector<BigInt> values;
    std::size_t offset = 0;
    if (opt.sequence == "catalan" || opt.sequence == "motzkin") {
      for (std::size_t i = 0; i <= opt.n; ++i) {
        values.push_back(opt.sequence == "catalan" ? catalan(i) : motzkin(i));
      }
    } else {
      offset = 1;
      for (std::size_t i = 1; i <= opt.n; ++i) {
        values.push_back(opt.sequence == "a007317" ? a007317(i) : catalan_double_partial_sums(i));
      }
    }
    write_bfile(out, values, offset);
  } else if (opt.kind == "minima-table") {
    const std::size_t cap = resolve_cap(opt, kDefaultPermutationCap);
    out << "n,k,count\n";
    for (std::size_t m = 1; m <= opt.n; ++m) {
      const auto counts = minima_distribution(m, cap);
      for (std::size_t k = 1; k <= m; ++k) out << m << ',' << k << ',' << counts[k] << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pattern-avoiding stack sorting: simulation, enumeration, bijections and checks",
               "patternsort"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&opt](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "Output format (text, json, csv, bfile)");
    cmd->add_option("--out", opt.out_path, "Write the report to this file");
    cmd->add_option("--cap", opt.cap, "Override the enumeration size cap");
  };

  auto* simulate = app.add_subcommand("simulate", "Run the sigma-stack pass on one permutation");
  simulate->add_option("--sigma", opt.sigma, "Pattern avoided by the first stack")->capture_default_str();
  simulate->add_option("--perm", opt.perm, "Input permutation")->required();
  simulate->add_flag("--trace", opt.trace, "Include the push/pop trace");
  add_common(simulate);

  auto* sortable = app.add_subcommand("sortable", "Test sortability by the sigma-machine");
  sortable->add_option("--sigma", opt.sigma, "Pattern avoided by the first stack")->capture_default_str();
  sortable->add_option("--perm", opt.perm, "Input permutation")->required();
  add_common(sortable);

  auto* enumerate = app.add_subcommand("enumerate", "List combinatorial families");
  enumerate
      ->add_option("kind", opt.kind,
                   "sortable | generated | avoiders | rgfs | dyck | motzkin | labeled-motzkin")
      ->required()
      ->check(CLI::IsMember({"sortable", "generated", "avoiders", "rgfs", "dyck", "motzkin",
                             "labeled-motzkin"}));
  enumerate->add_option("--n", opt.n, "Size")->required();
  enumerate->add_option("--sigma", opt.sigma, "Machine pattern (sortable)")->capture_default_str();
  enumerate->add_option("--pattern", opt.pattern, "Avoided RGF pattern (avoiders)");
  enumerate->add_flag("--count-only", opt.count_only, "Print only the number of objects");
  enumerate->add_flag("--serial", opt.serial, "Use the single-threaded reference enumeration");
  add_common(enumerate);

  auto* decompose_cmd = app.add_subcommand("decompose", "Grid decomposition of a permutation");
  decompose_cmd->add_option("--perm", opt.perm, "Input permutation")->required();
  add_common(decompose_cmd);

  auto* map = app.add_subcommand("map", "Apply one of the bijections");
  map->add_option("name", opt.kind, "Map name")
      ->required()
      ->check(CLI::IsMember({"phi", "phi-inverse", "psi", "psi-inverse", "beta", "beta-inverse",
                             "beta-reduced", "beta-reduced-inverse", "av321", "av321-inverse",
                             "gamma", "gamma-inverse", "alpha", "partition",
                             "partition-inverse"}));
  map->add_option("--perm", opt.perm, "Input permutation");
  map->add_option("--rgf", opt.rgf, "Input restricted growth function");
  map->add_option("--path", opt.path, "Input lattice path");
  map->add_option("--partition", opt.partition, "Input set partition, e.g. 13-25-4");
  map->add_option("--mode", opt.mode, "Container for beta: stack | queue")->capture_default_str();
  map->add_flag("--relaxed", opt.relaxed, "phi without the sortability requirement");
  map->add_flag("--steps", opt.steps, "Show the individual gamma swaps");
  add_common(map);

  auto* verify = app.add_subcommand("verify", "Run the exhaustive property checks");
  verify->add_option("--scope", opt.scope, "all | machine | grid | rgf | bijections | sequences")
      ->capture_default_str();
  verify->add_option("--nmax", opt.nmax, "Largest size checked")->capture_default_str();
  verify->add_flag("--list", opt.list, "List the checks without running them");
  add_common(verify);

  auto* table = app.add_subcommand("table", "Distribution tables");
  table->add_option("kind", opt.kind, "sortable-by-minima | rgf-max | narayana | a007317")
      ->required()
      ->check(CLI::IsMember({"sortable-by-minima", "rgf-max", "narayana", "a007317"}));
  table->add_option("--n", opt.n, "Size")->required();
  table->add_option("--pattern", opt.pattern, "Avoided RGF pattern (rgf-max)");
  add_common(table);

  auto* export_cmd = app.add_subcommand("export", "Write machine-readable artifacts");
  export_cmd->add_option("kind", opt.kind, "trace | bfile | minima-table")
      ->required()
      ->check(CLI::IsMember({"trace", "bfile", "minima-table"}));
  export_cmd->add_option("--perm", opt.perm, "Input permutation (trace)");
  export_cmd->add_option("--sigma", opt.sigma, "Machine pattern (trace)")->capture_default_str();
  export_cmd->add_option("--sequence", opt.sequence, "catalan | motzkin | a007317 | sort123")
      ->check(CLI::IsMember({"catalan", "motzkin", "a007317", "sort123"}));
  export_cmd->add_option("--n", opt.n, "Number of terms / largest size");
  add_common(export_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return kExitUsage;
  }

  const std::map<CLI::App*, std::function<int(const Options&, std::ostream&)>> verbs{
      {simulate, cmd_simulate}, {sortable, cmd_sortable}, {enumerate, cmd_enumerate},
      {decompose_cmd, cmd_decompose}, {map, cmd_map}, {verify, cmd_verify},
      {table, cmd_table}, {export_cmd, cmd_export}};

  try {
    if (export_cmd->parsed() && opt.kind == "bfile" && opt.sequence.empty()) {
      throw InvalidInput("export bfile needs --sequence");
    }
    std::ostringstream report;
    int code = kExitOk;
    for (const auto& [cmd, run] : verbs) {
      if (cmd->parsed()) code = run(opt, report);
    }
    if (opt.out_path.empty()) {
      out << report.str();
    } else {
      std::ofstream file(opt.out_path);
      if (!file) throw InvalidInput("cannot open '" + opt.out_path + "' for writing");
      file << report.str();
    }
    return code;
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << " (raise it with --cap or PATTERNSORT_CAP)\n";
    return kExitUsage;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace patternsort
