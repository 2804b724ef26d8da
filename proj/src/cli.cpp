#include "xprod/cli.hpp"

#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "xprod/parallel.hpp"
#include "xprod/verify.hpp"

namespace xprod {

namespace {

void emit(std::ostream& out, const Json& report) {
  out << dump_report(report) << "\n";
}

int emit_error(std::ostream& out, const std::string& message) {
  Json report;
  report["schema"] = kReportSchema;
  report["error"] = Json{{"kind", "input"}, {"message", message}};
  emit(out, report);
  return 2;
}

Json report_header(const char* command, const Scenario* scenario) {
  Json report;
  report["schema"] = kReportSchema;
  report["command"] = command;
  if (scenario) {
    report["scenario"] = scenario->name;
    report["seed"] = scenario->seed;
    report["tolerance"] = scenario->tolerance;
  }
  return report;
}

int cmd_nc(int n, std::ostream& out) {
  const auto parts = enumerate_nc(n);
  Json report = report_header("nc", nullptr);
  report["n"] = n;
  report["count"] = static_cast<long long>(parts.size());
  Json list = Json::array();
  for (const auto& pi : parts) list.push_back(partition_to_json(pi));
  report["partitions"] = std::move(list);
  emit(out, report);
  return 0;
}

int cmd_mobius(int n, bool full, std::ostream& out) {
  const auto& parts = nc_partitions_cached(n);
  const auto& mu = nc_mobius_to_top(n);
  Json report = report_header("mobius", nullptr);
  report["n"] = n;
  report["mu_bottom_top"] = mobius(NCPartition::discrete(n), NCPartition::whole(n));
  Json column = Json::array();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    Json row;
    row["partition"] = partition_to_json(parts[i]);
    row["mu_to_top"] = mu[i];
    column.push_back(std::move(row));
  }
  report["column"] = std::move(column);
  if (full) {
    Json table = Json::array();
    for (const auto& a : parts) {
      for (const auto& b : parts) {
        if (!leq(a, b)) continue;
        Json row;
        row["pi"] = partition_to_json(a);
        row["sigma"] = partition_to_json(b);
        row["mu"] = mobius(a, b);
        table.push_back(std::move(row));
      }
    }
    report["table"] = std::move(table);
  }
  emit(out, report);
  return 0;
}

int cmd_moments(const Scenario& s, std::ostream& out) {
  if (!s.moments || s.moments->elements.empty())
    return emit_error(out, "scenario has no 'moments' task");
  const auto& task = *s.moments;
  const int n = static_cast<int>(task.elements.size());
  const NCPartition pi = task.partition ? *task.partition : NCPartition::whole(n);
  const CoeffMatrix value = partitioned_moment(task.elements, pi);
  Json report = report_header("moments", &s);
  report["n"] = n;
  report["partition"] = partition_to_json(pi);
  report["value"] = matrix_to_json(value);
  emit(out, report);
  return 0;
}

int cmd_cumulants(const Scenario& s, int threads, std::ostream& out) {
  if (!s.cumulants || s.cumulants->elements.empty())
    return emit_error(out, "scenario has no 'cumulants' task");
  const auto& xs = s.cumulants->elements;
  if (static_cast<int>(xs.size()) > kCumulantCeiling)
    return emit_error(out, "cumulants task exceeds the order ceiling of " +
                               std::to_string(kCumulantCeiling));
  const int n = static_cast<int>(xs.size());
  Json report = report_header("cumulants", &s);
  Json table;
  for (int k = 1; k <= n; ++k) {
    const std::span<const CrossedElement> prefix(xs.data(), static_cast<std::size_t>(k));
    std::string key = "k" + std::to_string(k) + "(";
    for (int i = 0; i < k; ++i) {
      if (i > 0) key += ", ";
      key += to_text(xs[static_cast<std::size_t>(i)]);
    }
    key += ")";
    table[key] = matrix_to_json(cumulant(prefix, threads));
  }
  report["table"] = std::move(table);
  // When every element is a single term, the factorized route applies and
  // is reported alongside.
  bool all_monomial = true;
  for (const auto& x : xs) all_monomial = all_monomial && x.term_count() == 1;
  if (all_monomial) {
    std::vector<Monomial> ms;
    for (const auto& x : xs) {
      const auto& [w, m] = *x.terms().begin();
      ms.push_back(Monomial{m, w});
    }
    const std::span<const Monomial> span_ms(ms.data(),
                                            static_cast<std::size_t>(n));
    const CoeffMatrix fact = cumulant_factorized(s.ctx, span_ms);
    report["factorized"] = matrix_to_json(fact);
    const std::span<const CrossedElement> all(xs.data(), static_cast<std::size_t>(n));
    report["factorized_agrees"] = mat_eq(fact, cumulant(all, threads), s.tolerance);
  }
  emit(out, report);
  return 0;
}

int cmd_check_freeness(const Scenario& s, std::uint64_t seed, int threads,
                       std::ostream& out) {
  if (!s.freeness || s.freeness->splits.empty())
    return emit_error(out, "scenario has no 'freeness' task");
  Json report = report_header("check-freeness", &s);
  report["seed"] = seed;
  report["max_order"] = s.freeness->max_order;
  report["trials"] = s.freeness->trials;
  bool verdict = true;
  Json splits = Json::array();
  std::uint64_t salt = 1;
  for (const auto& split : s.freeness->splits) {
    FreenessOptions opts;
    opts.min_order = 2;
    opts.max_order = s.freeness->max_order;
    opts.instances_per_order = s.freeness->trials;
    opts.seed = SplitMix64(seed).fork(salt++).next();
    opts.tol = s.tolerance;
    opts.threads = threads;
    const FreenessReport r = check_freeness(s.ctx, split.a, split.b, opts);
    verdict = verdict && r.verdict;
    Json js = freeness_report_to_json(r);
    js["a"] = split.a;
    js["b"] = split.b;
    splits.push_back(std::move(js));
  }
  report["splits"] = std::move(splits);
  report["verdict"] = verdict;
  emit(out, report);
  return verdict ? 0 : 1;
}

int cmd_verify(const Scenario& s, int threads, std::ostream& out) {
  const VerifyOutcome outcome = run_verify(s, threads);
  emit(out, outcome.report);
  return outcome.verdict ? 0 : 1;
}

int cmd_selftest(int threads, std::ostream& out) {
  Json report;
  report["schema"] = kReportSchema;
  report["command"] = "selftest";
  bool verdict = true;
  Json fixtures;
  for (Scenario s : bundled_fixtures()) {
    // Reduced counts: the selftest is a smoke pass, not the full suite.
    s.verify.word_checks = 60;
    s.verify.monomial_checks = 60;
    s.verify.partition_tuples = 4;
    s.verify.cumulant_tuples = 24;
    s.verify.roundtrip_tuples = 24;
    s.verify.oracle_tuples = 24;
    s.verify.example_checks = 12;
    s.verify.freeness_instances = 30;
    s.verify.spot_instances = 4;
    if (s.freeness) s.freeness->trials = 30;
    const VerifyOutcome outcome = run_verify(s, threads);
    verdict = verdict && outcome.verdict;
    Json entry;
    entry["verdict"] = outcome.verdict;
    Json section_pass;
    for (const auto& [key, section] : outcome.report.at("sections").items()) {
      section_pass[key] = section.at("pass").get<bool>();
    }
    entry["sections"] = std::move(section_pass);
    fixtures[s.name] = std::move(entry);
  }
  report["fixtures"] = std::move(fixtures);
  report["verdict"] = verdict;
  emit(out, report);
  return verdict ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Operator-valued free probability over crossed products"};
  app.require_subcommand(1);

  int n = 0;
  bool full_table = false;
  std::string scenario_path;
  std::optional<std::uint64_t> seed_override;
  int threads_flag = 0;  // 0: resolve from env, default 1

  auto* nc = app.add_subcommand("nc", "Enumerate the noncrossing partitions of {1..n}");
  nc->add_option("--n", n, "ground-set size")->required();

  auto* mob = app.add_subcommand("mobius", "Mobius values over NC(n)");
  mob->add_option("--n", n, "ground-set size")->required();
  mob->add_flag("--full", full_table, "emit the full interval table");

  const auto add_scenario_opts = [&](CLI::App* cmd, bool with_seed) {
    cmd->add_option("--scenario", scenario_path, "scenario JSON path")->required();
    if (with_seed) {
      cmd->add_option("--seed", [&seed_override](const std::vector<std::string>& vals) {
        try {
          std::size_t used = 0;
          const std::uint64_t v = std::stoull(vals.front(), &used);
          if (used != vals.front().size()) return false;
          seed_override = v;
          return true;
        } catch (const std::exception&) {
          return false;
        }
      }, "override the scenario seed");
    }
    cmd->add_option("--threads", threads_flag, "worker threads (default: XPROD_THREADS or 1)");
  };

  auto* moments = app.add_subcommand("moments", "Partition-dependent moment of the scenario elements");
  add_scenario_opts(moments, false);
  auto* cumulants = app.add_subcommand("cumulants", "Cumulant table of the scenario elements");
  add_scenario_opts(cumulants, false);
  auto* freeness = app.add_subcommand("check-freeness", "Mixed-cumulant freeness check over the scenario splits");
  add_scenario_opts(freeness, true);
  auto* verify = app.add_subcommand("verify-paper", "Replay the full identity suite on a scenario");
  add_scenario_opts(verify, true);

  auto* selftest = app.add_subcommand("selftest", "Quick suite over the built-in configurations");
  selftest->add_option("--threads", threads_flag, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return emit_error(out, std::string("argument error: ") + e.what());
  }

  const int threads = resolve_threads(threads_flag);
  try {
    if (nc->parsed()) return cmd_nc(n, out);
    if (mob->parsed()) return cmd_mobius(n, full_table, out);
    if (selftest->parsed()) return cmd_selftest(threads, out);

    Scenario s = load_scenario(scenario_path);
    if (seed_override) s.seed = *seed_override;
    if (moments->parsed()) return cmd_moments(s, out);
    if (cumulants->parsed()) return cmd_cumulants(s, threads, out);
    if (freeness->parsed()) return cmd_check_freeness(s, s.seed, threads, out);
    if (verify->parsed()) return cmd_verify(s, threads, out);
    return emit_error(out, "no subcommand");
  } catch (const std::exception& e) {
    return emit_error(out, e.what());
  }
}

}  // namespace xprod
