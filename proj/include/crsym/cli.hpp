#pragma once

// Command dispatch for the crsym tool. Reports go to `out`, diagnostics to
// `err`; exit codes are 0 (ok), 1 (assertion failure or invalid model) and
// 2 (usage error).

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "crsym/analysis.hpp"
#include "crsym/nondegeneracy.hpp"
#include "crsym/parser.hpp"
#include "crsym/report.hpp"
#include "crsym/zoo.hpp"

#ifndef CRSYM_GOLDEN_DIR
#define CRSYM_GOLDEN_DIR "tests/golden"
#endif

namespace crsym {

enum ExitCode { kOk = 0, kAssertionFailure = 1, kUsageError = 2 };

class UsageError : public Error {
 public:
  using Error::Error;
};

struct ModelSpec {
  std::string expr;
  std::vector<std::string> mu;
  std::vector<std::string> sos;
  std::string zoo;
  std::string json;  // inline model JSON, or @path
  std::uint64_t seed = 1;
  std::size_t sample_budget = 100;
  std::string degree_cap = "1";
  bool debug_extended_menu = false;
  bool timings = false;
};

struct ResolvedModel {
  std::string name;  // zoo name or empty
  std::optional<Model> model;
  std::vector<Violation> violations;
};

inline std::vector<Rat> parse_mu(const std::vector<std::string>& items) {
  std::vector<Rat> mu;
  for (const auto& s : items) mu.push_back(Rat::parse(s));
  return mu;
}

inline ResolvedModel resolve_json(const json& j) {
  ResolvedModel r;
  if (j.contains("sos")) {
    const auto& s = j.at("sos");
    std::vector<Rat> mu;
    for (const auto& m : s.at("mu")) mu.push_back(Rat::parse(m.get<std::string>()));
    std::vector<HoloPoly> q;
    for (const auto& e : s.at("Q")) q.push_back(parse_holo(e.get<std::string>(), mu.size()));
    r.model = build_sos(mu, q);
    return r;
  }
  const std::size_t n = j.at("n").get<std::size_t>();
  std::vector<Rat> mu;
  for (const auto& m : j.at("mu")) mu.push_back(Rat::parse(m.get<std::string>()));
  ZPoly P(n);
  for (const auto& t : j.at("P").at("terms")) {
    auto index = [&](const json& a) {
      MultiIndex e(n);
      if (a.size() != n) throw UsageError("multi-index length differs from n");
      for (std::size_t k = 0; k < n; ++k) e[k] = a[k].get<std::uint32_t>();
      return e;
    };
    Rat re = t.contains("re") ? Rat::parse(t["re"].get<std::string>()) : Rat(0);
    Rat im = t.contains("im") ? Rat::parse(t["im"].get<std::string>()) : Rat(0);
    P.add_term({index(t.at("alpha")), index(t.at("beta"))}, GaussRat(re, im));
  }
  auto v = validate(mu, P);
  r.model = v.model;
  r.violations = v.violations;
  return r;
}

inline ResolvedModel resolve(const ModelSpec& spec) {
  const int sources = !spec.expr.empty() + !spec.sos.empty() + !spec.zoo.empty() + !spec.json.empty();
  if (sources != 1) throw UsageError("exactly one of --expr, --sos, --zoo, --json is required");
  if (!spec.zoo.empty()) {
    auto e = zoo_entry(spec.zoo);
    if (!e) throw UsageError("unknown zoo model '" + spec.zoo + "'");
    return {e->name, e->build(), {}};
  }
  if (!spec.json.empty()) {
    std::string text = spec.json;
    if (text.front() == '@') {
      std::ifstream in(text.substr(1));
      if (!in) throw UsageError("cannot read " + text.substr(1));
      std::stringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
    try {
      return resolve_json(json::parse(text));
    } catch (const json::exception& e) {
      throw UsageError(std::string("bad model JSON: ") + e.what());
    }
  }
  if (spec.mu.empty()) throw UsageError("--mu is required with --expr and --sos");
  std::vector<Rat> mu = parse_mu(spec.mu);
  ResolvedModel r;
  if (!spec.sos.empty()) {
    std::vector<HoloPoly> q;
    for (const auto& s : spec.sos) q.push_back(parse_holo(s, mu.size()));
    r.model = build_sos(mu, q);
    return r;
  }
  // Reality is checked by validate, so parse without the RealPoly wrapper.
  MixedPoly p = parse_expression(spec.expr, mu.size());
  ZPoly P(mu.size());
  for (const auto& [k, c] : p.terms()) {
    if (k.u != 0) throw ParseError("w is not allowed in a defining polynomial", 0);
    P.add_term({k.z, k.zb}, c);
  }
  auto v = validate(mu, P);
  r.model = v.model;
  r.violations = v.violations;
  return r;
}

// ---- reports ------------------------------------------------------------------------

struct Analysis {
  LeviVerdict levi;
  NondegeneracyVerdict nondeg;
  GradingReport grading;
  StructureVerdict verdict;
  json timings = json::object();
};

inline Analysis analyse(const Model& m, const ModelSpec& spec) {
  using clock = std::chrono::steady_clock;
  auto ms = [](clock::time_point a, clock::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
  };
  Analysis a;
  auto t0 = clock::now();
  a.levi = pseudoconvexity(m, spec.sample_budget, spec.seed);
  auto t1 = clock::now();
  a.nondeg = holomorphic_nondegeneracy(m, Rat::parse(spec.degree_cap));
  auto t2 = clock::now();
  a.grading = full_grading(m, {.extended_menu = spec.debug_extended_menu});
  auto t3 = clock::now();
  a.verdict = structure_verdict(a.grading, m, a.levi, a.nondeg);
  auto t4 = clock::now();
  a.timings = {{"levi_ms", ms(t0, t1)}, {"nondegeneracy_ms", ms(t1, t2)}, {"grading_ms", ms(t2, t3)},
               {"verdicts_ms", ms(t3, t4)}};
  return a;
}

inline json options_json(const ModelSpec& spec) {
  return {{"seed", spec.seed},
          {"sample_budget", spec.sample_budget},
          {"degree_cap", Rat::parse(spec.degree_cap).str()},
          {"debug_extended_menu", spec.debug_extended_menu}};
}

inline json report_header(const std::string& command, const ResolvedModel& r, const ModelSpec& spec) {
  json j{{"schema", kReportSchema}, {"command", command}, {"options", options_json(spec)}};
  if (!r.name.empty()) j["name"] = r.name;
  j["validation"] = {{"ok", r.model.has_value()}, {"violations", violations_json(r.violations)}};
  if (r.model) j["model"] = model_json(*r.model);
  return j;
}

// Full report for one model: model echo, validation, verdicts and grading.
inline json full_report(const ResolvedModel& r, const ModelSpec& spec, bool with_bases, const std::string& command) {
  json j = report_header(command, r, spec);
  const Analysis a = analyse(*r.model, spec);
  j["pseudoconvexity"] = to_json(a.levi);
  j["nondegeneracy"] = to_json(a.nondeg);
  json g = to_json(a.grading);
  if (!with_bases) {
    for (auto& c : g["components"]) c.erase("basis");
    g.erase("g0");
    for (auto& c : g["extended_findings"]) c.erase("basis");
  }
  j["grading"] = g;
  j["verdicts"] = to_json(a.verdict);
  if (spec.timings) j["timings"] = a.timings;
  return j;
}

// ---- zoo checks ---------------------------------------------------------------------

struct Check {
  std::string name;
  bool ok;
  std::string detail;
};

inline std::vector<Check> zoo_checks(const ZooEntry& e, const Model& m, const Analysis& a) {
  std::vector<Check> out;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    out.push_back({std::move(name), ok, std::move(detail)});
  };
  add("tangency_dw_zero", tangency(field_dw(m.n()), m).is_zero());
  add("tangency_euler_zero", tangency(euler_field(m.mu()), m).is_zero());
  add("levi_status", a.levi.status == e.expect.levi, to_string(a.levi.status));
  if (a.levi.witness) {
    auto minor = negative_principal_minor(evaluate(levi_form(m.P()), a.levi.witness->point));
    add("levi_witness_exact", minor && minor->value == a.levi.witness->minor.value &&
                                  minor->indices == a.levi.witness->minor.indices);
  }
  add("nondegenerate", a.nondeg.nondegenerate == e.expect.nondegenerate);
  std::map<Rat, std::size_t> dims;
  for (const auto& c : a.grading.components)
    if (c.dim() > 0) dims[c.degree] = c.dim();
  std::string dim_text;
  for (const auto& [d, k] : dims) dim_text += (dim_text.empty() ? "" : " ") + d.str() + ":" + std::to_string(k);
  add("dims", dims == e.expect.dims, dim_text);
  add("grading_shape", a.verdict.grading_shape == e.expect.shape, to_string(a.verdict.grading_shape));
  add("jet_order", a.verdict.jet_order == e.expect.jet_order, std::to_string(a.verdict.jet_order));
  if (e.expect.dichotomy) {
    const auto [l, form] = *e.expect.dichotomy;
    bool ok = l >= 1 && l <= a.verdict.dichotomy.size() && a.verdict.dichotomy[l - 1].form == form;
    add("dichotomy_l" + std::to_string(l), ok);
  }
  if (a.levi.pseudoconvex_evidence() && a.nondeg.nondegenerate) {
    add("rotations_real_part_zero", a.verdict.rotations_real_part_zero && a.verdict.rotations_unsupported == 0);
    add("gc_zero", a.verdict.gc_zero);
    add("intermediate_weight_half", a.verdict.gn_weight_half_only);
  }
  // Every tangent closed-form symmetry lies in the computed component.
  for (const auto& nf : known_fields(m)) {
    if (!tangency(nf.field, m).is_zero()) continue;
    const Rat d = graded_degree(nf.field, m.mu());
    const GradedComponent* c = a.grading.component(d);
    bool in_span = false;
    if (c) {
      auto unknowns = unknowns_of(ansatz(m, d));
      Matrix<Rat> rows;
      for (const auto& X : c->basis) rows.push_back(*coordinates(X, unknowns));
      const std::size_t r0 = rank(rows, unknowns.size());
      rows.push_back(*coordinates(nf.field, unknowns));
      in_span = rank(rows, unknowns.size()) == r0;
    }
    add("known_field_" + nf.name + "_in_kernel", in_span);
  }
  return out;
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) return {};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct ZooRunOptions {
  std::string golden_dir = CRSYM_GOLDEN_DIR;
  bool update_golden = false;
};

inline int run_zoo_all(const ModelSpec& spec, const ZooRunOptions& zopt, std::ostream& out, std::ostream& err) {
  const auto entries = zoo();
  std::vector<std::future<json>> jobs;
  for (const auto& e : entries) {
    jobs.push_back(std::async(std::launch::async, [&e, spec] {
      const Model m = e.build();
      ResolvedModel r{e.name, m, {}};
      json rep = report_header("zoo-run-all", r, spec);
      const Analysis a = analyse(m, spec);
      rep["pseudoconvexity"] = to_json(a.levi);
      rep["nondegeneracy"] = to_json(a.nondeg);
      rep["grading"] = to_json(a.grading);
      rep["verdicts"] = to_json(a.verdict);
      json checks = json::array();
      for (const auto& c : zoo_checks(e, m, a)) checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
      return json{{"report", rep}, {"checks", checks}};
    }));
  }
  json summary{{"schema", kReportSchema}, {"command", "zoo-run-all"}, {"models", json::array()}};
  bool all_ok = true;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    json res = jobs[i].get();
    const std::string golden_text = res["report"].dump(2) + "\n";
    const auto path = std::filesystem::path(zopt.golden_dir) / (entries[i].name + ".json");
    if (zopt.update_golden) {
      std::filesystem::create_directories(zopt.golden_dir);
      std::ofstream(path) << golden_text;
    }
    const std::string stored = read_file(path);
    const bool golden_ok = stored == golden_text;
    res["checks"].push_back({{"name", "golden"},
                             {"ok", golden_ok},
                             {"detail", stored.empty() ? "missing " + path.string() : std::string()}});
    bool ok = true;
    for (const auto& c : res["checks"]) {
      if (c["ok"].get<bool>()) continue;
      ok = false;
      err << entries[i].name << ": check " << c["name"].get<std::string>() << " failed";
      if (!c["detail"].get<std::string>().empty()) err << " (" << c["detail"].get<std::string>() << ")";
      err << "\n";
    }
    all_ok = all_ok && ok;
    summary["models"].push_back({{"name", entries[i].name}, {"ok", ok}, {"checks", res["checks"]}});
  }
  summary["ok"] = all_ok;
  out << summary.dump(2) << "\n";
  return all_ok ? kOk : kAssertionFailure;
}

// ---- entry point --------------------------------------------------------------------

inline int cli_main(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Infinitesimal CR automorphisms of weighted homogeneous model hypersurfaces"};
  app.require_subcommand(1, 1);
  ModelSpec spec;
  ZooRunOptions zopt;

  auto add_model_flags = [&](CLI::App* c) {
    c->add_option("--expr", spec.expr, "defining polynomial P, e.g. \"abs2(z1) + abs2(z2^2)\"");
    c->add_option("--mu", spec.mu, "weights, e.g. 1/2,1/4")->delimiter(',');
    c->add_option("--sos", spec.sos, "holomorphic Q_j with P = sum |Q_j|^2, e.g. z1,z2^2")->delimiter(',');
    c->add_option("--zoo", spec.zoo, "built-in model name");
    c->add_option("--json", spec.json, "model JSON, inline or @file");
  };
  auto add_analysis_flags = [&](CLI::App* c) {
    c->add_option("--seed", spec.seed, "seed for Levi sampling");
    c->add_option("--sample-budget", spec.sample_budget, "number of random Levi sample points");
    c->add_option("--degree-cap", spec.degree_cap, "largest degree searched for holomorphic degeneracy");
    c->add_flag("--debug-extended-menu", spec.debug_extended_menu, "also solve achievable degrees outside the menu");
    c->add_flag("--timings", spec.timings, "include wall-clock timings (breaks byte-stability)");
  };

  auto* validate_cmd = app.add_subcommand("validate", "check that a model is admissible");
  add_model_flags(validate_cmd);
  auto* levi_cmd = app.add_subcommand("levi", "pseudoconvexity verdict");
  add_model_flags(levi_cmd);
  add_analysis_flags(levi_cmd);
  auto* sym_cmd = app.add_subcommand("symmetries", "full grading with bases and verdicts");
  add_model_flags(sym_cmd);
  add_analysis_flags(sym_cmd);
  auto* verd_cmd = app.add_subcommand("verdicts", "structure verdicts and dimensions");
  add_model_flags(verd_cmd);
  add_analysis_flags(verd_cmd);
  auto* list_cmd = app.add_subcommand("zoo-list", "list built-in models");
  auto* all_cmd = app.add_subcommand("zoo-run-all", "run every built-in model against its expectations");
  add_analysis_flags(all_cmd);
  all_cmd->add_option("--golden-dir", zopt.golden_dir, "directory of golden reports");
  all_cmd->add_flag("--update-golden", zopt.update_golden, "rewrite golden reports before comparing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (list_cmd->parsed()) {
      json arr = json::array();
      for (const auto& e : zoo())
        arr.push_back({{"name", e.name}, {"description", e.description}, {"mu", to_json(e.mu)}});
      out << json{{"schema", kReportSchema}, {"command", "zoo-list"}, {"models", arr}}.dump(2) << "\n";
      return kOk;
    }
    if (all_cmd->parsed()) return run_zoo_all(spec, zopt, out, err);

    const std::string command = app.get_subcommands().front()->get_name();
    ResolvedModel r = resolve(spec);
    if (!r.model) {
      out << report_header(command, r, spec).dump(2) << "\n";
      for (const auto& v : r.violations) err << "invalid model: " << to_string(v.kind) << ": " << v.detail << "\n";
      return kAssertionFailure;
    }
    json rep;
    if (validate_cmd->parsed()) {
      rep = report_header(command, r, spec);
    } else if (levi_cmd->parsed()) {
      rep = report_header(command, r, spec);
      rep["pseudoconvexity"] = to_json(pseudoconvexity(*r.model, spec.sample_budget, spec.seed));
    } else {
      rep = full_report(r, spec, sym_cmd->parsed(), command);
    }
    out << rep.dump(2) << "\n";
    return kOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kAssertionFailure;
  }
}

}  // namespace crsym
