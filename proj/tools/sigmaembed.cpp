// Command-line front end: predicate queries, example reproduction, theorem
// sweeps, lemma suites and lattice dumps over built-in or catalog groups.
//
// Exit codes: 0 = all assertions pass, 1 = counterexample or assertion
// failure, 2 = usage/parse error, 3 = budget exceeded.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <sigmaembed/examples.hpp>
#include <sigmaembed/report_json.hpp>
#include <sigmaembed/sigmaembed.hpp>

namespace se = sigmaembed;

namespace {

struct Config {
  uint64_t lattice_cap = se::kDefaultLatticeCap;
  uint64_t modularity_cap = se::kDefaultModularityCap;
  uint64_t max_order = 100;
  std::string d_mode = "full";  // full | ec
  bool representatives_only = false;
  unsigned workers = 1;  // accepted for interface stability; runs sequentially
  std::string format = "text";  // text | json
};

se::HarnessOptions harness_options(const Config& cfg) {
  se::HarnessOptions o;
  o.lattice_cap = cfg.lattice_cap;
  o.modularity_cap = cfg.modularity_cap;
  o.d_mode = cfg.d_mode == "ec" ? se::DPropertyMode::ExistenceConjugacy
                                : se::DPropertyMode::Full;
  o.representatives_only = cfg.representatives_only;
  return o;
}

void load_config_file(Config& cfg) {
  const char* path = std::getenv("SIGMAEMBED_CONFIG");
  if (!path) return;
  std::ifstream in(path);
  if (!in) return;
  se::Json j = se::Json::parse(in);
  if (j.contains("lattice_cap")) cfg.lattice_cap = j["lattice_cap"];
  if (j.contains("modularity_cap")) cfg.modularity_cap = j["modularity_cap"];
  if (j.contains("max_order")) cfg.max_order = j["max_order"];
  if (j.contains("d_mode")) cfg.d_mode = j["d_mode"];
  if (j.contains("representatives_only"))
    cfg.representatives_only = j["representatives_only"];
  if (j.contains("format")) cfg.format = j["format"];
}

se::Group resolve_group(const std::string& expr, const Config& cfg) {
  if (expr.size() > 4 && expr.substr(expr.size() - 4) == ".cat") {
    auto entries = se::load_catalog(expr);
    if (entries.empty()) throw se::ValidationError("empty catalog: " + expr);
    return entries.front().second;
  }
  return se::build_group_expr(expr);
}

std::vector<se::Perm> parse_perm_list(unsigned degree, const std::string& text) {
  // generators separated by ';', each in cycle notation
  std::vector<se::Perm> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ';')) {
    if (tok.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(se::Perm::from_cycles(degree, tok));
  }
  return out;
}

void emit(const Config& cfg, const se::Json& j, const std::string& text) {
  if (cfg.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int run_props(const Config& cfg, const std::string& group_expr,
              const std::string& sigma_spec, const std::string& subgroup_gens,
              int hall_index) {
  se::Group g = resolve_group(group_expr, cfg);
  se::SigmaPartition sigma = se::SigmaPartition::parse(sigma_spec);
  se::EmbeddingContext ctx(g, cfg.lattice_cap, cfg.modularity_cap);
  se::Subgroup h =
      se::Subgroup::generated_by_perms(g, parse_perm_list(g.degree(), subgroup_gens));
  uint32_t hi = ctx.lattice().index_of(h);
  const auto& sets = ctx.hall_sets(sigma);

  se::Json j;
  j["schema"] = 1;
  j["group"] = group_expr;
  j["sigma"] = sigma.to_string();
  j["subgroup_order"] = h.order();
  j["hall_sets"] = sets.size();
  std::ostringstream text;
  text << "group " << group_expr << "  |G| = " << g.order() << "\n"
       << "subgroup of order " << h.order() << "  sigma = " << sigma.to_string()
       << "  complete Hall sigma-sets: " << sets.size() << "\n";
  auto put = [&](const std::string& name, auto value) {
    j[name] = value;
    text << "  " << name << " = " << (value ? "true" : "false") << "\n";
  };
  put("normal", ctx.lattice().is_normal(hi));
  bool modular = false;
  try {
    modular = ctx.is_modular(hi);
    put("modular", modular);
  } catch (const se::BudgetError&) {
    j["modular"] = nullptr;
    text << "  modular = (skipped: order above modularity cap)\n";
  }
  put("sigma_subnormal", ctx.is_sigma_subnormal(hi, sigma));
  put("sigma_permutable", ctx.is_sigma_permutable(hi, sigma));
  put("c_normal", ctx.is_c_normal(hi));
  if (!sets.empty()) {
    if (hall_index < 0 || hall_index >= static_cast<int>(sets.size()))
      throw se::ValidationError("--hall index out of range");
    const se::HallSet& hs = sets[hall_index];
    put("h_permutable", ctx.is_h_permutable(hi, hs));
    put("m_h_permutable", ctx.is_m_h_permutable(hi, hs));
    put("weakly_m_h_permutable", ctx.is_weakly_m_h_permutable(hi, hs, sigma));
    put("m_sigma_permutable", ctx.is_m_sigma_permutable(hi, sigma));
    put("weakly_m_sigma_permutable",
        ctx.is_weakly_m_sigma_permutable(hi, sigma));
  }
  emit(cfg, j, text.str());
  return 0;
}

int run_examples(const Config& cfg) {
  std::vector<se::ExampleCheck> checks = {
      se::check_example_a4(), se::check_example_a5(), se::check_example_1680()};
  bool all = true;
  se::Json j;
  j["schema"] = 1;
  j["examples"] = se::Json::array();
  std::ostringstream text;
  for (const se::ExampleCheck& c : checks) {
    all = all && c.pass;
    j["examples"].push_back({{"name", c.name},
                             {"pass", c.pass},
                             {"failures", c.failures},
                             {"seconds", c.seconds}});
    text << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "\n";
    for (const std::string& f : c.failures) text << "      " << f << "\n";
  }
  emit(cfg, j, text.str());
  return all ? 0 : 1;
}

int run_verify(const Config& cfg, const std::string& target,
               const std::string& group_expr, const std::string& sigma_spec) {
  se::Group g = resolve_group(group_expr, cfg);
  se::SigmaPartition sigma = se::SigmaPartition::parse(sigma_spec);
  se::GroupStudy study(g, harness_options(cfg));
  const se::SubgroupLattice& lat = study.lattice();

  std::vector<std::pair<std::string, se::Verdict>> verdicts;
  if (target == "prop31") {
    verdicts.emplace_back("G", se::verify_prop31(study, sigma));
  } else if (target == "theorem15" || target == "cor41") {
    for (uint32_t e : lat.normal_members()) {
      se::Verdict v = target == "theorem15" ? se::verify_theorem15(study, e, sigma)
                                            : se::verify_cor41(study, e, sigma);
      verdicts.emplace_back("E=" + study.member_name(e), std::move(v));
    }
  } else if (target == "prop32") {
    for (uint32_t p : lat.normal_members()) {
      if (se::primes_of(lat.member(p).order()).size() != 1) continue;
      verdicts.emplace_back("P=" + study.member_name(p),
                            se::verify_prop32(study, p, sigma));
    }
  } else {
    throw CLI::ValidationError("--target", "unknown target " + target);
  }

  bool counterexample = false;
  se::Json j;
  j["schema"] = 1;
  j["target"] = target;
  j["group"] = group_expr;
  j["sigma"] = sigma.to_string();
  j["verdicts"] = se::Json::array();
  std::ostringstream text;
  for (auto& [subject, v] : verdicts) {
    counterexample = counterexample || v.status == se::Status::Counterexample;
    se::Json jv = se::to_json(v);
    jv["subject"] = subject;
    j["verdicts"].push_back(jv);
    text << subject << ": " << se::to_string(v.status)
         << (v.nonvacuous ? " (non-vacuous)" : "") << " — " << v.detail << "\n";
  }
  emit(cfg, j, text.str());
  return counterexample ? 1 : 0;
}

int run_sweep(const Config& cfg, const std::string& target, uint64_t max_order,
              const std::string& out_path) {
  se::SweepReport report = se::sweep(se::default_corpus(max_order), max_order,
                                     target, harness_options(cfg));
  se::Json j = se::to_json(report);
  std::ostringstream text;
  text << "sweep target=" << target << " max_order=" << max_order << "\n"
       << "  cases:            " << report.cases.size() << "\n"
       << "  hypothesis_fails: " << report.count(se::Status::HypothesisFails)
       << "\n"
       << "  vacuous:          " << report.count(se::Status::Vacuous) << "\n"
       << "  holds:            " << report.count(se::Status::Holds) << "\n"
       << "  non-vacuous holds:" << report.nonvacuous_holds() << "\n"
       << "  counterexamples:  " << report.count(se::Status::Counterexample)
       << "\n";
  for (const se::SweepCase& c : report.cases)
    if (c.verdict.status == se::Status::Counterexample)
      text << "  COUNTEREXAMPLE " << c.group << " sigma=" << c.sigma << " "
           << c.subject << "\n";
  for (const std::string& n : report.notes) text << "  note: " << n << "\n";
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    out << j.dump(2) << "\n";
  }
  emit(cfg, j, text.str());
  return report.count(se::Status::Counterexample) ? 1 : 0;
}

int run_lemmas(const Config& cfg, const std::string& group_expr,
               const std::string& sigma_spec) {
  se::Group g = resolve_group(group_expr, cfg);
  se::GroupStudy study(g, harness_options(cfg));
  bool ok = true;
  se::Json all = se::Json::array();
  std::ostringstream text;
  std::vector<se::SigmaPartition> sigmas;
  if (sigma_spec == "all")
    sigmas = se::all_partitions(se::primes_of(g.order()));
  else
    sigmas.push_back(se::SigmaPartition::parse(sigma_spec));
  for (const se::SigmaPartition& sigma : sigmas) {
    se::LemmaReport r = se::lemma_suite(study, sigma, group_expr);
    all.push_back(se::to_json(r));
    text << group_expr << " sigma=" << r.sigma << "\n";
    for (const se::LemmaResult& l : r.lemmas) {
      ok = ok && l.violations.empty();
      text << "  " << l.name << ": " << l.cases << " cases, "
           << l.violations.size() << " violations"
           << (l.budget_exhausted ? " (budget exhausted)" : "") << "\n";
      for (const std::string& v : l.violations) text << "      " << v << "\n";
    }
  }
  se::Json j;
  j["schema"] = 1;
  j["reports"] = all;
  emit(cfg, j, text.str());
  return ok ? 0 : 1;
}

int run_lattice(const Config& cfg, const std::string& group_expr) {
  se::Group g = resolve_group(group_expr, cfg);
  se::SubgroupLattice lat(g, cfg.lattice_cap);
  se::Json j;
  j["schema"] = 1;
  j["group"] = group_expr;
  j["order"] = g.order();
  j["subgroups"] = se::Json::array();
  std::ostringstream text;
  text << "group " << group_expr << "  |G| = " << g.order() << "  subgroups: "
       << lat.size() << "\n";
  for (uint32_t i = 0; i < lat.size(); ++i) {
    const se::Subgroup& s = lat.member(i);
    std::vector<std::string> gens;
    for (const se::Perm& p : s.generating_perms()) gens.push_back(p.to_cycles());
    j["subgroups"].push_back({{"index", i},
                              {"order", s.order()},
                              {"normal", lat.is_normal(i)},
                              {"generators", gens}});
    text << "  #" << i << "  order " << s.order()
         << (lat.is_normal(i) ? "  normal" : "") << "  <";
    for (size_t k = 0; k < gens.size(); ++k) text << (k ? ", " : "") << gens[k];
    text << ">\n";
  }
  emit(cfg, j, text.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  load_config_file(cfg);

  CLI::App app{"finite-group subgroup-embedding verification harness"};
  app.require_subcommand(1);
  app.add_option("--lattice-cap", cfg.lattice_cap, "subgroup lattice size cap");
  app.add_option("--modularity-cap", cfg.modularity_cap,
                 "group order cap for modularity scans");
  app.add_option("--d-mode", cfg.d_mode, "Hall D-property mode")
      ->check(CLI::IsMember({"full", "ec"}));
  app.add_flag("--representatives-only", cfg.representatives_only,
               "quantify over one Hall subgroup per conjugacy class");
  app.add_option("--workers", cfg.workers,
                 "worker count (sweeps run sequentially for determinism)");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string group_expr, sigma_spec = "classical", subgroup_gens, target,
              out_path;
  int hall_index = 0;
  uint64_t max_order = 100;

  CLI::App* props = app.add_subcommand("props", "evaluate predicates for one subgroup");
  props->add_option("group", group_expr)->required();
  props->add_option("--sigma", sigma_spec);
  props->add_option("--subgroup", subgroup_gens, "generators in cycle notation, ';'-separated")->required();
  props->add_option("--hall", hall_index, "complete Hall sigma-set index");

  app.add_subcommand("examples", "reproduce the worked examples end-to-end");

  CLI::App* verify = app.add_subcommand("verify", "run one verification target on one group");
  verify->add_option("target", target)->required()
      ->check(CLI::IsMember({"theorem15", "prop31", "prop32", "cor41"}));
  verify->add_option("--group", group_expr)->required();
  verify->add_option("--sigma", sigma_spec);

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "sweep a target over the corpus");
  sweep_cmd->add_option("--target", target)->required()
      ->check(CLI::IsMember({"theorem15", "prop31", "prop32", "cor41"}));
  sweep_cmd->add_option("--max-order", max_order);
  sweep_cmd->add_option("--out", out_path, "also write the JSON report here");

  CLI::App* lemmas = app.add_subcommand("lemmas", "run the lemma suites on one group");
  lemmas->add_option("group", group_expr)->required();
  lemmas->add_option("--sigma", sigma_spec, "sigma spec, or 'all' for every partition");

  CLI::App* lattice = app.add_subcommand("lattice", "dump the subgroup lattice");
  lattice->add_option("group", group_expr)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand("props"))
      return run_props(cfg, group_expr, sigma_spec, subgroup_gens, hall_index);
    if (app.got_subcommand("examples")) return run_examples(cfg);
    if (app.got_subcommand("verify"))
      return run_verify(cfg, target, group_expr, sigma_spec);
    if (app.got_subcommand("sweep"))
      return run_sweep(cfg, target, max_order, out_path);
    if (app.got_subcommand("lemmas"))
      return run_lemmas(cfg, group_expr, sigma_spec);
    if (app.got_subcommand("lattice")) return run_lattice(cfg, group_expr);
  } catch (const se::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const se::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
