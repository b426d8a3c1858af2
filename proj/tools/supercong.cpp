#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "supercong/congruence.hpp"
#include "supercong/highprec.hpp"
#include "supercong/qseries.hpp"
#include "supercong/quadforms.hpp"
#include "supercong/report.hpp"
#include "supercong/sequences.hpp"

using namespace supercong;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string format = "table";
  int workers = 0;
  std::string config_path;

  std::vector<std::string> theorems;
  std::uint64_t min_p = 5;
  std::uint64_t max_p = 1000;
  std::uint64_t cb6_max_p = 0;  // 0: same as max_p
  std::uint64_t conjectural_max_p = 0;
  bool include_conjectural = false;
  bool strict = false;
  bool summary_only = false;

  std::size_t terms = 200;
  int digits = 60;
  int working_digits = 80;
  std::size_t samples = 50;
  unsigned bits = 256;
  unsigned trials = 100;
  std::uint64_t lemma_max_p = 10000;
  std::uint64_t seed = 1;

  std::string sequence;
  unsigned count = 10;
};

std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) throw UsageError("malformed config line: " + line);
      continue;
    }
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

// Config-file values fill options not given on the command line.
void apply_config(CLI::App& app, const std::map<std::string, std::string>& kv) {
  for (const auto& [key, value] : kv) {
    bool used = false;
    for (CLI::App* a : [&] {
           std::vector<CLI::App*> all{&app};
           for (std::size_t i = 0; i < all.size(); ++i)
             for (CLI::App* s : all[i]->get_subcommands({})) all.push_back(s);
           return all;
         }()) {
      CLI::Option* opt = nullptr;
      try {
        opt = a->get_option("--" + key);
      } catch (const CLI::OptionNotFound&) {
        continue;
      }
      used = true;
      if (opt->count() > 0) continue;
      if (opt->get_type_size() == 0) {
        if (value == "true" || value == "1" || value == "yes") opt->add_result(std::string("true"));
      } else {
        opt->add_result(value);
      }
      opt->run_callback();
    }
    if (!used) throw UsageError("unknown config key: " + key);
  }
}

Format format_of(const Config& c) {
  const auto f = parse_format(c.format);
  if (!f) throw UsageError("unknown format: " + c.format);
  return *f;
}

ojson run_json(const Config& c, const std::string& command) {
  return ojson{{"command", command}, {"workers", c.workers}};
}

Report run_congruences(const Config& c) {
  if (c.min_p > c.max_p) throw UsageError("malformed range: min-p exceeds max-p");
  std::vector<CongruenceSpec> specs;
  if (!c.theorems.empty()) {
    std::set<std::string> seen;
    for (const auto& id : c.theorems) {
      try {
        seen.insert(lookup(id).id);
      } catch (const std::invalid_argument&) {
        throw UsageError("unknown theorem id: " + id);
      }
    }
    for (const auto& s : catalog())
      if (seen.count(s.id)) specs.push_back(s);
  } else {
    for (const auto& s : catalog())
      if (s.status == Status::Proven || c.include_conjectural || c.strict) specs.push_back(s);
  }

  // CB6 rows and non-proven rows use their own upper bounds.
  std::map<std::uint64_t, std::vector<CongruenceSpec>> by_hi;
  std::vector<std::string> order;
  for (const auto& s : specs) {
    std::uint64_t hi = c.max_p;
    if (c.theorems.empty()) {
      if (s.sequence == SequenceId::CB6 && c.cb6_max_p > 0) hi = std::min(hi, c.cb6_max_p);
      if (s.status != Status::Proven && c.conjectural_max_p > 0) hi = std::min(hi, c.conjectural_max_p);
    }
    by_hi[hi].push_back(s);
    order.push_back(s.id);
  }
  std::map<std::string, std::vector<VerifyResult>> rows_by_id;
  for (const auto& [hi, group] : by_hi) {
    if (hi < c.min_p) continue;
    auto rep = sweep(group, c.min_p, hi, c.workers);
    for (auto& r : rep.rows) rows_by_id[r.spec_id].push_back(std::move(r));
  }
  SweepReport merged;
  for (const auto& id : order)
    for (auto& r : rows_by_id[id]) merged.rows.push_back(std::move(r));
  merged.summary = summarize(merged.rows);

  Report rep = congruence_report(merged);
  rep.run = run_json(c, "verify congruences");
  rep.run["min_p"] = c.min_p;
  rep.run["max_p"] = c.max_p;
  if (c.theorems.empty()) {
    rep.run["cb6_max_p"] = c.cb6_max_p;
    rep.run["conjectural_max_p"] = c.conjectural_max_p;
  }
  rep.run["theorems"] = c.theorems;
  rep.run["include_conjectural"] = c.include_conjectural || c.strict;
  return rep;
}

Report run_qseries(const Config& c) {
  if (c.terms < 10) throw UsageError("--terms must be at least 10");
  Report rep = qseries_report(qseries_suite(c.terms));
  rep.run = run_json(c, "verify qseries");
  rep.run["terms"] = c.terms;
  return rep;
}

Report run_cm(const Config& c) {
  if (c.digits < 10) throw UsageError("--digits must be at least 10");
  const int wd = std::max(c.working_digits, c.digits + 1);
  Report rep = numeric_report(cm_check_all(c.digits, wd));
  rep.append(numeric_report(class_invariant_checks(c.digits, wd)));
  rep.run = run_json(c, "verify cm");
  rep.run["digits"] = c.digits;
  rep.run["working_digits"] = wd;
  return rep;
}

Report run_identities(const Config& c) {
  if (c.samples < 1) throw UsageError("--samples must be positive");
  if (c.bits < 128) throw UsageError("--bits must be at least 128");
  Report rep = identity_report(identity_suite(c.samples, c.bits, c.seed));
  rep.run = run_json(c, "verify identities");
  rep.run["samples"] = c.samples;
  rep.run["bits"] = c.bits;
  rep.run["seed"] = c.seed;
  return rep;
}

Report run_lemma23(const Config& c) {
  if (c.trials < 1) throw UsageError("--trials must be positive");
  if (c.lemma_max_p < 10 || c.lemma_max_p > 50000) throw UsageError("--lemma-max-p must lie in [10, 50000]");
  Report rep = lemma23_report(lemma23_sample(catalog_forms(), c.trials, c.seed, c.lemma_max_p));
  rep.run = run_json(c, "verify lemma23");
  rep.run["trials"] = c.trials;
  rep.run["max_p"] = c.lemma_max_p;
  rep.run["seed"] = c.seed;
  return rep;
}

void print(const Report& rep, const Config& c) {
  const Format f = format_of(c);
  if (c.summary_only && f == Format::Table) {
    const auto s = rep.summary();
    std::cout << "summary: pass=" << s.pass << " fail=" << s.fail << " skip=" << s.skip << " anomalies=" << s.anomalies
              << " gating_failures=" << s.gating_failures << " nongating_failures=" << s.nongating_failures << '\n';
    return;
  }
  emit_report(rep, f, std::cout);
}

int finish(const Report& rep, const Config& c) {
  print(rep, c);
  return exit_code(rep.summary(), c.strict);
}

int run_list(const Config& c) {
  const Format f = format_of(c);
  if (f == Format::Json) {
    ojson rows = ojson::array();
    for (const auto& s : catalog())
      rows.push_back(ojson{{"spec_id", s.id},
                           {"status", to_string(s.status)},
                           {"sequence", to_string(s.sequence)},
                           {"m", s.m_text()},
                           {"limit", to_string(s.limit)},
                           {"modulus_exponent", s.mod_exp},
                           {"statement", describe(s)}});
    std::cout << ojson{{"catalog", rows}}.dump(2) << '\n';
  } else if (f == Format::Csv) {
    std::cout << "spec_id,status,sequence,m,limit,modulus_exponent,statement\n";
    for (const auto& s : catalog())
      std::cout << s.id << ',' << to_string(s.status) << ',' << to_string(s.sequence) << ',' << s.m_text() << ','
                << to_string(s.limit) << ',' << s.mod_exp << ",\"" << describe(s) << "\"\n";
  } else {
    for (const auto& s : catalog()) {
      std::string id = s.id, st(to_string(s.status));
      id.resize(std::max<std::size_t>(id.size(), 9), ' ');
      st.resize(std::max<std::size_t>(st.size(), 12), ' ');
      std::cout << id << ' ' << st << ' ' << describe(s) << '\n';
    }
  }
  return 0;
}

int run_sequence(const Config& c) {
  const auto id = parse_sequence(c.sequence);
  if (!id) throw UsageError("unknown sequence: " + c.sequence);
  const Format f = format_of(c);
  std::vector<std::string> vals;
  for (unsigned n = 0; n < c.count; ++n) vals.push_back(exact_term(*id, n).get_str());
  if (f == Format::Json) {
    std::cout << ojson{{"sequence", to_string(*id)}, {"values", vals}}.dump(2) << '\n';
  } else {
    if (f == Format::Csv) std::cout << "n,value\n";
    for (unsigned n = 0; n < c.count; ++n) std::cout << n << (f == Format::Csv ? "," : "  ") << vals[n] << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Config c;
  CLI::App app{"Supercongruence and modular-identity verifier"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", c.format, "table | json | csv")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--workers", c.workers, "parallel workers (0 = all cores)")->check(CLI::NonNegativeNumber);
  app.add_option("--config", c.config_path, "key=value defaults file");
  app.add_flag("--summary-only", c.summary_only, "table format: print the summary line only");

  auto* list = app.add_subcommand("list", "catalog of congruences");
  auto* seq = app.add_subcommand("sequence", "exact sequence values");
  seq->add_option("id", c.sequence, "CB3 CB4 CB6 V T D A")->required();
  seq->add_option("--count", c.count, "number of terms")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "run checks");
  verify->require_subcommand(1);
  auto add_strict = [&](CLI::App* a) {
    a->add_flag("--include-conjectural", c.include_conjectural, "also sweep conjectural and cited rows");
    a->add_flag("--include-conjectural-strict", c.strict, "as above; their failures set the exit code");
  };
  auto* vc = verify->add_subcommand("congruences", "sweep congruences over primes");
  vc->add_option("--theorem", c.theorems, "catalog id (repeatable)");
  vc->add_option("--min-p", c.min_p, "smallest prime");
  vc->add_option("--max-p", c.max_p, "largest prime");
  vc->add_option("--cb6-max-p", c.cb6_max_p, "upper bound for CB6 rows when sweeping the catalog (0: max-p)");
  vc->add_option("--conjectural-max-p", c.conjectural_max_p, "upper bound for non-proven rows (0: max-p)");
  add_strict(vc);
  auto* vq = verify->add_subcommand("qseries", "exact q-series identities");
  vq->add_option("--terms", c.terms, "coefficients compared");
  auto* vcm = verify->add_subcommand("cm", "CM values and class invariants");
  vcm->add_option("--digits", c.digits, "required agreement (decimal digits)");
  vcm->add_option("--working-digits", c.working_digits, "working precision (decimal digits)");
  auto* vi = verify->add_subcommand("identities", "random-sample eta/Weber identities");
  vi->add_option("--samples", c.samples, "samples per identity");
  vi->add_option("--bits", c.bits, "working precision in bits");
  vi->add_option("--seed", c.seed, "random seed");
  auto* vl = verify->add_subcommand("lemma23", "fourth-order expansion of x + y sqrt(-d)");
  vl->add_option("--trials", c.trials, "number of cases");
  vl->add_option("--lemma-max-p", c.lemma_max_p, "primes below this bound");
  vl->add_option("--seed", c.seed, "random seed");
  auto* va = verify->add_subcommand("all", "everything above with default parameters");
  add_strict(va);

  try {
    app.parse(argc, argv);
    if (!c.config_path.empty()) apply_config(app, read_config(c.config_path));
    format_of(c);

    if (list->parsed()) return run_list(c);
    if (seq->parsed()) return run_sequence(c);
    if (vc->parsed()) return finish(run_congruences(c), c);
    if (vq->parsed()) return finish(run_qseries(c), c);
    if (vcm->parsed()) return finish(run_cm(c), c);
    if (vi->parsed()) return finish(run_identities(c), c);
    if (vl->parsed()) return finish(run_lemma23(c), c);
    if (va->parsed()) {
      c.include_conjectural = true;
      Report rep = run_congruences(c);
      rep.append(run_qseries(c));
      rep.append(run_cm(c));
      rep.append(run_identities(c));
      rep.append(run_lemma23(c));
      rep.run["command"] = "verify all";
      return finish(rep, c);
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
