// Command-line front end over the C library interface.
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lienil.h"

namespace {

void apply_env(ln_options* opt) {
  // optional override of the group-closure element cap
  if (const char* cap = std::getenv("LIENIL_ELEMENT_CAP"))
    if (int v = std::atoi(cap); v > 0) opt->element_cap = v;
}

int exit_for(ln_status s) {
  switch (s) {
    case LN_OK: return 0;
    case LN_ECAP:
    case LN_ERANGE: return 3;
    case LN_EINTERNAL: return 1;
    default: return 2;  // parse / invalid / io / gate
  }
}

int fail_with(ln_status s) {
  std::fprintf(stderr, "error: %s\n", ln_last_error());
  return exit_for(s);
}

std::vector<std::string> spec_files(const std::string& dir) {
  std::vector<std::string> out;
  std::error_code ec;
  for (const auto& e : std::filesystem::directory_iterator(dir, ec))
    if (e.is_regular_file() && e.path().extension() == ".json")
      out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

int cmd_analyze(const std::string& file, bool direct, int max_dim, bool json) {
  ln_options opt;
  ln_default_options(&opt);
  apply_env(&opt);
  opt.max_direct_dim = max_dim;
  opt.require_direct = direct ? 1 : 0;
  ln_report* rep = nullptr;
  if (ln_status s = ln_analyze_file(file.c_str(), &opt, &rep); s != LN_OK)
    return fail_with(s);
  std::printf("%s", json ? ln_report_json(rep) : ln_report_text(rep));
  if (json) std::printf("\n");
  int violations = ln_report_violations(rep);
  ln_report_free(rep);
  return violations > 0 ? 1 : 0;
}

int cmd_family(const std::string& name, const std::vector<long>& params,
               const std::string& emit) {
  char* json = nullptr;
  if (ln_status s = ln_family_spec(name.c_str(), params.data(),
                                   static_cast<int>(params.size()), &json);
      s != LN_OK)
    return fail_with(s);
  if (emit.empty()) {
    std::printf("%s\n", json);
  } else {
    std::ofstream out(emit);
    if (!out) {
      std::fprintf(stderr, "error: cannot write %s\n", emit.c_str());
      ln_string_free(json);
      return 2;
    }
    out << json << "\n";
  }
  ln_string_free(json);
  return 0;
}

int load_dir(ln_corpus* c, const std::string& dir) {
  auto files = spec_files(dir);
  if (files.empty()) {
    std::fprintf(stderr, "error: no .json specs in %s\n", dir.c_str());
    return 2;
  }
  for (const auto& f : files)
    if (ln_status s = ln_corpus_add_file(c, f.c_str()); s != LN_OK)
      return fail_with(s);
  return 0;
}

int cmd_survey(const std::string& dir, int jobs, bool json, int max_dim) {
  ln_corpus* c = ln_corpus_new();
  if (int rc = load_dir(c, dir); rc != 0) {
    ln_corpus_free(c);
    return rc;
  }
  ln_options opt;
  ln_default_options(&opt);
  apply_env(&opt);
  opt.max_direct_dim = max_dim;
  if (ln_status s = ln_corpus_run(c, &opt, jobs); s != LN_OK) {
    ln_corpus_free(c);
    return fail_with(s);
  }
  std::printf("%s", json ? ln_corpus_json(c) : ln_corpus_text(c));
  ln_corpus_free(c);
  return 0;
}

int cmd_verify(const std::string& dir, int jobs, int max_dim) {
  ln_corpus* c = ln_corpus_new();
  if (int rc = load_dir(c, dir); rc != 0) {
    ln_corpus_free(c);
    return rc;
  }
  ln_options opt;
  ln_default_options(&opt);
  apply_env(&opt);
  opt.max_direct_dim = max_dim;
  if (ln_status s = ln_corpus_run(c, &opt, jobs); s != LN_OK) {
    ln_corpus_free(c);
    return fail_with(s);
  }
  int violations = ln_corpus_verify(c);
  if (violations < 0) {
    ln_corpus_free(c);
    return fail_with(static_cast<ln_status>(violations));
  }
  std::printf("%s", ln_corpus_verify_text(c));
  ln_corpus_free(c);
  return violations > 0 ? 1 : 0;
}

int cmd_units(const std::string& file, unsigned long long cap) {
  ln_options opt;
  ln_default_options(&opt);
  apply_env(&opt);
  opt.compute_units = 1;
  opt.unit_cap = cap;
  ln_report* rep = nullptr;
  if (ln_status s = ln_analyze_file(file.c_str(), &opt, &rep); s != LN_OK)
    return fail_with(s);
  int cls = ln_report_unit_class(rep);
  if (cls < 0) {
    std::fprintf(stderr, "error: unit group not computed\n");
    ln_report_free(rep);
    return 2;
  }
  std::printf("%s", ln_report_text(rep));
  int violations = ln_report_violations(rep);
  ln_report_free(rep);
  return violations > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie nilpotency indices of modular group algebras"};
  app.require_subcommand(1);

  std::string file, dir, emit, fname;
  std::vector<long> params;
  bool direct = false, json = false;
  int max_dim = 256, jobs = 1;
  unsigned long long cap = 1ull << 15;

  auto* analyze = app.add_subcommand("analyze", "Analyze one group spec file");
  analyze->add_option("FILE", file)->required();
  analyze->add_flag("--direct", direct, "require the in-algebra oracle");
  analyze->add_option("--max-dim", max_dim, "oracle dimension cap");
  analyze->add_flag("--json", json, "emit the JSON report");

  auto* family = app.add_subcommand("family", "Emit a built-in family spec");
  family->add_option("NAME", fname)->required();
  family->add_option("PARAMS", params);
  family->add_option("--emit", emit, "write to a file instead of stdout");

  auto* survey = app.add_subcommand("survey", "Analyze every spec in a directory");
  survey->add_option("DIR", dir)->required();
  survey->add_option("--jobs", jobs, "worker threads");
  survey->add_option("--max-dim", max_dim, "oracle dimension cap");
  survey->add_flag("--json", json, "emit JSON reports");

  auto* verify = app.add_subcommand("verify", "Run the full verification suite");
  verify->add_option("DIR", dir)->required();
  verify->add_option("--jobs", jobs, "worker threads");
  verify->add_option("--max-dim", max_dim, "oracle dimension cap");

  auto* units = app.add_subcommand("units", "Unit group nilpotency class (p = 2)");
  units->add_option("FILE", file)->required();
  units->add_option("--cap", cap, "unit enumeration cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (app.got_subcommand(analyze)) return cmd_analyze(file, direct, max_dim, json);
  if (app.got_subcommand(family)) return cmd_family(fname, params, emit);
  if (app.got_subcommand(survey)) return cmd_survey(dir, jobs, json, max_dim);
  if (app.got_subcommand(verify)) return cmd_verify(dir, jobs, max_dim);
  if (app.got_subcommand(units)) return cmd_units(file, cap);
  return 2;
}
