// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lienil/algebra.hpp"
#include "lienil/corpus.hpp"

using namespace lienil;
using Clock = std::chrono::steady_clock;

namespace {

struct Analyzed {
  GroupSpec spec;
  GroupTable table;
  AnalysisReport report;
  double seconds = 0;
};

std::vector<std::string> notes;

void note(const std::string& s) { notes.push_back(s); }

double secs(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

std::vector<Analyzed> analyze_corpus(int max_dim) {
  std::vector<std::string> files;
  for (const auto& e : std::filesystem::directory_iterator(CORPUS_DIR))
    if (e.path().extension() == ".json") files.push_back(e.path().string());
  std::sort(files.begin(), files.end());

  std::vector<Analyzed> out;
  AnalyzeOptions opt;
  opt.max_direct_dim = max_dim;
  for (const auto& f : files) {
    std::ifstream in(f);
    std::stringstream buf;
    buf << in.rdbuf();
    GroupSpec spec = parse_spec(buf.str());
    GroupTable g = build_spec(spec);
    int p = spec_characteristic(spec, g);
    auto t0 = Clock::now();
    AnalysisReport r = analyze_group(g, spec.name, p, opt);
    auto t1 = Clock::now();
    out.push_back({std::move(spec), std::move(g), std::move(r), secs(t0, t1)});
  }
  return out;
}

const Analyzed* find(const std::vector<Analyzed>& all, const std::string& name) {
  for (const auto& a : all)
    if (a.report.name == name) return &a;
  return nullptr;
}

// ---------------------------------------------------------------- criteria

bool criterion1(const std::vector<Analyzed>& all) {
  bool ok = true;
  for (const auto& a : all) {
    if (a.report.order > 128 || !a.report.gated) continue;
    if (!a.report.oracle_ran || !a.report.tU_direct ||
        *a.report.tU_direct != a.report.tU_jennings) {
      note(a.report.name + ": formula and direct upper index differ");
      ok = false;
    }
    if (a.seconds >= 10.0) {
      note(a.report.name + ": analysis took " + std::to_string(a.seconds) + "s");
      ok = false;
    }
  }
  // |G| = 512 case under its own 60 s budget
  const Analyzed* d8c = find(all, "D8xD8xD8");
  if (!d8c) {
    note("D8xD8xD8 missing from corpus");
    return false;
  }
  AnalyzeOptions opt;
  opt.max_direct_dim = 512;
  opt.require_direct = true;
  auto t0 = Clock::now();
  AnalysisReport r = analyze_group(d8c->table, "D8xD8xD8", 2, opt);
  double dt = secs(t0, Clock::now());
  if (!r.tU_direct || *r.tU_direct != r.tU_jennings) {
    note("D8xD8xD8: direct upper index disagrees");
    ok = false;
  }
  if (dt >= 60.0) {
    note("D8xD8xD8 direct run took " + std::to_string(dt) + "s");
    ok = false;
  }
  return ok;
}

bool criterion2(const std::vector<Analyzed>& all) {
  bool ok = true;
  for (const auto& a : all) {
    if (!a.report.gated || !a.report.oracle_ran) continue;
    const GroupTable& g = a.table;
    int p = a.report.p;
    DimensionSeries rec = dimension_series_recursive(g, p);
    DimensionSeries prod = dimension_series_product(g, p);
    LieChain up = upper_lie_chain(g, p, 256, a.report.facts.gprime_order + 1);
    DimensionSeries direct = dimension_subgroups_direct(g, p, up);
    if (!rec.same_terms(prod) || !prod.same_terms(direct)) {
      note(a.report.name + ": dimension subgroup routes disagree");
      ok = false;
    }
  }
  return ok;
}

bool check_witness(const std::vector<Analyzed>& all, const std::string& name,
                   long target, int want_cl, const std::string& want_gprime,
                   bool need_direct, bool& ok) {
  const Analyzed* a = find(all, name);
  if (!a || !a->report.gated) {
    note(name + ": missing or ungated");
    ok = false;
    return false;
  }
  const AnalysisReport& r = a->report;
  bool good = true;
  if (r.cls != want_cl) {
    note(name + ": cl = " + std::to_string(r.cls) + ", want " + std::to_string(want_cl));
    good = false;
  }
  if (r.gprime_type != want_gprime) {
    note(name + ": G' = " + r.gprime_type + ", want " + want_gprime);
    good = false;
  }
  if (r.tU_jennings != target) {
    note(name + ": index " + std::to_string(r.tU_jennings) + ", want " +
         std::to_string(target));
    good = false;
  }
  if (need_direct) {
    if (!r.tL_direct || *r.tL_direct != target || !r.tU_direct ||
        *r.tU_direct != target) {
      note(name + ": direct chain indices do not confirm " + std::to_string(target));
      good = false;
    }
  }
  if (!good) ok = false;
  return good;
}

bool criterion3(const std::vector<Analyzed>& all) {
  bool ok = true;
  // |G'|-4p+5 with p=2, |G'|=8 -> 5; both routes (direct run done in c1 at 512,
  // here the Jennings value plus the 256-range witnesses carry the direct part)
  check_witness(all, "D8xD8xD8", 5, 2, "C2xC2xC2", false, ok);
  {
    const Analyzed* d8c = find(all, "D8xD8xD8");
    if (d8c) {
      AnalyzeOptions opt;
      opt.max_direct_dim = 512;
      AnalysisReport r = analyze_group(d8c->table, "D8xD8xD8", 2, opt);
      if (!r.tL_direct || *r.tL_direct != 5 || !r.tU_direct || *r.tU_direct != 5) {
        note("D8xD8xD8: direct chains do not both give 5");
        ok = false;
      }
    }
  }
  check_witness(all, "UT4(2)", 6, 3, "C2xC2xC2", true, ok);
  check_witness(all, "D16xD8", 6, 3, "C4xC2", true, ok);
  // stated target for C3wrC3 is |G'|-2p+3 = 6; the tool finds the
  // almost-maximal value 8 (= |G'|-p+2), see the analysis notes
  check_witness(all, "C3wrC3", 6, 3, "C3xC3", true, ok);
  check_witness(all, "H2_5", 10, 2, "C5xC5", false, ok);
  if (std::getenv("ACCEPT_SLOW")) {
    const Analyzed* h = find(all, "H2_5");
    if (h) {
      auto t0 = Clock::now();
      LieChain up = upper_lie_chain(h->table, 5, 3125, 26);
      LieChain lo = lower_lie_chain(h->table, 5, 3125, 26);
      double dt = secs(t0, Clock::now());
      if (up.t != 10 || lo.t != 10) {
        note("H2_5: direct chains disagree with 10");
        ok = false;
      }
      if (dt >= 600.0) {
        note("H2_5 direct run took " + std::to_string(dt) + "s");
        ok = false;
      }
    }
  }
  return ok;
}

bool criterion4(const std::vector<Analyzed>& all) {
  bool ok = true;
  for (const auto& a : all) {
    if (!a.report.gated) continue;
    const AnalysisReport& r = a.report;
    long gpo = r.facts.gprime_order;
    int p = r.p;
    struct Fam { long target; std::vector<Cond> conds; } fams[3] = {
        {gpo - 4 * p + 5, {Cond::T1i, Cond::T1ii}},
        {gpo - 3 * p + 4, {Cond::T2i, Cond::T2ii, Cond::T2iii}},
        {gpo - 2 * p + 3, {Cond::T3i, Cond::T3ii, Cond::T3iii}},
    };
    for (const auto& fam : fams) {
      bool matches = false;
      for (Cond c : fam.conds)
        for (const auto& id : r.matches)
          if (id == cond_id(c)) matches = true;
      bool attains_u = r.tU_jennings == fam.target;
      bool attains_l = r.tL_direct && *r.tL_direct == fam.target;
      if (matches != attains_u || (r.tL_direct && matches != attains_l)) {
        note(r.name + ": iff fails for target " + std::to_string(fam.target));
        ok = false;
      }
    }
  }
  // negative controls: cyclic G' means the maximal index and no matches
  std::vector<std::string> controls = {"Q8", "D16", "Q16", "SD16", "M16"};
  for (const auto& a : all) {
    if (!a.report.gated || a.report.facts.gprime_order <= 1) continue;
    if (is_cyclic(a.table, lower_central_series(a.table).terms[1]))
      if (std::find(controls.begin(), controls.end(), a.report.name) ==
          controls.end())
        controls.push_back(a.report.name);
  }
  for (const auto& name : controls) {
    const Analyzed* a = find(all, name);
    if (!a) {
      note(name + ": control missing");
      ok = false;
      continue;
    }
    const AnalysisReport& r = a->report;
    if (r.tU_jennings != r.facts.gprime_order + 1 || !r.matches.empty()) {
      note(name + ": control does not sit at the maximal index unmatched");
      ok = false;
    }
  }
  return ok;
}

bool criterion5(const std::vector<Analyzed>& all) {
  bool ok = true;
  for (const auto& a : all) {
    const AnalysisReport& r = a.report;
    if (!r.gated) continue;
    if (!r.violations.empty()) {
      for (const auto& v : r.violations) note(r.name + ": " + v);
      ok = false;
    }
    if (r.dseq.sum() != r.n) {
      note(r.name + ": exponent sum mismatch");
      ok = false;
    }
    if (r.tU_jennings < 2 || r.tU_jennings > r.facts.gprime_order + 1) {
      note(r.name + ": index outside [2, |G'|+1]");
      ok = false;
    }
    if (r.tL_direct && *r.tL_direct > r.tU_jennings) {
      note(r.name + ": lower index above upper index");
      ok = false;
    }
    if (r.p == 5 && r.oracle_ran && r.tL_direct && *r.tL_direct != r.tU_jennings) {
      note(r.name + ": p = 5 with distinct indices");
      ok = false;
    }
    DimensionSeries s = dimension_series_product(a.table, r.p);
    if (!shalev_checks(d_sequence(s), s).empty()) {
      note(r.name + ": consistency predicates failed");
      ok = false;
    }
  }
  // p = 5 lower/upper agreement for the order-625 witness (direct, 7 s)
  const Analyzed* w = find(all, "W625");
  if (w) {
    LieChain up = upper_lie_chain(w->table, 5, 625, 26);
    LieChain lo = lower_lie_chain(w->table, 5, 625, 26);
    if (up.t != lo.t || up.t != w->report.tU_jennings) {
      note("W625: direct chain indices disagree");
      ok = false;
    }
  }
  return ok;
}

bool criterion6(const std::vector<Analyzed>& all) {
  bool ok = true;
  for (const char* name : {"D8", "Q8", "D16", "Q16", "SD16", "M16"}) {
    const Analyzed* a = find(all, name);
    if (!a || !a->report.tL_direct) {
      note(std::string(name) + ": missing or no lower index");
      ok = false;
      continue;
    }
    auto t0 = Clock::now();
    int cls = unit_group_class(a->table, 2, 1ull << 15);
    double dt = secs(t0, Clock::now());
    if (cls != *a->report.tL_direct - 1) {
      note(std::string(name) + ": unit class " + std::to_string(cls) +
           " != lower index - 1");
      ok = false;
    }
    if (dt >= 30.0) {
      note(std::string(name) + ": unit run took " + std::to_string(dt) + "s");
      ok = false;
    }
  }
  return ok;
}

bool criterion7() {
  namespace fs = std::filesystem;
  fs::path tmp = fs::temp_directory_path() / "lienil_accept";
  fs::create_directories(tmp);
  std::string cli = CLI_PATH, dir = CORPUS_DIR;
  auto run = [&](const std::string& cmd) { return std::system(cmd.c_str()); };
  std::string out1 = (tmp / "s1.json").string(), out8 = (tmp / "s8.json").string();
  bool ok = true;
  if (run(cli + " survey " + dir + " --jobs 1 --json > " + out1) != 0 ||
      run(cli + " survey " + dir + " --jobs 8 --json > " + out8) != 0) {
    note("survey invocation failed");
    ok = false;
  }
  std::ifstream a(out1, std::ios::binary), b(out8, std::ios::binary);
  std::string sa((std::istreambuf_iterator<char>(a)), {});
  std::string sb((std::istreambuf_iterator<char>(b)), {});
  if (sa.empty() || sa != sb) {
    note("survey output differs between job counts");
    ok = false;
  }
  int rc = run(cli + " verify " + dir + " > " + (tmp / "v.txt").string());
  if (rc != 0) {
    note("verify exited nonzero");
    ok = false;
  }
  return ok;
}

}  // namespace

int main() {
  std::vector<Analyzed> all = analyze_corpus(256);

  struct Line { const char* label; bool pass; };
  std::vector<Line> lines;
  auto record = [&](const char* label, bool pass) {
    lines.push_back({label, pass});
    std::printf("criterion %zu (%s): %s\n", lines.size(), label,
                pass ? "PASS" : "FAIL");
    for (const auto& n : notes) std::printf("    %s\n", n.c_str());
    notes.clear();
    std::fflush(stdout);
  };

  record("formula vs direct-ideal equality, within time budget", criterion1(all));
  record("dimension subgroup triple agreement", criterion2(all));
  record("named witnesses hit their target values", criterion3(all));
  record("iff between target values and matched conditions", criterion4(all));
  record("invariant suites green", criterion5(all));
  record("unit group class equals lower index minus one", criterion6(all));
  record("deterministic reports and clean corpus verify", criterion7());

  int failures = 0;
  for (const auto& l : lines)
    if (!l.pass) ++failures;
  std::printf("%d/%zu criteria passed\n", static_cast<int>(lines.size()) - failures,
              lines.size());
  return failures == 0 ? 0 : 1;
}
