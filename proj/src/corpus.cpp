#include "lienil/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace lienil {

using json = nlohmann::ordered_json;

// ----------------------------------------------------------------- parsing

namespace {

void reject_unknown(const json& j, std::initializer_list<const char*> allowed,
                    const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed)
      if (it.key() == a) ok = true;
    if (!ok) fail(ErrorKind::Parse, "unknown field \"" + it.key() + "\" in " + where);
  }
}

GroupSpec parse_spec_json(const json& j);
Permutation perm_from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

GroupSpec::Expected parse_expected(const json& j) {
  reject_unknown(j, {"tL", "tU", "cl", "gprime_type"}, "expected");
  GroupSpec::Expected e;
  if (j.contains("tL")) e.tL = j["tL"].get<long>();
  if (j.contains("tU")) e.tU = j["tU"].get<long>();
  if (j.contains("cl")) e.cl = j["cl"].get<int>();
  if (j.contains("gprime_type")) e.gprime_type = j["gprime_type"].get<std::string>();
  return e;
}

GroupSpec parse_spec_json(const json& j) {
  if (!j.is_object()) fail(ErrorKind::Parse, "group spec must be a JSON object");
  reject_unknown(j,
                 {"name", "kind", "degree", "generators", "dim", "p", "factors",
                  "family", "params", "expected"},
                 "group spec");
  GroupSpec s;
  if (!j.contains("name") || !j.contains("kind"))
    fail(ErrorKind::Parse, "group spec needs \"name\" and \"kind\"");
  s.name = j["name"].get<std::string>();
  s.kind = j["kind"].get<std::string>();

  if (s.kind == "perm") {
    if (!j.contains("degree") || !j.contains("generators"))
      fail(ErrorKind::Parse, "perm spec needs \"degree\" and \"generators\"");
    s.degree = j["degree"].get<int>();
    for (const auto& gen : j["generators"]) {
      std::vector<std::vector<int>> cycles;
      for (const auto& cyc : gen) cycles.push_back(cyc.get<std::vector<int>>());
      perm_from_cycles(s.degree, cycles);  // validate at parse time
      s.perm_gens.push_back(std::move(cycles));
    }
    if (j.contains("p")) s.p = j["p"].get<int>();
  } else if (s.kind == "matrix") {
    if (!j.contains("dim") || !j.contains("p") || !j.contains("generators"))
      fail(ErrorKind::Parse, "matrix spec needs \"dim\", \"p\" and \"generators\"");
    s.dim = j["dim"].get<int>();
    s.mat_p = j["p"].get<int>();
    s.p = s.mat_p;
    for (const auto& gen : j["generators"])
      s.matrix_gens.push_back(gen.get<std::vector<int>>());
  } else if (s.kind == "product") {
    if (!j.contains("factors")) fail(ErrorKind::Parse, "product spec needs \"factors\"");
    for (const auto& f : j["factors"]) s.factors.push_back(parse_spec_json(f));
    if (j.contains("p")) s.p = j["p"].get<int>();
  } else if (s.kind == "family") {
    if (!j.contains("family")) fail(ErrorKind::Parse, "family spec needs \"family\"");
    s.family = j["family"].get<std::string>();
    if (j.contains("params")) s.params = j["params"].get<std::vector<long>>();
    if (j.contains("p")) s.p = j["p"].get<int>();
  } else {
    fail(ErrorKind::Parse, "unknown kind \"" + s.kind + "\"");
  }
  if (j.contains("expected")) s.expected = parse_expected(j["expected"]);
  return s;
}

json spec_to_json(const GroupSpec& s) {
  json j;
  j["name"] = s.name;
  j["kind"] = s.kind;
  if (s.kind == "perm") {
    j["degree"] = s.degree;
    j["generators"] = s.perm_gens;
    if (s.p) j["p"] = *s.p;
  } else if (s.kind == "matrix") {
    j["dim"] = s.dim;
    j["p"] = s.mat_p;
    j["generators"] = s.matrix_gens;
  } else if (s.kind == "product") {
    json f = json::array();
    for (const auto& x : s.factors) f.push_back(spec_to_json(x));
    j["factors"] = f;
    if (s.p) j["p"] = *s.p;
  } else {
    j["family"] = s.family;
    j["params"] = s.params;
    if (s.p) j["p"] = *s.p;
  }
  if (s.expected) {
    json e = json::object();
    if (s.expected->tL) e["tL"] = *s.expected->tL;
    if (s.expected->tU) e["tU"] = *s.expected->tU;
    if (s.expected->cl) e["cl"] = *s.expected->cl;
    if (s.expected->gprime_type) e["gprime_type"] = *s.expected->gprime_type;
    j["expected"] = e;
  }
  return j;
}

Permutation perm_from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation p = Permutation::identity(degree);
  std::vector<char> used(degree, 0);
  for (const auto& cyc : cycles)
    for (size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
      if (from < 1 || from > degree || to < 1 || to > degree)
        fail(ErrorKind::Parse, "cycle point out of range");
      if (used[from - 1]) fail(ErrorKind::Parse, "repeated point in cycles");
      used[from - 1] = 1;
      p.img[from - 1] = to - 1;
    }
  if (!p.is_valid()) fail(ErrorKind::Parse, "cycles do not form a permutation");
  return p;
}

std::vector<std::vector<int>> cycles_from_perm(const Permutation& p) {
  std::vector<std::vector<int>> cycles;
  std::vector<char> seen(p.degree(), 0);
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i] || p.img[i] == i) continue;
    std::vector<int> cyc;
    int x = i;
    while (!seen[x]) {
      seen[x] = 1;
      cyc.push_back(x + 1);
      x = p.img[x];
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

}  // namespace

GroupSpec parse_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
  return parse_spec_json(j);
}

std::string serialize_spec(const GroupSpec& s) { return spec_to_json(s).dump(2); }

// ---------------------------------------------------------------- families

namespace {

GroupSpec perm_family(const std::string& name, int degree,
                      std::vector<Permutation> gens, std::optional<int> p) {
  GroupSpec s;
  s.name = name;
  s.kind = "perm";
  s.degree = degree;
  for (const auto& g : gens) s.perm_gens.push_back(cycles_from_perm(g));
  s.p = p;
  return s;
}

// Regular permutation representation of <a, b | a^m, b^2 = a^e, b^-1 a b = a^s>,
// elements indexed as a^i b^j -> 2i + j.
GroupSpec two_generator_2group(const std::string& name, long order, long s_pow,
                               long e_pow) {
  const long m = order / 2;
  auto mulidx = [&](long i1, long j1, long i2, long j2) -> long {
    long i, j;
    if (j1 == 0) {
      i = (i1 + i2) % m;
      j = j2;
    } else {
      i = (i1 + s_pow * i2) % m;
      j = 1 + j2;
      if (j == 2) {
        j = 0;
        i = (i + e_pow) % m;
      }
    }
    return 2 * i + j;
  };
  auto right_mult = [&](long i2, long j2) {
    Permutation p = Permutation::identity(static_cast<int>(order));
    for (long i = 0; i < m; ++i)
      for (long j = 0; j < 2; ++j)
        p.img[2 * i + j] = static_cast<int>(mulidx(i, j, i2, j2));
    return p;
  };
  return perm_family(name, static_cast<int>(order), {right_mult(1, 0), right_mult(0, 1)},
                     2);
}

GroupSpec unitriangular_spec(const std::string& name, long n, long p) {
  GroupSpec s;
  s.name = name;
  s.kind = "matrix";
  s.dim = static_cast<int>(n);
  s.mat_p = static_cast<int>(p);
  s.p = static_cast<int>(p);
  for (long i = 0; i + 1 < n; ++i) {
    std::vector<int> m(n * n, 0);
    for (long d = 0; d < n; ++d) m[d * n + d] = 1;
    m[i * n + (i + 1)] = 1;
    s.matrix_gens.push_back(std::move(m));
  }
  return s;
}

bool power_of_two(long x) { return x >= 1 && (x & (x - 1)) == 0; }

}  // namespace

GroupSpec family_spec(const std::string& name, std::span<const long> params) {
  auto need = [&](size_t k) {
    if (params.size() != k)
      fail(ErrorKind::Parse, "family " + name + " expects " + std::to_string(k) +
                                 " parameter(s)");
  };
  auto tag = [&](const std::string& stem) {
    std::string t = stem;
    for (long p : params) t += "_" + std::to_string(p);
    return t;
  };

  if (name == "cyclic") {
    need(1);
    long n = params[0];
    if (n < 1) fail(ErrorKind::Parse, "cyclic order must be positive");
    Permutation c = Permutation::identity(static_cast<int>(n));
    for (long i = 0; i < n; ++i) c.img[i] = static_cast<int>((i + 1) % n);
    return perm_family(tag("C"), static_cast<int>(n == 1 ? 1 : n), {c}, std::nullopt);
  }
  if (name == "elementary") {
    need(2);
    long p = params[0], k = params[1];
    if (p < 2 || k < 1) fail(ErrorKind::Parse, "elementary needs p >= 2, k >= 1");
    std::vector<Permutation> gens;
    for (long i = 0; i < k; ++i) {
      Permutation g = Permutation::identity(static_cast<int>(p * k));
      for (long x = 0; x < p; ++x)
        g.img[i * p + x] = static_cast<int>(i * p + (x + 1) % p);
      gens.push_back(std::move(g));
    }
    return perm_family(tag("E"), static_cast<int>(p * k), std::move(gens),
                       static_cast<int>(p));
  }
  if (name == "dihedral") {
    need(1);
    long order = params[0];
    if (order < 4 || order % 2) fail(ErrorKind::Parse, "dihedral order must be even >= 4");
    long n = order / 2;
    Permutation r = Permutation::identity(static_cast<int>(n));
    for (long i = 0; i < n; ++i) r.img[i] = static_cast<int>((i + 1) % n);
    Permutation s = Permutation::identity(static_cast<int>(n));
    for (long i = 0; i < n; ++i) s.img[i] = static_cast<int>((n - i) % n);
    return perm_family("D" + std::to_string(order), static_cast<int>(n), {r, s}, 2);
  }
  if (name == "quaternion") {
    need(1);
    long order = params[0];
    if (order < 8 || !power_of_two(order))
      fail(ErrorKind::Parse, "quaternion order must be a power of 2, >= 8");
    return two_generator_2group("Q" + std::to_string(order), order, order / 2 - 1,
                                order / 4);
  }
  if (name == "semidihedral") {
    need(1);
    long order = params[0];
    if (order < 16 || !power_of_two(order))
      fail(ErrorKind::Parse, "semidihedral order must be a power of 2, >= 16");
    return two_generator_2group("SD" + std::to_string(order), order, order / 4 - 1, 0);
  }
  if (name == "modular_maximal_cyclic") {
    need(1);
    long order = params[0];
    if (order < 16 || !power_of_two(order))
      fail(ErrorKind::Parse, "modular group order must be a power of 2, >= 16");
    return two_generator_2group("M" + std::to_string(order), order, order / 4 + 1, 0);
  }
  if (name == "unitriangular") {
    need(2);
    long n = params[0], p = params[1];
    if (n < 2 || p < 2) fail(ErrorKind::Parse, "unitriangular needs n >= 2 and a prime p");
    return unitriangular_spec("UT" + std::to_string(n) + "(" + std::to_string(p) + ")",
                              n, p);
  }
  if (name == "heisenberg") {
    need(1);
    return unitriangular_spec("H" + std::to_string(params[0]), 3, params[0]);
  }
  if (name == "heisenberg2") {
    // Two Heisenberg blocks sharing the top generator: x = I+E12, y = I+E23,
    // z = I+E24 inside UT(4,p). Order p^5, class 2, G' = Cp x Cp.
    need(1);
    long p = params[0];
    GroupSpec s;
    s.name = "H2_" + std::to_string(p);
    s.kind = "matrix";
    s.dim = 4;
    s.mat_p = static_cast<int>(p);
    s.p = static_cast<int>(p);
    auto gen = [&](int r, int c) {
      std::vector<int> m(16, 0);
      for (int d = 0; d < 4; ++d) m[d * 4 + d] = 1;
      m[r * 4 + c] = 1;
      return m;
    };
    s.matrix_gens = {gen(0, 1), gen(1, 2), gen(1, 3)};
    return s;
  }
  if (name == "wreath_cyclic") {
    need(1);
    long p = params[0];
    if (p < 2) fail(ErrorKind::Parse, "wreath_cyclic needs p >= 2");
    const int deg = static_cast<int>(p * p);
    Permutation base = Permutation::identity(deg);
    for (long x = 0; x < p; ++x) base.img[x] = static_cast<int>((x + 1) % p);
    Permutation shift = Permutation::identity(deg);
    for (long b = 0; b < p; ++b)
      for (long x = 0; x < p; ++x)
        shift.img[b * p + x] = static_cast<int>(((b + 1) % p) * p + x);
    return perm_family("C" + std::to_string(p) + "wrC" + std::to_string(p), deg,
                       {base, shift}, static_cast<int>(p));
  }
  fail(ErrorKind::Parse, "unknown family \"" + name + "\"");
}

// ---------------------------------------------------------------- building

GroupTable build_spec(const GroupSpec& s, int element_cap) {
  if (s.kind == "perm") {
    std::vector<Permutation> gens;
    for (const auto& cycles : s.perm_gens)
      gens.push_back(perm_from_cycles(s.degree, cycles));
    return GroupTable::from_permutations(gens, element_cap);
  }
  if (s.kind == "matrix") {
    std::vector<FpMatrix> gens;
    for (const auto& entries : s.matrix_gens) {
      if (static_cast<long>(entries.size()) !=
          static_cast<long>(s.dim) * s.dim)
        fail(ErrorKind::Parse, "matrix generator is not " + std::to_string(s.dim) +
                                   "x" + std::to_string(s.dim));
      FpMatrix m;
      m.dim = s.dim;
      m.p = s.mat_p;
      for (int v : entries)
        m.a.push_back(static_cast<std::uint8_t>(((v % s.mat_p) + s.mat_p) % s.mat_p));
      gens.push_back(std::move(m));
    }
    return GroupTable::from_matrices(gens, element_cap);
  }
  if (s.kind == "product") {
    if (s.factors.empty()) fail(ErrorKind::Parse, "product needs at least one factor");
    GroupTable g = build_spec(s.factors[0], element_cap);
    for (size_t i = 1; i < s.factors.size(); ++i)
      g = GroupTable::direct_product(g, build_spec(s.factors[i], element_cap),
                                     element_cap);
    return g;
  }
  if (s.kind == "family")
    return build_spec(family_spec(s.family, s.params), element_cap);
  fail(ErrorKind::Parse, "unknown kind \"" + s.kind + "\"");
}

int spec_characteristic(const GroupSpec& s, const GroupTable& g) {
  if (s.p) return *s.p;
  return infer_characteristic(g);
}

// ------------------------------------------------------------------ Corpus

void Corpus::add_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  add_spec(parse_spec(buf.str()), path);
}

void Corpus::add_spec(GroupSpec spec, std::string source) {
  Entry e;
  e.spec = std::move(spec);
  e.source = std::move(source);
  entries_.push_back(std::move(e));
}

void Corpus::run(int jobs, const AnalyzeOptions& opt) {
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return a.spec.name < b.spec.name; });
  std::atomic<size_t> next{0};
  auto worker = [&] {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= entries_.size()) return;
      Entry& e = entries_[i];
      try {
        GroupTable g = build_spec(e.spec, opt.element_cap);
        int p = spec_characteristic(e.spec, g);
        e.report = analyze_group(g, e.spec.name, p, opt);
        e.analyzed = true;
      } catch (const Error& err) {
        e.error = err.what();
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
}

std::string Corpus::reports_text() const {
  std::string out;
  for (const auto& e : entries_) {
    if (!e.error.empty())
      out += e.spec.name + ": ERROR " + e.error + "\n";
    else
      out += e.report.to_text();
  }
  return out;
}

std::string Corpus::reports_json() const {
  std::string out = "[";
  bool first = true;
  for (const auto& e : entries_) {
    out += first ? "\n" : ",\n";
    first = false;
    if (!e.error.empty()) {
      json j;
      j["name"] = e.spec.name;
      j["error"] = e.error;
      out += j.dump(2);
    } else {
      out += e.report.to_json();
    }
  }
  out += "\n]\n";
  return out;
}

std::string VerifyResult::text() const {
  std::string out;
  for (const auto& f : findings) out += f + "\n";
  out += violations == 0 ? "verify: PASS\n"
                         : "verify: FAIL (" + std::to_string(violations) + " violation(s))\n";
  return out;
}

VerifyResult Corpus::verify() const {
  VerifyResult r;
  auto violation = [&](const std::string& msg) {
    r.findings.push_back("violation: " + msg);
    ++r.violations;
  };

  for (const auto& e : entries_) {
    if (!e.error.empty()) {
      violation(e.spec.name + ": " + e.error);
      continue;
    }
    const AnalysisReport& rep = e.report;
    for (const auto& v : rep.violations) violation(rep.name + ": " + v);
    if (rep.gated && rep.verdict != "consistent" && rep.violations.empty())
      violation(rep.name + ": verdict " + rep.verdict);
    if (e.spec.expected) {
      const auto& ex = *e.spec.expected;
      if (ex.tU && rep.gated && *ex.tU != rep.tU_jennings)
        violation(rep.name + ": expected tU=" + std::to_string(*ex.tU) + ", got " +
                  std::to_string(rep.tU_jennings));
      if (ex.tL && rep.tL_direct && *ex.tL != *rep.tL_direct)
        violation(rep.name + ": expected tL=" + std::to_string(*ex.tL) + ", got " +
                  std::to_string(*rep.tL_direct));
      if (ex.cl && rep.gated && *ex.cl != rep.cls)
        violation(rep.name + ": expected cl=" + std::to_string(*ex.cl) + ", got " +
                  std::to_string(rep.cls));
      if (ex.gprime_type && rep.gated && *ex.gprime_type != rep.gprime_type)
        violation(rep.name + ": expected G'=" + *ex.gprime_type + ", got " +
                  rep.gprime_type);
    }
  }

  // Witness coverage: conditions without a positive corpus witness are
  // reported as one-directional, not failed.
  static const char* all_conds[] = {"T1.i",  "T1.ii", "T2.i",  "T2.ii",
                                    "T2.iii", "T3.i",  "T3.ii", "T3.iii"};
  for (const char* c : all_conds) {
    int hits = 0;
    for (const auto& e : entries_)
      if (e.error.empty() && e.report.gated)
        hits += static_cast<int>(std::count(e.report.matches.begin(),
                                            e.report.matches.end(), c));
    if (hits == 0)
      r.findings.push_back(std::string("note: condition ") + c +
                           " has no corpus witness (one-directional only)");
  }
  return r;
}

}  // namespace lienil
