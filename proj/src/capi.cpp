#include "lienil.h"

#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>

#include "lienil/corpus.hpp"

namespace {

thread_local std::string g_last_error;

ln_status map_kind(lienil::ErrorKind k) {
  using lienil::ErrorKind;
  switch (k) {
    case ErrorKind::Parse: return LN_EPARSE;
    case ErrorKind::Cap: return LN_ECAP;
    case ErrorKind::Range: return LN_ERANGE;
    case ErrorKind::Invalid: return LN_EINVALID;
    case ErrorKind::Gate: return LN_EGATE;
    case ErrorKind::Io: return LN_EIO;
    default: return LN_EINTERNAL;
  }
}

template <class Fn>
ln_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return LN_OK;
  } catch (const lienil::Error& e) {
    g_last_error = e.what();
    return map_kind(e.kind());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LN_EINTERNAL;
  }
}

lienil::AnalyzeOptions to_cpp(const ln_options* opt) {
  lienil::AnalyzeOptions o;
  if (opt) {
    o.element_cap = opt->element_cap;
    o.max_direct_dim = opt->max_direct_dim;
    o.require_direct = opt->require_direct != 0;
    o.compute_units = opt->compute_units != 0;
    o.unit_cap = opt->unit_cap;
  }
  return o;
}

}  // namespace

struct ln_report {
  lienil::AnalysisReport rep;
  std::string json, text;
};

struct ln_corpus {
  lienil::Corpus corpus;
  bool ran = false;
  mutable std::string json, text;
  std::string verify_text;
};

extern "C" {

void ln_default_options(ln_options* opt) {
  if (!opt) return;
  lienil::AnalyzeOptions d;
  opt->element_cap = d.element_cap;
  opt->max_direct_dim = d.max_direct_dim;
  opt->require_direct = d.require_direct ? 1 : 0;
  opt->compute_units = d.compute_units ? 1 : 0;
  opt->unit_cap = d.unit_cap;
}

// Throws lienil::Error; caller wraps in guarded().
static ln_report* analyze_spec_or_throw(const lienil::GroupSpec& spec,
                                        const ln_options* opt) {
  auto o = to_cpp(opt);
  lienil::GroupTable g = lienil::build_spec(spec, o.element_cap);
  int p = lienil::spec_characteristic(spec, g);
  auto r = std::make_unique<ln_report>();
  r->rep = lienil::analyze_group(g, spec.name, p, o);
  r->json = r->rep.to_json();
  r->text = r->rep.to_text();
  return r.release();
}

ln_status ln_analyze_file(const char* path, const ln_options* opt,
                          ln_report** out) {
  if (!path || !out) {
    g_last_error = "null argument";
    return LN_EINVALID;
  }
  return guarded([&] {
    std::ifstream in(path);
    if (!in) lienil::fail(lienil::ErrorKind::Io, std::string("cannot open ") + path);
    std::stringstream buf;
    buf << in.rdbuf();
    *out = analyze_spec_or_throw(lienil::parse_spec(buf.str()), opt);
  });
}

ln_status ln_analyze_spec_text(const char* json_text, const ln_options* opt,
                               ln_report** out) {
  if (!json_text || !out) {
    g_last_error = "null argument";
    return LN_EINVALID;
  }
  return guarded([&] {
    *out = analyze_spec_or_throw(lienil::parse_spec(json_text), opt);
  });
}

const char* ln_report_json(const ln_report* r) { return r ? r->json.c_str() : ""; }
const char* ln_report_text(const ln_report* r) { return r ? r->text.c_str() : ""; }

int ln_report_violations(const ln_report* r) {
  return r ? static_cast<int>(r->rep.violations.size()) : -1;
}

int ln_report_unit_class(const ln_report* r) {
  if (!r || !r->rep.unit_class) return -1;
  return *r->rep.unit_class;
}

void ln_report_free(ln_report* r) { delete r; }

ln_status ln_family_spec(const char* family, const long* params, int nparams,
                         char** out_json) {
  if (!family || !out_json || (nparams > 0 && !params)) {
    g_last_error = "null argument";
    return LN_EINVALID;
  }
  return guarded([&] {
    lienil::GroupSpec s = lienil::family_spec(
        family, std::span<const long>(params, static_cast<size_t>(nparams)));
    std::string j = lienil::serialize_spec(s);
    char* buf = new char[j.size() + 1];
    std::memcpy(buf, j.c_str(), j.size() + 1);
    *out_json = buf;
  });
}

void ln_string_free(char* s) { delete[] s; }

ln_corpus* ln_corpus_new(void) { return new ln_corpus; }

ln_status ln_corpus_add_file(ln_corpus* c, const char* path) {
  if (!c || !path) {
    g_last_error = "null argument";
    return LN_EINVALID;
  }
  return guarded([&] { c->corpus.add_file(path); });
}

ln_status ln_corpus_run(ln_corpus* c, const ln_options* opt, int jobs) {
  if (!c) {
    g_last_error = "null argument";
    return LN_EINVALID;
  }
  return guarded([&] {
    c->corpus.run(jobs < 1 ? 1 : jobs, to_cpp(opt));
    c->ran = true;
    c->json = c->corpus.reports_json();
    c->text = c->corpus.reports_text();
  });
}

const char* ln_corpus_text(const ln_corpus* c) { return c ? c->text.c_str() : ""; }
const char* ln_corpus_json(const ln_corpus* c) { return c ? c->json.c_str() : ""; }

int ln_corpus_verify(ln_corpus* c) {
  if (!c) {
    g_last_error = "null argument";
    return LN_EINVALID;
  }
  if (!c->ran) {
    g_last_error = "corpus has not been run";
    return LN_EINVALID;
  }
  int count = 0;
  ln_status s = guarded([&] {
    lienil::VerifyResult r = c->corpus.verify();
    c->verify_text = r.text();
    count = r.violations;
  });
  return s == LN_OK ? count : static_cast<int>(s);
}

const char* ln_corpus_verify_text(const ln_corpus* c) {
  return c ? c->verify_text.c_str() : "";
}

void ln_corpus_free(ln_corpus* c) { delete c; }

const char* ln_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
