/* C interface to the Lie nilpotency index engine.
 *
 * All functions return LN_OK (0) or a negative ln_status; on failure
 * ln_last_error() holds a message for the calling thread. Strings returned
 * through `const char*` are owned by the handle they came from and stay
 * valid until it is freed; strings returned through `char**` must be
 * released with ln_string_free.
 */
#ifndef LIENIL_H
#define LIENIL_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ln_status {
  LN_OK = 0,
  LN_EPARSE = -1,    /* malformed spec / JSON / family parameters */
  LN_ECAP = -2,      /* element or enumeration cap exceeded */
  LN_ERANGE = -3,    /* direct oracle required but out of range */
  LN_EINVALID = -4,  /* bad argument */
  LN_EGATE = -5,     /* group algebra is not Lie nilpotent */
  LN_EINTERNAL = -6, /* engine invariant failed */
  LN_EIO = -7        /* file not readable */
} ln_status;

typedef struct ln_options {
  int element_cap;      /* group closure cap, default 4096 */
  int max_direct_dim;   /* run the in-algebra oracle for |G| <= this */
  int require_direct;   /* nonzero: out-of-range oracle is an error */
  int compute_units;    /* nonzero: enumerate U(KG), p = 2 only */
  unsigned long long unit_cap; /* unit enumeration cap */
} ln_options;

void ln_default_options(ln_options* opt);

/* ------------------------------------------------------------ single group */

typedef struct ln_report ln_report;

ln_status ln_analyze_file(const char* path, const ln_options* opt,
                          ln_report** out);
ln_status ln_analyze_spec_text(const char* json_text, const ln_options* opt,
                               ln_report** out);

const char* ln_report_json(const ln_report* r);
const char* ln_report_text(const ln_report* r);
/* Number of failed invariants / theorem directions recorded in the report. */
int ln_report_violations(const ln_report* r);
/* Nilpotency class of the unit group, or -1 when not computed. */
int ln_report_unit_class(const ln_report* r);
void ln_report_free(ln_report* r);

/* -------------------------------------------------------------- families */

/* Serialize the canonical spec of a built-in family to JSON. */
ln_status ln_family_spec(const char* family, const long* params, int nparams,
                         char** out_json);
void ln_string_free(char* s);

/* ---------------------------------------------------------------- corpus */

typedef struct ln_corpus ln_corpus;

ln_corpus* ln_corpus_new(void);
ln_status ln_corpus_add_file(ln_corpus* c, const char* path);
ln_status ln_corpus_run(ln_corpus* c, const ln_options* opt, int jobs);
const char* ln_corpus_text(const ln_corpus* c);
const char* ln_corpus_json(const ln_corpus* c);
/* Full invariant + classification check over the analyzed corpus.
 * Returns the number of violations (>= 0) or a negative ln_status.
 * The findings text is stored on the handle, retrievable with
 * ln_corpus_verify_text. */
int ln_corpus_verify(ln_corpus* c);
const char* ln_corpus_verify_text(const ln_corpus* c);
void ln_corpus_free(ln_corpus* c);

/* ----------------------------------------------------------------- errors */

/* Message for the last failing call on this thread ("" if none). */
const char* ln_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* LIENIL_H */
