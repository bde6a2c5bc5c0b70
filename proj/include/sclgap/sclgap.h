/* C interface to the sclgap library.
 *
 * Handles are opaque and owned by the caller. Every call returns a status
 * code; on failure sclgap_last_error() describes the problem (per thread,
 * valid until the next call on that thread). Results come back as JSON
 * strings that the caller releases with sclgap_string_free().
 */
#ifndef SCLGAP_SCLGAP_H_
#define SCLGAP_SCLGAP_H_

#include <stdint.h>

#if defined(_WIN32)
#  if defined(SCLGAP_BUILDING)
#    define SCLGAP_API __declspec(dllexport)
#  else
#    define SCLGAP_API __declspec(dllimport)
#  endif
#else
#  define SCLGAP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sclgap_status {
  SCLGAP_OK               = 0,
  SCLGAP_INVALID_ARGUMENT = 1, /* null pointer or out-of-range number */
  SCLGAP_PARSE            = 2, /* malformed text */
  SCLGAP_DOMAIN           = 3, /* well-formed input outside the domain */
  SCLGAP_INTERNAL         = 4  /* failed internal consistency check */
} sclgap_status;

typedef struct sclgap_group    sclgap_group;
typedef struct sclgap_orbifold sclgap_orbifold;

SCLGAP_API char const* sclgap_version(void);
SCLGAP_API char const* sclgap_last_error(void);
SCLGAP_API void        sclgap_string_free(char* s);

/* "F2 * C3", "C2 * C3", "F1(x) * C3(b)" */
SCLGAP_API sclgap_status sclgap_group_parse(char const* text, sclgap_group** out);
SCLGAP_API void          sclgap_group_free(sclgap_group* g);

/* Reduced form, cyclic core, root and conjugacy facts of a word. */
SCLGAP_API sclgap_status sclgap_reduce(sclgap_group const* g, char const* word, char** out_json);
/* phi_bar of the counting quasimorphism on `base`, evaluated on a word or,
 * when the text contains '[', a chain. */
SCLGAP_API sclgap_status sclgap_qm_eval(sclgap_group const* g,
                                        char const*         base,
                                        char const*         word_or_chain,
                                        char**              out_json);
SCLGAP_API sclgap_status sclgap_gap_element(sclgap_group const* g, char const* word, char** out_json);
SCLGAP_API sclgap_status sclgap_gap_chain(sclgap_group const* g, char const* chain, char** out_json);

/* "orb(orientable=true, genus=0, boundary=1, cones=[2,3])" */
SCLGAP_API sclgap_status sclgap_orbifold_parse(char const* text, sclgap_orbifold** out);
SCLGAP_API void          sclgap_orbifold_free(sclgap_orbifold* o);

/* Relative gap for an orbifold with boundary. */
SCLGAP_API sclgap_status sclgap_orb_rel_gap(sclgap_orbifold const* o, char const* word, char** out_json);
/* Gap in a closed orbifold group; `ball` bounds the conjugator search. */
SCLGAP_API sclgap_status sclgap_orb_closed_gap(sclgap_orbifold const* o,
                                               char const*            word,
                                               int                    ball,
                                               char**                 out_json);
SCLGAP_API sclgap_status sclgap_orb_splitting(sclgap_orbifold const* o, char** out_json);

SCLGAP_API sclgap_status sclgap_vondyck_verify(int      p,
                                               int      q,
                                               int      r,
                                               int64_t  samples,
                                               int      max_len,
                                               uint64_t seed,
                                               char**   out_json);
SCLGAP_API sclgap_status sclgap_vondyck_constant(char** out_json);

/* `checkpoint` may be null. */
SCLGAP_API sclgap_status sclgap_oracle_defect(sclgap_group const* g,
                                              char const*         base,
                                              int                 max_len,
                                              int                 jobs,
                                              char const*         checkpoint,
                                              char**              out_json);
SCLGAP_API sclgap_status sclgap_oracle_conj(sclgap_group const* g,
                                            char const*         w1,
                                            char const*         w2,
                                            int                 ball,
                                            char**              out_json);

#ifdef __cplusplus
}
#endif

#endif /* SCLGAP_SCLGAP_H_ */
