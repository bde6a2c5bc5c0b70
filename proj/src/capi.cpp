#include "sclgap/sclgap.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "sclgap/error.hpp"
#include "sclgap/parse.hpp"
#include "sclgap/serialize.hpp"

struct sclgap_group {
  sclgap::GroupSpec spec;
};

struct sclgap_orbifold {
  sclgap::OrbifoldSpec spec;
};

namespace {

  using sclgap::json::Json;

  thread_local std::string last_error;

  char* copy_out(std::string const& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) {
      std::memcpy(out, s.data(), s.size() + 1);
    }
    return out;
  }

  template <class F>
  sclgap_status guarded(F&& body) {
    last_error.clear();
    try {
      body();
      return SCLGAP_OK;
    } catch (sclgap::ParseError const& e) {
      last_error = e.what();
      return SCLGAP_PARSE;
    } catch (sclgap::DomainError const& e) {
      last_error = e.what();
      return SCLGAP_DOMAIN;
    } catch (sclgap::InternalError const& e) {
      last_error = std::string("internal check failed: ") + e.what();
      return SCLGAP_INTERNAL;
    } catch (std::exception const& e) {
      last_error = e.what();
      return SCLGAP_INTERNAL;
    }
  }

  sclgap_status invalid(char const* what) {
    last_error = what;
    return SCLGAP_INVALID_ARGUMENT;
  }

  void emit(Json const& j, char** out) {
    *out = copy_out(j.dump());
    if (*out == nullptr) {
      throw std::bad_alloc();
    }
  }

  Json reduce_record(sclgap::GroupSpec const& g, sclgap::Word const& w) {
    using namespace sclgap;
    auto const cr = cyclic_reduce(g, w);
    Json       j;
    j["reduced"]              = to_string(g, w);
    j["length"]               = w.size();
    j["cyclic_core"]          = to_string(g, cr.core.base);
    j["canonical_rotation"]   = to_string(g, cr.core.canonical_rotation);
    j["conjugator"]           = to_string(g, cr.conjugator);
    j["finite_order"]         = has_finite_order(g, w);
    j["in_free_factor"]       = is_in_free_factor(g, w);
    j["conjugate_to_inverse"] = is_conjugate_to_inverse(g, w);
    j["self_overlapping"]     = is_self_overlapping(w);
    j["exponent_sums"]        = free_exponent_sums(g, w);
    if (!has_finite_order(g, w)) {
      auto const root        = primitive_root(g, w);
      j["primitive_root"]    = to_string(g, root.root);
      j["power"]             = root.power;
    }
    return j;
  }

}  // namespace

extern "C" {

char const* sclgap_version(void) {
  return "1.0.0";
}

char const* sclgap_last_error(void) {
  return last_error.c_str();
}

void sclgap_string_free(char* s) {
  std::free(s);
}

sclgap_status sclgap_group_parse(char const* text, sclgap_group** out) {
  if (text == nullptr || out == nullptr) {
    return invalid("null argument");
  }
  return guarded([&] { *out = new sclgap_group{sclgap::parse_group(text)}; });
}

void sclgap_group_free(sclgap_group* g) {
  delete g;
}

sclgap_status sclgap_reduce(sclgap_group const* g, char const* word, char** out_json) {
  if (g == nullptr || word == nullptr || out_json == nullptr) {
    return invalid("null argument");
  }
  return guarded([&] {
    auto const w = sclgap::parse_word(word, g->spec);
    emit(reduce_record(g->spec, w), out_json);
  });
}

sclgap_status sclgap_qm_eval(sclgap_group const* g,
                             char const*         base,
                             char const*         word_or_chain,
                             char**              out_json) {
  if (g == nullptr || base == nullptr || word_or_chain == nullptr || out_json == nullptr) {
    return invalid("null argument");
  }
  return guarded([&] {
    using namespace sclgap;
    auto const&      G = g->spec;
    CountingQM const qm(G, parse_word(base, G));
    Json             j;
    j["base"] = to_string(G, qm.base());
    if (std::strchr(word_or_chain, '[') != nullptr) {
      auto const c = parse_chain(word_or_chain, G);
      j["kind"]    = "chain";
      j["input"]   = to_string(G, c);
      j["value"]   = json::rational(evaluate_on_chain(G, QMCombination::single(qm), c));
    } else {
      auto const w = parse_word(word_or_chain, G);
      j["kind"]    = "word";
      j["input"]   = to_string(G, w);
      j["value"]   = json::rational(Rational(qm(G, w)));
      j["phi"]     = phi(G, qm.base(), w);
    }
    emit(j, out_json);
  });
}

sclgap_status sclgap_gap_element(sclgap_group const* g, char const* word, char** out_json) {
  if (g == nullptr || word == nullptr || out_json == nullptr) {
    return invalid("null argument");
  }
  return guarded([&] {
    auto const w = sclgap::parse_word(word, g->spec);
    emit(sclgap::json::certificate(sclgap::element_gap(g->spec, w)), out_json);
  });
}

sclgap_status sclgap_gap_chain(sclgap_group const* g, char const* chain, char** out_json) {
  if (g == nullptr || chain == nullptr || out_json == nullptr) {
    return invalid("null argument");
  }
  return guarded([&] {
    auto const c = sclgap::parse_chain(chain, g->spec);
    emit(sclgap::json::certificate(sclgap::chain_gap_certificate(g->spec, c)), out_json);
  });
}

sclgap_status sclgap_orbifold_parse(char const* text, sclgap_orbifold** out) {
  if (text == nullptr || out == nullptr) {
    return invalid("null argument");
  }
  return guarded([&] { *out = new sclgap_orbifold{sclgap::parse_orbifold(text)}; });
}

void sclgap_orbifold_free(sclgap_orbifold* o) {
  delete o;
}

sclgap_status sclgap_orb_rel_gap(sclgap_orbifold const* o, char const* word, char** out_json) {
  if (o == nullptr || word == nullptr || out_json == nullptr) {
    return invalid("null argument");
  }
  return guarded([&] {
    auto const data = sclgap::fundamental_group(o->spec);
    auto const w    = sclgap::parse_word(word, data.group);
    Json       j    = sclgap::json::relative_certificate(sclgap::relative_gap_certificate(data, w));
    j["orbifold"]   = sclgap::to_string(o->spec);
    j["boundary_chain"] = sclgap::to_string(data.group, data.boundary_chain);
    emit(j, out_json);
  });
}

sclgap_status sclgap_orb_closed_gap(sclgap_orbifold const* o,
                                    char const*            word,
                                    int                    ball,
                                    char**                 out_json) {
  if (o == nullptr || word == nullptr || out_json == nullptr) {
    return invalid("null argument");
  }
  if (ball < 0) {
    return invalid("ball must be non-negative");
  }
  return guarded([&] {
    auto const s = sclgap::closed_splitting(o->spec);
    auto const w = sclgap::parse_word(word, s.ambient);
    Json       j = sclgap::json::closed_certificate(s, sclgap::closed_gap_certificate(s, w, ball));
    j["orbifold"]       = sclgap::to_string(o->spec);
    j["conjugacy_ball"] = ball;
    emit(j, out_json);
  });
}

sclgap_status sclgap_orb_splitting(sclgap_orbifold const* o, char** out_json) {
  if (o == nullptr || out_json == nullptr) {
    return invalid("null argument");
  }
  return guarded([&] {
    auto const s = sclgap::closed_splitting(o->spec);
    emit(sclgap::json::splitting(s, sclgap::acylindricity_report(s)), out_json);
  });
}

sclgap_status sclgap_vondyck_verify(int      p,
                                    int      q,
                                    int      r,
                                    int64_t  samples,
                                    int      max_len,
                                    uint64_t seed,
                                    char**   out_json) {
  if (out_json == nullptr) {
    return invalid("null argument");
  }
  if (samples < 0 || max_len < 1) {
    return invalid("samples must be >= 0 and max_len >= 1");
  }
  return guarded([&] {
    auto const report = sclgap::hyperbolic::verify_trace_gap(p, q, r, samples, max_len, seed);
    Json       j      = sclgap::json::trace_report(report);
    j["seed"]         = seed;
    j["max_len"]      = max_len;
    emit(j, out_json);
  });
}

sclgap_status sclgap_vondyck_constant(char** out_json) {
  if (out_json == nullptr) {
    return invalid("null argument");
  }
  return guarded([&] { emit(sclgap::json::gap_constant(), out_json); });
}

sclgap_status sclgap_oracle_defect(sclgap_group const* g,
                                   char const*         base,
                                   int                 max_len,
                                   int                 jobs,
                                   char const*         checkpoint,
                                   char**              out_json) {
  if (g == nullptr || base == nullptr || out_json == nullptr) {
    return invalid("null argument");
  }
  if (max_len < 0 || jobs < 1) {
    return invalid("max_len must be >= 0 and jobs >= 1");
  }
  return guarded([&] {
    auto const b = sclgap::parse_word(base, g->spec);
    auto const r = sclgap::oracle::brute_defect(g->spec, b, max_len, jobs,
                                                checkpoint == nullptr ? "" : checkpoint);
    emit(sclgap::json::defect_report(g->spec, b, max_len, r), out_json);
  });
}

sclgap_status sclgap_oracle_conj(sclgap_group const* g,
                                 char const*         w1,
                                 char const*         w2,
                                 int                 ball,
                                 char**              out_json) {
  if (g == nullptr || w1 == nullptr || w2 == nullptr || out_json == nullptr) {
    return invalid("null argument");
  }
  if (ball < 0) {
    return invalid("ball must be non-negative");
  }
  return guarded([&] {
    using namespace sclgap;
    auto const& G = g->spec;
    auto const  a = parse_word(w1, G);
    auto const  b = parse_word(w2, G);
    auto const  u = oracle::conjugator_search(G, a, b, ball);
    Json        j;
    j["w1"]           = to_string(G, a);
    j["w2"]           = to_string(G, b);
    j["ball"]         = ball;
    j["found"]        = u.has_value();
    j["is_conjugate"] = is_conjugate(G, a, b);
    if (u) {
      j["conjugator"] = to_string(G, *u);
    }
    emit(j, out_json);
  });
}

}  // extern "C"
