// relgt - exact computation with Gelfand-Tsetlin tableaux and relation graphs
// SPDX-License-Identifier: Apache-2.0

#include "relgt/relgt.h"

#include <cstring>
#include <string>

#include "relgt/json_io.hpp"

using namespace relgt;

struct relgt_module {
  ModuleSpec spec;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
relgt_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const parse_error& e) {
    g_last_error = e.what();
    return RELGT_ERR_PARSE;
  } catch (const domain_error& e) {
    g_last_error = e.what();
    return RELGT_ERR_DOMAIN;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return RELGT_ERR_INVALID;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RELGT_ERR_INTERNAL;
  }
}

Permutation parse_permutation(int n, const char* csv) {
  if (csv == nullptr) return Permutation::identity(n);
  std::vector<int> img;
  for (const auto& r : parse_rational_list(csv)) {
    if (!is_integer(r)) throw parse_error("permutation image must be integers");
    img.push_back(static_cast<int>(numerator(r)));
  }
  if (static_cast<int>(img.size()) != n) throw parse_error("permutation image length != n");
  try {
    return Permutation(std::move(img));
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what());
  }
}

Weight parse_weight(int n, const char* csv) {
  if (csv == nullptr) throw parse_error("missing weight");
  Weight lambda = parse_rational_list(csv);
  if (static_cast<int>(lambda.size()) != n) throw parse_error("weight length != n");
  return lambda;
}

relgt_status emit(char** out, const std::string& s) {
  *out = dup_string(s);
  return *out ? RELGT_OK : RELGT_ERR_INTERNAL;
}

} // namespace

extern "C" {

const char* relgt_version(void) { return "relgt 1.0.0"; }

const char* relgt_last_error(void) { return g_last_error.c_str(); }

void relgt_string_free(char* s) { std::free(s); }

void relgt_module_free(relgt_module* m) { delete m; }

relgt_status relgt_module_build(int n, const char* lambda_csv, const char* sigma_csv,
                                relgt_module** out) {
  return guarded([&] {
    if (out == nullptr) throw std::invalid_argument("null output handle");
    *out = new relgt_module{highest_weight_module(parse_weight(n, lambda_csv),
                                                  parse_permutation(n, sigma_csv))};
    return RELGT_OK;
  });
}

relgt_status relgt_module_seed_json(const relgt_module* m, char** out) {
  return guarded([&] {
    if (!m || !out) throw std::invalid_argument("null argument");
    return emit(out, to_json(m->spec.seed).dump());
  });
}

relgt_status relgt_module_graph_json(const relgt_module* m, char** out) {
  return guarded([&] {
    if (!m || !out) throw std::invalid_argument("null argument");
    return emit(out, to_json(m->spec.graph).dump());
  });
}

relgt_status relgt_module_graph_dot(const relgt_module* m, char** out) {
  return guarded([&] {
    if (!m || !out) throw std::invalid_argument("null argument");
    return emit(out, to_dot(m->spec.graph));
  });
}

relgt_status relgt_module_enumerate(const relgt_module* m, int window, char** out) {
  return guarded([&] {
    if (!m || !out) throw std::invalid_argument("null argument");
    auto basis = enumerate_basis(m->spec.seed, m->spec.graph, BasisWindow{window, {}});
    json shifts = json::array();
    for (const auto& z : basis.shifts) shifts.push_back(z.key());
    json j{{"schema", "relgt-basis/1"},
           {"count", basis.shifts.size()},
           {"complete", basis.complete},
           {"shifts", std::move(shifts)}};
    return emit(out, j.dump());
  });
}

relgt_status relgt_module_act(const relgt_module* m, int l, int mm,
                              const char* tableau_json, char** out) {
  return guarded([&] {
    if (!m || !out) throw std::invalid_argument("null argument");
    ModuleContext ctx(m->spec.seed, m->spec.graph);
    ModuleVector v;
    if (tableau_json == nullptr) {
      v = ModuleVector::basis(ShiftVector(m->spec.seed.n()));
    } else {
      Tableau t = tableau_from_json(json::parse(tableau_json, nullptr, false, true));
      ShiftVector z(t.n());
      for (int k = 1; k < t.n(); ++k)
        for (int i = 1; i <= k; ++i) {
          auto d = integer_difference(t.entry(k, i), m->spec.seed.entry(k, i));
          if (!d) throw domain_error("tableau is not an integer shift of the seed");
          z.set(k, i, static_cast<int>(*d));
        }
      v = ModuleVector::basis(z);
    }
    ModuleVector image = l == mm ? act_generator(ctx, GeneratorKind::Diagonal, l, v)
                                 : act_composite(ctx, l, mm, v);
    json j = to_json(ctx, image);
    j["schema"] = "relgt-act/1";
    return emit(out, j.dump());
  });
}

relgt_status relgt_module_check_brackets(const relgt_module* m, int window, char** out) {
  return guarded([&] {
    if (!m || !out) throw std::invalid_argument("null argument");
    ModuleContext ctx(m->spec.seed, m->spec.graph);
    BracketReport r = check_brackets(ctx, BasisWindow{window, {}});
    json j{{"schema", "relgt-brackets/1"},
           {"pairs", r.pair_count},
           {"checked", r.vectors_checked},
           {"skipped", r.skipped_boundary},
           {"violations", r.violations},
           {"failures", r.failures}};
    return emit(out, j.dump());
  });
}

relgt_status relgt_module_localize(const relgt_module* m, int mode, const char* z_csv,
                                   relgt_module** out, int* simple_out) {
  return guarded([&] {
    if (!m || !out) throw std::invalid_argument("null argument");
    ModuleSpec result = mode == 1
                            ? twisting_functor(m->spec)
                            : twisted_localize(m->spec,
                                               z_csv ? parse_rational(z_csv) : Rational(0));
    if (simple_out) *simple_out = is_simple(result) ? 1 : 0;
    *out = new relgt_module{std::move(result)};
    return RELGT_OK;
  });
}

relgt_status relgt_analyze(int n, const char* lambda_csv, int jobs, char** out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("null argument");
    Weight lambda = parse_weight(n, lambda_csv);
    WitnessReport report = sigma_relation_witnesses(lambda, 7, jobs < 1 ? 1 : jobs);
    json j = witness_report_json(report);
    j["schema"] = "relgt-analyze/1";
    json mu = json::array();
    for (const auto& x : weight_plus_staircase(lambda)) mu.push_back(to_string(x));
    j["mu"] = std::move(mu);
    j["lower_bound"] = lower_bound_json(lower_bound_n_lambda(lambda));
    auto dim = finite_dimension(lambda);
    j["finite_dimensional"] = dim.has_value();
    if (dim) j["dimension"] = *dim;
    return emit(out, j.dump());
  });
}

relgt_status relgt_verify_highest_weight(int n, const char* lambda_csv,
                                         const char* sigma_csv, int* ok_out) {
  return guarded([&] {
    if (!ok_out) throw std::invalid_argument("null argument");
    *ok_out = verify_highest_weight(parse_permutation(n, sigma_csv),
                                    parse_weight(n, lambda_csv))
                  ? 1
                  : 0;
    return RELGT_OK;
  });
}

relgt_status relgt_tableau_classify(const char* tableau_json, char** verdict_out) {
  return guarded([&] {
    if (!tableau_json || !verdict_out) throw std::invalid_argument("null argument");
    json parsed = json::parse(tableau_json, nullptr, false, true);
    if (parsed.is_discarded()) throw parse_error("malformed JSON");
    Tableau t = tableau_from_json(parsed);
    RelationVerdict v = classify_relation_graph(graph_of(normalize_rows(t).tableau));
    return emit(verdict_out, to_string(v));
  });
}

} // extern "C"
