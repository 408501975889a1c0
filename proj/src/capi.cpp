#include "degflag/degflag.h"

#include "degflag/serialize.hpp"
#include "degflag/verify.hpp"

#include <cstring>
#include <new>
#include <set>
#include <stdexcept>
#include <string>

struct dfl_triangle {
  degflag::Triangle value;
};
struct dfl_qpoly {
  degflag::QPolynomial value;
};
struct dfl_dellac_set {
  std::vector<degflag::DellacConfig> configs;
};

namespace {

using namespace degflag;

thread_local std::string g_last_error;

dfl_status fail(dfl_status status, const char* message) {
  g_last_error = message;
  return status;
}

template <class F>
dfl_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return DFL_OK;
  } catch (const InvalidArgument& e) {
    return fail(DFL_INVALID_ARGUMENT, e.what());
  } catch (const StructuralError& e) {
    return fail(DFL_STRUCTURAL, e.what());
  } catch (const BudgetExceeded& e) {
    return fail(DFL_BUDGET_EXCEEDED, e.what());
  } catch (const InternalError& e) {
    return fail(DFL_INTERNAL, e.what());
  } catch (const std::out_of_range& e) {
    return fail(DFL_OUT_OF_RANGE, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(DFL_STRUCTURAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(DFL_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DFL_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void need(const void* ptr, const char* name) {
  if (ptr == nullptr) throw InvalidArgument(std::string(name) + " must not be NULL");
}

void in_range(int value, int lo, int hi, const char* name) {
  if (value < lo || value > hi)
    throw InvalidArgument(std::string(name) + " must be in " + std::to_string(lo) + ".." + std::to_string(hi) +
                          ", got " + std::to_string(value));
}

std::vector<int> dims_arg(int n, const int* dims, size_t ndims) {
  if (dims == nullptr) return complete_dims(n);
  std::vector<int> out(dims, dims + ndims);
  check_dims(n, out);
  return out;
}

Json parse(const char* text) {
  need(text, "json");
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw StructuralError(std::string("malformed JSON: ") + e.what());
  }
}

const DellacConfig& config_at(const dfl_dellac_set* set, size_t index) {
  need(set, "set");
  if (index >= set->configs.size())
    throw std::out_of_range("index " + std::to_string(index) + " outside a set of " +
                            std::to_string(set->configs.size()));
  return set->configs[index];
}

template <class Domain, class Forward, class Backward, class Show>
void check_roundtrip(const std::vector<Domain>& domain, Forward forward, Backward backward, Show show,
                     std::size_t& failures, Json& first) {
  for (const auto& x : domain)
    if (!(backward(forward(x)) == x)) {
      if (failures++ == 0) first = show(x);
    }
}

}  // namespace

extern "C" {

const char* dfl_last_error(void) { return g_last_error.c_str(); }

const char* dfl_status_name(dfl_status status) {
  switch (status) {
    case DFL_OK: return "ok";
    case DFL_INVALID_ARGUMENT: return "invalid argument";
    case DFL_OUT_OF_RANGE: return "out of range";
    case DFL_STRUCTURAL: return "structural error";
    case DFL_BUDGET_EXCEEDED: return "budget exceeded";
    case DFL_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* dfl_version(void) { return "0.1.0"; }

void dfl_string_free(char* s) { delete[] s; }

dfl_status dfl_normalized_h(int n, char** out) {
  return guarded([&] {
    need(out, "out");
    in_range(n, 1, 10000, "n");
    *out = copy_string(to_decimal(normalized_h(n)));
  });
}

dfl_status dfl_median_genocchi(int n, char** out) {
  return guarded([&] {
    need(out, "out");
    in_range(n, 1, 10000, "n");
    *out = copy_string(to_decimal(median_genocchi(n)));
  });
}

dfl_status dfl_seidel_triangle(int rows, dfl_triangle** out) {
  return guarded([&] {
    need(out, "out");
    in_range(rows, 1, 20000, "rows");
    *out = new dfl_triangle{seidel_triangle(rows)};
  });
}

dfl_status dfl_kreweras_triangle(int rows, dfl_triangle** out) {
  return guarded([&] {
    need(out, "out");
    in_range(rows, 1, 10000, "rows");
    *out = new dfl_triangle{kreweras_triangle(rows)};
  });
}

size_t dfl_triangle_rows(const dfl_triangle* t) { return t ? t->value.size() : 0; }

dfl_status dfl_triangle_row_length(const dfl_triangle* t, size_t row, size_t* out) {
  return guarded([&] {
    need(t, "triangle");
    need(out, "out");
    if (row < 1 || row > t->value.size()) throw std::out_of_range("row " + std::to_string(row) + " does not exist");
    *out = t->value.row(row).size();
  });
}

dfl_status dfl_triangle_entry(const dfl_triangle* t, size_t row, size_t k, char** out) {
  return guarded([&] {
    need(t, "triangle");
    need(out, "out");
    if (row < 1 || row > t->value.size()) throw std::out_of_range("row " + std::to_string(row) + " does not exist");
    const auto& r = t->value.row(row);
    if (k < 1 || k > r.size()) throw std::out_of_range("entry " + std::to_string(k) + " does not exist");
    *out = copy_string(to_decimal(r[k - 1]));
  });
}

dfl_status dfl_triangle_to_json(const dfl_triangle* t, char** out) {
  return guarded([&] {
    need(t, "triangle");
    need(out, "out");
    *out = copy_string(to_json(t->value).dump());
  });
}

void dfl_triangle_free(dfl_triangle* t) { delete t; }

dfl_status dfl_poincare(int n, int jobs, dfl_qpoly** out) {
  return guarded([&] {
    need(out, "out");
    in_range(n, 1, 8, "n");
    *out = new dfl_qpoly{poincare_polynomial(n, jobs)};
  });
}

int dfl_qpoly_degree(const dfl_qpoly* poly) { return poly ? poly->value.degree() : -1; }

dfl_status dfl_qpoly_coeff(const dfl_qpoly* poly, size_t exponent, char** out) {
  return guarded([&] {
    need(poly, "poly");
    need(out, "out");
    *out = copy_string(to_decimal(poly->value.coeff(exponent)));
  });
}

dfl_status dfl_qpoly_eval(const dfl_qpoly* poly, const char* x, char** out) {
  return guarded([&] {
    need(poly, "poly");
    need(x, "x");
    need(out, "out");
    *out = copy_string(to_decimal(poly->value.eval(parse_decimal(x))));
  });
}

dfl_status dfl_qpoly_to_json(const dfl_qpoly* poly, char** out) {
  return guarded([&] {
    need(poly, "poly");
    need(out, "out");
    *out = copy_string(to_json(poly->value).dump());
  });
}

void dfl_qpoly_free(dfl_qpoly* poly) { delete poly; }

dfl_status dfl_dellac_enumerate(int n, int jobs, dfl_dellac_set** out) {
  return guarded([&] {
    need(out, "out");
    in_range(n, 1, 8, "n");
    *out = new dfl_dellac_set{enumerate_dellac(n, jobs)};
  });
}

size_t dfl_dellac_set_size(const dfl_dellac_set* set) { return set ? set->configs.size() : 0; }

dfl_status dfl_dellac_length(const dfl_dellac_set* set, size_t index, int* out) {
  return guarded([&] {
    need(out, "out");
    *out = length(config_at(set, index));
  });
}

dfl_status dfl_dellac_refinement(const dfl_dellac_set* set, size_t index, int* out) {
  return guarded([&] {
    need(out, "out");
    *out = refinement_stat(config_at(set, index));
  });
}

dfl_status dfl_dellac_grid(const dfl_dellac_set* set, size_t index, char** out) {
  return guarded([&] {
    need(out, "out");
    *out = copy_string(config_at(set, index).grid());
  });
}

dfl_status dfl_dellac_get_json(const dfl_dellac_set* set, size_t index, char** out) {
  return guarded([&] {
    need(out, "out");
    *out = copy_string(to_json(config_at(set, index)).dump());
  });
}

dfl_status dfl_dellac_set_to_json(const dfl_dellac_set* set, char** out) {
  return guarded([&] {
    need(set, "set");
    need(out, "out");
    Json arr = Json::array();
    for (const auto& d : set->configs) arr.push_back(to_json(d));
    *out = copy_string(arr.dump());
  });
}

void dfl_dellac_set_free(dfl_dellac_set* set) { delete set; }

dfl_status dfl_validate_dellac(const char* dellac_json, char** report) {
  return guarded([&] {
    need(report, "report");
    Json j = parse(dellac_json);
    if (!j.is_object() || !j.contains("n") || !j.contains("boxes")) throw StructuralError("expected {\"n\", \"boxes\"}");
    std::vector<Box> boxes;
    for (const auto& pair : j.at("boxes").get<std::vector<std::vector<int>>>()) {
      if (pair.size() != 2) throw StructuralError("a box is a [column, row] pair");
      boxes.push_back({pair[0], pair[1]});
    }
    *report = copy_string(to_json(validate_dellac(j.at("n").get<int>(), boxes)).dump());
  });
}

dfl_status dfl_validate_tuple(const char* tuple_json, char** report) {
  return guarded([&] {
    need(report, "report");
    Json j = parse(tuple_json);
    FixedPointTuple t{j.at("n").get<int>(), j.at("dims").get<std::vector<int>>(),
                      j.at("subsets").get<std::vector<std::vector<int>>>()};
    *report = copy_string(to_json(validate_tuple(t)).dump());
  });
}

dfl_status dfl_validate_dumont(int n, const char* values_json, char** report) {
  return guarded([&] {
    need(report, "report");
    *report = copy_string(to_json(validate_dumont(n, parse(values_json).get<std::vector<int>>())).dump());
  });
}

dfl_status dfl_tuple_to_dellac(const char* tuple_json, char** out) {
  return guarded([&] {
    need(out, "out");
    *out = copy_string(to_json(tuple_to_dellac(tuple_from_json(parse(tuple_json)))).dump());
  });
}

dfl_status dfl_dellac_to_tuple(const char* dellac_json, char** out) {
  return guarded([&] {
    need(out, "out");
    *out = copy_string(to_json(dellac_to_tuple(dellac_from_json(parse(dellac_json)))).dump());
  });
}

dfl_status dfl_dumont_to_dellac(int n, const char* values_json, char** out) {
  return guarded([&] {
    need(out, "out");
    *out = copy_string(to_json(dumont_to_dellac(dumont_from_json(n, parse(values_json)))).dump());
  });
}

dfl_status dfl_dellac_to_dumont(const char* dellac_json, char** out) {
  return guarded([&] {
    need(out, "out");
    *out = copy_string(to_json(dellac_to_dumont(dellac_from_json(parse(dellac_json)))).dump());
  });
}

dfl_status dfl_enumerate_tuples(int n, const int* dims, size_t ndims, char** out) {
  return guarded([&] {
    need(out, "out");
    in_range(n, 1, 8, "n");
    Json arr = Json::array();
    for (const auto& t : enumerate_tuples(n, dims_arg(n, dims, ndims))) arr.push_back(to_json(t));
    *out = copy_string(arr.dump());
  });
}

dfl_status dfl_enumerate_dumont(int n, int jobs, char** out) {
  return guarded([&] {
    need(out, "out");
    in_range(n, 1, 7, "n");
    Json arr = Json::array();
    for (const auto& p : enumerate_dumont(n, jobs)) arr.push_back(to_json(p));
    *out = copy_string(arr.dump());
  });
}

dfl_status dfl_bijection_roundtrip(int n, const char* kind, int jobs, char** out) {
  return guarded([&] {
    need(kind, "kind");
    need(out, "out");
    in_range(n, 1, 7, "n");
    const std::string k = kind;
    if (k != "tuple" && k != "dumont") throw InvalidArgument("kind must be 'tuple' or 'dumont', got '" + k + "'");
    auto configs = enumerate_dellac(n, jobs);
    std::size_t failures = 0;
    Json first = nullptr;
    std::size_t domain = 0;
    std::set<DellacConfig> images;
    if (k == "tuple") {
      auto tuples = enumerate_tuples(n, complete_dims(n));
      domain = tuples.size();
      check_roundtrip(tuples, tuple_to_dellac, dellac_to_tuple, [](const FixedPointTuple& t) { return to_json(t); },
                      failures, first);
      for (const auto& t : tuples) images.insert(tuple_to_dellac(t));
      check_roundtrip(configs, dellac_to_tuple, tuple_to_dellac, [](const DellacConfig& d) { return to_json(d); },
                      failures, first);
    } else {
      auto perms = enumerate_dumont(n, jobs);
      domain = perms.size();
      check_roundtrip(perms, dumont_to_dellac, dellac_to_dumont,
                      [](const DumontPermutation& p) { return to_json(p); }, failures, first);
      for (const auto& p : perms) images.insert(dumont_to_dellac(p));
      check_roundtrip(configs, dellac_to_dumont, dumont_to_dellac, [](const DellacConfig& d) { return to_json(d); },
                      failures, first);
    }
    const bool onto = images.size() == configs.size();
    Json result{{"kind", k},           {"n", n},
                {"domain_size", domain}, {"dellac_count", configs.size()},
                {"failures", failures},  {"first_failure", first},
                {"bijective", onto && failures == 0 && domain == configs.size()}};
    *out = copy_string(result.dump());
  });
}

dfl_status dfl_count_points(int n, unsigned p, const int* dims, size_t ndims, int jobs, char** out) {
  return guarded([&] {
    need(out, "out");
    in_range(n, 1, Subspace::kMaxAmbient, "n");
    *out = copy_string(to_decimal(count_points(dims_arg(n, dims, ndims), n, PrimeField(p), jobs)));
  });
}

dfl_status dfl_cell_counts(int n, unsigned p, const int* dims, size_t ndims, int jobs, char** out) {
  return guarded([&] {
    need(out, "out");
    in_range(n, 1, Subspace::kMaxAmbient, "n");
    *out = copy_string(to_json(cell_point_counts(dims_arg(n, dims, ndims), n, PrimeField(p), jobs)).dump());
  });
}

dfl_status dfl_grassmann_cell_dimension(const int* label, size_t d, int n, int* out) {
  return guarded([&] {
    need(out, "out");
    if (d > 0) need(label, "label");
    std::vector<int> l(label, label + d);
    *out = grassmann_cell_dimension(l, static_cast<int>(d), n);
  });
}

dfl_status dfl_pluecker_relation(const int* L, size_t p, const int* J, size_t q, int k, int degenerate, char** out) {
  return guarded([&] {
    need(L, "L");
    need(J, "J");
    need(out, "out");
    std::vector<int> l(L, L + p), j(J, J + q);
    auto rel = degenerate ? degenerate_relation(l, j, k) : classical_relation(l, j, k);
    *out = copy_string(to_json(rel).dump());
  });
}

dfl_status dfl_pluecker_cutout(int n, unsigned p, const int* dims, size_t ndims, int jobs, char** out) {
  return guarded([&] {
    need(out, "out");
    in_range(n, 1, Subspace::kMaxAmbient, "n");
    *out = copy_string(to_json(verify_ideal_cutout(dims_arg(n, dims, ndims), n, PrimeField(p), jobs)).dump());
  });
}

dfl_verify_params dfl_verify_defaults(void) {
  VerifyParams d;
  return dfl_verify_params{d.n, d.p, d.rows, nullptr, 0, d.jobs};
}

dfl_status dfl_verify(const char* suite, const dfl_verify_params* params, char** out, int* passed) {
  return guarded([&] {
    need(suite, "suite");
    need(params, "params");
    need(out, "out");
    VerifyParams vp;
    vp.n = params->n;
    vp.p = params->p;
    vp.rows = params->rows;
    vp.jobs = params->jobs;
    if (params->dims) vp.dims = std::vector<int>(params->dims, params->dims + params->ndims);
    auto report = run_verify(suite, vp);
    Json checks = Json::array();
    for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    *out = copy_string(Json{{"suite", report.suite}, {"passed", report.passed()}, {"checks", checks}}.dump());
    if (passed) *passed = report.passed() ? 1 : 0;
  });
}

}  // extern "C"
