// Command-line driver over the degflag C API.

#include "degflag/degflag.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct ApiError {
  dfl_status status;
  std::string message;
};

void check(dfl_status s) {
  if (s != DFL_OK) throw ApiError{s, dfl_last_error()};
}

// Takes ownership of a string returned by the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  dfl_string_free(s);
  return out;
}

Json take_json(char* s) { return Json::parse(take(s)); }

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string join(const Json& arr, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) s += sep;
    s += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
  }
  return s;
}

std::string subsets_text(const Json& subsets) {
  std::string s = "(";
  for (std::size_t l = 0; l < subsets.size(); ++l) s += (l ? "," : "") + std::string("{") + join(subsets[l], ",") + "}";
  return s + ")";
}

struct Options {
  std::string format = "text";
  int jobs = 1;
};

struct Output {
  Json result;
  std::function<std::string()> text;
  std::function<std::string()> csv;
  int exit_code = kExitOk;
};

bool use_color() { return std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO); }

std::string pass_fail(bool pass) {
  if (!use_color()) return pass ? "PASS" : "FAIL";
  return pass ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
}

const int* dims_ptr(const std::optional<std::vector<int>>& dims) { return dims ? dims->data() : nullptr; }
std::size_t dims_len(const std::optional<std::vector<int>>& dims) { return dims ? dims->size() : 0; }
Json dims_param(const std::optional<std::vector<int>>& dims) { return dims ? Json(*dims) : Json(nullptr); }

Output triangle_output(dfl_status (*make)(int, dfl_triangle**), int rows) {
  dfl_triangle* t = nullptr;
  check(make(rows, &t));
  char* s = nullptr;
  dfl_status st = dfl_triangle_to_json(t, &s);
  dfl_triangle_free(t);
  check(st);
  Output out;
  out.result = take_json(s);
  Json rows_json = out.result;
  out.text = [rows_json] {
    std::string s;
    for (const auto& r : rows_json) s += join(r, " ") + "\n";
    return s;
  };
  out.csv = [rows_json] {
    std::string s = "row,k,value\n";
    for (std::size_t r = 0; r < rows_json.size(); ++r)
      for (std::size_t k = 0; k < rows_json[r].size(); ++k)
        s += std::to_string(r + 1) + "," + std::to_string(k + 1) + "," + rows_json[r][k].get<std::string>() + "\n";
    return s;
  };
  return out;
}

Output numbers(int max_n) {
  Output out;
  out.result = Json::array();
  for (int n = 1; n <= max_n; ++n) {
    char* s = nullptr;
    check(dfl_normalized_h(n, &s));
    out.result.push_back({{"n", n}, {"h", take(s)}});
  }
  Json r = out.result;
  out.text = [r] {
    std::string s;
    for (const auto& e : r) s += std::to_string(e["n"].get<int>()) + " " + e["h"].get<std::string>() + "\n";
    return s;
  };
  out.csv = [r] {
    std::string s = "n,h\n";
    for (const auto& e : r) s += std::to_string(e["n"].get<int>()) + "," + e["h"].get<std::string>() + "\n";
    return s;
  };
  return out;
}

Output dellac_enum(int n, int jobs) {
  dfl_dellac_set* set = nullptr;
  check(dfl_dellac_enumerate(n, jobs, &set));
  Json configs = Json::array();
  std::vector<std::string> grids;
  try {
    for (std::size_t i = 0; i < dfl_dellac_set_size(set); ++i) {
      char* s = nullptr;
      int len = 0, stat = 0;
      check(dfl_dellac_get_json(set, i, &s));
      Json c = take_json(s);
      check(dfl_dellac_length(set, i, &len));
      check(dfl_dellac_refinement(set, i, &stat));
      check(dfl_dellac_grid(set, i, &s));
      grids.push_back(take(s));
      c["length"] = len;
      c["refinement"] = stat;
      configs.push_back(std::move(c));
    }
  } catch (...) {
    dfl_dellac_set_free(set);
    throw;
  }
  dfl_dellac_set_free(set);
  Output out;
  out.result = Json{{"count", configs.size()}, {"configs", configs}};
  out.text = [configs, grids] {
    std::ostringstream os;
    os << configs.size() << " configurations\n";
    for (std::size_t i = 0; i < configs.size(); ++i)
      os << "\n#" << i + 1 << "  length " << configs[i]["length"].get<int>() << "  refinement "
         << configs[i]["refinement"].get<int>() << "\n"
         << grids[i];
    return os.str();
  };
  out.csv = [configs] {
    std::string s = "index,length,refinement,boxes\n";
    for (std::size_t i = 0; i < configs.size(); ++i)
      s += std::to_string(i + 1) + "," + std::to_string(configs[i]["length"].get<int>()) + "," +
           std::to_string(configs[i]["refinement"].get<int>()) + "," + csv_cell(configs[i]["boxes"].dump()) + "\n";
    return s;
  };
  return out;
}

Output poincare(int n, int jobs, const std::vector<std::string>& at) {
  dfl_qpoly* poly = nullptr;
  check(dfl_poincare(n, jobs, &poly));
  Output out;
  try {
    char* s = nullptr;
    check(dfl_qpoly_to_json(poly, &s));
    out.result = take_json(s);
    Json values = Json::array();
    for (const auto& x : at) {
      check(dfl_qpoly_eval(poly, x.c_str(), &s));
      values.push_back({{"q", x}, {"value", take(s)}});
    }
    if (!at.empty()) out.result["values"] = values;
  } catch (...) {
    dfl_qpoly_free(poly);
    throw;
  }
  dfl_qpoly_free(poly);
  Json r = out.result;
  out.text = [r] {
    std::string s;
    const auto& c = r["coeffs"];
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i].get<std::string>() == "0") continue;
      if (!s.empty()) s += " + ";
      s += c[i].get<std::string>();
      if (i >= 1) s += i == 1 ? "q" : "q^" + std::to_string(i);
    }
    s += "\n";
    if (r.contains("values"))
      for (const auto& v : r["values"]) s += "P(" + v["q"].get<std::string>() + ") = " + v["value"].get<std::string>() + "\n";
    return s;
  };
  out.csv = [r] {
    std::string s = "exponent,coefficient\n";
    for (std::size_t i = 0; i < r["coeffs"].size(); ++i) s += std::to_string(i) + "," + r["coeffs"][i].get<std::string>() + "\n";
    return s;
  };
  return out;
}

Output roundtrip(int n, const std::string& kind, int jobs) {
  char* s = nullptr;
  check(dfl_bijection_roundtrip(n, kind.c_str(), jobs, &s));
  Output out;
  out.result = take_json(s);
  Json r = out.result;
  out.exit_code = r["bijective"].get<bool>() ? kExitOk : kExitFailed;
  out.text = [r] {
    std::ostringstream os;
    os << r["kind"].get<std::string>() << " <-> dellac, n = " << r["n"] << ": " << r["domain_size"] << " vs "
       << r["dellac_count"] << ", " << r["failures"] << " failures, " << pass_fail(r["bijective"].get<bool>()) << "\n";
    if (!r["first_failure"].is_null()) os << "first failure: " << r["first_failure"].dump() << "\n";
    return os.str();
  };
  out.csv = [r] {
    return "kind,n,domain_size,dellac_count,failures,bijective\n" + r["kind"].get<std::string>() + "," +
           r["n"].dump() + "," + r["domain_size"].dump() + "," + r["dellac_count"].dump() + "," +
           r["failures"].dump() + "," + r["bijective"].dump() + "\n";
  };
  return out;
}

Output convert(const std::string& from, const std::string& to, const std::string& input, int n) {
  char* s = nullptr;
  Json dellac;
  if (from == "dellac") {
    dellac = Json::parse(input);
  } else if (from == "tuple") {
    check(dfl_tuple_to_dellac(input.c_str(), &s));
    dellac = take_json(s);
  } else {
    check(dfl_dumont_to_dellac(n, input.c_str(), &s));
    dellac = take_json(s);
  }
  std::string d = dellac.dump();
  Output out;
  if (to == "dellac") {
    // a round trip through the tuple encoding validates and normalizes
    check(dfl_dellac_to_tuple(d.c_str(), &s));
    check(dfl_tuple_to_dellac(take(s).c_str(), &s));
    out.result = take_json(s);
  } else if (to == "tuple") {
    check(dfl_dellac_to_tuple(d.c_str(), &s));
    out.result = take_json(s);
  } else {
    check(dfl_dellac_to_dumont(d.c_str(), &s));
    out.result = take_json(s);
  }
  Json r = out.result;
  out.text = [r] { return r.dump() + "\n"; };
  out.csv = [r] { return "value\n" + csv_cell(r.dump()) + "\n"; };
  return out;
}

Output flag_count(int n, unsigned p, const std::optional<std::vector<int>>& dims, int jobs) {
  char* s = nullptr;
  check(dfl_count_points(n, p, dims_ptr(dims), dims_len(dims), jobs, &s));
  Output out;
  out.result = Json{{"count", take(s)}};
  Json r = out.result;
  out.text = [r] { return r["count"].get<std::string>() + "\n"; };
  out.csv = [r] { return "count\n" + r["count"].get<std::string>() + "\n"; };
  return out;
}

Output flag_cells(int n, unsigned p, const std::optional<std::vector<int>>& dims, int jobs) {
  char* s = nullptr;
  check(dfl_cell_counts(n, p, dims_ptr(dims), dims_len(dims), jobs, &s));
  Json cells = take_json(s);
  Output out;
  std::size_t total_cells = cells.size();
  out.result = Json{{"cells", total_cells}, {"table", cells}};
  out.text = [cells] {
    std::string s;
    for (const auto& c : cells) {
      s += subsets_text(c["tuple"]) + "  " + c["count"].get<std::string>();
      if (!c["dellac_length"].is_null()) s += "  length " + c["dellac_length"].dump();
      s += "\n";
    }
    return s + std::to_string(cells.size()) + " cells\n";
  };
  out.csv = [cells] {
    std::string s = "tuple,dellac_length,count\n";
    for (const auto& c : cells)
      s += csv_cell(subsets_text(c["tuple"])) + "," + (c["dellac_length"].is_null() ? "" : c["dellac_length"].dump()) +
           "," + c["count"].get<std::string>() + "\n";
    return s;
  };
  return out;
}

Output cutout(int n, unsigned p, const std::optional<std::vector<int>>& dims, int jobs) {
  char* s = nullptr;
  check(dfl_pluecker_cutout(n, p, dims_ptr(dims), dims_len(dims), jobs, &s));
  Output out;
  out.result = take_json(s);
  Json r = out.result;
  out.exit_code = r["equal"].get<bool>() ? kExitOk : kExitFailed;
  out.text = [r] {
    std::ostringstream os;
    os << "points in product:     " << r["product_points"] << "\n"
       << "points by chain:       " << r["points_by_chain"] << "\n"
       << "points by relations:   " << r["points_by_relations"] << "\n"
       << "relations:             " << r["relations"] << "\n"
       << "mismatches:            " << r["mismatches"] << "\n"
       << pass_fail(r["equal"].get<bool>()) << "\n";
    return os.str();
  };
  out.csv = [r] {
    std::string s = "product_points,points_by_chain,points_by_relations,relations,mismatches,equal\n";
    return s + r["product_points"].dump() + "," + r["points_by_chain"].dump() + "," +
           r["points_by_relations"].dump() + "," + r["relations"].dump() + "," + r["mismatches"].dump() + "," +
           r["equal"].dump() + "\n";
  };
  return out;
}

std::string relation_text(const Json& r) {
  std::string s;
  auto idx = [](const Json& a) {
    std::string t;
    for (const auto& x : a) t += std::to_string(x.get<int>());
    return t;
  };
  for (const auto& t : r["terms"]) {
    bool plus = t["sign"].get<int>() > 0;
    if (s.empty())
      s += plus ? "" : "-";
    else
      s += plus ? " + " : " - ";
    s += "X_" + idx(t["L"]) + " X_" + idx(t["J"]);
  }
  return s.empty() ? "0" : s;
}

Output relation(const std::vector<int>& L, const std::vector<int>& J, int k, bool classical) {
  char* s = nullptr;
  check(dfl_pluecker_relation(L.data(), L.size(), J.data(), J.size(), k, classical ? 0 : 1, &s));
  Output out;
  out.result = take_json(s);
  Json r = out.result;
  out.text = [r] { return relation_text(r) + "\n"; };
  out.csv = [r] {
    std::string s = "sign,L,J\n";
    for (const auto& t : r["terms"])
      s += t["sign"].dump() + "," + csv_cell(join(t["L"], " ")) + "," + csv_cell(join(t["J"], " ")) + "\n";
    return s;
  };
  return out;
}

Output verify(const std::string& suite, int n, unsigned p, int rows, const std::optional<std::vector<int>>& dims,
              int jobs) {
  dfl_verify_params params = dfl_verify_defaults();
  params.n = n;
  params.p = p;
  params.rows = rows;
  params.dims = dims_ptr(dims);
  params.ndims = dims_len(dims);
  params.jobs = jobs;
  char* s = nullptr;
  int passed = 0;
  check(dfl_verify(suite.c_str(), &params, &s, &passed));
  Output out;
  out.result = take_json(s);
  out.exit_code = passed ? kExitOk : kExitFailed;
  Json r = out.result;
  out.text = [r] {
    std::string s;
    for (const auto& c : r["checks"])
      s += pass_fail(c["pass"].get<bool>()) + "  " + c["name"].get<std::string>() + ": " + c["detail"].get<std::string>() + "\n";
    s += r["suite"].get<std::string>() + ": " + pass_fail(r["passed"].get<bool>()) + "\n";
    return s;
  };
  out.csv = [r] {
    std::string s = "name,pass,detail\n";
    for (const auto& c : r["checks"])
      s += csv_cell(c["name"].get<std::string>()) + "," + c["pass"].dump() + "," + csv_cell(c["detail"].get<std::string>()) + "\n";
    return s;
  };
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degenerate flag varieties, Dellac configurations and median Genocchi numbers"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--jobs", opt.jobs, "Worker threads for enumerations")->check(CLI::Range(1, 256));

  std::string command;
  Json params = Json::object();
  std::function<Output()> run;

  int max_n = 6;
  auto* numbers_cmd = app.add_subcommand("numbers", "Normalized median Genocchi numbers h_1..h_N");
  numbers_cmd->add_option("--max-n", max_n, "Largest n")->check(CLI::Range(1, 25));
  numbers_cmd->callback([&] {
    command = "numbers";
    params = {{"max_n", max_n}};
    run = [&] { return numbers(max_n); };
  });

  int rows = 9;
  auto* seidel_cmd = app.add_subcommand("seidel", "Seidel triangle");
  seidel_cmd->add_option("--rows", rows, "Number of rows")->check(CLI::Range(1, 2000));
  seidel_cmd->callback([&] {
    command = "seidel";
    params = {{"rows", rows}};
    run = [&] { return triangle_output(dfl_seidel_triangle, rows); };
  });

  int k_rows = 6;
  auto* kreweras_cmd = app.add_subcommand("kreweras", "Kreweras refinement triangle");
  kreweras_cmd->add_option("--rows", k_rows, "Number of rows")->check(CLI::Range(1, 1000));
  kreweras_cmd->callback([&] {
    command = "kreweras";
    params = {{"rows", k_rows}};
    run = [&] { return triangle_output(dfl_kreweras_triangle, k_rows); };
  });

  int dellac_n = 3;
  auto* dellac_cmd = app.add_subcommand("dellac", "Dellac configurations");
  dellac_cmd->require_subcommand(1);
  auto* dellac_enum_cmd = dellac_cmd->add_subcommand("enum", "List all configurations");
  dellac_enum_cmd->add_option("--n", dellac_n, "Number of columns")->required()->check(CLI::Range(1, 8));
  dellac_enum_cmd->callback([&] {
    command = "dellac enum";
    params = {{"n", dellac_n}};
    run = [&] { return dellac_enum(dellac_n, opt.jobs); };
  });

  int poincare_n = 3;
  std::vector<std::string> poincare_at;
  auto* poincare_cmd = app.add_subcommand("poincare", "Poincare polynomial P_n(q)");
  poincare_cmd->add_option("--n", poincare_n, "n")->required()->check(CLI::Range(1, 8));
  poincare_cmd->add_option("--at", poincare_at, "Evaluate at these q")->delimiter(',');
  poincare_cmd->callback([&] {
    command = "poincare";
    params = {{"n", poincare_n}};
    if (!poincare_at.empty()) params["at"] = poincare_at;
    run = [&] { return poincare(poincare_n, opt.jobs, poincare_at); };
  });

  int bij_n = 3;
  std::string bij_kind = "tuple";
  auto* bijection_cmd = app.add_subcommand("bijection", "Bijections with Dellac configurations");
  bijection_cmd->require_subcommand(1);
  auto* roundtrip_cmd = bijection_cmd->add_subcommand("roundtrip", "Check both round trips on the full domain");
  roundtrip_cmd->add_option("--n", bij_n, "n")->required()->check(CLI::Range(1, 7));
  roundtrip_cmd->add_option("--kind", bij_kind, "tuple or dumont")->check(CLI::IsMember({"tuple", "dumont"}));
  roundtrip_cmd->callback([&] {
    command = "bijection roundtrip";
    params = {{"n", bij_n}, {"kind", bij_kind}};
    run = [&] { return roundtrip(bij_n, bij_kind, opt.jobs); };
  });
  std::string conv_from, conv_to, conv_input;
  int conv_n = 0;
  auto* convert_cmd = bijection_cmd->add_subcommand("convert", "Convert one object between encodings");
  convert_cmd->add_option("--from", conv_from, "Input kind")->required()->check(CLI::IsMember({"tuple", "dumont", "dellac"}));
  convert_cmd->add_option("--to", conv_to, "Output kind")->required()->check(CLI::IsMember({"tuple", "dumont", "dellac"}));
  convert_cmd->add_option("--input", conv_input, "JSON document")->required();
  convert_cmd->add_option("--n", conv_n, "n (needed for dumont input)");
  convert_cmd->callback([&] {
    command = "bijection convert";
    params = {{"from", conv_from}, {"to", conv_to}, {"input", conv_input}};
    if (conv_from == "dumont") params["n"] = conv_n;
    run = [&] { return convert(conv_from, conv_to, conv_input, conv_n); };
  });

  int flag_n = 3;
  unsigned flag_p = 2;
  std::optional<std::vector<int>> flag_dims;
  auto* flag_cmd = app.add_subcommand("flag", "Points of degenerate flag varieties over F_p");
  flag_cmd->require_subcommand(1);
  auto add_flag_options = [&](CLI::App* sub) {
    sub->add_option("--n", flag_n, "Ambient dimension")->required()->check(CLI::Range(1, 8));
    sub->add_option("--p", flag_p, "Field size (prime)")->required();
    sub->add_option("--dims", flag_dims, "Subspace dimensions, e.g. 1,3 (default: complete flags)")->delimiter(',');
  };
  auto* count_cmd = flag_cmd->add_subcommand("count", "Number of F_p-points");
  add_flag_options(count_cmd);
  count_cmd->callback([&] {
    command = "flag count";
    params = {{"n", flag_n}, {"p", flag_p}, {"dims", dims_param(flag_dims)}};
    run = [&] { return flag_count(flag_n, flag_p, flag_dims, opt.jobs); };
  });
  auto* cells_cmd = flag_cmd->add_subcommand("cells", "Points grouped by cell");
  add_flag_options(cells_cmd);
  cells_cmd->callback([&] {
    command = "flag cells";
    params = {{"n", flag_n}, {"p", flag_p}, {"dims", dims_param(flag_dims)}};
    run = [&] { return flag_cells(flag_n, flag_p, flag_dims, opt.jobs); };
  });

  auto* pluecker_cmd = app.add_subcommand("pluecker", "Degenerate Plücker relations");
  pluecker_cmd->require_subcommand(1);
  int pl_n = 4;
  unsigned pl_p = 2;
  std::optional<std::vector<int>> pl_dims;
  auto* cutout_cmd = pluecker_cmd->add_subcommand("cutout", "Compare relations with the chain conditions");
  cutout_cmd->add_option("--n", pl_n, "Ambient dimension")->required()->check(CLI::Range(1, 8));
  cutout_cmd->add_option("--p", pl_p, "Field size (prime)")->required();
  cutout_cmd->add_option("--dims", pl_dims, "Subspace dimensions (default: complete flags)")->delimiter(',');
  cutout_cmd->callback([&] {
    command = "pluecker cutout";
    params = {{"n", pl_n}, {"p", pl_p}, {"dims", dims_param(pl_dims)}};
    run = [&] { return cutout(pl_n, pl_p, pl_dims, opt.jobs); };
  });
  std::vector<int> rel_l, rel_j;
  int rel_k = 1;
  bool rel_classical = false;
  auto* relation_cmd = pluecker_cmd->add_subcommand("relation", "Print one relation");
  relation_cmd->add_option("--L", rel_l, "Index tuple L")->required()->delimiter(',');
  relation_cmd->add_option("--J", rel_j, "Index tuple J")->required()->delimiter(',');
  relation_cmd->add_option("--k", rel_k, "Number of swapped indices");
  relation_cmd->add_flag("--classical", rel_classical, "Classical instead of degenerate");
  relation_cmd->callback([&] {
    command = "pluecker relation";
    params = {{"L", rel_l}, {"J", rel_j}, {"k", rel_k}, {"kind", rel_classical ? "classical" : "degenerate"}};
    run = [&] { return relation(rel_l, rel_j, rel_k, rel_classical); };
  });

  std::string suite;
  int v_n = 3, v_rows = 6;
  unsigned v_p = 2;
  std::optional<std::vector<int>> v_dims;
  auto* verify_cmd = app.add_subcommand("verify", "Run a cross-check suite");
  verify_cmd->add_option("--suite", suite, "triangles, bijections, cells, points or pluecker")->required();
  verify_cmd->add_option("--n", v_n, "n");
  verify_cmd->add_option("--p", v_p, "Field size (prime)");
  verify_cmd->add_option("--rows", v_rows, "Triangle rows");
  verify_cmd->add_option("--dims", v_dims, "Subspace dimensions (default: complete flags)")->delimiter(',');
  verify_cmd->callback([&] {
    command = "verify";
    params = {{"suite", suite}, {"n", v_n}, {"p", v_p}, {"rows", v_rows}, {"dims", dims_param(v_dims)}};
    run = [&] { return verify(suite, v_n, v_p, v_rows, v_dims, opt.jobs); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  params["jobs"] = opt.jobs;

  Output out;
  auto start = std::chrono::steady_clock::now();
  try {
    out = run();
  } catch (const ApiError& e) {
    std::cerr << "error: " << e.message << "\n";
    bool usage = e.status == DFL_INVALID_ARGUMENT || e.status == DFL_STRUCTURAL || e.status == DFL_OUT_OF_RANGE;
    return usage ? kExitUsage : kExitFailed;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON input: " << e.what() << "\n";
    return kExitUsage;
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);

  if (opt.format == "json") {
    Json envelope{{"command", command}, {"params", params}, {"result", out.result}, {"elapsed_ms", elapsed.count()}};
    std::cout << envelope.dump(2) << "\n";
  } else if (opt.format == "csv") {
    std::cout << out.csv();
  } else {
    std::cout << out.text();
  }
  return out.exit_code;
}
