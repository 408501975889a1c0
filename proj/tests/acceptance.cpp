// One PASS/FAIL line per acceptance criterion. Exits 1 if any fails.

#include "degflag/bijections.hpp"
#include "degflag/dellac.hpp"
#include "degflag/flag_variety.hpp"
#include "degflag/genocchi.hpp"
#include "degflag/pluecker.hpp"
#include "oracles.hpp"

#include <json.hpp>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace degflag;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

BigInt power(unsigned p, int e) { return boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(e)); }

std::vector<BigInt> big(const std::vector<int>& xs) { return {xs.begin(), xs.end()}; }

Outcome genocchi_values() {
  Outcome o;
  std::string cmd = std::string(DEGFLAG_CLI) + " numbers --max-n 6 --format json";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {false, "could not start the CLI"};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  o.require(WIFEXITED(status) && WEXITSTATUS(status) == 0, "CLI exited with an error");
  if (!o.ok) return o;
  auto j = nlohmann::json::parse(out, nullptr, false);
  o.require(!j.is_discarded() && j.contains("result"), "CLI output is not the JSON envelope");
  if (!o.ok) return o;
  const std::vector<std::string> want = {"1", "2", "7", "38", "295", "3098"};
  std::vector<std::string> got;
  for (const auto& row : j["result"]) got.push_back(row["h"].get<std::string>());
  o.require(got == want, "got " + j["result"].dump());
  return o;
}

Outcome seidel_rows() {
  Outcome o;
  const std::vector<std::vector<int>> want = {{1},          {1},           {1, 1},
                                              {2, 1},       {2, 3, 3},     {8, 6, 3},
                                              {8, 14, 17, 17}, {56, 48, 34, 17}, {56, 104, 138, 155, 155}};
  auto t = seidel_triangle(9);
  o.require(t.size() == 9, "wrong row count");
  for (std::size_t r = 1; r <= 9 && o.ok; ++r) o.require(t.row(r) == big(want[r - 1]), "row " + std::to_string(r));
  return o;
}

Outcome kreweras_rows() {
  Outcome o;
  const std::vector<std::vector<int>> want = {{1},          {1, 1},           {2, 3, 2},
                                              {7, 12, 12, 7}, {38, 69, 81, 69, 38}, {295, 552, 702, 702, 552, 295}};
  auto t = kreweras_triangle(6);
  o.require(t.size() == 6, "wrong row count");
  for (std::size_t r = 1; r <= 6 && o.ok; ++r) o.require(t.row(r) == big(want[r - 1]), "row " + std::to_string(r));
  return o;
}

Outcome poincare() {
  Outcome o;
  const std::vector<std::vector<int>> want = {{1}, {1, 1}, {1, 2, 3, 1}, {1, 3, 7, 10, 10, 6, 1}};
  for (int n = 1; n <= 4; ++n)
    o.require(poincare_polynomial(n).coeffs() == big(want[static_cast<std::size_t>(n - 1)]),
              "P_" + std::to_string(n) + " coefficients");
  for (int n = 1; n <= 7; ++n)
    o.require(poincare_polynomial(n).eval(1) == normalized_h(n), "P_" + std::to_string(n) + "(1) != h_n");
  o.detail = "P_7(1) = " + to_decimal(normalized_h(7));
  return o;
}

Outcome refinement() {
  Outcome o;
  auto k = kreweras_triangle(6);
  for (int n = 1; n <= 6; ++n) {
    std::vector<BigInt> counts(static_cast<std::size_t>(n), 0);
    for (const auto& d : enumerate_dellac(n)) counts[static_cast<std::size_t>(refinement_stat(d) - 1)] += 1;
    o.require(counts == k.row(static_cast<std::size_t>(n)), "n=" + std::to_string(n));
  }
  return o;
}

Outcome bijections() {
  Outcome o;
  for (int n = 1; n <= 5; ++n) {
    auto tuples = enumerate_tuples(n, complete_dims(n));
    auto configs = enumerate_dellac(n);
    o.require(tuples.size() == configs.size(), "tuple count differs from Dellac count at n=" + std::to_string(n));
    for (const auto& t : tuples) o.require(dellac_to_tuple(tuple_to_dellac(t)) == t, "tuple round trip n=" + std::to_string(n));
    for (const auto& d : configs) o.require(tuple_to_dellac(dellac_to_tuple(d)) == d, "Dellac round trip n=" + std::to_string(n));
  }
  for (int n = 1; n <= 4; ++n) {
    auto perms = oracle::dumont_perms(n);
    auto configs = enumerate_dellac(n);
    o.require(perms.size() == configs.size(), "Dumont count differs from Dellac count at n=" + std::to_string(n));
    std::set<std::vector<int>> images;
    for (const auto& values : perms) {
      DumontPermutation p(n, values);
      o.require(dellac_to_dumont(dumont_to_dellac(p)) == p, "Dumont round trip n=" + std::to_string(n));
    }
    for (const auto& d : configs) {
      o.require(dumont_to_dellac(dellac_to_dumont(d)) == d, "Dellac to Dumont round trip n=" + std::to_string(n));
      images.insert(dellac_to_dumont(d).values());
    }
    o.require(images == std::set<std::vector<int>>(perms.begin(), perms.end()),
              "Dumont images differ from the filtered S_{2n+2} at n=" + std::to_string(n));
  }
  const std::vector<std::vector<std::vector<int>>> tuples = {{{2}, {1, 3}}, {{2}, {2, 3}}, {{2}, {1, 2}}, {{3}, {1, 3}},
                                                             {{3}, {2, 3}}, {{1}, {1, 3}}, {{1}, {1, 2}}};
  const std::vector<std::vector<int>> diagrams = {{1, 2, 3, 4, 5, 6}, {1, 2, 3, 5, 4, 6}, {1, 2, 4, 5, 3, 6},
                                                  {1, 3, 2, 4, 5, 6}, {1, 3, 2, 5, 4, 6}, {1, 4, 2, 3, 5, 6},
                                                  {1, 4, 2, 5, 3, 6}};
  const std::vector<std::vector<int>> perms = {{4, 1, 6, 2, 7, 3, 8, 5}, {6, 1, 4, 2, 7, 3, 8, 5}, {4, 1, 5, 2, 6, 3, 8, 7},
                                               {4, 1, 6, 2, 7, 5, 8, 3}, {6, 1, 4, 2, 7, 5, 8, 3}, {2, 1, 6, 3, 7, 4, 8, 5},
                                               {2, 1, 4, 3, 6, 5, 8, 7}};
  for (std::size_t i = 0; i < 7; ++i) {
    FixedPointTuple t{3, {1, 2}, tuples[i]};
    auto d = DellacConfig::from_column_rows(3, diagrams[i]);
    DumontPermutation p(3, perms[i]);
    o.require(tuple_to_dellac(t) == d && dellac_to_tuple(d) == t, "n=3 tuple/diagram pair " + std::to_string(i + 1));
    o.require(dumont_to_dellac(p) == d && dellac_to_dumont(d) == p, "n=3 permutation/diagram pair " + std::to_string(i + 1));
  }
  return o;
}

Outcome point_counts() {
  Outcome o;
  const std::vector<std::pair<int, unsigned>> cases = {{2, 2}, {2, 3}, {3, 2}, {3, 3}, {3, 5}, {4, 2}, {4, 3}};
  std::ostringstream detail;
  for (auto [n, p] : cases) {
    BigInt got = count_points(complete_dims(n), n, PrimeField(p), 2);
    BigInt want = poincare_polynomial(n).eval(p);
    o.require(got == want, "n=" + std::to_string(n) + " p=" + std::to_string(p) + ": " + to_decimal(got) +
                               " != " + to_decimal(want));
    if (n == 3 && p == 2) o.require(got == 25, "n=3 p=2 should give 25");
    if (n == 4 && p == 2) o.require(got == 531, "n=4 p=2 should give 531");
    detail << (detail.tellp() ? " " : "") << "(" << n << "," << p << ")=" << to_decimal(got);
  }
  if (o.ok) o.detail = detail.str();
  return o;
}

Outcome cells() {
  Outcome o;
  for (int n = 1; n <= 4; ++n)
    for (unsigned p : {2u, 3u}) {
      const std::string at = " at n=" + std::to_string(n) + " p=" + std::to_string(p);
      auto counts = cell_point_counts(complete_dims(n), n, PrimeField(p), 2);
      o.require(BigInt(counts.size()) == normalized_h(n), "cell count != h_n" + at);
      BigInt total = 0;
      for (const auto& c : counts) {
        auto d = tuple_to_dellac(c.tuple);
        o.require(c.dellac_length == length(d), "reported length mismatch" + at);
        o.require(c.count == power(p, length(d)), "cell size != p^length" + at);
        total += c.count;
      }
      o.require(total == poincare_polynomial(n).eval(p), "cells do not sum to the total" + at);
    }
  return o;
}

Outcome grassmannian_cells() {
  Outcome o;
  for (int n = 1; n <= 6; ++n)
    for (int d = 0; d <= n; ++d)
      for (unsigned p : {2u, 3u}) {
        BigInt sum = 0;
        for (const auto& L : subsets_of_size(n, d)) sum += power(p, grassmann_cell_dimension(L, d, n));
        BigInt listed = enumerate_grassmannian(d, n, PrimeField(p)).size();
        o.require(sum == listed, "sum over cells != |Gr(" + std::to_string(d) + "," + std::to_string(n) + ")| at p=" +
                                     std::to_string(p));
      }

  const std::vector<int> L = {2, 3, 6, 7};
  const PrimeField f2(2);
  int dimension = grassmann_cell_dimension(L, 4, 9);
  auto parametrized = oracle::cell_by_parametrization(L, 9, f2);
  bool labels_ok = true;
  for (const auto& v : parametrized) labels_ok = labels_ok && grassmann_cell_label(v) == L;
  std::uint64_t labelled = 0;
  for_each_subspace(4, 9, f2, [&](const Subspace& v) { labelled += grassmann_cell_label(v) == L; });
  o.require(dimension == 10, "dimension formula gives " + std::to_string(dimension));
  o.require(parametrized.size() == 1024, "parametrization yields " + std::to_string(parametrized.size()) + " subspaces");
  o.require(labels_ok, "a parametrized subspace carries a different label");
  o.require(labelled == 1024, std::to_string(labelled) + " subspaces of Gr(4,9,F_2) carry the label");
  if (o.ok)
    o.detail = "L=(2,3,6,7): dimension 10, " + std::to_string(labelled) + " points; " +
               std::to_string(oracle::parametrization_size(L, 9)) + " parameters collapse to " +
               std::to_string(parametrized.size()) + " subspaces";
  return o;
}

Outcome pluecker() {
  Outcome o;
  std::ostringstream detail;
  for (const std::vector<int>& dims : {std::vector<int>{1, 3}, std::vector<int>{1, 2, 3}})
    for (unsigned p : {2u, 3u}) {
      auto r = verify_ideal_cutout(dims, 4, PrimeField(p), 2);
      o.require(r.equal, "cutout differs for dims of size " + std::to_string(dims.size()) + " at p=" + std::to_string(p));
      o.require(r.points_by_chain == count_points(dims, 4, PrimeField(p)), "chain count disagrees with count_points");
      detail << (detail.tellp() ? " " : "") << r.points_by_chain << "/" << r.product_points;
    }
  auto rel = degenerate_relation({1, 2, 3}, {4}, 1);
  std::vector<RelationTerm> want = {{+1, {1, 2, 3}, {4}}, {-1, {2, 3, 4}, {1}}};
  o.require(rel.terms == want, "relation L=(1,2,3) J=(4) is not X_123 X_4 - X_234 X_1");
  if (o.ok) o.detail = "points " + detail.str();
  return o;
}

Outcome partial_fixed_points() {
  Outcome o;
  const std::vector<int> dims = {1, 3};
  auto tuples = enumerate_tuples(4, dims);
  o.require(tuples.size() == 14, std::to_string(tuples.size()) + " tuples");
  std::set<std::vector<std::vector<int>>> listed;
  for (const auto& t : tuples) listed.insert(t.subsets);
  auto want = oracle::fixed_points(4, dims);
  o.require(listed == std::set<std::vector<std::vector<int>>>(want.begin(), want.end()), "differs from the oracle");
  const PrimeField f(2);
  int passing = 0;
  for (const auto& one : subsets_of_size(4, 1))
    for (const auto& three : subsets_of_size(4, 3)) {
      FlagChain c{4, dims, {Subspace::coordinate(f, 4, one), Subspace::coordinate(f, 4, three)}};
      bool ok = is_degenerate_flag(c);
      passing += ok;
      o.require(ok == listed.count({one, three}) > 0, "coordinate chain disagrees with the tuple list");
    }
  o.require(passing == 14, std::to_string(passing) + " coordinate chains pass");
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"genocchi values from the CLI", 1, genocchi_values},
      {"Seidel triangle rows 1-9", 1, seidel_rows},
      {"Kreweras triangle rows 1-6", 1, kreweras_rows},
      {"Poincare polynomials", 30, poincare},
      {"refinement matches Kreweras rows", 10, refinement},
      {"bijections", 60, bijections},
      {"point counts", 300, point_counts},
      {"cell decomposition", 300, cells},
      {"Grassmannian cells", 120, grassmannian_cells},
      {"Plucker cutout", 300, pluecker},
      {"partial fixed points", 1, partial_fixed_points},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && seconds > c.limit_seconds) {
      o.ok = false;
      o.detail = "took longer than " + std::to_string(static_cast<int>(c.limit_seconds)) + " s";
    }
    failures += !o.ok;
    std::printf("%s %2zu %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, c.name.c_str(), seconds,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
