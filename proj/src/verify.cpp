#include "degflag/verify.hpp"

#include "degflag/bijections.hpp"
#include "degflag/dellac.hpp"
#include "degflag/flag_variety.hpp"
#include "degflag/genocchi.hpp"
#include "degflag/pluecker.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace degflag {

namespace {

// Reference tables, entered by hand.
const std::vector<std::vector<int>> kSeidelRows = {
    {1}, {1}, {1, 1}, {2, 1}, {2, 3, 3}, {8, 6, 3}, {8, 14, 17, 17}, {56, 48, 34, 17}, {56, 104, 138, 155, 155}};
const std::vector<std::vector<int>> kKrewerasRows = {
    {1}, {1, 1}, {2, 3, 2}, {7, 12, 12, 7}, {38, 69, 81, 69, 38}, {295, 552, 702, 702, 552, 295}};
const std::vector<int> kH = {1, 2, 7, 38, 295, 3098};
const std::vector<std::vector<int>> kPoincare = {
    {1}, {1, 1}, {1, 2, 3, 1}, {1, 3, 7, 10, 10, 6, 1}};

std::string join(const std::vector<BigInt>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + to_decimal(xs[i]);
  return s;
}

std::vector<BigInt> big(const std::vector<int>& xs) { return {xs.begin(), xs.end()}; }

std::string show_tuple(const FixedPointTuple& t) {
  std::ostringstream os;
  os << '(';
  for (std::size_t l = 0; l < t.subsets.size(); ++l) {
    os << (l ? "," : "") << '{';
    for (std::size_t i = 0; i < t.subsets[l].size(); ++i) os << (i ? "," : "") << t.subsets[l][i];
    os << '}';
  }
  os << ')';
  return os.str();
}

class Checks {
public:
  explicit Checks(std::string suite) { report_.suite = std::move(suite); }

  void add(std::string name, bool pass, std::string detail) {
    report_.checks.push_back({std::move(name), pass, std::move(detail)});
  }
  void equal(std::string name, const BigInt& got, const BigInt& want) {
    add(std::move(name), got == want, to_decimal(got) + (got == want ? " = " : " != ") + to_decimal(want));
  }
  void equal_rows(std::string name, const std::vector<BigInt>& got, const std::vector<BigInt>& want) {
    add(std::move(name), got == want, "[" + join(got) + (got == want ? "] = [" : "] != [") + join(want) + "]");
  }
  VerifyReport take() { return std::move(report_); }

private:
  VerifyReport report_;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

std::vector<int> dims_or_complete(const VerifyParams& params) {
  auto dims = params.dims ? *params.dims : complete_dims(params.n);
  check_dims(params.n, dims);
  return dims;
}

VerifyReport triangles(const VerifyParams& params) {
  require(params.rows >= 1 && params.rows <= 200, "rows must be in 1..200");
  Checks c("triangles");
  auto seidel = seidel_triangle(params.rows);
  for (int r = 1; r <= std::min<int>(params.rows, static_cast<int>(kSeidelRows.size())); ++r)
    c.equal_rows("seidel row " + std::to_string(r), seidel.row(static_cast<std::size_t>(r)),
                 big(kSeidelRows[static_cast<std::size_t>(r - 1)]));
  auto kreweras = kreweras_triangle(params.rows);
  for (int r = 1; r <= std::min<int>(params.rows, static_cast<int>(kKrewerasRows.size())); ++r)
    c.equal_rows("kreweras row " + std::to_string(r), kreweras.row(static_cast<std::size_t>(r)),
                 big(kKrewerasRows[static_cast<std::size_t>(r - 1)]));
  for (int n = 1; n <= std::min<int>(params.rows, static_cast<int>(kH.size())); ++n)
    c.equal("h_" + std::to_string(n), normalized_h(n), kH[static_cast<std::size_t>(n - 1)]);
  for (int n = 1; n <= params.rows; ++n) {
    const auto& row = kreweras.row(static_cast<std::size_t>(n));
    BigInt sum = 0;
    for (const auto& x : row) sum += x;
    c.equal("kreweras row " + std::to_string(n) + " sum = h_" + std::to_string(n), sum, normalized_h(n));
    if (n > 1) c.equal("kreweras h_{" + std::to_string(n) + ",1} = h_" + std::to_string(n - 1), row.front(), normalized_h(n - 1));
    auto reversed = row;
    std::reverse(reversed.begin(), reversed.end());
    c.add("kreweras row " + std::to_string(n) + " symmetric", reversed == row, "[" + join(row) + "]");
    c.equal("seidel G_{1," + std::to_string(2 * n + 2) + "} = 2^" + std::to_string(n) + " h_" + std::to_string(n),
            median_genocchi(n + 1), normalized_h(n) << n);
  }
  return c.take();
}

VerifyReport bijections(const VerifyParams& params) {
  require(params.n >= 1 && params.n <= 7, "n must be in 1..7");
  const int n = params.n;
  Checks c("bijections");
  auto configs = enumerate_dellac(n, params.jobs);
  auto tuples = enumerate_tuples(n, complete_dims(n));
  auto dumonts = enumerate_dumont(n, params.jobs);
  BigInt h = normalized_h(n);
  c.equal("dellac count = h_n", configs.size(), h);
  c.equal("fixed-point count = h_n", tuples.size(), h);
  c.equal("dumont count = h_n", dumonts.size(), h);

  std::string bad;
  for (const auto& t : tuples)
    if (dellac_to_tuple(tuple_to_dellac(t)) != t) { bad = show_tuple(t); break; }
  c.add("tuple -> dellac -> tuple", bad.empty(), bad.empty() ? "identity" : "fails at " + bad);

  bad.clear();
  std::vector<DellacConfig> images;
  for (const auto& t : tuples) images.push_back(tuple_to_dellac(t));
  std::sort(images.begin(), images.end());
  c.add("tuple -> dellac is onto", images == configs, images == configs ? "bijective" : "image differs");

  for (const auto& d : configs)
    if (!(tuple_to_dellac(dellac_to_tuple(d)) == d)) { bad = d.grid(); break; }
  c.add("dellac -> tuple -> dellac", bad.empty(), bad.empty() ? "identity" : "fails at\n" + bad);

  bad.clear();
  for (const auto& p : dumonts)
    if (!(dellac_to_dumont(dumont_to_dellac(p)) == p)) {
      for (int v : p.values()) bad += std::to_string(v) + " ";
      break;
    }
  c.add("dumont -> dellac -> dumont", bad.empty(), bad.empty() ? "identity" : "fails at " + bad);

  bad.clear();
  for (const auto& d : configs)
    if (!(dumont_to_dellac(dellac_to_dumont(d)) == d)) { bad = d.grid(); break; }
  c.add("dellac -> dumont -> dellac", bad.empty(), bad.empty() ? "identity" : "fails at\n" + bad);

  std::vector<BigInt> by_stat(static_cast<std::size_t>(n), 0);
  for (const auto& d : configs) by_stat[static_cast<std::size_t>(refinement_stat(d) - 1)] += 1;
  c.equal_rows("refinement = kreweras row", by_stat, kreweras_triangle(n).row(static_cast<std::size_t>(n)));

  bad.clear();
  for (const auto& d : configs)
    if (dellac_to_dumont(d)(1) != 2 * refinement_stat(d)) { bad = d.grid(); break; }
  c.add("sigma(1) = 2 * refinement", bad.empty(), bad.empty() ? "holds" : "fails at\n" + bad);
  return c.take();
}

VerifyReport cells(const VerifyParams& params) {
  require(params.n >= 1 && params.n <= Subspace::kMaxAmbient, "n must be in 1.." + std::to_string(Subspace::kMaxAmbient));
  PrimeField field(params.p);
  const int n = params.n;
  Checks c("cells");
  auto dims = dims_or_complete(params);
  auto table = cell_point_counts(dims, n, field, params.jobs);
  BigInt total = 0;
  for (const auto& cell : table) total += cell.count;
  c.equal("cells sum to count_points", total, count_points(dims, n, field, params.jobs));
  c.equal("cells = fixed points", table.size(), enumerate_tuples(n, dims).size());
  if (dims == complete_dims(n)) {
    c.equal("cells = h_n", table.size(), normalized_h(n));
    std::string bad;
    for (const auto& cell : table) {
      BigInt want = boost::multiprecision::pow(BigInt(params.p), static_cast<unsigned>(*cell.dellac_length));
      if (cell.count != want) {
        bad = show_tuple(cell.tuple) + ": " + to_decimal(cell.count) + " != " + to_decimal(want);
        break;
      }
    }
    c.add("cell size = p^length", bad.empty(), bad.empty() ? "all cells" : bad);
  }
  for (int d = 0; d <= n; ++d) {
    BigInt sum = 0;
    for (const auto& label : subsets_of_size(n, d))
      sum += boost::multiprecision::pow(BigInt(params.p), static_cast<unsigned>(grassmann_cell_dimension(label, d, n)));
    c.equal("grassmannian cells d=" + std::to_string(d), sum, gaussian_binomial(n, d, params.p));
  }
  return c.take();
}

VerifyReport points(const VerifyParams& params) {
  require(params.n >= 1 && params.n <= Subspace::kMaxAmbient, "n must be in 1.." + std::to_string(Subspace::kMaxAmbient));
  PrimeField field(params.p);
  const int n = params.n;
  Checks c("points");
  auto dims = dims_or_complete(params);
  BigInt count = count_points(dims, n, field, params.jobs);
  if (dims == complete_dims(n)) {
    c.equal("count = P_n(p)", count, poincare_polynomial(n, params.jobs).eval(params.p));
    if (n <= static_cast<int>(kPoincare.size()))
      c.equal("count = reference P_n(p)", count, QPolynomial(big(kPoincare[static_cast<std::size_t>(n - 1)])).eval(params.p));
  }
  // independent count by filtering the product of Grassmannians
  BigInt product = 1;
  for (int d : dims) product *= gaussian_binomial(n, d, params.p);
  if (product <= 2'000'000) {
    std::vector<std::vector<Subspace>> spaces;
    for (int d : dims) spaces.push_back(enumerate_grassmannian(d, n, field));
    BigInt brute = 0;
    FlagChain chain{n, dims, std::vector<Subspace>(dims.size(), Subspace::zero(field, n))};
    std::function<void(std::size_t)> walk = [&](std::size_t level) {
      if (level == dims.size()) {
        brute += is_degenerate_flag(chain);
        return;
      }
      for (const auto& v : spaces[level]) {
        chain.spaces[level] = v;
        walk(level + 1);
      }
    };
    if (dims.empty())
      brute = 1;
    else
      walk(0);
    c.equal("count = filtered product", count, brute);
  }
  return c.take();
}

VerifyReport pluecker(const VerifyParams& params) {
  require(params.n >= 1 && params.n <= Subspace::kMaxAmbient, "n must be in 1.." + std::to_string(Subspace::kMaxAmbient));
  PrimeField field(params.p);
  Checks c("pluecker");
  auto dims = dims_or_complete(params);
  auto report = verify_ideal_cutout(dims, params.n, field, params.jobs);
  c.add("relations cut out the chain conditions", report.equal,
        std::to_string(report.points_by_relations) + " by relations, " + std::to_string(report.points_by_chain) +
            " by chain, " + std::to_string(report.mismatches) + " mismatches");
  c.equal("chain points = count_points", report.points_by_chain, count_points(dims, params.n, field, params.jobs));
  return c.take();
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& r) { return r.pass; });
}

std::vector<std::string> verify_suites() { return {"triangles", "bijections", "cells", "points", "pluecker"}; }

VerifyReport run_verify(const std::string& suite, const VerifyParams& params) {
  if (suite == "triangles") return triangles(params);
  if (suite == "bijections") return bijections(params);
  if (suite == "cells") return cells(params);
  if (suite == "points") return points(params);
  if (suite == "pluecker") return pluecker(params);
  throw InvalidArgument("unknown suite '" + suite + "'");
}

}  // namespace degflag
