#include "degflag/flag_variety.hpp"

#include "degflag/dellac.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>

namespace degflag {

namespace {

void check_flag_params(const std::vector<int>& dims, int n) {
  if (n < 1 || n > Subspace::kMaxAmbient)
    throw InvalidArgument("n must be in 1.." + std::to_string(Subspace::kMaxAmbient));
  check_dims(n, dims);
}

// Walks all admissible V_{level}, V_{level+1}, ... below a fixed prefix.
class ChainWalker {
public:
  ChainWalker(const std::vector<int>& dims, int n, const std::function<void(const FlagChain&)>& visit)
      : visit_(visit) {
    chain_.n = n;
    chain_.dims = dims;
  }

  void start_from(const Subspace& first) {
    chain_.spaces.assign(1, first);
    extend(1);
  }

private:
  void extend(std::size_t level) {
    if (level == chain_.dims.size()) {
      visit_(chain_);
      return;
    }
    const Subspace& prev = chain_.spaces.back();
    Subspace image = projection(prev, chain_.dims[level - 1] + 1, chain_.dims[level]);
    for_each_superspace(image, chain_.dims[level], [&](const Subspace& next) {
      chain_.spaces.push_back(next);
      extend(level + 1);
      chain_.spaces.pop_back();
    });
  }

  FlagChain chain_;
  const std::function<void(const FlagChain&)>& visit_;
};

}  // namespace

void check_chain_shape(const FlagChain& c) {
  if (c.spaces.size() != c.dims.size())
    throw StructuralError("chain has " + std::to_string(c.spaces.size()) + " spaces but " +
                          std::to_string(c.dims.size()) + " dims");
  for (std::size_t l = 0; l < c.spaces.size(); ++l) {
    const auto& v = c.spaces[l];
    if (v.n() != c.n) throw StructuralError("space " + std::to_string(l + 1) + " is not in F^" + std::to_string(c.n));
    if (v.dim() != c.dims[l])
      throw StructuralError("space " + std::to_string(l + 1) + " has dimension " + std::to_string(v.dim()) +
                            ", expected " + std::to_string(c.dims[l]));
    if (!(v.field() == c.spaces.front().field())) throw StructuralError("spaces over different fields");
  }
  for (std::size_t l = 1; l < c.dims.size(); ++l)
    if (c.dims[l] <= c.dims[l - 1]) throw StructuralError("dims must be strictly increasing");
}

bool is_degenerate_flag(const FlagChain& c) {
  check_chain_shape(c);
  for (std::size_t l = 0; l + 1 < c.spaces.size(); ++l) {
    auto image = projection(c.spaces[l], c.dims[l] + 1, c.dims[l + 1]);
    if (!c.spaces[l + 1].contains(image)) return false;
  }
  return true;
}

bool satisfies_pairwise_conditions(const FlagChain& c) {
  check_chain_shape(c);
  for (std::size_t l = 0; l < c.spaces.size(); ++l)
    for (std::size_t m = l + 1; m < c.spaces.size(); ++m) {
      auto image = projection(c.spaces[l], c.dims[l] + 1, c.dims[m]);
      if (!c.spaces[m].contains(image)) return false;
    }
  return true;
}

FlagChain coordinate_chain(const FixedPointTuple& t, const PrimeField& field) {
  FlagChain c{t.n, t.dims, {}};
  for (const auto& s : t.subsets) c.spaces.push_back(Subspace::coordinate(field, t.n, s));
  return c;
}

void for_each_degenerate_flag(const std::vector<int>& dims, int n, const PrimeField& field,
                              const std::function<void(const FlagChain&)>& visit) {
  check_flag_params(dims, n);
  if (dims.empty()) {
    visit(FlagChain{n, dims, {}});
    return;
  }
  ChainWalker walker(dims, n, visit);
  for_each_subspace(dims.front(), n, field, [&](const Subspace& v1) { walker.start_from(v1); });
}

BigInt count_points(const std::vector<int>& dims, int n, const PrimeField& field, int jobs) {
  check_flag_params(dims, n);
  if (dims.empty()) return 1;
  auto firsts = enumerate_grassmannian(dims.front(), n, field);
  std::function<std::uint64_t(std::size_t)> task = [&](std::size_t i) {
    std::uint64_t count = 0;
    std::function<void(const FlagChain&)> tally = [&count](const FlagChain&) { ++count; };
    ChainWalker(dims, n, tally).start_from(firsts[i]);
    return count;
  };
  BigInt total = 0;
  for (auto c : detail::parallel_map<std::uint64_t>(firsts.size(), jobs, task)) total += c;
  return total;
}

std::vector<int> grassmann_cell_label(const Subspace& v) {
  const int n = v.n();
  const int d = v.dim();
  auto shifted = [n, d](int i) { return i - d > 0 ? i - d : i - d + n; };  // [i-d]_+

  // Image under psi, written back to front so that an ordinary reduction
  // puts pivots on the last nonzero entries.
  std::vector<Vector> rows;
  for (const auto& r : v.rows()) {
    Vector w(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) w[static_cast<std::size_t>(n - shifted(i))] = r[static_cast<std::size_t>(i - 1)];
    rows.push_back(std::move(w));
  }
  auto reversed_pivots = row_reduce(v.field(), rows);
  if (static_cast<int>(reversed_pivots.size()) != d) throw InternalError("rank changed under coordinate shift");

  std::vector<int> label;
  for (int c : reversed_pivots) {
    int j = n - c;
    label.push_back(j + d <= n ? j + d : j + d - n);
  }
  std::sort(label.begin(), label.end());
  return label;
}

int grassmann_cell_dimension(const std::vector<int>& label, int d, int n) {
  if (d < 0 || d > n) throw InvalidArgument("need 0 <= d <= n");
  if (static_cast<int>(label.size()) != d)
    throw InvalidArgument("label has " + std::to_string(label.size()) + " entries, expected d = " + std::to_string(d));
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (label[i] < 1 || label[i] > n) throw InvalidArgument("label entry outside 1..n");
    if (i > 0 && label[i] <= label[i - 1]) throw InvalidArgument("label must be strictly increasing");
  }
  std::vector<int> j;
  for (int l : label) j.push_back(l - d > 0 ? l - d : l - d + n);
  std::sort(j.begin(), j.end());
  int dim = 0;
  for (std::size_t t = 0; t < j.size(); ++t) dim += j[t] - static_cast<int>(t + 1);
  return dim;
}

FixedPointTuple flag_cell_label(const FlagChain& c) {
  check_chain_shape(c);
  FixedPointTuple t{c.n, c.dims, {}};
  for (const auto& v : c.spaces) t.subsets.push_back(grassmann_cell_label(v));
  auto report = validate_tuple(t);
  if (!report.ok()) throw InternalError("cell label breaks the fixed-point condition: " + report.summary());
  return t;
}

std::vector<CellCount> cell_point_counts(const std::vector<int>& dims, int n, const PrimeField& field,
                                         int jobs) {
  check_flag_params(dims, n);
  using Tally = std::map<FixedPointTuple, std::uint64_t>;
  Tally total;
  if (dims.empty()) {
    total[FixedPointTuple{n, dims, {}}] = 1;
  } else {
    auto firsts = enumerate_grassmannian(dims.front(), n, field);
    std::function<Tally(std::size_t)> task = [&](std::size_t i) {
      Tally tally;
      std::function<void(const FlagChain&)> visit = [&tally](const FlagChain& c) { ++tally[flag_cell_label(c)]; };
      ChainWalker(dims, n, visit).start_from(firsts[i]);
      return tally;
    };
    for (const auto& part : detail::parallel_map<Tally>(firsts.size(), jobs, task))
      for (const auto& [tuple, count] : part) total[tuple] += count;
  }

  const bool complete = dims == complete_dims(n);
  std::vector<CellCount> out;
  for (const auto& [tuple, count] : total) {
    CellCount cell{tuple, std::nullopt, BigInt(count)};
    if (complete) cell.dellac_length = length(tuple_to_dellac(tuple));
    out.push_back(std::move(cell));
  }
  return out;
}

}  // namespace degflag
