#include "degflag/bijections.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <iterator>
#include <optional>
#include <string>

namespace degflag {

namespace {

constexpr int kMaxDumontN = 12;

std::string set_str(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

bool contains(const std::vector<int>& sorted, int x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

// Elements of `a` not in `b`; both sorted.
std::vector<int> difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// First element of I^l outside the band [lo, hi] that is missing from I^{l+1}.
std::optional<int> chain_offender(const std::vector<int>& lower, const std::vector<int>& upper,
                                  int band_lo, int band_hi) {
  for (int x : lower) {
    if (x >= band_lo && x <= band_hi) continue;
    if (!contains(upper, x)) return x;
  }
  return std::nullopt;
}

bool is_complete(const FixedPointTuple& t) { return t.dims == complete_dims(t.n); }

}  // namespace

std::vector<int> complete_dims(int n) {
  std::vector<int> dims;
  for (int d = 1; d < n; ++d) dims.push_back(d);
  return dims;
}

void check_dims(int n, const std::vector<int>& dims) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] < 1 || dims[i] > n - 1)
      throw InvalidArgument("dimension " + std::to_string(dims[i]) + " outside 1.." +
                            std::to_string(n - 1));
    if (i > 0 && dims[i] <= dims[i - 1])
      throw InvalidArgument("dims must be strictly increasing");
  }
}

ValidationReport validate_tuple(const FixedPointTuple& t) {
  try {
    check_dims(t.n, t.dims);
  } catch (const InvalidArgument& e) {
    throw StructuralError(e.what());
  }
  if (t.subsets.size() != t.dims.size())
    throw StructuralError("expected " + std::to_string(t.dims.size()) + " subsets, got " +
                          std::to_string(t.subsets.size()));
  for (std::size_t l = 0; l < t.subsets.size(); ++l) {
    const auto& s = t.subsets[l];
    if (static_cast<int>(s.size()) != t.dims[l])
      throw StructuralError("|I^" + std::to_string(l + 1) + "| = " + std::to_string(s.size()) +
                            ", expected " + std::to_string(t.dims[l]));
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 1 || s[i] > t.n)
        throw StructuralError("I^" + std::to_string(l + 1) + " has entry " +
                              std::to_string(s[i]) + " outside 1.." + std::to_string(t.n));
      if (i > 0 && s[i] <= s[i - 1])
        throw StructuralError("I^" + std::to_string(l + 1) + " is not strictly increasing");
    }
  }

  ValidationReport report;
  for (std::size_t l = 0; l + 1 < t.subsets.size(); ++l) {
    int lo = t.dims[l] + 1;
    int hi = t.dims[l + 1];
    if (auto x = chain_offender(t.subsets[l], t.subsets[l + 1], lo, hi)) {
      report.violations.push_back(
          {"chain", "l=" + std::to_string(l + 1) + ": " + std::to_string(*x) + " in I^" +
                        std::to_string(l + 1) + "=" + set_str(t.subsets[l]) +
                        " is outside {" + std::to_string(lo) + ".." + std::to_string(hi) +
                        "} but missing from I^" + std::to_string(l + 2) + "=" +
                        set_str(t.subsets[l + 1])});
    }
  }
  return report;
}

std::vector<FixedPointTuple> enumerate_tuples(int n, const std::vector<int>& dims) {
  check_dims(n, dims);
  std::vector<std::vector<std::vector<int>>> choices;
  for (int d : dims) choices.push_back(subsets_of_size(n, d));

  std::vector<FixedPointTuple> out;
  FixedPointTuple cur{n, dims, std::vector<std::vector<int>>(dims.size())};
  std::function<void(std::size_t)> extend = [&](std::size_t level) {
    if (level == dims.size()) {
      out.push_back(cur);
      return;
    }
    for (const auto& s : choices[level]) {
      if (level > 0 &&
          chain_offender(cur.subsets[level - 1], s, dims[level - 1] + 1, dims[level]))
        continue;
      cur.subsets[level] = s;
      extend(level + 1);
    }
  };
  extend(0);
  return out;
}

DellacConfig tuple_to_dellac(const FixedPointTuple& t) {
  if (!is_complete(t)) throw InvalidArgument("tuple_to_dellac requires complete dims (1..n-1)");
  auto report = validate_tuple(t);
  if (!report.ok()) throw InvalidArgument("invalid fixed-point tuple: " + report.summary());

  const int n = t.n;
  // Rows for a new element j seen from column l.
  auto row_for = [n](int l, int j) { return j > l ? j : j + n; };

  std::vector<int> rows;
  std::vector<bool> used(static_cast<std::size_t>(2 * n + 1), false);
  auto put = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    rows.push_back(a);
    rows.push_back(b);
    used[static_cast<std::size_t>(a)] = used[static_cast<std::size_t>(b)] = true;
  };

  std::vector<int> prev;  // I^0 is empty
  for (int l = 1; l <= n - 1; ++l) {
    const auto& cur = t.subsets[static_cast<std::size_t>(l - 1)];
    auto fresh = difference(cur, prev);
    bool in_prev = contains(prev, l);
    if (!in_prev) {
      if (fresh.size() != 1) throw InternalError("expected one new element in I^" + std::to_string(l));
      put(l, row_for(l, fresh[0]));
    } else if (contains(cur, l)) {
      if (fresh.size() != 1) throw InternalError("expected one new element in I^" + std::to_string(l));
      put(l + n, row_for(l, fresh[0]));
    } else {
      if (fresh.size() != 2) throw InternalError("expected two new elements in I^" + std::to_string(l));
      put(row_for(l, fresh[0]), row_for(l, fresh[1]));
    }
    prev = cur;
  }
  // Column n takes the two rows nobody claimed.
  std::vector<int> rest;
  for (int j = 1; j <= 2 * n; ++j)
    if (!used[static_cast<std::size_t>(j)]) rest.push_back(j);
  if (rest.size() != 2) throw InternalError("last column does not have exactly two free rows");
  put(rest[0], rest[1]);

  try {
    return DellacConfig::from_column_rows(n, rows);
  } catch (const Error& e) {
    throw InternalError(std::string("tuple_to_dellac produced an invalid configuration: ") + e.what());
  }
}

FixedPointTuple dellac_to_tuple(const DellacConfig& d) {
  const int n = d.n();
  auto fold = [n](int j) { return j <= n ? j : j - n; };
  FixedPointTuple t{n, complete_dims(n), {}};
  std::vector<int> prev;
  for (int l = 1; l <= n - 1; ++l) {
    const auto& col = d.column(l);
    std::vector<int> cur;
    if (col[0] == l) {
      cur = prev;
      cur.push_back(fold(col[1]));
    } else {
      for (int x : prev)
        if (x != l) cur.push_back(x);
      cur.push_back(fold(col[0]));
      cur.push_back(fold(col[1]));
    }
    std::sort(cur.begin(), cur.end());
    if (static_cast<int>(cur.size()) != l || std::adjacent_find(cur.begin(), cur.end()) != cur.end())
      throw InternalError("dellac_to_tuple built a malformed I^" + std::to_string(l));
    t.subsets.push_back(cur);
    prev = std::move(cur);
  }
  return t;
}

// ---------------------------------------------------------------------------
// Dumont permutations

ValidationReport validate_dumont(int n, const std::vector<int>& values) {
  if (n < 1) throw StructuralError("n must be >= 1");
  const int m = 2 * n + 2;
  if (values.size() != static_cast<std::size_t>(m))
    throw StructuralError("expected " + std::to_string(m) + " values, got " +
                          std::to_string(values.size()));
  std::vector<int> inverse(static_cast<std::size_t>(m), 0);
  for (int k = 1; k <= m; ++k) {
    int v = values[static_cast<std::size_t>(k - 1)];
    if (v < 1 || v > m) throw StructuralError("value " + std::to_string(v) + " outside 1.." + std::to_string(m));
    if (inverse[static_cast<std::size_t>(v - 1)] != 0)
      throw StructuralError("value " + std::to_string(v) + " repeats; not a permutation");
    inverse[static_cast<std::size_t>(v - 1)] = k;
  }

  ValidationReport report;
  for (int k = 1; k <= m; ++k) {
    int v = values[static_cast<std::size_t>(k - 1)];
    std::string at = "sigma(" + std::to_string(k) + ")=" + std::to_string(v);
    if (k % 2 == 0 && !(v < k)) report.violations.push_back({"even", at + " not < " + std::to_string(k)});
    if (k % 2 == 1 && !(v > k)) report.violations.push_back({"odd", at + " not > " + std::to_string(k)});
  }
  for (int k = 1; k <= n; ++k) {
    int a = inverse[static_cast<std::size_t>(2 * k - 1)];
    int b = inverse[static_cast<std::size_t>(2 * k)];
    if (!(a < b))
      report.violations.push_back(
          {"order", "sigma^-1(" + std::to_string(2 * k) + ")=" + std::to_string(a) +
                        " not < sigma^-1(" + std::to_string(2 * k + 1) + ")=" + std::to_string(b)});
  }
  return report;
}

DumontPermutation::DumontPermutation(Trusted, int n, std::vector<int> values)
    : n_(n), values_(std::move(values)), inverse_(values_.size()) {
  for (std::size_t k = 0; k < values_.size(); ++k)
    inverse_[static_cast<std::size_t>(values_[k] - 1)] = static_cast<int>(k) + 1;
}

DumontPermutation::DumontPermutation(int n, std::vector<int> values) {
  auto report = validate_dumont(n, values);
  if (!report.ok()) throw InvalidArgument("not a normalized Dumont permutation: " + report.summary());
  *this = DumontPermutation(Trusted{}, n, std::move(values));
}

namespace {

// Fills positions left to right. Position k takes an unused value below k
// (k even) or above k (k odd); value 2j+1 is only placed once 2j is.
class DumontSearch {
public:
  DumontSearch(int n, std::vector<std::vector<int>>& out)
      : n_(n), m_(2 * n + 2), out_(out), values_(static_cast<std::size_t>(m_)),
        used_(static_cast<std::size_t>(m_ + 1), false) {}

  void run_from(int first) {
    place(1, first);
    extend(2);
  }

private:
  bool allowed(int pos, int v) const {
    if (used_[static_cast<std::size_t>(v)]) return false;
    if (pos % 2 == 0 ? !(v < pos) : !(v > pos)) return false;
    if (v % 2 == 1 && v >= 3 && v <= 2 * n_ + 1 && !used_[static_cast<std::size_t>(v - 1)]) return false;
    return true;
  }

  // Every unplaced value still needs some free position of the right parity.
  bool feasible(int next_pos) const {
    for (int v = 1; v <= m_; ++v) {
      if (used_[static_cast<std::size_t>(v)]) continue;
      bool ok = false;
      for (int pos = next_pos; pos <= m_ && !ok; ++pos)
        ok = (pos % 2 == 0) ? v < pos : v > pos;
      if (!ok) return false;
    }
    return true;
  }

  void place(int pos, int v) {
    values_[static_cast<std::size_t>(pos - 1)] = v;
    used_[static_cast<std::size_t>(v)] = true;
  }

  void extend(int pos) {
    if (pos > m_) {
      out_.push_back(values_);
      return;
    }
    for (int v = 1; v <= m_; ++v) {
      if (!allowed(pos, v)) continue;
      place(pos, v);
      if (feasible(pos + 1)) extend(pos + 1);
      used_[static_cast<std::size_t>(v)] = false;
    }
  }

  int n_;
  int m_;
  std::vector<std::vector<int>>& out_;
  std::vector<int> values_;
  std::vector<bool> used_;
};

}  // namespace

std::vector<DumontPermutation> enumerate_dumont(int n, int jobs) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  if (n > kMaxDumontN) throw InvalidArgument("n must be <= " + std::to_string(kMaxDumontN));
  const int m = 2 * n + 2;
  // sigma(1) is odd-position, so ranges over 2..m
  std::vector<int> firsts;
  for (int v = 2; v <= m; ++v) firsts.push_back(v);

  std::function<std::vector<std::vector<int>>(std::size_t)> task = [&](std::size_t i) {
    std::vector<std::vector<int>> part;
    int v = firsts[i];
    // an odd first value 2j+1 would need 2j at an earlier position
    if (v % 2 == 1 && v <= 2 * n + 1) return part;
    DumontSearch(n, part).run_from(v);
    return part;
  };
  auto parts = detail::parallel_map<std::vector<std::vector<int>>>(firsts.size(), jobs, task);

  std::vector<DumontPermutation> out;
  for (auto& part : parts)
    for (auto& values : part) out.push_back(DumontPermutation(DumontPermutation::Trusted{}, n, std::move(values)));
  return out;
}

DellacConfig dumont_to_dellac(const DumontPermutation& p) {
  const int n = p.n();
  std::vector<int> rows;
  rows.reserve(static_cast<std::size_t>(2 * n));
  for (int k = 1; k <= n; ++k) {
    std::array<int, 2> col{};
    std::array<int, 2> positions{p.preimage(2 * k), p.preimage(2 * k + 1)};
    for (std::size_t i = 0; i < 2; ++i) {
      int pos = positions[i];
      if (pos % 2 == 1 && (pos + 1) / 2 >= 1 && (pos + 1) / 2 <= k) {
        col[i] = n + (pos + 1) / 2;  // pos = 2l - 1
      } else if (pos % 2 == 0 && (pos - 2) / 2 >= k && (pos - 2) / 2 <= n) {
        col[i] = (pos - 2) / 2;  // pos = 2l + 2
      } else {
        throw InternalError("sigma^-1(" + std::to_string(2 * k + static_cast<int>(i)) + ")=" +
                            std::to_string(pos) + " matches neither box rule");
      }
    }
    if (col[0] > col[1]) std::swap(col[0], col[1]);
    rows.push_back(col[0]);
    rows.push_back(col[1]);
  }
  try {
    return DellacConfig::from_column_rows(n, rows);
  } catch (const Error& e) {
    throw InternalError(std::string("dumont_to_dellac produced an invalid configuration: ") + e.what());
  }
}

DumontPermutation dellac_to_dumont(const DellacConfig& d) {
  const int n = d.n();
  const int m = 2 * n + 2;
  std::vector<int> values(static_cast<std::size_t>(m), 0);
  for (int k = 1; k <= n; ++k) {
    std::array<int, 2> positions{};
    for (std::size_t i = 0; i < 2; ++i) {
      int r = d.column(k)[i];
      positions[i] = r <= n ? 2 * r + 2 : 2 * (r - n) - 1;
    }
    std::sort(positions.begin(), positions.end());
    values[static_cast<std::size_t>(positions[0] - 1)] = 2 * k;
    values[static_cast<std::size_t>(positions[1] - 1)] = 2 * k + 1;
  }
  // The box rules use every odd position below 2n and every even one from 4 up,
  // leaving 2 and 2n+1 for the values 1 and 2n+2.
  values[1] = 1;
  values[static_cast<std::size_t>(2 * n)] = m;
  try {
    return DumontPermutation(n, std::move(values));
  } catch (const Error& e) {
    throw InternalError(std::string("dellac_to_dumont produced an invalid permutation: ") + e.what());
  }
}

}  // namespace degflag
