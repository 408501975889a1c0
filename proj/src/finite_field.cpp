#include "degflag/finite_field.hpp"

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>

namespace degflag {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t f = 2; f * f <= p; ++f)
    if (p % f == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p > kMaxPrime || !is_prime(p))
    throw InvalidArgument("field size must be a prime <= " + std::to_string(kMaxPrime) +
                          ", got " + std::to_string(p));
}

Element PrimeField::inv(Element a) const {
  if (a % p_ == 0) throw InvalidArgument("zero has no inverse");
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a % p_;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::pair(new_r, r - q * new_r);
  }
  return reduce(t);
}

std::vector<int> row_reduce(const PrimeField& field, std::vector<Vector>& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const int n = static_cast<int>(rows.front().size());
  std::size_t rank = 0;
  for (int c = 0; c < n && rank < rows.size(); ++c) {
    auto sel = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                            [c](const Vector& r) { return r[static_cast<std::size_t>(c)] != 0; });
    if (sel == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(rank), sel);
    auto& pivot_row = rows[rank];
    Element scale = field.inv(pivot_row[static_cast<std::size_t>(c)]);
    for (auto& x : pivot_row) x = field.mul(x, scale);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank) continue;
      Element f = rows[i][static_cast<std::size_t>(c)];
      if (f == 0) continue;
      for (std::size_t j = 0; j < pivot_row.size(); ++j)
        rows[i][j] = field.sub(rows[i][j], field.mul(f, pivot_row[j]));
    }
    pivots.push_back(c);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

Subspace Subspace::span(const PrimeField& field, int n, const std::vector<Vector>& vectors) {
  if (n < 1 || n > kMaxAmbient)
    throw InvalidArgument("ambient dimension must be in 1.." + std::to_string(kMaxAmbient));
  std::vector<Vector> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != static_cast<std::size_t>(n))
      throw InvalidArgument("vector length " + std::to_string(v.size()) + " != n = " + std::to_string(n));
    Vector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = field.reduce(v[i]);
    rows.push_back(std::move(r));
  }
  row_reduce(field, rows);
  return Subspace(field, n, std::move(rows));
}

Subspace Subspace::coordinate(const PrimeField& field, int n, const std::vector<int>& indices) {
  std::vector<Vector> vectors;
  for (int i : indices) {
    if (i < 1 || i > n) throw InvalidArgument("coordinate index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    Vector v(static_cast<std::size_t>(n), 0);
    v[static_cast<std::size_t>(i - 1)] = 1;
    vectors.push_back(std::move(v));
  }
  return span(field, n, vectors);
}

Subspace Subspace::zero(const PrimeField& field, int n) { return span(field, n, {}); }

std::vector<int> Subspace::pivots() const {
  std::vector<int> out;
  for (const auto& r : rows_) {
    auto it = std::find_if(r.begin(), r.end(), [](Element x) { return x != 0; });
    out.push_back(static_cast<int>(it - r.begin()) + 1);
  }
  return out;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != static_cast<std::size_t>(n_)) return false;
  Vector w = v;
  for (const auto& r : rows_) {
    auto pivot = static_cast<std::size_t>(std::find_if(r.begin(), r.end(), [](Element x) { return x != 0; }) - r.begin());
    Element f = w[pivot];
    if (f == 0) continue;
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = field_.sub(w[j], field_.mul(f, r[j]));
  }
  return std::all_of(w.begin(), w.end(), [](Element x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  if (other.n_ != n_ || !(other.field_ == field_)) return false;
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [this](const Vector& r) { return contains(r); });
}

Subspace projection(const Subspace& v, int first, int last) {
  if (first < 1 || last > v.n() || first > last)
    throw InvalidArgument("projection range " + std::to_string(first) + ".." + std::to_string(last) +
                          " invalid for n = " + std::to_string(v.n()));
  std::vector<Vector> rows = v.rows();
  for (auto& r : rows)
    for (int i = first; i <= last; ++i) r[static_cast<std::size_t>(i - 1)] = 0;
  return Subspace::span(v.field(), v.n(), rows);
}

namespace {

// Free positions of the echelon form with the given 0-based pivots:
// (row, column) pairs right of each pivot that are not pivot columns.
std::vector<std::pair<int, int>> free_cells(const std::vector<int>& pivots, int n) {
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (int c = pivots[r] + 1; c < n; ++c)
      if (!std::binary_search(pivots.begin(), pivots.end(), c)) cells.emplace_back(static_cast<int>(r), c);
  return cells;
}

}  // namespace

void for_each_subspace(int d, int n, const PrimeField& field,
                       const std::function<void(const Subspace&)>& visit) {
  if (n < 1 || n > Subspace::kMaxAmbient)
    throw InvalidArgument("ambient dimension must be in 1.." + std::to_string(Subspace::kMaxAmbient));
  if (d < 0 || d > n) throw InvalidArgument("subspace dimension must be in 0..n");
  for (const auto& subset : subsets_of_size(n, d)) {
    std::vector<int> pivots;
    for (int s : subset) pivots.push_back(s - 1);
    auto cells = free_cells(pivots, n);
    std::vector<Vector> rows(static_cast<std::size_t>(d), Vector(static_cast<std::size_t>(n), 0));
    for (std::size_t r = 0; r < pivots.size(); ++r) rows[r][static_cast<std::size_t>(pivots[r])] = 1;
    std::vector<Element> digits(cells.size(), 0);
    while (true) {
      for (std::size_t i = 0; i < cells.size(); ++i)
        rows[static_cast<std::size_t>(cells[i].first)][static_cast<std::size_t>(cells[i].second)] = digits[i];
      visit(Subspace::span(field, n, rows));
      std::size_t i = digits.size();
      while (i > 0 && ++digits[i - 1] == field.p()) digits[--i] = 0;
      if (i == 0) break;
    }
  }
}

std::vector<Subspace> enumerate_grassmannian(int d, int n, const PrimeField& field) {
  std::vector<Subspace> out;
  for_each_subspace(d, n, field, [&](const Subspace& s) { out.push_back(s); });
  return out;
}

void for_each_superspace(const Subspace& w, int d,
                         const std::function<void(const Subspace&)>& visit) {
  const int n = w.n();
  if (d < w.dim() || d > n) return;
  std::vector<int> pivots = w.pivots();
  std::vector<int> free_cols;  // 1-based columns without a pivot of W
  for (int c = 1; c <= n; ++c)
    if (!std::binary_search(pivots.begin(), pivots.end(), c)) free_cols.push_back(c);
  const int extra = d - w.dim();
  if (extra == 0) {
    visit(w);
    return;
  }
  // Subspaces U of F^n containing W correspond to subspaces of the quotient,
  // which is coordinatized by the non-pivot columns of W.
  const int m = static_cast<int>(free_cols.size());
  for_each_subspace(extra, m, w.field(), [&](const Subspace& u) {
    std::vector<Vector> rows = w.rows();
    for (const auto& ur : u.rows()) {
      Vector lifted(static_cast<std::size_t>(n), 0);
      for (int i = 0; i < m; ++i)
        lifted[static_cast<std::size_t>(free_cols[static_cast<std::size_t>(i)] - 1)] = ur[static_cast<std::size_t>(i)];
      rows.push_back(std::move(lifted));
    }
    visit(Subspace::span(w.field(), n, rows));
  });
}

BigInt gaussian_binomial(int n, int d, const BigInt& q) {
  if (d < 0 || d > n) return 0;
  if (q == 1) {
    BigInt c = 1;
    for (int i = 0; i < d; ++i) c = c * (n - i) / (i + 1);
    return c;
  }
  BigInt num = 1, den = 1;
  for (int i = 0; i < d; ++i) {
    num *= boost::multiprecision::pow(q, static_cast<unsigned>(n - i)) - 1;
    den *= boost::multiprecision::pow(q, static_cast<unsigned>(i + 1)) - 1;
  }
  if (num % den != 0) throw InternalError("q-binomial division is inexact");
  return num / den;
}

}  // namespace degflag
