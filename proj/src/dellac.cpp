#include "degflag/dellac.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace degflag {

namespace {

constexpr int kMaxDellacN = 15;  // 2n rows must fit a 32-bit mask

std::string box_str(int col, int row) {
  return "(" + std::to_string(col) + "," + std::to_string(row) + ")";
}

}  // namespace

DellacConfig::DellacConfig(int n, std::vector<std::array<int, 2>> columns)
    : n_(n), columns_(std::move(columns)), row_to_col_(static_cast<std::size_t>(2 * n), 0) {
  for (int l = 1; l <= n_; ++l)
    for (int r : columns_[static_cast<std::size_t>(l - 1)])
      row_to_col_[static_cast<std::size_t>(r - 1)] = l;
}

ValidationReport validate_dellac(int n, const std::vector<Box>& boxes) {
  if (n < 1) throw StructuralError("n must be >= 1");
  ValidationReport report;
  std::vector<int> per_col(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> per_row(static_cast<std::size_t>(2 * n));
  std::vector<Box> sorted = boxes;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& b : sorted) {
    if (b.col < 1 || b.col > n || b.row < 1 || b.row > 2 * n)
      throw StructuralError("box " + box_str(b.col, b.row) + " lies outside the " +
                            std::to_string(n) + "x" + std::to_string(2 * n) + " grid");
  }
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1])
      throw StructuralError("box " + box_str(sorted[i].col, sorted[i].row) + " listed twice");

  for (const auto& b : sorted) {
    ++per_col[static_cast<std::size_t>(b.col - 1)];
    per_row[static_cast<std::size_t>(b.row - 1)].push_back(b.col);
    if (b.row < b.col || b.row > n + b.col)
      report.violations.push_back(
          {"band", "box " + box_str(b.col, b.row) + " breaks " + std::to_string(b.col) +
                       " <= j <= " + std::to_string(n + b.col)});
  }
  for (int l = 1; l <= n; ++l) {
    int c = per_col[static_cast<std::size_t>(l - 1)];
    if (c != 2)
      report.violations.push_back({"column", "column " + std::to_string(l) + " has " +
                                                 std::to_string(c) + " boxes, expected 2"});
  }
  for (int j = 1; j <= 2 * n; ++j) {
    const auto& cols = per_row[static_cast<std::size_t>(j - 1)];
    if (cols.size() != 1) {
      std::string where;
      for (int c : cols) where += (where.empty() ? "" : " ") + box_str(c, j);
      report.violations.push_back({"row", "row " + std::to_string(j) + " has " +
                                              std::to_string(cols.size()) + " boxes" +
                                              (where.empty() ? "" : " " + where) +
                                              ", expected 1"});
    }
  }
  return report;
}

DellacConfig DellacConfig::from_boxes(int n, const std::vector<Box>& boxes) {
  auto report = validate_dellac(n, boxes);
  if (!report.ok()) throw InvalidArgument("not a Dellac configuration: " + report.summary());
  std::vector<std::array<int, 2>> columns(static_cast<std::size_t>(n), {0, 0});
  std::vector<int> filled(static_cast<std::size_t>(n), 0);
  std::vector<Box> sorted = boxes;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& b : sorted) {
    auto c = static_cast<std::size_t>(b.col - 1);
    columns[c][static_cast<std::size_t>(filled[c]++)] = b.row;
  }
  return DellacConfig(n, std::move(columns));
}

DellacConfig DellacConfig::from_column_rows(int n, const std::vector<int>& rows) {
  if (n < 1) throw StructuralError("n must be >= 1");
  if (rows.size() != static_cast<std::size_t>(2 * n))
    throw StructuralError("expected " + std::to_string(2 * n) + " rows, got " +
                          std::to_string(rows.size()));
  std::vector<Box> boxes;
  boxes.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    boxes.push_back({static_cast<int>(i / 2) + 1, rows[i]});
  return from_boxes(n, boxes);
}

bool DellacConfig::contains(int col, int row) const {
  if (col < 1 || col > n_) return false;
  const auto& c = columns_[static_cast<std::size_t>(col - 1)];
  return c[0] == row || c[1] == row;
}

std::vector<Box> DellacConfig::boxes() const {
  std::vector<Box> out;
  out.reserve(columns_.size() * 2);
  for (std::size_t l = 0; l < columns_.size(); ++l)
    for (int r : columns_[l]) out.push_back({static_cast<int>(l) + 1, r});
  return out;
}

std::vector<int> DellacConfig::column_rows() const {
  std::vector<int> out;
  out.reserve(columns_.size() * 2);
  for (const auto& c : columns_) out.insert(out.end(), c.begin(), c.end());
  return out;
}

std::string DellacConfig::grid() const {
  std::ostringstream os;
  for (int j = 2 * n_; j >= 1; --j) {
    os.width(3);
    os << j << ' ';
    for (int l = 1; l <= n_; ++l) os << (column_of_row(j) == l ? '#' : '.');
    os << '\n';
  }
  return os.str();
}

namespace {

// Depth-first search, one column at a time. Column l picks two free rows in
// [l, n + l]; after column l every row <= l must be covered, since no later
// column can reach it.
class DellacSearch {
public:
  explicit DellacSearch(int n) : n_(n), columns_(static_cast<std::size_t>(n)) {}

  void run_from(int first_lo, int first_hi, std::vector<DellacConfig>& out,
                const std::function<DellacConfig(std::vector<std::array<int, 2>>)>& make) {
    make_ = &make;
    out_ = &out;
    columns_[0] = {first_lo, first_hi};
    std::uint32_t used = bit(first_lo) | bit(first_hi);
    if (!prefix_covered(used, 1)) return;
    extend(2, used);
  }

private:
  static std::uint32_t bit(int row) { return std::uint32_t{1} << (row - 1); }

  bool prefix_covered(std::uint32_t used, int upto) const {
    std::uint32_t need = upto >= 32 ? ~std::uint32_t{0} : (bit(upto + 1) - 1);
    return (used & need) == need;
  }

  void extend(int l, std::uint32_t used) {
    if (l > n_) {
      out_->push_back((*make_)(columns_));
      return;
    }
    for (int a = l; a <= n_ + l; ++a) {
      if (used & bit(a)) continue;
      for (int b = a + 1; b <= n_ + l; ++b) {
        if (used & bit(b)) continue;
        std::uint32_t next = used | bit(a) | bit(b);
        if (!prefix_covered(next, l)) continue;
        columns_[static_cast<std::size_t>(l - 1)] = {a, b};
        extend(l + 1, next);
      }
    }
  }

  int n_;
  std::vector<std::array<int, 2>> columns_;
  std::vector<DellacConfig>* out_ = nullptr;
  const std::function<DellacConfig(std::vector<std::array<int, 2>>)>* make_ = nullptr;
};

}  // namespace

std::vector<DellacConfig> enumerate_dellac(int n, int jobs) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  if (n > kMaxDellacN) throw InvalidArgument("n must be <= " + std::to_string(kMaxDellacN));

  // Column 1 always contains (1,1); its second box ranges over rows 2..n+1.
  std::vector<std::pair<int, int>> firsts;
  for (int a = 1; a <= n + 1; ++a)
    for (int b = a + 1; b <= n + 1; ++b) firsts.emplace_back(a, b);

  std::function<DellacConfig(std::vector<std::array<int, 2>>)> make =
      [n](std::vector<std::array<int, 2>> cols) { return DellacConfig(n, std::move(cols)); };

  std::function<std::vector<DellacConfig>(std::size_t)> task = [&](std::size_t i) {
    std::vector<DellacConfig> part;
    DellacSearch search(n);
    search.run_from(firsts[i].first, firsts[i].second, part, make);
    return part;
  };
  auto parts = detail::parallel_map<std::vector<DellacConfig>>(firsts.size(), jobs, task);

  std::vector<DellacConfig> out;
  for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()),
                                   std::make_move_iterator(p.end()));
  return out;
}

int length(const DellacConfig& d) {
  int count = 0;
  auto boxes = d.boxes();
  for (std::size_t a = 0; a < boxes.size(); ++a)
    for (std::size_t b = 0; b < boxes.size(); ++b)
      if (boxes[a].col < boxes[b].col && boxes[a].row > boxes[b].row) ++count;
  return count;
}

int refinement_stat(const DellacConfig& d) { return d.column_of_row(d.n() + 1); }

}  // namespace degflag
