#include "degflag/genocchi.hpp"

#include "degflag/dellac.hpp"

#include <string>

namespace degflag {

namespace {

void require_positive(int value, const char* what) {
  if (value < 1) throw InvalidArgument(std::string(what) + " must be >= 1");
}

}  // namespace

Triangle seidel_triangle(int rows) {
  require_positive(rows, "rows");
  Triangle t;
  t.rows.reserve(static_cast<std::size_t>(rows));
  t.rows.push_back({BigInt(1)});
  for (int m = 2; m <= rows; ++m) {
    const auto& prev = t.rows.back();
    std::vector<BigInt> row(static_cast<std::size_t>((m + 1) / 2));
    if (m % 2 == 0) {
      // G_{k,m} = sum_{i >= k} G_{i,m-1}
      BigInt acc = 0;
      for (std::size_t k = prev.size(); k-- > 0;) {
        acc += prev[k];
        if (k < row.size()) row[k] = acc;
      }
    } else {
      // G_{k,m} = sum_{i <= k} G_{i,m-1}; the last entry repeats the full sum
      BigInt acc = 0;
      for (std::size_t k = 0; k < row.size(); ++k) {
        if (k < prev.size()) acc += prev[k];
        row[k] = acc;
      }
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

BigInt median_genocchi(int n) {
  require_positive(n, "n");
  return seidel_triangle(2 * n).rows.back().front();
}

BigInt normalized_h(int n) {
  require_positive(n, "n");
  BigInt g = seidel_triangle(2 * n + 2).rows.back().front();
  BigInt divisor = BigInt(1) << n;
  if (g % divisor != 0)
    throw InternalError("G_{1," + std::to_string(2 * n + 2) +
                        "} is not divisible by 2^" + std::to_string(n));
  return g / divisor;
}

Triangle kreweras_triangle(int rows) {
  require_positive(rows, "rows");
  Triangle t;
  t.rows.reserve(static_cast<std::size_t>(rows));
  t.rows.push_back({BigInt(1)});
  for (int n = 2; n <= rows; ++n) {
    const auto& prev = t.rows.back();
    std::vector<BigInt> row(static_cast<std::size_t>(n));
    for (const auto& v : prev) row[0] += v;
    row[1] = 2 * row[0] - prev[0];
    for (std::size_t k = 2; k < row.size(); ++k)
      row[k] = 2 * row[k - 1] - row[k - 2] - prev[k - 2] - prev[k - 1];
    t.rows.push_back(std::move(row));
  }
  return t;
}

QPolynomial::QPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (c < 0) throw InvalidArgument("QPolynomial coefficients must be nonnegative");
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt QPolynomial::coeff(std::size_t exponent) const {
  return exponent < coeffs_.size() ? coeffs_[exponent] : BigInt(0);
}

BigInt QPolynomial::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigInt eval_qpoly(const QPolynomial& poly, const BigInt& x) { return poly.eval(x); }

QPolynomial poincare_polynomial(int n, int jobs) {
  require_positive(n, "n");
  std::vector<BigInt> coeffs;
  for (const auto& d : enumerate_dellac(n, jobs)) {
    auto len = static_cast<std::size_t>(length(d));
    if (coeffs.size() <= len) coeffs.resize(len + 1);
    coeffs[len] += 1;
  }
  return QPolynomial(std::move(coeffs));
}

}  // namespace degflag
