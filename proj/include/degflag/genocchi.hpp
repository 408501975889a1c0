#pragma once

#include "degflag/common.hpp"

#include <cstddef>
#include <vector>

namespace degflag {

/// Integer triangle stored row by row; row r (1-based) is rows[r - 1].
struct Triangle {
  std::vector<std::vector<BigInt>> rows;

  std::size_t size() const { return rows.size(); }
  const std::vector<BigInt>& row(std::size_t r) const { return rows.at(r - 1); }
};

/// Seidel triangle G_{k,m}, m = 1..rows, k = 1..floor((m+1)/2).
///
/// G_{1,1} = 1. Even rows are suffix sums of the preceding odd row,
/// odd rows are prefix sums of the preceding even row.
Triangle seidel_triangle(int rows);

/// G_{1,2n}.
BigInt median_genocchi(int n);

/// h_n = G_{1,2n+2} / 2^n. Throws InternalError if the division is inexact.
BigInt normalized_h(int n);

/// Kreweras refinement triangle; row n holds h_{n,1..n}.
Triangle kreweras_triangle(int rows);

/// Dense polynomial in q with nonnegative coefficients; coeffs[i] multiplies q^i.
/// The zero polynomial has no coefficients.
class QPolynomial {
public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<BigInt> coeffs);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coeff(std::size_t exponent) const;

  BigInt eval(const BigInt& x) const;

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

private:
  std::vector<BigInt> coeffs_;
};

BigInt eval_qpoly(const QPolynomial& poly, const BigInt& x);

/// P_n(q) = sum over Dellac configurations D of q^{length(D)}, computed by
/// enumerating the configurations.
QPolynomial poincare_polynomial(int n, int jobs = 1);

}  // namespace degflag
