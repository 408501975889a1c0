#pragma once

#include "degflag/common.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace degflag {

using Element = std::uint32_t;
using Vector = std::vector<Element>;

/// Arithmetic modulo a prime p <= 2^16.
class PrimeField {
public:
  static constexpr std::uint32_t kMaxPrime = 65521;  // largest prime below 2^16

  /// Throws InvalidArgument unless p is prime and at most kMaxPrime.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }

  Element reduce(std::int64_t x) const {
    auto r = x % static_cast<std::int64_t>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }
  Element add(Element a, Element b) const { return (a + b) % p_; }
  Element sub(Element a, Element b) const { return (a + p_ - b) % p_; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  /// Throws InvalidArgument for a == 0.
  Element inv(Element a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t p);

/// A d-dimensional subspace of F_p^n, held as the rows of its reduced row
/// echelon form (pivot = first nonzero entry of each row). The form is
/// unique, so equality of values is equality of subspaces.
class Subspace {
public:
  static constexpr int kMaxAmbient = 10;

  /// Span of arbitrary (possibly dependent) vectors of length n.
  static Subspace span(const PrimeField& field, int n, const std::vector<Vector>& vectors);
  /// span(v_i : i in indices), indices 1-based.
  static Subspace coordinate(const PrimeField& field, int n, const std::vector<int>& indices);
  static Subspace zero(const PrimeField& field, int n);

  const PrimeField& field() const { return field_; }
  int n() const { return n_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vector>& rows() const { return rows_; }
  /// 1-based pivot column of each row, increasing.
  std::vector<int> pivots() const;

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.rows_ == b.rows_;
  }
  friend bool operator<(const Subspace& a, const Subspace& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    if (a.rows_.size() != b.rows_.size()) return a.rows_.size() < b.rows_.size();
    return a.rows_ < b.rows_;
  }

private:
  Subspace(PrimeField field, int n, std::vector<Vector> rows)
      : field_(field), n_(n), rows_(std::move(rows)) {}

  PrimeField field_;
  int n_;
  std::vector<Vector> rows_;
};

/// Reduced row echelon form in place; returns the 0-based pivot columns.
/// Zero rows are dropped.
std::vector<int> row_reduce(const PrimeField& field, std::vector<Vector>& rows);

/// Image of V under the coordinate projection that zeroes coordinates
/// first..last (1-based, inclusive). The dimension may drop.
Subspace projection(const Subspace& v, int first, int last);

/// Every d-dimensional subspace of F_p^n exactly once: pivot sets in
/// lexicographic order, then free entries as a row-major base-p counter
/// (last entry fastest).
void for_each_subspace(int d, int n, const PrimeField& field,
                       const std::function<void(const Subspace&)>& visit);
std::vector<Subspace> enumerate_grassmannian(int d, int n, const PrimeField& field);

/// Every d-dimensional subspace containing W, each exactly once.
void for_each_superspace(const Subspace& w, int d,
                         const std::function<void(const Subspace&)>& visit);

/// q-binomial [n choose d]_q = number of d-subspaces of F_q^n, from the
/// product formula.
BigInt gaussian_binomial(int n, int d, const BigInt& q);

}  // namespace degflag
