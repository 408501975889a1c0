#pragma once

#include "degflag/common.hpp"
#include "degflag/dellac.hpp"

#include <vector>

namespace degflag {

/// Torus fixed point of a degenerate partial flag variety: subsets I^1..I^s
/// of {1..n} with |I^l| = dims[l], each sorted.
struct FixedPointTuple {
  int n = 0;
  std::vector<int> dims;
  std::vector<std::vector<int>> subsets;

  friend auto operator<=>(const FixedPointTuple&, const FixedPointTuple&) = default;
};

/// dims = (1, 2, ..., n-1).
std::vector<int> complete_dims(int n);

/// Checks 1 <= d_1 < ... < d_s <= n-1. Throws InvalidArgument otherwise.
void check_dims(int n, const std::vector<int>& dims);

/// I^l \ {d_l+1, ..., d_{l+1}} must be contained in I^{l+1}.
/// Wrong subset sizes, unsorted or out-of-range entries throw StructuralError.
ValidationReport validate_tuple(const FixedPointTuple& t);

/// All valid tuples for (n, dims), lexicographic in (I^1, I^2, ...).
std::vector<FixedPointTuple> enumerate_tuples(int n, const std::vector<int>& dims);

/// Column-by-column construction for complete dims, with I^0 = {}.
DellacConfig tuple_to_dellac(const FixedPointTuple& t);
FixedPointTuple dellac_to_tuple(const DellacConfig& d);

/// Normalized Dumont permutation of the second kind in S_{2n+2}:
/// sigma(k) < k for even k, sigma(k) > k for odd k, and
/// sigma^{-1}(2k) < sigma^{-1}(2k+1) for k = 1..n.
class DumontPermutation {
public:
  /// Throws StructuralError if `values` is not a permutation of 1..2n+2 and
  /// InvalidArgument if a Dumont condition fails.
  DumontPermutation(int n, std::vector<int> values);

  int n() const { return n_; }
  /// 1-based: sigma(k).
  int operator()(int k) const { return values_[static_cast<std::size_t>(k - 1)]; }
  /// 1-based: sigma^{-1}(v).
  int preimage(int v) const { return inverse_[static_cast<std::size_t>(v - 1)]; }
  const std::vector<int>& values() const { return values_; }

  friend bool operator==(const DumontPermutation& a, const DumontPermutation& b) {
    return a.values_ == b.values_;
  }

private:
  struct Trusted {};
  DumontPermutation(Trusted, int n, std::vector<int> values);

  int n_ = 0;
  std::vector<int> values_;
  std::vector<int> inverse_;

  friend std::vector<DumontPermutation> enumerate_dumont(int n, int jobs);
};

/// Not-a-permutation (wrong length, repeats, out of range) throws
/// StructuralError; Dumont condition failures are reported, first one first.
ValidationReport validate_dumont(int n, const std::vector<int>& values);

/// All of PD2N_n in lexicographic order of value sequences.
std::vector<DumontPermutation> enumerate_dumont(int n, int jobs = 1);

DellacConfig dumont_to_dellac(const DumontPermutation& p);
DumontPermutation dellac_to_dumont(const DellacConfig& d);

}  // namespace degflag
