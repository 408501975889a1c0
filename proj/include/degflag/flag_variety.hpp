#pragma once

#include "degflag/bijections.hpp"
#include "degflag/common.hpp"
#include "degflag/finite_field.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace degflag {

/// (V_1, ..., V_s) with dim V_l = dims[l], all in the same F_p^n.
struct FlagChain {
  int n = 0;
  std::vector<int> dims;
  std::vector<Subspace> spaces;
};

/// Checks shapes only: matching dims, ambient dimension, field.
void check_chain_shape(const FlagChain& c);

/// pr_{d_l+1, d_{l+1}}(V_l) inside V_{l+1} for every consecutive pair.
bool is_degenerate_flag(const FlagChain& c);

/// pr_{d_l+1, d_m}(V_l) inside V_m for every pair l < m.
bool satisfies_pairwise_conditions(const FlagChain& c);

/// Coordinate subspaces p_{I^1}, ..., p_{I^s}.
FlagChain coordinate_chain(const FixedPointTuple& t, const PrimeField& field);

/// Depth-first over V_1, then every admissible V_2 containing pr(V_1), ...
/// Visits each degenerate flag exactly once.
void for_each_degenerate_flag(const std::vector<int>& dims, int n, const PrimeField& field,
                              const std::function<void(const FlagChain&)>& visit);

BigInt count_points(const std::vector<int>& dims, int n, const PrimeField& field, int jobs = 1);

/// Label L of the cell containing V: apply v_i -> v_{[i-d]_+}, take the
/// pivots J of the echelon form whose pivots are the last nonzero entries,
/// and pull J back along the same shift. d = V.dim() >= 0.
std::vector<int> grassmann_cell_label(const Subspace& v);

/// sum_t (J_t - t) with J = sorted {[l - d]_+ : l in L}.
int grassmann_cell_dimension(const std::vector<int>& label, int d, int n);

/// (grassmann_cell_label(V_1), ..., grassmann_cell_label(V_s)). The result is
/// checked against the fixed-point condition; failure throws InternalError.
FixedPointTuple flag_cell_label(const FlagChain& c);

struct CellCount {
  FixedPointTuple tuple;
  /// length of the matching Dellac configuration; complete dims only.
  std::optional<int> dellac_length;
  BigInt count;
};

/// Points of the degenerate flag variety grouped by cell, ordered by tuple.
std::vector<CellCount> cell_point_counts(const std::vector<int>& dims, int n,
                                         const PrimeField& field, int jobs = 1);

}  // namespace degflag
