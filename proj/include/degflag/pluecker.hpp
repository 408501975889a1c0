#pragma once

#include "degflag/common.hpp"
#include "degflag/finite_field.hpp"

#include <cstdint>
#include <vector>

namespace degflag {

/// Plücker coordinates X_J of a d-dimensional subspace of F_p^n. Stored
/// densely by the bitmask of J; access through an index tuple applies
/// X_{sigma(J)} = sgn(sigma) X_J and gives 0 on repeated indices.
class PlueckerVector {
public:
  PlueckerVector(const PrimeField& field, int n, int d, std::vector<Element> by_mask);

  int n() const { return n_; }
  int d() const { return d_; }
  const PrimeField& field() const { return field_; }

  Element at(const std::vector<int>& indices) const;
  /// Coordinate of the sorted set encoded by `mask` (bit i-1 for index i).
  Element at_mask(std::uint32_t mask) const { return by_mask_[mask]; }
  bool is_zero() const;

private:
  PrimeField field_;
  int n_;
  int d_;
  std::vector<Element> by_mask_;
};

/// X_J(V) = det of the columns J of V's echelon basis. Requires dim V >= 1.
PlueckerVector pluecker_coordinates(const Subspace& v);

struct RelationTerm {
  int sign = 1;
  std::vector<int> L;  // sorted, size p
  std::vector<int> J;  // sorted, size q

  friend bool operator==(const RelationTerm&, const RelationTerm&) = default;
};

enum class RelationKind { classical, degenerate };

/// X_L X_J - sum over k-subsets r of positions in L of X_{L'} X_{J'}, where
/// L' has l_{r_i} replaced by j_i and J' = (l_{r_1}, ..., l_{r_k}, j_{k+1}, ...).
/// Terms are sign-normalized to sorted tuples; terms with a repeated index
/// are dropped. The degenerate variant keeps only swaps whose l_{r_i} avoid
/// {q+1..p}, and drops the leading term if one of j_1..j_k lies there.
struct PlueckerRelation {
  int p = 0;
  int q = 0;
  int k = 0;
  std::vector<int> L;
  std::vector<int> J;
  RelationKind kind = RelationKind::classical;
  std::vector<RelationTerm> terms;
};

PlueckerRelation classical_relation(const std::vector<int>& L, const std::vector<int>& J, int k);
PlueckerRelation degenerate_relation(const std::vector<int>& L, const std::vector<int>& J, int k);

/// sum sign * Xp(L-term) * Xq(J-term) in F_p. Xp.d() must be p and Xq.d() q.
Element evaluate_relation(const PlueckerRelation& rel, const PlueckerVector& xp, const PlueckerVector& xq);

/// Every nonempty degenerate relation for pairs p >= q from dims, with L and
/// J ranging over sorted subsets of {1..n}. Throws BudgetExceeded past
/// `budget` relations.
std::vector<PlueckerRelation> degenerate_relations(const std::vector<int>& dims, int n,
                                                   std::size_t budget = 1'000'000);

struct CutoutReport {
  std::uint64_t product_points = 0;
  std::uint64_t points_by_chain = 0;
  std::uint64_t points_by_relations = 0;
  std::uint64_t relations = 0;
  /// points where the two predicates disagree
  std::uint64_t mismatches = 0;
  bool equal = false;
};

/// Compares, over all of Gr(d_1,n) x ... x Gr(d_s,n), the points satisfying
/// the projection conditions with the points where every degenerate relation
/// vanishes.
CutoutReport verify_ideal_cutout(const std::vector<int>& dims, int n, const PrimeField& field,
                                 int jobs = 1, std::size_t budget = 1'000'000);

}  // namespace degflag
