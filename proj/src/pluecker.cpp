#include "degflag/pluecker.hpp"

#include "degflag/bijections.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace degflag {

namespace {

std::uint32_t mask_of(const std::vector<int>& sorted) {
  std::uint32_t m = 0;
  for (int i : sorted) m |= std::uint32_t{1} << (i - 1);
  return m;
}

Element determinant(const PrimeField& field, std::vector<Vector> m) {
  const std::size_t size = m.size();
  Element det = 1;
  for (std::size_t c = 0; c < size; ++c) {
    std::size_t pivot = c;
    while (pivot < size && m[pivot][c] == 0) ++pivot;
    if (pivot == size) return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = field.neg(det);
    }
    det = field.mul(det, m[c][c]);
    Element inv = field.inv(m[c][c]);
    for (std::size_t r = c + 1; r < size; ++r) {
      Element f = field.mul(m[r][c], inv);
      if (f == 0) continue;
      for (std::size_t j = c; j < size; ++j) m[r][j] = field.sub(m[r][j], field.mul(f, m[c][j]));
    }
  }
  return det;
}

PlueckerRelation build_relation(const std::vector<int>& L, const std::vector<int>& J, int k, bool degenerate) {
  const int p = static_cast<int>(L.size());
  const int q = static_cast<int>(J.size());
  if (!(p >= q && q >= k && k >= 1))
    throw InvalidArgument("relation needs |L| >= |J| >= k >= 1, got |L|=" + std::to_string(p) +
                          " |J|=" + std::to_string(q) + " k=" + std::to_string(k));
  for (int x : L)
    if (x < 1) throw InvalidArgument("indices must be >= 1");
  for (int x : J)
    if (x < 1) throw InvalidArgument("indices must be >= 1");

  PlueckerRelation rel{p, q, k, L, J, degenerate ? RelationKind::degenerate : RelationKind::classical, {}};
  auto in_band = [p, q](int x) { return x >= q + 1 && x <= p; };

  auto add_term = [&rel](int sign, std::vector<int> l_side, std::vector<int> j_side) {
    int s = sign * sort_with_sign(l_side) * sort_with_sign(j_side);
    if (s != 0) rel.terms.push_back({s, std::move(l_side), std::move(j_side)});
  };

  bool keep_leading = true;
  if (degenerate)
    keep_leading = std::none_of(J.begin(), J.begin() + k, in_band);
  if (keep_leading) add_term(+1, L, J);

  for (const auto& positions : subsets_of_size(p, k)) {
    if (degenerate && std::any_of(positions.begin(), positions.end(),
                                  [&](int r) { return in_band(L[static_cast<std::size_t>(r - 1)]); }))
      continue;
    std::vector<int> l_side = L;
    std::vector<int> j_side = J;
    for (int i = 0; i < k; ++i) {
      auto r = static_cast<std::size_t>(positions[static_cast<std::size_t>(i)] - 1);
      l_side[r] = J[static_cast<std::size_t>(i)];
      j_side[static_cast<std::size_t>(i)] = L[r];
    }
    add_term(-1, std::move(l_side), std::move(j_side));
  }
  return rel;
}

}  // namespace

PlueckerVector::PlueckerVector(const PrimeField& field, int n, int d, std::vector<Element> by_mask)
    : field_(field), n_(n), d_(d), by_mask_(std::move(by_mask)) {
  if (by_mask_.size() != (std::size_t{1} << n)) throw InvalidArgument("coordinate table has the wrong size");
}

Element PlueckerVector::at(const std::vector<int>& indices) const {
  if (static_cast<int>(indices.size()) != d_)
    throw InvalidArgument("expected " + std::to_string(d_) + " indices, got " + std::to_string(indices.size()));
  for (int i : indices)
    if (i < 1 || i > n_) throw InvalidArgument("index " + std::to_string(i) + " outside 1.." + std::to_string(n_));
  std::vector<int> sorted = indices;
  int sign = sort_with_sign(sorted);
  if (sign == 0) return 0;
  Element x = by_mask_[mask_of(sorted)];
  return sign > 0 ? x : field_.neg(x);
}

bool PlueckerVector::is_zero() const {
  return std::all_of(by_mask_.begin(), by_mask_.end(), [](Element x) { return x == 0; });
}

PlueckerVector pluecker_coordinates(const Subspace& v) {
  const int n = v.n();
  const int d = v.dim();
  if (d < 1) throw InvalidArgument("Plücker coordinates need dim >= 1");
  std::vector<Element> by_mask(std::size_t{1} << n, 0);
  for (const auto& cols : subsets_of_size(n, d)) {
    std::vector<Vector> minor(static_cast<std::size_t>(d), Vector(static_cast<std::size_t>(d)));
    for (std::size_t r = 0; r < minor.size(); ++r)
      for (std::size_t c = 0; c < minor.size(); ++c)
        minor[r][c] = v.rows()[r][static_cast<std::size_t>(cols[c] - 1)];
    by_mask[mask_of(cols)] = determinant(v.field(), std::move(minor));
  }
  return PlueckerVector(v.field(), n, d, std::move(by_mask));
}

PlueckerRelation classical_relation(const std::vector<int>& L, const std::vector<int>& J, int k) {
  return build_relation(L, J, k, false);
}

PlueckerRelation degenerate_relation(const std::vector<int>& L, const std::vector<int>& J, int k) {
  return build_relation(L, J, k, true);
}

Element evaluate_relation(const PlueckerRelation& rel, const PlueckerVector& xp, const PlueckerVector& xq) {
  if (xp.d() != rel.p || xq.d() != rel.q)
    throw InvalidArgument("relation expects subspaces of dimensions (" + std::to_string(rel.p) + ", " +
                          std::to_string(rel.q) + "), got (" + std::to_string(xp.d()) + ", " +
                          std::to_string(xq.d()) + ")");
  if (!(xp.field() == xq.field()) || xp.n() != xq.n()) throw InvalidArgument("Plücker vectors do not match");
  const auto& f = xp.field();
  Element sum = 0;
  for (const auto& t : rel.terms) {
    Element prod = f.mul(xp.at(t.L), xq.at(t.J));
    sum = t.sign > 0 ? f.add(sum, prod) : f.sub(sum, prod);
  }
  return sum;
}

std::vector<PlueckerRelation> degenerate_relations(const std::vector<int>& dims, int n, std::size_t budget) {
  std::vector<PlueckerRelation> out;
  for (int p : dims)
    for (int q : dims) {
      if (q > p) continue;
      auto ls = subsets_of_size(n, p);
      auto js = subsets_of_size(n, q);
      for (int k = 1; k <= q; ++k)
        for (const auto& L : ls)
          for (const auto& J : js) {
            auto rel = degenerate_relation(L, J, k);
            if (rel.terms.empty()) continue;
            if (out.size() >= budget) throw BudgetExceeded("more than " + std::to_string(budget) + " relations");
            out.push_back(std::move(rel));
          }
    }
  return out;
}

namespace {

struct CompiledTerm {
  Element coefficient;
  std::uint32_t l_mask;
  std::uint32_t j_mask;
};

struct CompiledRelation {
  std::size_t p_level;
  std::size_t q_level;
  std::vector<CompiledTerm> terms;
};

}  // namespace

CutoutReport verify_ideal_cutout(const std::vector<int>& dims, int n, const PrimeField& field, int jobs,
                                 std::size_t budget) {
  if (n < 1 || n > Subspace::kMaxAmbient)
    throw InvalidArgument("n must be in 1.." + std::to_string(Subspace::kMaxAmbient));
  check_dims(n, dims);
  CutoutReport report;
  if (dims.empty()) {
    report.product_points = report.points_by_chain = report.points_by_relations = 1;
    report.equal = true;
    return report;
  }

  const std::size_t s = dims.size();
  std::vector<std::vector<Subspace>> spaces(s);
  std::vector<std::vector<PlueckerVector>> coords(s);
  std::vector<std::vector<Subspace>> images(s);  // pr_{d_l+1, d_{l+1}} V, for l < s
  BigInt product = 1;
  for (int d : dims) product *= gaussian_binomial(n, d, field.p());
  if (product > 10'000'000) throw InvalidArgument("product of Grassmannians exceeds 10^7 points");
  for (std::size_t l = 0; l < s; ++l) {
    spaces[l] = enumerate_grassmannian(dims[l], n, field);
    for (const auto& v : spaces[l]) {
      coords[l].push_back(pluecker_coordinates(v));
      if (l + 1 < s) images[l].push_back(projection(v, dims[l] + 1, dims[l + 1]));
    }
  }

  auto level_of = [&dims](int d) {
    return static_cast<std::size_t>(std::find(dims.begin(), dims.end(), d) - dims.begin());
  };
  std::vector<CompiledRelation> relations;
  for (const auto& rel : degenerate_relations(dims, n, budget)) {
    CompiledRelation c{level_of(rel.p), level_of(rel.q), {}};
    for (const auto& t : rel.terms)
      c.terms.push_back({t.sign > 0 ? Element{1} : field.neg(1), mask_of(t.L), mask_of(t.J)});
    relations.push_back(std::move(c));
  }
  report.relations = relations.size();

  struct Partial {
    std::uint64_t points = 0, by_chain = 0, by_relations = 0, mismatches = 0;
  };
  std::function<Partial(std::size_t)> task = [&](std::size_t first) {
    Partial part;
    std::vector<std::size_t> idx(s, 0);
    idx[0] = first;
    while (true) {
      ++part.points;
      bool chain_ok = true;
      for (std::size_t l = 0; l + 1 < s && chain_ok; ++l)
        chain_ok = spaces[l + 1][idx[l + 1]].contains(images[l][idx[l]]);
      bool relations_ok = true;
      for (const auto& rel : relations) {
        const auto& xp = coords[rel.p_level][idx[rel.p_level]];
        const auto& xq = coords[rel.q_level][idx[rel.q_level]];
        Element sum = 0;
        for (const auto& t : rel.terms)
          sum = field.add(sum, field.mul(t.coefficient, field.mul(xp.at_mask(t.l_mask), xq.at_mask(t.j_mask))));
        if (sum != 0) {
          relations_ok = false;
          break;
        }
      }
      part.by_chain += chain_ok;
      part.by_relations += relations_ok;
      part.mismatches += chain_ok != relations_ok;
      // odometer over levels 1..s-1
      bool advanced = false;
      for (std::size_t l = s - 1; l >= 1 && !advanced; --l) {
        if (++idx[l] < spaces[l].size())
          advanced = true;
        else
          idx[l] = 0;
      }
      if (!advanced) break;
    }
    return part;
  };
  for (const auto& part : detail::parallel_map<Partial>(spaces[0].size(), jobs, task)) {
    report.product_points += part.points;
    report.points_by_chain += part.by_chain;
    report.points_by_relations += part.by_relations;
    report.mismatches += part.mismatches;
  }
  report.equal = report.mismatches == 0;
  return report;
}

}  // namespace degflag
