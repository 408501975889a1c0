#include "degflag/flag_variety.hpp"
#include "degflag/genocchi.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <map>

using namespace degflag;

namespace {

const PrimeField F2(2);
const PrimeField F3(3);

Vector vec(std::vector<Element> xs) { return xs; }
Subspace span(const PrimeField& f, int n, std::vector<Vector> vs) { return Subspace::span(f, n, vs); }
Subspace coord(const PrimeField& f, int n, std::vector<int> idx) { return Subspace::coordinate(f, n, idx); }

BigInt power(unsigned p, int e) { return boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(e)); }

}  // namespace

TEST_CASE("prime field arithmetic") {
  PrimeField f(7);
  CHECK(f.add(5, 4) == 2);
  CHECK(f.sub(2, 5) == 4);
  CHECK(f.neg(3) == 4);
  CHECK(f.mul(3, 5) == 1);
  for (Element a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.reduce(-1) == 6);
  CHECK_THROWS_AS(f.inv(0), InvalidArgument);
  CHECK_THROWS_AS(PrimeField(4), InvalidArgument);
  CHECK_THROWS_AS(PrimeField(1), InvalidArgument);
  CHECK_NOTHROW(PrimeField(65521));
  CHECK_THROWS_AS(PrimeField(65537), InvalidArgument);
  PrimeField big(65521);
  CHECK(big.mul(65520, 65520) == 1);
}

TEST_CASE("subspaces are canonical") {
  auto a = span(F3, 3, {vec({1, 1, 0}), vec({0, 1, 1})});
  auto b = span(F3, 3, {vec({1, 2, 1}), vec({2, 2, 0})});
  CHECK(a == b);
  CHECK(a.dim() == 2);
  CHECK(a.pivots() == std::vector<int>{1, 2});
  CHECK(span(F2, 3, {vec({1, 1, 0}), vec({1, 1, 0})}).dim() == 1);
  CHECK(Subspace::zero(F2, 3).dim() == 0);
  CHECK(a.contains(vec({1, 0, 2})));
  CHECK_FALSE(a.contains(vec({1, 0, 0})));
  CHECK(a.contains(span(F3, 3, {vec({1, 2, 1})})));
  CHECK_THROWS_AS(span(F2, 3, {vec({1, 0})}), InvalidArgument);
  CHECK_THROWS_AS(coord(F2, 3, {4}), InvalidArgument);
  CHECK_THROWS_AS(Subspace::zero(F2, Subspace::kMaxAmbient + 1), InvalidArgument);
}

TEST_CASE("projection") {
  CHECK(projection(coord(F2, 3, {2}), 2, 2).dim() == 0);
  CHECK(projection(span(F2, 3, {vec({1, 1, 0})}), 2, 2) == coord(F2, 3, {1}));
  CHECK(projection(coord(F2, 4, {1, 3}), 2, 3) == coord(F2, 4, {1}));
  CHECK_THROWS_AS(projection(coord(F2, 4, {1}), 3, 2), InvalidArgument);
  CHECK_THROWS_AS(projection(coord(F2, 4, {1}), 0, 2), InvalidArgument);
}

TEST_CASE("grassmannian enumeration") {
  CHECK(enumerate_grassmannian(1, 3, F2).size() == 7);
  CHECK(enumerate_grassmannian(2, 4, F2).size() == 35);
  CHECK(enumerate_grassmannian(0, 3, F3).size() == 1);
  for (unsigned p : {2u, 3u, 5u})
    for (int n = 1; n <= 5; ++n)
      for (int d = 0; d <= n; ++d) {
        if (p == 5 && n > 4) continue;
        PrimeField f(p);
        auto all = enumerate_grassmannian(d, n, f);
        CHECK(all.size() == oracle::q_binomial(n, d, p));
        CHECK(gaussian_binomial(n, d, p) == oracle::q_binomial(n, d, p));
        std::set<Subspace> distinct(all.begin(), all.end());
        CHECK(distinct.size() == all.size());
        for (const auto& v : all) CHECK(v.dim() == d);
      }
}

TEST_CASE("superspaces") {
  auto w = coord(F2, 4, {1});
  std::set<Subspace> got;
  for_each_superspace(w, 2, [&](const Subspace& u) { got.insert(u); });
  std::set<Subspace> want;
  for (const auto& u : enumerate_grassmannian(2, 4, F2))
    if (u.contains(w)) want.insert(u);
  CHECK(got == want);
  CHECK(got.size() == 7);
  int calls = 0;
  for_each_superspace(w, 1, [&](const Subspace& u) { CHECK(u == w); ++calls; });
  CHECK(calls == 1);
}

TEST_CASE("chain conditions") {
  FlagChain ok{3, {1, 2}, {coord(F2, 3, {2}), coord(F2, 3, {1, 3})}};
  CHECK(is_degenerate_flag(ok));
  FlagChain bad{3, {1, 2}, {coord(F2, 3, {3}), coord(F2, 3, {1, 2})}};
  CHECK_FALSE(is_degenerate_flag(bad));
  for (int n = 2; n <= 5; ++n) {
    FlagChain staircase{n, complete_dims(n), {}};
    for (int d = 1; d < n; ++d) {
      std::vector<int> idx;
      for (int i = 1; i <= d; ++i) idx.push_back(i);
      staircase.spaces.push_back(coord(F3, n, idx));
    }
    CHECK(is_degenerate_flag(staircase));
  }
  FlagChain wrong{3, {1, 2}, {coord(F2, 3, {2})}};
  CHECK_THROWS_AS(is_degenerate_flag(wrong), StructuralError);
  FlagChain wrong_dim{3, {1, 2}, {coord(F2, 3, {2}), coord(F2, 3, {1})}};
  CHECK_THROWS_AS(is_degenerate_flag(wrong_dim), StructuralError);
}

TEST_CASE("consecutive and pairwise conditions agree") {
  for (unsigned p : {2u, 3u}) {
    PrimeField f(p);
    auto lines = enumerate_grassmannian(1, 4, f);
    auto planes = enumerate_grassmannian(2, 4, f);
    auto spaces3 = enumerate_grassmannian(3, 4, f);
    int agree = 0, total = 0;
    for (const auto& a : lines)
      for (const auto& b : planes)
        for (const auto& c : spaces3) {
          FlagChain chain{4, {1, 2, 3}, {a, b, c}};
          agree += is_degenerate_flag(chain) == satisfies_pairwise_conditions(chain);
          ++total;
        }
    CHECK(agree == total);
  }
}

TEST_CASE("fixed points are the coordinate chains that pass") {
  for (const auto& [n, dims] : std::vector<std::pair<int, std::vector<int>>>{{4, {1, 3}}, {4, {1, 2, 3}}, {5, {2, 3}}}) {
    std::set<std::vector<std::vector<int>>> passing;
    std::vector<std::vector<std::vector<int>>> all;
    std::function<void(std::size_t, std::vector<std::vector<int>>&)> walk = [&](std::size_t l, auto& cur) {
      if (l == dims.size()) {
        all.push_back(cur);
        return;
      }
      for (const auto& s : subsets_of_size(n, dims[l])) {
        cur.push_back(s);
        walk(l + 1, cur);
        cur.pop_back();
      }
    };
    std::vector<std::vector<int>> cur;
    walk(0, cur);
    for (const auto& subsets : all)
      if (is_degenerate_flag(coordinate_chain({n, dims, subsets}, F2))) passing.insert(subsets);
    std::set<std::vector<std::vector<int>>> want;
    for (const auto& t : enumerate_tuples(n, dims)) want.insert(t.subsets);
    CHECK(passing == want);
  }
}

TEST_CASE("point counts") {
  CHECK(count_points(complete_dims(3), 3, F2) == 25);
  CHECK(count_points(complete_dims(2), 2, F3) == 4);
  CHECK(count_points({2}, 4, F2) == 35);
  CHECK(count_points({}, 3, F2) == 1);
  CHECK(count_points(complete_dims(4), 4, F2, 2) == 531);
  CHECK(count_points(complete_dims(4), 4, F3) == 3340);
  CHECK_THROWS_AS(count_points({1, 1}, 3, F2), InvalidArgument);
  CHECK_THROWS_AS(count_points({1}, Subspace::kMaxAmbient + 1, F2), InvalidArgument);
}

TEST_CASE("point counts agree with filtering the product of grassmannians") {
  for (const auto& dims : std::vector<std::vector<int>>{{1, 3}, {1, 2}, {2, 3}, {1, 2, 3}}) {
    auto a = enumerate_grassmannian(dims[0], 4, F2);
    auto b = enumerate_grassmannian(dims[1], 4, F2);
    std::optional<std::vector<Subspace>> c;
    if (dims.size() == 3) c = enumerate_grassmannian(dims[2], 4, F2);
    BigInt brute = 0;
    for (const auto& x : a)
      for (const auto& y : b) {
        if (!c) {
          brute += is_degenerate_flag({4, dims, {x, y}});
          continue;
        }
        for (const auto& z : *c) brute += is_degenerate_flag({4, dims, {x, y, z}});
      }
    CHECK(count_points(dims, 4, F2) == brute);
  }
}

TEST_CASE("point count equals P_n(p)") {
  for (int n = 2; n <= 4; ++n)
    for (unsigned p : {2u, 3u, 5u}) {
      if (n == 4 && p == 5) continue;
      CHECK(count_points(complete_dims(n), n, PrimeField(p)) == poincare_polynomial(n).eval(p));
    }
}

TEST_CASE("grassmann cell labels") {
  CHECK(grassmann_cell_label(coord(F2, 5, {2, 4})) == std::vector<int>{2, 4});
  for (const auto& s : subsets_of_size(5, 3)) CHECK(grassmann_cell_label(coord(F3, 5, s)) == s);
  // span(v_2 + v_3) = {v_3 + a v_2 : a = 1}, span(v_1 + v_3) is in the big cell
  CHECK(grassmann_cell_label(span(F2, 3, {vec({0, 1, 1})})) == std::vector<int>{3});
  CHECK(grassmann_cell_label(span(F2, 3, {vec({1, 0, 1})})) == std::vector<int>{1});
  CHECK(grassmann_cell_label(coord(F2, 3, {2})) == std::vector<int>{2});
  CHECK(grassmann_cell_label(Subspace::zero(F2, 3)).empty());
}

TEST_CASE("cell labels match the cell parametrization") {
  for (unsigned p : {2u, 3u})
    for (int n = 1; n <= 5; ++n)
      for (int d = 1; d <= n; ++d) {
        if (p == 3 && n == 5) continue;
        PrimeField f(p);
        for (const auto& L : subsets_of_size(n, d)) {
          auto cell = oracle::cell_by_parametrization(L, n, f);
          CHECK(cell.size() == power(p, grassmann_cell_dimension(L, d, n)));
          for (const auto& v : cell) CHECK(grassmann_cell_label(v) == L);
        }
      }
}

TEST_CASE("grassmann cell dimensions") {
  CHECK(grassmann_cell_dimension({1, 2}, 2, 5) == 6);
  CHECK(grassmann_cell_dimension({1, 2, 3}, 3, 6) == 9);
  CHECK(grassmann_cell_dimension({3, 4}, 2, 5) == 0);
  CHECK(grassmann_cell_dimension({5}, 1, 5) == 3);
  CHECK(grassmann_cell_dimension({2}, 1, 5) == 0);
  CHECK(grassmann_cell_dimension({}, 0, 3) == 0);
  CHECK(grassmann_cell_dimension({2, 3, 6, 7}, 4, 9) == 10);
  CHECK_THROWS_AS(grassmann_cell_dimension({1, 1}, 2, 4), InvalidArgument);
  CHECK_THROWS_AS(grassmann_cell_dimension({1, 5}, 2, 4), InvalidArgument);
  CHECK_THROWS_AS(grassmann_cell_dimension({1}, 2, 4), InvalidArgument);
}

TEST_CASE("grassmannian cells partition the grassmannian") {
  for (unsigned p : {2u, 3u})
    for (int n = 1; n <= 6; ++n)
      for (int d = 0; d <= n; ++d) {
        BigInt sum = 0;
        for (const auto& L : subsets_of_size(n, d)) sum += power(p, grassmann_cell_dimension(L, d, n));
        CHECK(sum == gaussian_binomial(n, d, p));
      }
  for (int n = 1; n <= 5; ++n)
    for (int d = 0; d <= n; ++d) {
      std::map<std::vector<int>, BigInt> counts;
      for_each_subspace(d, n, F2, [&](const Subspace& v) { counts[grassmann_cell_label(v)] += 1; });
      for (const auto& [L, c] : counts) CHECK(c == power(2, grassmann_cell_dimension(L, d, n)));
    }
}

TEST_CASE("flag cell labels") {
  FlagChain fixed{3, {1, 2}, {coord(F2, 3, {2}), coord(F2, 3, {1, 3})}};
  CHECK(flag_cell_label(fixed).subsets == std::vector<std::vector<int>>{{2}, {1, 3}});
  FlagChain staircase{4, {1, 2, 3}, {coord(F2, 4, {1}), coord(F2, 4, {1, 2}), coord(F2, 4, {1, 2, 3})}};
  CHECK(flag_cell_label(staircase).subsets == std::vector<std::vector<int>>{{1}, {1, 2}, {1, 2, 3}});
  FlagChain line{2, {1}, {span(F2, 2, {vec({1, 1})})}};
  CHECK(flag_cell_label(line).subsets == std::vector<std::vector<int>>{{1}});
}

TEST_CASE("cell point counts") {
  auto two = cell_point_counts(complete_dims(2), 2, F2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].tuple.subsets == std::vector<std::vector<int>>{{1}});
  CHECK(two[0].count == 2);
  CHECK(two[0].dellac_length == 1);
  CHECK(two[1].tuple.subsets == std::vector<std::vector<int>>{{2}});
  CHECK(two[1].count == 1);
  CHECK(two[1].dellac_length == 0);

  auto three = cell_point_counts(complete_dims(3), 3, F2);
  std::multiset<BigInt> counts;
  for (const auto& c : three) counts.insert(c.count);
  CHECK(counts == std::multiset<BigInt>{1, 2, 2, 4, 4, 4, 8});

  auto one = cell_point_counts({}, 1, F2);
  REQUIRE(one.size() == 1);
  CHECK(one[0].count == 1);
}

TEST_CASE("cells of complete flags have p^length points") {
  for (int n = 1; n <= 4; ++n)
    for (unsigned p : {2u, 3u}) {
      PrimeField f(p);
      auto table = cell_point_counts(complete_dims(n), n, f, 2);
      CHECK(table.size() == normalized_h(n));
      BigInt total = 0;
      for (const auto& c : table) {
        REQUIRE(c.dellac_length.has_value());
        CHECK(c.count == power(p, *c.dellac_length));
        total += c.count;
      }
      CHECK(total == count_points(complete_dims(n), n, f));
    }
}

TEST_CASE("partial flags have one cell per fixed point") {
  auto table = cell_point_counts({1, 3}, 4, F3);
  CHECK(table.size() == 14);
  BigInt total = 0;
  for (const auto& c : table) {
    CHECK_FALSE(c.dellac_length.has_value());
    total += c.count;
  }
  CHECK(total == count_points({1, 3}, 4, F3));
}
