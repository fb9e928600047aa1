#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "qtcat/checked.hpp"
#include "qtcat/dyck.hpp"
#include "qtcat/partition.hpp"
#include "qtcat/statistics.hpp"

using namespace qtcat;

namespace {

// Brute-force oracle: every length-n sequence over {0..n-1} satisfying the
// three Dyck constraints, independent of the production enumerator.
std::set<std::vector<unsigned>> brute_force_dyck(std::size_t n) {
  std::set<std::vector<unsigned>> out;
  std::vector<unsigned> v(n, 0);
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == n) {
      bool ok = n == 0 || v[0] == 0;
      for (std::size_t i = 0; ok && i + 1 < n; ++i)
        if (v[i + 1] > v[i] + 1) ok = false;
      if (ok) out.insert(v);
      return;
    }
    for (unsigned x = 0; x < std::max<std::size_t>(n, 1); ++x) {
      v[pos] = x;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return out;
}

// Brute-force diagram transpose.
Partition transpose_oracle(const Partition& p) {
  std::set<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 1; i <= p.length(); ++i)
    for (std::size_t j = 1; j <= p.part(i); ++j) cells.insert({j, i});
  std::vector<unsigned> rows;
  for (auto [i, j] : cells) {
    if (rows.size() < i) rows.resize(i, 0);
    ++rows[i - 1];
  }
  return Partition(rows);
}

}  // namespace

TEST_CASE("partition canonical form and invariants") {
  CHECK(Partition{3, 3, 1} == Partition({3, 3, 1, 0, 0}));
  CHECK(Partition{}.is_zero());
  CHECK(Partition{}.str() == "(0)");
  CHECK(Partition{5, 4, 1}.str() == "(5,4,1)");
  CHECK(Partition{3, 3, 1}.size() == 7);
  CHECK(Partition{3, 3, 1}.length() == 3);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
}

TEST_CASE("conjugate matches the transpose oracle and is an involution") {
  CHECK(Partition{3, 3, 1}.conjugate() == Partition{3, 2, 2});
  CHECK(Partition{}.conjugate() == Partition{});
  for (std::uint64_t n = 0; n <= 12; ++n)
    for_each_partition(n, [&](const Partition& p) {
      CHECK(p.conjugate() == transpose_oracle(p));
      CHECK(p.conjugate().conjugate() == p);
      CHECK(p.conjugate().size() == p.size());
      if (!p.is_zero()) CHECK(p.conjugate().length() == p.part(1));
    });
}

TEST_CASE("partition enumeration counts and order") {
  CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition{}});
  auto par4 = enumerate_partitions(4);
  CHECK(par4.size() == 5);
  // Reverse-lexicographic order.
  CHECK(par4.front() == Partition{4});
  CHECK(par4.back() == Partition{1, 1, 1, 1});
  CHECK(std::is_sorted(par4.begin(), par4.end(),
                       [](const Partition& a, const Partition& b) { return a > b; }));
  auto par7 = enumerate_partitions(7);
  CHECK(std::count(par7.begin(), par7.end(), Partition{2, 2, 1, 1, 1}) == 1);
}

TEST_CASE("dyck vector validation") {
  CHECK_THROWS_AS(DyckVector({1}), std::invalid_argument);
  CHECK_THROWS_AS(DyckVector({0, 2}), std::invalid_argument);
  CHECK(DyckVector({0, 1, 2}).order() == 3);
  // v_i <= i-1 is a consequence of the two constructor checks.
  for (const DyckVector& v : enumerate_dyck_vectors(6))
    for (std::size_t i = 0; i < v.order(); ++i) CHECK(v.entries()[i] <= i);
}

TEST_CASE("dyck vector enumeration: counts, order, brute-force oracle") {
  CHECK(enumerate_dyck_vectors(0).size() == 1);
  const std::vector<DyckVector> dv3 = enumerate_dyck_vectors(3);
  CHECK(dv3 == std::vector<DyckVector>{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {0, 1, 2}});
  CHECK(enumerate_dyck_vectors(4).size() == 14);
  for (std::size_t n = 0; n <= 7; ++n) {
    const auto brute = brute_force_dyck(n);
    const auto fast = enumerate_dyck_vectors(n);
    CHECK(fast.size() == brute.size());
    for (const DyckVector& v : fast) CHECK(brute.count(v.entries()) == 1);
    CHECK(std::is_sorted(fast.begin(), fast.end()));
  }
}

TEST_CASE("catalan recurrence matches enumeration") {
  for (std::size_t n = 0; n <= 10; ++n)
    CHECK(enumerate_dyck_vectors(n).size() == catalan(n));
  CHECK(catalan(12) == 208012);
}

TEST_CASE("dp/dv bijection examples") {
  CHECK(to_partition(7, DyckVector{0, 0, 1, 0, 0, 0, 1}) == Partition{5, 5, 4, 3, 1, 1});
  CHECK(to_partition(5, DyckVector{0, 0, 0, 0, 0}) == Partition{4, 3, 2, 1});
  CHECK(to_dyck_vector(7, Partition{5, 5, 4, 3, 1, 1}) == DyckVector{0, 0, 1, 0, 0, 0, 1});
  CHECK(to_dyck_vector(8, Partition{}) == DyckVector{0, 1, 2, 3, 4, 5, 6, 7});
  CHECK(to_dyck_vector(8, Partition{6, 5, 5, 3, 2, 1, 1}) ==
        DyckVector{0, 0, 1, 1, 1, 0, 1, 1});
  CHECK_THROWS_AS(to_partition(6, DyckVector{0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(to_dyck_vector(4, Partition{5, 1}), std::invalid_argument);
}

TEST_CASE("dp/dv round-trip on all orders up to 10") {
  for (std::size_t n = 0; n <= 10; ++n)
    for_each_dyck_vector(n, [&](const std::vector<unsigned>& raw) {
      const DyckVector v{std::vector<unsigned>(raw)};
      CHECK(to_dyck_vector(n, to_partition(n, v)) == v);
    });
}

TEST_CASE("embedding into the next order") {
  CHECK(embed(DyckVector{}) == DyckVector{0});
  CHECK(embed(DyckVector{0, 1, 2}) == DyckVector{0, 1, 2, 3});
  CHECK(embed(DyckVector{0, 0}) == DyckVector{0, 1, 1});
  for (std::size_t n = 0; n <= 9; ++n)
    for (const DyckVector& v : enumerate_dyck_vectors(n))
      CHECK(to_partition(n + 1, embed(v)) == to_partition(n, v));
}

TEST_CASE("canonical dyck vector of a partition") {
  CHECK(dyck_vector_of(Partition{4, 2, 1, 1, 1}) == DyckVector{0, 0, 0, 0, 1, 1, 2, 3, 4});
  CHECK(dyck_vector_of(Partition{}) == DyckVector{});
  CHECK(dyck_vector_of(Partition{6}) == DyckVector{0, 0, 0, 0, 0, 0});
}

TEST_CASE("u-cell ordering on a reference diagram") {
  const Partition g{4, 4, 4, 4, 2, 1};
  const auto cells = u_cells(g);
  REQUIRE(cells.size() == g.size());
  CHECK(cells[0] == Cell{4, 4});
  CHECK(cells[1] == Cell{6, 1});
  CHECK(cells[2] == Cell{5, 2});
  CHECK(cells[3] == Cell{4, 3});
}

TEST_CASE("u-cell order is a total permutation of the diagram") {
  for (std::uint64_t n = 0; n <= 10; ++n)
    for_each_partition(n, [&](const Partition& g) {
      const auto cells = u_cells(g);
      CHECK(cells.size() == g.size());
      std::set<std::pair<std::size_t, std::size_t>> seen;
      for (const Cell& c : cells) {
        CHECK(cell_in_diagram(g, c));
        CHECK(seen.insert({c.row, c.col}).second);
      }
      // Strictly descending keys: no duplicates in the order.
      for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
        auto key = [](const Cell& c) { return std::pair{c.row + c.col, c.row}; };
        CHECK(key(cells[i]) > key(cells[i + 1]));
      }
    });
}

TEST_CASE("cell removal") {
  const Partition g{4, 4, 4, 4, 2, 1};
  CHECK(remove_cells(g, {1, 4}) == Partition{4, 4, 4, 2, 2, 1});
  CHECK(remove_cells(g, {2, 3}) == Partition{4, 4, 4, 4, 1});
  CHECK(remove_cells(Partition{1}, {1}) == Partition{});
  CHECK_THROWS_AS(remove_cells(g, {9}), std::invalid_argument);   // breaks monotonicity
  CHECK_THROWS_AS(remove_cells(g, {99}), std::invalid_argument);  // out of range
  CHECK_THROWS_AS(remove_cells(g, {1, 1}), std::invalid_argument);
}

TEST_CASE("staircase") {
  CHECK(staircase(0) == Partition{});
  CHECK(staircase(1) == Partition{});
  CHECK(staircase(5) == Partition{4, 3, 2, 1});
  CHECK(staircase(5).size() == binom2(5));
}
