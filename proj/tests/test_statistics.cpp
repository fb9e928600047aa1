#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtcat/checked.hpp"
#include "qtcat/dyck.hpp"
#include "qtcat/qt_matrix.hpp"
#include "qtcat/statistics.hpp"

using namespace qtcat;

TEST_CASE("area and dinv of reference vectors") {
  const DyckVector v{0, 1, 1, 0, 1, 2, 2, 0};
  CHECK(area(v) == 7);
  CHECK(dinv(v) == 12);
  CHECK(deficit(8, v) == 9);

  CHECK(area(DyckVector{0, 0, 0, 0}) == 0);
  CHECK(area(DyckVector{0, 1, 2, 3, 4}) == binom2(5));
  CHECK(dinv(DyckVector{0, 0, 0, 0, 0}) == binom2(5));
  CHECK(dinv(DyckVector{0, 0, 1, 0, 0, 0, 1}) == 14);
}

TEST_CASE("bucket and quadratic dinv agree") {
  for (std::size_t n = 0; n <= 12; ++n)
    for_each_dyck_vector(n, [&](const std::vector<unsigned>& raw) {
      const DyckVector v{std::vector<unsigned>(raw)};
      CHECK(dinv(v) == dinv_quadratic(v));
    });
}

TEST_CASE("arm leg coarm coleg") {
  // The running example diagram (7,4,3,3,3,1) at cell (2,1).
  const Partition fig{7, 4, 3, 3, 3, 1};
  CHECK(arm(fig, {2, 1}) == 3);
  CHECK(leg(fig, {2, 1}) == 4);
  CHECK(coarm(fig, {2, 1}) == 0);
  CHECK(coleg(fig, {2, 1}) == 1);

  CHECK(arm(Partition{1}, {1, 1}) == 0);
  CHECK(leg(Partition{1}, {1, 1}) == 0);
  CHECK(coarm(Partition{1}, {1, 1}) == 0);
  CHECK(coleg(Partition{1}, {1, 1}) == 0);

  CHECK_THROWS_AS(arm(Partition{2, 1}, Cell{2, 2}), std::invalid_argument);

  // Exactly 14 qualifying cells in (5,5,4,3,1,1).
  const Partition g{5, 5, 4, 3, 1, 1};
  std::uint64_t qualifying = 0;
  for (std::size_t i = 1; i <= g.length(); ++i)
    for (std::size_t j = 1; j <= g.part(i); ++j) {
      const long diff = static_cast<long>(arm(g, {i, j})) - static_cast<long>(leg(g, {i, j}));
      if (diff == 0 || diff == 1) ++qualifying;
    }
  CHECK(qualifying == 14);
}

TEST_CASE("partition statistics on reference values") {
  const Partition g{5, 5, 4, 3, 1, 1};
  CHECK(dinv(g) == 14);
  CHECK(deficit(g) == 5);
  CHECK(delta_order(g) == 7);
  CHECK(area(7, g) == 2);
  CHECK(area(8, g) == 9);
  CHECK(area(9, g) == 17);
  CHECK_THROWS_AS(area(6, g), std::invalid_argument);

  CHECK(dinv(Partition{}) == 0);
  CHECK(deficit(Partition{}) == 0);
  CHECK(delta_order(Partition{}) == 0);
  CHECK(delta_order(Partition{5, 4}) == 6);
  CHECK(delta_order(Partition{6}) == 7);
  CHECK(area(5, Partition{}) == 10);

  // |g| - dinv = 7 for the natural partition of (2,2,1,1,1).
  const Partition nat{6, 5, 5, 3, 2, 1, 1};
  CHECK(nat.size() - dinv(nat) == 7);
}

TEST_CASE("statistic transport along dp/dv") {
  for (std::size_t n = 0; n <= 10; ++n)
    for_each_dyck_vector(n, [&](const std::vector<unsigned>& raw) {
      const DyckVector v{std::vector<unsigned>(raw)};
      const Partition g = to_partition(n, v);
      CHECK(dinv(v) == dinv(g));
      CHECK(area(v) == area(n, g));
      CHECK(deficit(n, v) == deficit(g));
    });
}

TEST_CASE("deficit three-way agreement") {
  for (std::uint64_t n = 0; n <= 12; ++n)
    for_each_partition(n, [&](const Partition& g) {
      const std::uint64_t def = deficit(g);
      CHECK(def == g.size() - dinv(g));
      std::uint64_t outside = 0;
      for (std::size_t i = 1; i <= g.length(); ++i)
        for (std::size_t j = 1; j <= g.part(i); ++j) {
          const long diff =
              static_cast<long>(arm(g, {i, j})) - static_cast<long>(leg(g, {i, j}));
          if (diff != 0 && diff != 1) ++outside;
        }
      CHECK(def == outside);
    });
}

TEST_CASE("area recurrence in the order") {
  for (std::uint64_t sz = 0; sz <= 10; ++sz)
    for_each_partition(sz, [&](const Partition& g) {
      const std::size_t n = delta_order(g);
      CHECK(area(n + 1, g) == area(n, g) + n);
    });
}

TEST_CASE("cat matrix small cases") {
  const QtMatrix m0 = cat_matrix_serial(0);
  CHECK(m0.total() == 1);
  CHECK(m0.coeff(0, 0) == 1);

  const QtMatrix m3 = cat_matrix_serial(3);
  CHECK(m3.total() == 5);
  CHECK(m3.coeff(0, 3) == 1);
  CHECK(m3.coeff(1, 1) == 1);
  CHECK(m3.coeff(1, 2) == 1);
  CHECK(m3.coeff(2, 1) == 1);
  CHECK(m3.coeff(3, 0) == 1);
  CHECK(m3.entries().size() == 5);
}

TEST_CASE("cat matrix totals are catalan numbers") {
  for (std::size_t n = 0; n <= 9; ++n)
    CHECK(cat_matrix_serial(n).total() == catalan(n));
  CHECK_THROWS_AS(cat_matrix_serial(31), std::invalid_argument);
}

TEST_CASE("level slices of order 5") {
  auto pairs = [](const QtMatrix& m) {
    std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> out;
    for (const auto& [key, c] : m.entries()) out.push_back({key.first, key.second, c});
    return out;
  };
  using T = std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>>;

  const QtMatrix l2 = cat_level(5, 2, 1);
  CHECK(pairs(l2) == T{{1, 7, 1}, {2, 6, 2}, {3, 5, 2}, {4, 4, 2}, {5, 3, 2}, {6, 2, 2}, {7, 1, 1}});
  const QtMatrix l3 = cat_level(5, 3, 1);
  CHECK(pairs(l3) == T{{1, 6, 1}, {2, 5, 1}, {3, 4, 2}, {4, 3, 2}, {5, 2, 1}, {6, 1, 1}});
  const QtMatrix l4 = cat_level(5, 4, 1);
  CHECK(pairs(l4) == T{{2, 4, 1}, {3, 3, 1}, {4, 2, 1}});
  CHECK(cat_level(5, 5, 1).empty());
  CHECK(cat_level(5, 12, 1).empty());

  // Level 0 is the full antidiagonal with unit coefficients.
  const QtMatrix l0 = cat_level(5, 0, 1);
  CHECK(l0.total() == 11);
  for (std::uint64_t i = 0; i <= 10; ++i) CHECK(l0.coeff(i, 10 - i) == 1);
}

TEST_CASE("joint symmetry checks") {
  CHECK(is_jointly_symmetric(cat_matrix_serial(5)));
  QtMatrix bad;
  bad.add(1, 2, 1);
  CHECK_FALSE(is_jointly_symmetric(bad));
  CHECK(is_jointly_symmetric(cat_level(7, 10, 1)));
  for (std::size_t n = 0; n <= 9; ++n) {
    CHECK(is_jointly_symmetric(cat_matrix_serial(n)));
    for (std::uint64_t k = 0; k <= 9; ++k)
      CHECK(is_jointly_symmetric(cat_level(n, k, 1)));
  }
}

TEST_CASE("matrix rendering") {
  CHECK(render_matrix(cat_matrix_serial(0)) == "1\n");
  const std::string m3 =
      "1 . . .\n"
      ". 1 . .\n"
      ". 1 1 .\n"
      ". . . 1\n";
  CHECK(render_matrix(cat_matrix_serial(3)) == m3);
}

TEST_CASE("overflow is a hard error") {
  QtMatrix m;
  m.add(0, 0, ~0ull);
  CHECK_THROWS_AS(m.add(0, 0, 1), std::overflow_error);
}
