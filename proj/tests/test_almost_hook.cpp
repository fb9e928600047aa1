#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qtcat/almost_hook.hpp"
#include "qtcat/checked.hpp"
#include "qtcat/dyck.hpp"
#include "qtcat/statistics.hpp"
#include "qtcat/symmetry.hpp"

using namespace qtcat;

namespace {

// The shape lambda = (b, 2, 1^{a-2}) whose canonical Dyck object seeds the
// chain.
Partition almost_hook_shape(std::uint64_t a, std::uint64_t b) {
  std::vector<unsigned> parts{static_cast<unsigned>(b), 2};
  parts.insert(parts.end(), static_cast<std::size_t>(a - 2), 1);
  return Partition(parts);
}

}  // namespace

TEST_CASE("label pair round trip") {
  for (std::uint64_t a = 2; a <= 7; ++a)
    for (std::uint64_t b = 2; b <= 7; ++b) {
      const AlmostHookLabel lab{a, b};
      auto [u, v] = lab.label_pair();
      auto parsed = almost_hook_label_from_pair(u, v);
      REQUIRE(parsed.has_value());
      CHECK(parsed->a == a);
      CHECK(parsed->b == b);
    }
  CHECK_FALSE(almost_hook_label_from_pair(4, 2).has_value());  // 4+2+2 % 3 != 0
  CHECK_FALSE(almost_hook_label_from_pair(0, 0).has_value());  // needs a >= 2
}

TEST_CASE("generator branches coincide at i = b-1") {
  for (std::uint64_t a = 2; a <= 6; ++a)
    for (std::uint64_t b = 2; b <= 6; ++b) {
      const std::uint64_t i = b - 1;
      const Partition sum_form = [&] {
        // branch 1 evaluated directly
        const Partition x = hook_seed((b - 1) * a, i);
        const Partition y = hook_seed(a - 2, 1);
        std::vector<unsigned> parts;
        for (std::size_t r = 1; r <= std::max(x.length(), y.length()); ++r)
          parts.push_back(x.part(r) + y.part(r));
        return Partition(parts);
      }();
      const Partition removal_form =
          remove_cells(hook_seed(b * (a - 1), i + 1), {static_cast<std::size_t>(b)});
      CHECK(sum_form == removal_form);
      CHECK(almost_hook_generator(a, b, i) == sum_form);
    }
}

TEST_CASE("generators carry the constant deficit ab-2") {
  for (std::uint64_t a = 2; a <= 6; ++a)
    for (std::uint64_t b = 2; b <= 6; ++b)
      for (std::uint64_t i = 1; i <= 10; ++i)
        CHECK(deficit(almost_hook_generator(a, b, i)) == a * b - 2);
}

TEST_CASE("canonical dyck object of the shape is a generator") {
  for (std::uint64_t a = 2; a <= 6; ++a)
    for (std::uint64_t b = 2; b <= 6; ++b) {
      const Partition lam = almost_hook_shape(a, b);
      const std::size_t n = static_cast<std::size_t>(lam.size());
      const Partition obj = to_partition(n, dyck_vector_of(lam));
      CHECK(obj == remove_cells(hook_seed(b * (a - 1), b), {static_cast<std::size_t>(b)}));
      CHECK(obj == almost_hook_generator(a, b, b - 1));
    }
}

TEST_CASE("removed cell position closed form") {
  for (std::uint64_t a = 2; a <= 6; ++a)
    for (std::uint64_t b = 2; b <= 6; ++b)
      for (std::uint64_t i = b - 1; i <= 10; ++i) {
        const Partition seed = hook_seed(b * (a - 1), i + 1);
        const std::size_t j = removed_cell_position(a, b, i);
        REQUIRE(j >= 1);
        REQUIRE(j <= seed.length());
        std::vector<unsigned> parts(seed.parts());
        parts[j - 1] -= 1;
        CHECK(Partition(parts) == remove_cells(seed, {static_cast<std::size_t>(b)}));
      }
}

TEST_CASE("segment sizes and dinv increments") {
  for (std::uint64_t a = 2; a <= 5; ++a)
    for (std::uint64_t b = 2; b <= 5; ++b)
      for (std::uint64_t i = 1; i <= 8; ++i) {
        const auto seg = almost_hook_segment(a, b, i);
        CHECK(seg.size() == (i + 1 <= b - 1 ? i + 1 : i + 2));
        for (std::size_t m = 0; m < seg.size(); ++m)
          CHECK(dinv(seg[m]) == dinv(seg[0]) + m);
        // The generic rho bound matches the prescribed segment length.
        CHECK(rho(seg.front()) + 1 == seg.size());
      }
}

TEST_CASE("segment deltas for the (3,4) example") {
  auto deltas = [](const std::vector<Partition>& seg) {
    std::vector<std::size_t> out;
    for (const Partition& g : seg) out.push_back(delta_order(g));
    return out;
  };
  CHECK(deltas(almost_hook_segment(3, 4, 1)) == std::vector<std::size_t>{11, 12});
  CHECK(deltas(almost_hook_segment(3, 4, 2)) == std::vector<std::size_t>{8, 8, 9});
  CHECK(deltas(almost_hook_segment(3, 4, 3)) == std::vector<std::size_t>{7, 8, 8, 8, 8});
}

TEST_CASE("order sequence prefixes of the (3,4) example") {
  CHECK(almost_hook_order_sequence(3, 4, 10).str() ==
        "11, 12; 8, 8, 9; 7, 8, 8, 8, 8");
  // Flattened prefixes including the repeated-run tails.
  const OrderSequence s = almost_hook_order_sequence(3, 4, 50);
  const std::vector<std::size_t> expect_s = [] {
    std::vector<std::size_t> v{11, 12, 8, 8, 9, 7};
    v.insert(v.end(), 7, 8);
    v.insert(v.end(), 8, 9);
    v.insert(v.end(), 9, 10);
    v.push_back(11);
    v.push_back(10);
    v.insert(v.end(), 10, 11);
    return v;
  }();
  CHECK(std::vector<std::size_t>(s.values.begin(), s.values.begin() + expect_s.size()) ==
        expect_s);

  const OrderSequence sp = almost_hook_order_sequence(4, 3, 60);
  const std::vector<std::size_t> expect_sp = [] {
    std::vector<std::size_t> v{10, 11, 7};
    v.insert(v.end(), 7, 8);
    v.push_back(9);
    v.insert(v.end(), 2, 8);
    v.insert(v.end(), 8, 9);
    v.insert(v.end(), 9, 10);
    v.insert(v.end(), 10, 11);
    v.push_back(12);
    v.push_back(11);
    v.insert(v.end(), 11, 12);
    return v;
  }();
  CHECK(std::vector<std::size_t>(sp.values.begin(), sp.values.begin() + expect_sp.size()) ==
        expect_sp);
}

TEST_CASE("chain contiguity, uniqueness and deficit constancy") {
  for (std::uint64_t a = 2; a <= 6; ++a)
    for (std::uint64_t b = 2; b <= 6; ++b) {
      const Chain c = almost_hook_chain(a, b, 60);
      CHECK(c.contiguous());
      CHECK(c.min_dinv() == 2);
      CHECK(c.max_dinv() == 60);
      std::set<Partition> distinct;
      for (std::size_t i = 0; i < c.members.size(); ++i) {
        CHECK(dinv(c.members[i]) == c.dinvs[i]);
        CHECK(deficit(c.members[i]) == a * b - 2);
        CHECK(distinct.insert(c.members[i]).second);
      }
    }
}

TEST_CASE("closed-form dyck vectors of the generators") {
  // Small-index branch: (0,1,2^r,1^{i-r},2..(c-a+2),(c-a+2)..c) with
  // c = ceil((b-1)a/i), at order n = i + c + 2.
  for (std::uint64_t a = 2; a <= 5; ++a)
    for (std::uint64_t b = 2; b <= 5; ++b) {
      for (std::uint64_t i = 1; i <= b - 1; ++i) {
        const std::uint64_t k = (b - 1) * a;
        const std::uint64_t c = detail::tau(k, i);
        const std::uint64_t r = detail::r_mod(-static_cast<std::int64_t>(k), i);
        const std::size_t n = static_cast<std::size_t>(i + c + 2);
        std::vector<unsigned> v{0, 1};
        v.insert(v.end(), static_cast<std::size_t>(r), 2);
        v.insert(v.end(), static_cast<std::size_t>(i - r), 1);
        for (std::uint64_t x = 2; x + a <= c + 2; ++x)
          v.push_back(static_cast<unsigned>(x));
        for (std::uint64_t x = c - a + 2; x <= c; ++x)
          v.push_back(static_cast<unsigned>(x));
        CHECK(to_dyck_vector(n, almost_hook_generator(a, b, i)) == DyckVector{v});
      }
      // Large-index branch: the epsilon-perturbed staircase form, i >= b.
      for (std::uint64_t i = b; i <= 8; ++i) {
        const std::uint64_t k = b * (a - 1);
        const std::uint64_t c = detail::tau(k, i + 1);
        const std::uint64_t r = detail::r_mod(-static_cast<std::int64_t>(k), i + 1);
        const std::size_t n = static_cast<std::size_t>(i + c + 3);
        std::vector<unsigned> v{0, 1};
        v.insert(v.end(), static_cast<std::size_t>(r), 2);
        v.insert(v.end(), static_cast<std::size_t>(i + 1 - r), 1);
        for (std::uint64_t x = 2; x <= c + 1; ++x) v.push_back(static_cast<unsigned>(x));
        const std::size_t eps_pos =
            static_cast<std::size_t>(i + 1 - r >= b ? r + b + 2 : r + b - i + 2);
        v[eps_pos - 1] += 1;
        CHECK(to_dyck_vector(n, almost_hook_generator(a, b, i)) == DyckVector{v});
      }
    }
}

TEST_CASE("delta unimodality of the generator sequence") {
  for (std::uint64_t a = 2; a <= 6; ++a)
    for (std::uint64_t b = 2; b <= 6; ++b) {
      std::vector<std::size_t> deltas;
      for (std::uint64_t i = 1; i <= 14; ++i)
        deltas.push_back(delta_order(almost_hook_generator(a, b, i)));
      if (a < b) {
        // decreasing to a plateau at a+b spanning indices a..b-1, then rising
        for (std::uint64_t i = 1; i + 1 <= a - 1; ++i)
          CHECK(deltas[i - 1] >= deltas[i]);
        if (a >= 2) CHECK(deltas[a - 2] > deltas[a - 1]);
        CHECK(deltas[a - 1] == a + b);
        CHECK(deltas[b - 2] == a + b);
        for (std::uint64_t i = a; i < b - 1; ++i) CHECK(deltas[i - 1] <= a + b);
        CHECK(deltas[b - 2] < deltas[b - 1]);
        for (std::uint64_t i = b - 1; i + 1 <= 14; ++i)
          CHECK(deltas[i - 1] <= deltas[i]);
      }
      if (a == b) {
        for (std::uint64_t i = 1; i + 1 <= a - 1; ++i)
          CHECK(deltas[i - 1] >= deltas[i]);
        if (a > 2) CHECK(deltas[a - 3] > deltas[a - 2]);
        CHECK(deltas[a - 2] == 2 * a);
        CHECK(deltas[a - 2] < deltas[a - 1]);
        for (std::uint64_t i = a; i + 1 <= 14; ++i)
          CHECK(deltas[i - 1] <= deltas[i]);
      }
    }
}

TEST_CASE("t sets of the (3,4) example") {
  using P = ExponentPair;
  auto diag = [](std::uint64_t n2k, std::uint64_t lo, std::uint64_t hi) {
    std::set<P> out;
    for (std::uint64_t i = lo; i <= hi; ++i) out.insert({i, n2k - i});
    return out;
  };

  const auto [t7, t7p] = t_sets(3, 4, 7);
  CHECK(t7 == std::set<P>{{7, 4}});
  CHECK(t7p == std::set<P>{{4, 7}});

  auto [t8, t8p] = t_sets(3, 4, 8);
  auto want8 = diag(18, 4, 14);
  want8.erase({6, 12});
  CHECK(t8 == want8);
  auto want8p = diag(18, 4, 14);
  want8p.erase({12, 6});
  CHECK(t8p == want8p);

  const auto [t9, t9p] = t_sets(3, 4, 9);
  CHECK(t9 == diag(26, 4, 22));
  CHECK(t9 == t9p);

  auto [t10, t10p] = t_sets(3, 4, 10);
  auto want10 = diag(35, 4, 33);
  want10.erase({32, 3});
  CHECK(t10 == want10);
  auto want10p = diag(35, 2, 31);
  want10p.erase({3, 32});
  CHECK(t10p == want10p);
}

TEST_CASE("almost-hook chains are pairwise n-opposite at desk scale") {
  for (std::uint64_t a = 2; a <= 5; ++a)
    for (std::uint64_t b = 2; b <= 5; ++b) {
      const Chain cs = almost_hook_chain(a, b, binom2(12));
      const Chain csp = almost_hook_chain(b, a, binom2(12));
      for (std::size_t n = 0; n <= 12; ++n) {
        const auto res =
            check_n_opposite_sets(n, cs.intersect_order(n), csp.intersect_order(n));
        CHECK(res.passed());
      }
    }
}

TEST_CASE("conjugate of the shape object lands in the swapped chain") {
  for (std::uint64_t a = 2; a <= 5; ++a)
    for (std::uint64_t b = 2; b <= 5; ++b) {
      const Partition lam = almost_hook_shape(a, b);
      const std::size_t n = static_cast<std::size_t>(lam.size());
      CHECK(lam.conjugate() == almost_hook_shape(b, a));
      const Partition obj = to_partition(n, dyck_vector_of(lam));
      const Partition objc = to_partition(n, dyck_vector_of(lam.conjugate()));
      const Chain cs = almost_hook_chain(a, b, dinv(obj));
      const Chain csp = almost_hook_chain(b, a, dinv(objc));
      const Partition* in_s = cs.at_dinv(dinv(obj));
      const Partition* in_sp = csp.at_dinv(dinv(objc));
      REQUIRE(in_s != nullptr);
      REQUIRE(in_sp != nullptr);
      CHECK(*in_s == obj);
      CHECK(*in_sp == objc);
    }
}

TEST_CASE("a equals b reduces to a single member at order 2a") {
  for (std::uint64_t a = 2; a <= 5; ++a) {
    const Chain c = almost_hook_chain(a, a, binom2(2 * a));
    CHECK(c.intersect_order(2 * a - 1).empty());
    const auto at2a = c.intersect_order(2 * a);
    REQUIRE(at2a.size() == 1);
    CHECK(at2a.front() == almost_hook_generator(a, a, a - 1));
    CHECK(area(2 * a, at2a.front()) == binom2(a) + 1);
    CHECK(dinv(at2a.front()) == binom2(a) + 1);
  }
}
