#include "qtcat/statistics.hpp"

#include <algorithm>
#include <stdexcept>

#include "qtcat/checked.hpp"

namespace qtcat {

std::uint64_t area(const DyckVector& v) {
  std::uint64_t s = 0;
  for (unsigned x : v.entries()) s += x;
  return s;
}

std::uint64_t dinv(const DyckVector& v) {
  // Left-to-right sweep counting earlier entries equal to x or x+1.
  const auto& e = v.entries();
  std::vector<std::uint32_t> cnt(e.size() + 2, 0);
  std::uint64_t d = 0;
  for (unsigned x : e) {
    d += cnt[x] + cnt[x + 1];
    ++cnt[x];
  }
  return d;
}

std::uint64_t dinv_quadratic(const DyckVector& v) {
  const auto& e = v.entries();
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      long diff = static_cast<long>(e[i]) - static_cast<long>(e[j]);
      if (diff == 0 || diff == 1) ++d;
    }
  return d;
}

std::uint64_t deficit(std::size_t n, const DyckVector& v) {
  if (v.order() != n)
    throw std::invalid_argument("deficit: vector length differs from order");
  return binom2(n) - area(v) - dinv(v);
}

StatTriple stats(std::size_t n, const DyckVector& v) {
  StatTriple s;
  s.area = area(v);
  s.dinv = dinv(v);
  s.deficit = binom2(n) - s.area - s.dinv;
  return s;
}

namespace {
void require_cell(const Partition& g, Cell c) {
  if (!cell_in_diagram(g, c))
    throw std::invalid_argument("cell outside the diagram");
}
}  // namespace

std::uint64_t arm(const Partition& g, Cell c) {
  require_cell(g, c);
  return g.part(c.row) - c.col;
}

std::uint64_t leg(const Partition& g, Cell c) {
  require_cell(g, c);
  return g.conjugate().part(c.col) - c.row;
}

std::uint64_t coarm(const Partition& g, Cell c) {
  require_cell(g, c);
  return c.col - 1;
}

std::uint64_t coleg(const Partition& g, Cell c) {
  require_cell(g, c);
  return c.row - 1;
}

std::uint64_t dinv(const Partition& g) {
  const Partition conj = g.conjugate();
  std::uint64_t d = 0;
  for (std::size_t i = 1; i <= g.length(); ++i)
    for (std::size_t j = 1; j <= g.part(i); ++j) {
      // arm - leg in {0,1}
      long diff = (static_cast<long>(g.part(i)) - static_cast<long>(j)) -
                  (static_cast<long>(conj.part(j)) - static_cast<long>(i));
      if (diff == 0 || diff == 1) ++d;
    }
  return d;
}

std::uint64_t deficit(const Partition& g) { return g.size() - dinv(g); }

std::size_t delta_order(const Partition& g) {
  if (g.is_zero()) return 0;
  std::size_t n = g.length() + 1;
  for (std::size_t i = 1; i <= g.length(); ++i)
    n = std::max(n, static_cast<std::size_t>(g.part(i)) + i);
  return n;
}

std::uint64_t area(std::size_t n, const Partition& g) {
  if (delta_order(g) > n)
    throw std::invalid_argument("area: partition does not fit in the order-n staircase");
  return binom2(n) - g.size();
}

StatTriple stats(std::size_t n, const Partition& g) {
  StatTriple s;
  s.area = area(n, g);
  s.dinv = dinv(g);
  s.deficit = binom2(n) - s.area - s.dinv;
  return s;
}

}  // namespace qtcat
