#ifndef QTCAT_PARTITION_HPP
#define QTCAT_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qtcat {

/* An integer partition in canonical form: a weakly decreasing sequence of
 * positive parts, with trailing zeros stripped.  The zero partition is the
 * empty sequence; sequences differing only in trailing zeros are identified,
 * so (3,3,1) and (3,3,1,0) construct the same value.  Equality, ordering and
 * hashing are all defined on canonical form.
 */
class Partition {
 public:
  Partition() = default;

  // Canonicalizes the input (strips trailing zeros).  Throws
  // std::invalid_argument if the sequence is not weakly decreasing or
  // contains a zero before a positive part.
  explicit Partition(std::vector<unsigned> parts);
  Partition(std::initializer_list<unsigned> parts);

  const std::vector<unsigned>& parts() const { return parts_; }
  bool is_zero() const { return parts_.empty(); }

  // Number of (nonzero) parts.
  std::size_t length() const { return parts_.size(); }

  // Sum of parts.
  std::uint64_t size() const;

  // 1-based part accessor; returns 0 beyond length(), matching the
  // zero-padding convention.
  unsigned part(std::size_t i) const {
    return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0u;
  }

  Partition conjugate() const;

  auto operator<=>(const Partition&) const = default;

  // Text form "(5,4,1)"; the zero partition renders as "(0)".
  std::string str() const;

 private:
  std::vector<unsigned> parts_;
};

/* A cell of a partition diagram in matrix convention: (row, col) with
 * row 1 at the top and col 1 at the left, both 1-based.
 */
struct Cell {
  std::size_t row = 0;
  std::size_t col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

inline bool cell_in_diagram(const Partition& g, Cell c) {
  return c.row >= 1 && c.row <= g.length() && c.col >= 1 && c.col <= g.part(c.row);
}

/* Cells of dg(g) listed as u_1, u_2, ..., u_{|g|}: descending in the total
 * order where (i,j) < (i',j') iff i+j < i'+j', with ties broken by i < i'.
 * So u_1 is the largest cell: maximal i+j, then maximal row.
 */
std::vector<Cell> u_cells(const Partition& g);

// Removes the cells u_{i} for i in u_indices (1-based into the u-order).
// Throws std::invalid_argument when an index is out of range or the
// residual cell set is not a partition diagram.
Partition remove_cells(const Partition& g, const std::vector<std::size_t>& u_indices);

// The staircase partition (n-1, n-2, ..., 1); the zero partition for n <= 1.
Partition staircase(std::size_t n);

/* Visits every partition of n exactly once, in reverse-lexicographic
 * (descending) order: (n), (n-1,1), ..., (1^n).  n = 0 yields the zero
 * partition.
 */
template <typename F>
void for_each_partition(std::uint64_t n, F&& f) {
  std::vector<unsigned> a;
  // Recursive descent: extend with parts no larger than `cap`, largest first.
  auto rec = [&](auto&& self, std::uint64_t rest, unsigned cap) -> void {
    if (rest == 0) {
      f(Partition(a));
      return;
    }
    unsigned hi = static_cast<unsigned>(rest < cap ? rest : cap);
    for (unsigned p = hi; p >= 1; --p) {
      a.push_back(p);
      self(self, rest - p, p);
      a.pop_back();
    }
  };
  if (n == 0) {
    f(Partition());
    return;
  }
  rec(rec, n, n > 0xffffffffull ? 0xffffffffu : static_cast<unsigned>(n));
}

std::vector<Partition> enumerate_partitions(std::uint64_t n);

}  // namespace qtcat

#endif
