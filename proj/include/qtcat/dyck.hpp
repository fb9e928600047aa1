#ifndef QTCAT_DYCK_HPP
#define QTCAT_DYCK_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qtcat/partition.hpp"

namespace qtcat {

/* The area-vector encoding of a Dyck path: v_1 = 0, all v_i >= 0, and
 * v_{i+1} <= v_i + 1.  It follows that v_i <= i - 1.
 */
class DyckVector {
 public:
  DyckVector() = default;

  // Throws std::invalid_argument when the sequence violates an invariant.
  explicit DyckVector(std::vector<unsigned> entries);
  DyckVector(std::initializer_list<unsigned> entries);

  const std::vector<unsigned>& entries() const { return entries_; }
  std::size_t order() const { return entries_.size(); }

  auto operator<=>(const DyckVector&) const = default;

  std::string str() const;

 private:
  std::vector<unsigned> entries_;
};

// Catalan numbers by the convolution recurrence; exact, overflow-checked.
std::uint64_t catalan(std::size_t n);

/* Visits every Dyck vector of length n exactly once, in lexicographic order
 * of entries.  The callback receives the entry buffer; it must not retain
 * the reference.
 */
template <typename F>
void for_each_dyck_vector(std::size_t n, F&& f) {
  std::vector<unsigned> v(n, 0);
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == n) {
      f(const_cast<const std::vector<unsigned>&>(v));
      return;
    }
    unsigned hi = pos == 0 ? 0u : v[pos - 1] + 1;
    for (unsigned x = 0; x <= hi; ++x) {
      v[pos] = x;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
}

std::vector<DyckVector> enumerate_dyck_vectors(std::size_t n);

// The bijection DV_n -> DP_n: (v_1,...,v_n) |-> (n-1-v_n, ..., 1-v_2, 0-v_1).
// Throws when v does not have length n.
Partition to_partition(std::size_t n, const DyckVector& v);

// The inverse bijection DP_n -> DV_n, padding g with zeros to n parts.
// Throws when g is not a Dyck partition of order n.
DyckVector to_dyck_vector(std::size_t n, const Partition& g);

// The inclusion DV_n -> DV_{n+1}: (v_1,...,v_n) |-> (0, v_1+1, ..., v_n+1).
// Satisfies to_partition(n+1, embed(v)) == to_partition(n, v).
DyckVector embed(const DyckVector& v);

// The canonical Dyck vector of a partition: lam_1 zeros, lam_2 ones, and so
// on; an element of DV_{|lam|}.
DyckVector dyck_vector_of(const Partition& lam);

}  // namespace qtcat

#endif
