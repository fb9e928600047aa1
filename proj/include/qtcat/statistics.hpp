#ifndef QTCAT_STATISTICS_HPP
#define QTCAT_STATISTICS_HPP

#include <cstddef>
#include <cstdint>

#include "qtcat/dyck.hpp"
#include "qtcat/partition.hpp"

namespace qtcat {

struct StatTriple {
  std::uint64_t area = 0;
  std::uint64_t dinv = 0;
  std::uint64_t deficit = 0;
};

// --- Dyck vector statistics ---------------------------------------------

// Sum of entries.
std::uint64_t area(const DyckVector& v);

// Number of pairs i < j with v_i - v_j in {0,1}.  Linear-time bucket count.
std::uint64_t dinv(const DyckVector& v);

// O(n^2) reference implementation of the same count, kept for cross-checks.
std::uint64_t dinv_quadratic(const DyckVector& v);

std::uint64_t deficit(std::size_t n, const DyckVector& v);
StatTriple stats(std::size_t n, const DyckVector& v);

// --- Cell statistics ------------------------------------------------------

// All four reject cells outside the diagram.
std::uint64_t arm(const Partition& g, Cell c);
std::uint64_t leg(const Partition& g, Cell c);
std::uint64_t coarm(const Partition& g, Cell c);
std::uint64_t coleg(const Partition& g, Cell c);

// --- Dyck partition statistics (order-independent unless stated) ----------

// Number of cells with arm - leg in {0,1}.
std::uint64_t dinv(const Partition& g);

// |g| - dinv(g); also the number of cells with arm - leg outside {0,1}.
std::uint64_t deficit(const Partition& g);

// The minimum n with g in DP_n; 0 for the zero partition.
std::size_t delta_order(const Partition& g);

// binom(n,2) - |g|.  Rejects n < delta_order(g).
std::uint64_t area(std::size_t n, const Partition& g);

StatTriple stats(std::size_t n, const Partition& g);

}  // namespace qtcat

#endif
