#ifndef QTCAT_SYMMETRY_HPP
#define QTCAT_SYMMETRY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtcat/nu_chains.hpp"
#include "qtcat/partition.hpp"
#include "qtcat/qt_matrix.hpp"

namespace qtcat {

/* The (dinv, area_n) exponent pairs of a set of Dyck partitions at a fixed
 * order and level; every pair satisfies dinv + area = binom(n,2) - k.
 */
struct ExponentPairSet {
  std::size_t n = 0;
  std::uint64_t k = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
};

ExponentPairSet exponent_pairs(std::size_t n, const std::vector<Partition>& set);

// A multiplicity-1 coefficient matrix built from an exponent-pair set,
// with q = area and t = dinv.
QtMatrix pair_set_matrix(const ExponentPairSet& s);

// True iff area_n(g) == dinv(h) and dinv(g) == area_n(h); symmetric, and
// g == h is allowed.  Rejects partitions outside DP_n.
bool check_opposite_pair(std::size_t n, const Partition& g, const Partition& h);

/* Outcome of the unique-bijection test between two sets of order-n Dyck
 * partitions.  `ok` carries the pairing, sorted by dinv of the left member;
 * `duplicate` carries two left-side members sharing an (area, dinv) pair
 * (so no bijection can be unique); `unmatched` carries an exponent pair
 * whose multiplicity differs between the swapped left side and the right
 * side.
 */
struct OppositePairing {
  std::size_t n = 0;
  std::vector<std::pair<Partition, Partition>> forward;
};

struct NOppositeResult {
  enum class Status { ok, duplicate, unmatched };
  Status status = Status::ok;
  std::optional<OppositePairing> pairing;

  // duplicate: the two offending partitions; unmatched: the (dinv, area)
  // pair with mismatched multiplicity.
  std::vector<Partition> duplicate_witness;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> unmatched_witness;

  bool passed() const { return status == Status::ok; }
  std::string describe() const;
};

/* Decides whether B and C are n-opposite: there is a bijection g: B -> C
 * with area_n(x) = dinv(g(x)) and dinv(x) = area_n(g(x)), and it is unique.
 * Equivalently: the (area, dinv) pairs within B are pairwise distinct, and
 * the swap of B's pair multiset equals C's pair multiset.  Failure is a
 * value, not an error.
 */
NOppositeResult check_n_opposite_sets(std::size_t n, const std::vector<Partition>& B,
                                      const std::vector<Partition>& C);

/* The o/* pattern of a chain at order n: for each dinv i in [x1, x2] (the
 * first and last chain indices whose member fits in DP_n), 'o' when
 * delta_order <= n and '*' otherwise.  Empty when no member fits.  For hook
 * chains the pattern equals its own reversal.
 */
std::string block_pattern(const Chain& chain, std::size_t n);

inline bool is_reversal_symmetric(const std::string& pattern) {
  return std::equal(pattern.begin(), pattern.end(), pattern.rbegin());
}

}  // namespace qtcat

#endif
