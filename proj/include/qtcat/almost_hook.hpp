#ifndef QTCAT_ALMOST_HOOK_HPP
#define QTCAT_ALMOST_HOOK_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <utility>

#include "qtcat/nu_chains.hpp"
#include "qtcat/partition.hpp"

namespace qtcat {

/* Parameters of an almost-hook chain.  The pair (a, b) with a, b >= 2
 * encodes the shape lambda = (b, 2, 1^{a-2}); the chain label is
 * (ab-b-1, b-1) and every member has deficit ab-2.
 */
struct AlmostHookLabel {
  std::uint64_t a = 0;
  std::uint64_t b = 0;

  std::uint64_t level() const { return a * b - 2; }
  std::pair<std::uint64_t, std::uint64_t> label_pair() const {
    return {a * b - b - 1, b - 1};
  }
};

// Recovers (a, b) from a label pair (u, v); nullopt when no valid a, b >= 2
// produce it.
std::optional<AlmostHookLabel> almost_hook_label_from_pair(std::uint64_t u,
                                                           std::uint64_t v);

/* The i-th generator of the chain (i >= 1):
 *   hook_seed((b-1)a, i) + hook_seed(a-2, 1)   entrywise, for i <= b-1,
 *   hook_seed(b(a-1), i+1) minus cell u_b       for i >= b-1;
 * the two expressions coincide at i = b-1.
 */
Partition almost_hook_generator(std::uint64_t a, std::uint64_t b, std::uint64_t i);

/* The 1-based position j such that subtracting 1 from part j of
 * hook_seed(b(a-1), i+1) realizes the removal of cell u_b; valid for
 * i >= b-1.
 */
std::size_t removed_cell_position(std::uint64_t a, std::uint64_t b, std::uint64_t i);

// [ nu^m(generator) : 0 <= m <= i ] for i <= b-2, upper bound i+1 for
// i >= b-1.
std::vector<Partition> almost_hook_segment(std::uint64_t a, std::uint64_t b,
                                           std::uint64_t i);

// Union of the segments for i = 1, 2, ..., truncated to dinv <= max_dinv.
// Holds exactly one member for every dinv in [2, max_dinv].
Chain almost_hook_chain(std::uint64_t a, std::uint64_t b, std::uint64_t max_dinv);

// delta_order of the member with dinv = i, for i = 2..count+1, blocked by
// generator segment.
OrderSequence almost_hook_order_sequence(std::uint64_t a, std::uint64_t b,
                                         std::size_t count);

using ExponentPair = std::pair<std::uint64_t, std::uint64_t>;  // (dinv, area)

// The (dinv, area_n) pair sets of the chains for (a,b) and for (b,a),
// restricted to DP_n.
std::pair<std::set<ExponentPair>, std::set<ExponentPair>> t_sets(std::uint64_t a,
                                                                 std::uint64_t b,
                                                                 std::size_t n);

}  // namespace qtcat

#endif
