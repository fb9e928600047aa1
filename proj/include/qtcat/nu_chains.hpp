#ifndef QTCAT_NU_CHAINS_HPP
#define QTCAT_NU_CHAINS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qtcat/partition.hpp"
#include "qtcat/statistics.hpp"

namespace qtcat {

/* A dinv-indexed family of equal-deficit Dyck partitions, materialized up to
 * an explicit dinv bound.  Members are stored sorted by dinv, one per dinv
 * value; for chains built by the hook and almost-hook constructors the dinv
 * values form a contiguous interval, but a chain materialized from an
 * arbitrary specification may have gaps (the verifier reports those).
 * segment_starts records the dinv values where construction segments begin.
 */
struct Chain {
  Partition label;
  std::vector<std::uint64_t> dinvs;    // strictly increasing
  std::vector<Partition> members;      // parallel to dinvs
  std::vector<std::uint64_t> segment_starts;

  // nullptr when no member has that dinv.
  const Partition* at_dinv(std::uint64_t d) const;

  std::uint64_t min_dinv() const { return dinvs.front(); }
  std::uint64_t max_dinv() const { return dinvs.back(); }
  bool contiguous() const {
    return dinvs.empty() || dinvs.back() - dinvs.front() + 1 == dinvs.size();
  }

  // Members restricted to DP_n.
  std::vector<Partition> intersect_order(std::size_t n) const;
};

// --- The nu operator -------------------------------------------------------

// nu(g) = (len(g)+1, g_1 - 1, ..., g_len - 1), defined iff g_1 <= len(g)+2.
// Raises dinv by 1, preserves deficit.  Undefined is a value, not an error.
std::optional<Partition> nu(const Partition& g);

// The unique h with nu(h) == g, when it exists.
std::optional<Partition> nu_inverse(const Partition& g);

// nu applied m times; nullopt as soon as any step is undefined.
std::optional<Partition> nu_power(const Partition& g, std::uint64_t m);

// nu transported to Dyck vectors: with a the maximal index such that
// v_a = a-1, the result is (v_1,..,v_{a-1},v_{a+1},..,v_n,a-2).  Throws when
// nu is undefined on the corresponding partition (a-2 > v_n+1) or the result
// leaves DP_n (a < 2).
DyckVector nu_on_vector(std::size_t n, const DyckVector& v);

// --- Seeds and segments ----------------------------------------------------

// The canonical deficit-k partition with dinv = binom(l+1,2):
// (l^{1+floor(k/l)}, l-1, ..., 1) with 1 added to the r = k mod l rows after
// the flat run.  hook_seed(0,0) is the zero partition; l = 0 with k > 0 is
// rejected.
Partition hook_seed(std::uint64_t k, std::uint64_t l);

/* Number of guaranteed nu iterations from g: with H = { j : g_j = g_{j+1} =
 * g_{j+2} > 0 }, rho(g) is g_{max H}, or g_1 when H is empty, or 0 when
 * nu(g) is undefined.
 */
std::uint64_t rho(const Partition& g);

// R(g) = [ nu^m(g) : 0 <= m <= rho(g) ]; dinv rises by 1 per step.
std::vector<Partition> r_segment(const Partition& g);

// --- Hook chains -----------------------------------------------------------

/* The chain of deficit-k partitions built from the seeds hook_seed(k, l):
 * the union over l >= min(1,k) of { nu^m(seed) : 0 <= m <= l }, truncated to
 * dinv <= max_dinv.  Holds exactly one member for every dinv in
 * [min(1,k), max_dinv].
 */
Chain hook_chain(std::uint64_t k, std::uint64_t max_dinv);

/* The sequence a_i = delta_order of the hook-chain member with dinv = i,
 * for i = 1..count, grouped into blocks by seed.  Closed form:
 * writing i = binom(l+1,2) + m, a_i equals s(l) = l + ceil(k/l) + 1 for
 * m <= (-k mod l), and s(l)+1 beyond.
 */
struct OrderSequence {
  std::uint64_t k = 0;
  std::vector<std::size_t> values;       // values[i] is a_{i + index_base}
  std::vector<std::size_t> block_sizes;  // consecutive run lengths per seed block
  std::uint64_t index_base = 1;

  std::string str() const;  // blocks joined by "; ", values by ", "
};

OrderSequence a_sequence(std::uint64_t k, std::size_t count);

// Same values computed by materializing chain members and taking
// delta_order directly; kept for cross-checking the closed form.
OrderSequence a_sequence_direct(std::uint64_t k, std::size_t count);

// --- Natural partitions and their nu tails ----------------------------------

// zeta(mu) = mu_1 + len(mu).
std::uint64_t natural_zeta(const Partition& mu);

/* The natural partition of mu: the order-(zeta+1) Dyck partition whose Dyck
 * vector is (0,0,1^{e_1},0,1^{e_2},...,0,1^{e_k}) where mu has e_j parts
 * equal to j.  Equals the staircase of order zeta+1 with the cells
 * u_{mu_1+len(mu)}, u_{mu_2+len(mu)-1}, ... removed.  Its deficit is |mu|.
 */
Partition natural_gamma(const Partition& mu);

// The cell-removal route to the same partition: the order-(zeta+1)
// staircase minus the cells u_{mu_i + len(mu) - i + 1}.  Must agree with
// natural_gamma; kept as an independent construction for cross-checks.
Partition natural_gamma_by_removal(const Partition& mu);

// Closed form for dinv(nu^m(natural_gamma(mu))):
// binom(mu_1+len(mu)+1, 2) - |mu| - len(mu) + m.
std::uint64_t nu_tail_dinv(const Partition& mu, std::uint64_t m);

// --- The statistic-swapping involution on hook chains -----------------------

/* For g in the hook chain of level k restricted to DP_n, returns the chain
 * member whose dinv equals area(n, g) (and vice versa); an involution.
 * Rejects g outside the chain or outside DP_n.
 */
Partition f_bijection(std::size_t n, std::uint64_t k, const Partition& g);

// --- Arithmetic helpers from the chain analysis ------------------------------

namespace detail {

// Nonnegative remainder j mod l (j may be negative); l > 0.
std::uint64_t r_mod(std::int64_t j, std::uint64_t l);

// The unique representative of j mod l in {1, ..., l}; so multiples of l
// map to l.
std::uint64_t r_plus(std::int64_t j, std::uint64_t l);

// tau(l) = ceil(k/l); s(l) = l + tau(l) + 1 (both depend on the level k).
std::uint64_t tau(std::uint64_t k, std::uint64_t l);
std::uint64_t s_value(std::uint64_t k, std::uint64_t l);

// big_l(k) = max{ l : l <= tau(l) } = max{ l : l^2 - l < k }, for k >= 1.
std::uint64_t big_l(std::uint64_t k);

// Decomposes i >= 0 uniquely as binom(l+1,2) + m with 0 <= m <= l.
struct TriangularSplit {
  std::uint64_t l = 0;
  std::uint64_t m = 0;
};
TriangularSplit split_triangular(std::uint64_t i);

}  // namespace detail

}  // namespace qtcat

#endif
