#ifndef QTCAT_VERIFIER_HPP
#define QTCAT_VERIFIER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtcat/nu_chains.hpp"
#include "qtcat/partition.hpp"

namespace qtcat {

// --- Level slices and the partition-counting identity -----------------------

// { g : deficit(g) = k, dinv(g) = d }, enumerated through Par(k+d).
std::vector<Partition> dp_star_k_slice(std::uint64_t k, std::uint64_t d);

// Number of partitions of k into at most d parts; always equals the size of
// dp_star_k_slice(k, d).
std::uint64_t p_leq(std::uint64_t d, std::uint64_t k);

// --- Chain specifications ----------------------------------------------------

/* One chain of a level-k decomposition.  kind "explicit" expands the listed
 * generators through r_segment and appends the infinite nu tail seeded by
 * natural_gamma(tail_mu); kind "hook" delegates to hook_chain(k); kind
 * "almost-hook" delegates to almost_hook_chain(a, b).
 */
struct ChainEntry {
  enum class Kind { explicit_, hook, almost_hook };

  Partition mu;
  Partition mu_star;
  Kind kind = Kind::explicit_;

  // explicit_
  std::vector<Partition> generators;
  Partition tail_mu;

  // almost_hook
  std::uint64_t a = 0;
  std::uint64_t b = 0;

  friend bool operator==(const ChainEntry&, const ChainEntry&) = default;
};

struct ChainSpec {
  std::uint64_t k = 0;
  std::vector<ChainEntry> entries;

  const ChainEntry* find(const Partition& mu) const;
  friend bool operator==(const ChainSpec&, const ChainSpec&) = default;
};

// The transcription of the published decomposition lists, k <= 6.
ChainSpec builtin_spec(std::uint64_t k);

// Materializes one entry up to max_dinv.  Throws std::invalid_argument when
// segments or the tail collide on a dinv value or on equal partitions.
Chain materialize_chain(const ChainEntry& entry, std::uint64_t max_dinv);

// --- The strong-decomposition verifier ---------------------------------------

struct ConditionReport {
  bool passed = true;
  std::string witness;  // empty on pass
};

/* Verdicts for the decomposition conditions, checked with every bound
 * derived from k:
 *   (1)  the materialized chains are pairwise disjoint;
 *   (2)  they cover every deficit-k partition with dinv <= the coverage
 *        bound (redundant given (1)+(4)+(5), checked directly);
 *   (3)  nu^m(natural_gamma(mu)) lies in chain mu for every m within the
 *        truncation;
 *   (4)  mu -> mu_star is an involution of Par(k);
 *   (5)  chain mu holds exactly one member per dinv >= len(mu_star), tiles
 *        into r_segment blocks, and the block-seed delta_orders are weakly
 *        decreasing then weakly increasing;
 *   (6') for max(zeta(mu)+1, zeta(mu_star)+1) <= n <= n_k + 1, the dinv
 *        values realized inside DP_n are exactly [len(mu_star),
 *        binom(n,2) - k - len(mu)];
 *   (7)  each chain is closed under nu;
 *   (8)  whenever the canonical Dyck object of lambda lands in chain mu,
 *        the object of the conjugate lands in chain mu_star;
 *   (9') for every n <= n_k, chain mu and chain mu_star restricted to DP_n
 *        are n-opposite.
 */
struct VerificationReport {
  std::uint64_t k = 0;
  std::size_t n_k = 0;
  std::uint64_t max_dinv = 0;
  std::map<std::string, ConditionReport> conditions;  // keys "1","2","3","4","5","6p","7","8","9p"

  bool passed() const;
  std::string text() const;  // one line per condition plus an overall line
};

struct VerifyOptions {
  // n_k may be any integer >= k+2; 0 picks that smallest valid value.
  std::size_t n_k = 0;
  // 0 picks binom(k+3,2)+5, covering every finite-reduction window.
  std::uint64_t max_dinv = 0;
};

VerificationReport verify_strong_conjecture(const ChainSpec& spec,
                                            VerifyOptions options = {});

/* Searches for a valid level-k decomposition.  The nu tails are forced (one
 * per mu in Par(k)); the finitely many remaining deficit-k partitions split
 * into forced r_segment tiles, which are assigned to chains by backtracking
 * over dinv-contiguous placements; candidate mu_star involutions are then
 * enumerated and each full candidate is verified.  Deterministic exploration
 * order; returns the first decomposition that verifies, or nullopt.
 */
std::optional<ChainSpec> search_decomposition(std::uint64_t k);

// Entry-set equality up to generator order and entry order.
bool specs_equivalent(const ChainSpec& lhs, const ChainSpec& rhs);

}  // namespace qtcat

#endif
