#include "qtcat/verifier.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qtcat/almost_hook.hpp"
#include "qtcat/checked.hpp"
#include "qtcat/dyck.hpp"
#include "qtcat/statistics.hpp"
#include "qtcat/symmetry.hpp"

namespace qtcat {

std::vector<Partition> dp_star_k_slice(std::uint64_t k, std::uint64_t d) {
  std::vector<Partition> out;
  for_each_partition(k + d, [&](const Partition& g) {
    if (deficit(g) == k) out.push_back(g);  // then dinv = |g| - k = d
  });
  return out;
}

std::uint64_t p_leq(std::uint64_t d, std::uint64_t k) {
  // Partitions of k into at most d parts, by the bounded-parts recurrence
  // P(k, d) = P(k, d-1) + P(k-d, d).
  if (k == 0) return 1;
  std::vector<std::uint64_t> row(k + 1, 0);
  row[0] = 1;
  for (std::uint64_t parts = 1; parts <= d && parts <= k; ++parts)
    for (std::uint64_t m = parts; m <= k; ++m)
      row[m] = checked_add(row[m], row[m - parts]);
  return row[k];
}

const ChainEntry* ChainSpec::find(const Partition& mu) const {
  for (const ChainEntry& e : entries)
    if (e.mu == mu) return &e;
  return nullptr;
}

Chain materialize_chain(const ChainEntry& entry, std::uint64_t max_dinv) {
  if (entry.kind == ChainEntry::Kind::hook)
    return hook_chain(entry.mu.size(), max_dinv);
  if (entry.kind == ChainEntry::Kind::almost_hook) {
    auto label = almost_hook_label_from_pair(entry.mu.part(1), entry.mu.part(2));
    if (!label || AlmostHookLabel{entry.a, entry.b}.label_pair() != label->label_pair())
      throw std::invalid_argument("materialize_chain: almost-hook parameters do not "
                                  "match the chain label " + entry.mu.str());
    return almost_hook_chain(entry.a, entry.b, max_dinv);
  }

  std::map<std::uint64_t, Partition> by_dinv;
  auto insert = [&](Partition g) {
    const std::uint64_t d = dinv(g);
    if (d > max_dinv) return;
    auto [it, inserted] = by_dinv.emplace(d, std::move(g));
    if (!inserted)
      throw std::invalid_argument("materialize_chain: members collide at dinv " +
                                  std::to_string(d) + " in chain " + entry.mu.str());
  };

  Chain chain;
  chain.label = entry.mu;
  for (const Partition& g : entry.generators) {
    chain.segment_starts.push_back(dinv(g));
    for (Partition& member : r_segment(g)) insert(std::move(member));
  }
  Partition cur = natural_gamma(entry.tail_mu);
  chain.segment_starts.push_back(dinv(cur));
  for (;;) {
    const std::uint64_t d = dinv(cur);
    if (d > max_dinv) break;
    auto next = nu(cur);
    insert(std::move(cur));
    if (!next) throw std::logic_error("materialize_chain: nu tail became undefined");
    cur = std::move(*next);
  }
  std::sort(chain.segment_starts.begin(), chain.segment_starts.end());
  for (auto& [d, g] : by_dinv) {
    chain.dinvs.push_back(d);
    chain.members.push_back(std::move(g));
  }
  return chain;
}

bool VerificationReport::passed() const {
  for (const auto& [name, c] : conditions)
    if (!c.passed) return false;
  return true;
}

std::string VerificationReport::text() const {
  static const char* order[] = {"1", "2", "3", "4", "5", "6p", "7", "8", "9p"};
  std::ostringstream out;
  out << "level k = " << k << ", n_k = " << n_k << ", truncation dinv <= "
      << max_dinv << '\n';
  for (const char* name : order) {
    auto it = conditions.find(name);
    if (it == conditions.end()) continue;
    std::string label = std::string(name);
    if (label.back() == 'p') label = label.substr(0, label.size() - 1) + "'";
    out << "  (" << label << ") " << (it->second.passed ? "pass" : "FAIL");
    if (!it->second.passed) out << "  [" << it->second.witness << "]";
    out << '\n';
  }
  out << (passed() ? "overall: pass" : "overall: FAIL") << '\n';
  return out.str();
}

namespace {

// Deficit of the canonical Dyck object of lambda, computed on the vector.
std::uint64_t dyck_object_deficit(const Partition& lam) {
  const DyckVector v = dyck_vector_of(lam);
  return binom2(v.order()) - area(v) - dinv(v);
}

struct MaterializedSpec {
  std::vector<const ChainEntry*> entries;
  std::vector<Chain> chains;

  const Chain* chain_of(const Partition& mu) const {
    for (std::size_t i = 0; i < entries.size(); ++i)
      if (entries[i]->mu == mu) return &chains[i];
    return nullptr;
  }
};

/* Locates gamma among the materialized chains.  Members beyond the
 * truncation are reached by walking nu_inverse down into the materialized
 * window; this is sound once conditions (5) and (7) hold, which the caller
 * checks independently.
 */
const ChainEntry* find_containing_chain(const MaterializedSpec& ms,
                                        std::uint64_t max_dinv, Partition gamma) {
  while (dinv(gamma) > max_dinv) {
    auto prev = nu_inverse(gamma);
    if (!prev) return nullptr;
    gamma = std::move(*prev);
  }
  const std::uint64_t d = dinv(gamma);
  for (std::size_t i = 0; i < ms.chains.size(); ++i) {
    const Partition* member = ms.chains[i].at_dinv(d);
    if (member && *member == gamma) return ms.entries[i];
  }
  return nullptr;
}

bool valley_unimodal(const std::vector<std::size_t>& seq) {
  bool rising = false;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (seq[i + 1] > seq[i]) rising = true;
    else if (seq[i + 1] < seq[i] && rising) return false;
  }
  return true;
}

}  // namespace

VerificationReport verify_strong_conjecture(const ChainSpec& spec,
                                            VerifyOptions options) {
  const std::uint64_t k = spec.k;
  VerificationReport report;
  report.k = k;
  report.n_k = options.n_k ? options.n_k : static_cast<std::size_t>(k) + 2;
  if (report.n_k < k + 2)
    throw std::invalid_argument("verify: n_k must be at least k+2");
  const std::uint64_t coverage_bound = binom2(k + 3);
  report.max_dinv = options.max_dinv
                        ? options.max_dinv
                        : std::max(coverage_bound + 5, binom2(report.n_k + 1));
  const std::uint64_t max_dinv = report.max_dinv;

  auto fail = [&](const std::string& cond, const std::string& witness) {
    auto& c = report.conditions[cond];
    if (c.passed) {
      c.passed = false;
      c.witness = witness;
    }
  };
  for (const char* name : {"1", "2", "3", "4", "5", "6p", "7", "8", "9p"})
    report.conditions[name];

  // (4) mu* is an involution and the entries list Par(k) exactly once.
  {
    std::set<Partition> mus;
    for (const ChainEntry& e : spec.entries) {
      if (e.mu.size() != k) fail("4", "entry " + e.mu.str() + " is not a partition of k");
      if (!mus.insert(e.mu).second) fail("4", "entry " + e.mu.str() + " repeated");
    }
    if (mus.size() != enumerate_partitions(k).size())
      fail("4", "entries do not exhaust the partitions of k");
    for (const ChainEntry& e : spec.entries) {
      const ChainEntry* star = spec.find(e.mu_star);
      if (!star || star->mu_star != e.mu)
        fail("4", "mu* of " + e.mu.str() + " is not an involution");
    }
  }

  // Materialize every chain; a dinv collision is a uniqueness failure (5).
  MaterializedSpec ms;
  for (const ChainEntry& e : spec.entries) {
    try {
      ms.chains.push_back(materialize_chain(e, max_dinv));
      ms.entries.push_back(&e);
    } catch (const std::invalid_argument& err) {
      fail("5", err.what());
    }
  }

  // (1) pairwise disjointness.
  {
    std::map<Partition, const Partition*> seen;  // member -> chain label
    for (std::size_t i = 0; i < ms.chains.size(); ++i)
      for (const Partition& g : ms.chains[i].members) {
        auto [it, inserted] = seen.emplace(g, &ms.entries[i]->mu);
        if (!inserted && *it->second != ms.entries[i]->mu)
          fail("1", g.str() + " lies in chains " + it->second->str() + " and " +
                        ms.entries[i]->mu.str());
      }
  }

  // (5) per chain: one member per dinv from len(mu*), r_segment tiling,
  // valley-unimodal seed delta_orders.
  for (std::size_t ci = 0; ci < ms.chains.size(); ++ci) {
    const Chain& chain = ms.chains[ci];
    const ChainEntry& e = *ms.entries[ci];
    const std::string tag = "chain " + e.mu.str();
    if (chain.members.empty()) {
      fail("5", tag + " is empty");
      continue;
    }
    if (chain.min_dinv() != e.mu_star.length()) {
      fail("5", tag + " starts at dinv " + std::to_string(chain.min_dinv()) +
                    ", expected len(mu*) = " + std::to_string(e.mu_star.length()));
      continue;
    }
    if (!chain.contiguous()) {
      std::uint64_t expect = chain.min_dinv();
      for (std::uint64_t d : chain.dinvs) {
        if (d != expect) break;
        ++expect;
      }
      fail("5", tag + " has no member with dinv " + std::to_string(expect));
      continue;
    }
    // Greedy forced tiling into r_segment blocks.
    std::vector<std::size_t> seed_deltas;
    std::size_t pos = 0;
    bool tiled = true;
    while (pos < chain.members.size() && tiled) {
      const Partition& seed = chain.members[pos];
      seed_deltas.push_back(delta_order(seed));
      const std::uint64_t bound = rho(seed);
      Partition cur = seed;
      for (std::uint64_t m = 1; m <= bound && pos + m < chain.members.size(); ++m) {
        cur = *nu(cur);
        if (chain.members[pos + m] != cur) {
          fail("5", tag + ": members do not tile into R-segments near dinv " +
                        std::to_string(chain.dinvs[pos + m]));
          tiled = false;
          break;
        }
      }
      pos += static_cast<std::size_t>(bound) + 1;
    }
    if (tiled && !valley_unimodal(seed_deltas))
      fail("5", tag + ": segment-seed orders are not decreasing-then-increasing");
  }

  // (3) the nu tail of natural_gamma(mu) stays in chain mu.
  for (std::size_t ci = 0; ci < ms.chains.size(); ++ci) {
    const ChainEntry& e = *ms.entries[ci];
    Partition cur = natural_gamma(e.mu);
    for (;;) {
      const std::uint64_t d = dinv(cur);
      if (d > max_dinv) break;
      const Partition* member = ms.chains[ci].at_dinv(d);
      if (!member || *member != cur) {
        fail("3", "nu tail of natural partition " + cur.str() + " leaves chain " +
                      e.mu.str() + " at dinv " + std::to_string(d));
        break;
      }
      auto next = nu(cur);
      if (!next) {
        fail("3", "nu undefined on tail member " + cur.str());
        break;
      }
      cur = std::move(*next);
    }
  }

  // (7) nu-closure of each chain.
  for (std::size_t ci = 0; ci < ms.chains.size(); ++ci) {
    const Chain& chain = ms.chains[ci];
    for (std::size_t i = 0; i < chain.members.size(); ++i) {
      auto next = nu(chain.members[i]);
      if (!next) continue;
      const std::uint64_t d = chain.dinvs[i] + 1;
      if (d > max_dinv) continue;
      const Partition* member = chain.at_dinv(d);
      if (!member || *member != *next)
        fail("7", "chain " + ms.entries[ci]->mu.str() + " is not nu-closed at " +
                      chain.members[i].str());
    }
  }

  // (6') dinv-window equivalence for the stated order range.
  for (std::size_t ci = 0; ci < ms.chains.size(); ++ci) {
    const Chain& chain = ms.chains[ci];
    const ChainEntry& e = *ms.entries[ci];
    const std::size_t n_lo = static_cast<std::size_t>(
        std::max(natural_zeta(e.mu), natural_zeta(e.mu_star)) + 1);
    for (std::size_t n = n_lo; n <= report.n_k + 1; ++n) {
      const std::int64_t hi = static_cast<std::int64_t>(binom2(n)) -
                              static_cast<std::int64_t>(k) -
                              static_cast<std::int64_t>(e.mu.length());
      for (std::uint64_t i = 0; i <= binom2(n); ++i) {
        const bool in_window =
            i >= e.mu_star.length() && static_cast<std::int64_t>(i) <= hi;
        const Partition* member = chain.at_dinv(i);
        const bool realized = member && delta_order(*member) <= n;
        if (in_window != realized) {
          fail("6p", "chain " + e.mu.str() + ", n = " + std::to_string(n) +
                         ", dinv = " + std::to_string(i) +
                         (in_window ? ": expected a member in DP_n"
                                    : ": unexpected member in DP_n"));
          break;
        }
      }
    }
  }

  // (2) coverage of every deficit-k partition up to the coverage bound.
  for (std::uint64_t d = 0; d <= coverage_bound; ++d) {
    std::set<Partition> covered;
    for (const Chain& chain : ms.chains) {
      const Partition* member = chain.at_dinv(d);
      if (member) covered.insert(*member);
    }
    for (const Partition& g : dp_star_k_slice(k, d)) {
      if (!covered.count(g)) {
        fail("2", g.str() + " (dinv " + std::to_string(d) + ") lies in no chain");
        break;
      }
    }
    if (!report.conditions["2"].passed) break;
  }

  // (8) conjugate transport of the canonical Dyck objects.
  {
    const std::uint64_t size_bound = k > 0 ? coverage_bound + k : 20;
    for (std::uint64_t n = 0; n <= size_bound; ++n) {
      for_each_partition(n, [&](const Partition& lam) {
        if (!report.conditions["8"].passed) return;
        if (dyck_object_deficit(lam) != k) return;
        const Partition g = to_partition(static_cast<std::size_t>(n), dyck_vector_of(lam));
        const ChainEntry* home = find_containing_chain(ms, max_dinv, g);
        if (!home) {
          fail("8", "Dyck object of " + lam.str() + " lies in no chain");
          return;
        }
        const Partition gc =
            to_partition(static_cast<std::size_t>(n), dyck_vector_of(lam.conjugate()));
        const ChainEntry* image = find_containing_chain(ms, max_dinv, gc);
        if (!image || image->mu != home->mu_star)
          fail("8", "Dyck objects of " + lam.str() + " and its conjugate land in " +
                        home->mu.str() + " / " +
                        (image ? image->mu.str() : std::string("no chain")) +
                        ", expected mu* = " + home->mu_star.str());
      });
      if (!report.conditions["8"].passed) break;
    }
  }

  // (9') n-opposite restriction checks through n_k.
  for (std::size_t ci = 0; ci < ms.chains.size(); ++ci) {
    const ChainEntry& e = *ms.entries[ci];
    const Chain* star_chain = ms.chain_of(e.mu_star);
    if (!star_chain) continue;  // reported under (4)
    for (std::size_t n = 0; n <= report.n_k; ++n) {
      auto res = check_n_opposite_sets(n, ms.chains[ci].intersect_order(n),
                                       star_chain->intersect_order(n));
      if (!res.passed()) {
        fail("9p", "chains " + e.mu.str() + " and " + e.mu_star.str() + " at n = " +
                       std::to_string(n) + ": " + res.describe());
        break;
      }
    }
  }

  return report;
}

// --- Decomposition search ----------------------------------------------------

namespace {

struct SearchSegment {
  std::uint64_t start = 0;  // dinv of the seed
  std::uint64_t end = 0;    // dinv of the last member
  Partition seed;
};

}  // namespace

std::optional<ChainSpec> search_decomposition(std::uint64_t k) {
  const std::vector<Partition> mus = enumerate_partitions(k);
  const std::size_t nchains = mus.size();

  // Forced nu tails, one per mu.
  std::vector<std::uint64_t> tail_start(nchains);
  for (std::size_t c = 0; c < nchains; ++c)
    tail_start[c] = dinv(natural_gamma(mus[c]));

  // Everything with dinv >= D is a tail iterate; the finite residue lives
  // strictly below.
  const std::uint64_t D = binom2(k + 2);
  std::set<Partition> residue;
  for (std::uint64_t d = 0; d < D; ++d)
    for (Partition& g : dp_star_k_slice(k, d)) residue.insert(std::move(g));
  for (std::size_t c = 0; c < nchains; ++c) {
    Partition cur = natural_gamma(mus[c]);
    while (dinv(cur) < D) {
      residue.erase(cur);
      auto next = nu(cur);
      if (!next) break;
      cur = std::move(*next);
    }
  }

  // Maximal nu-paths of the residue split into forced r_segment tiles.
  std::vector<SearchSegment> segments;
  for (const Partition& g : residue) {
    auto prev = nu_inverse(g);
    if (prev && residue.count(*prev)) continue;  // not a path seed
    Partition cur = g;
    for (;;) {
      const std::vector<Partition> tile = r_segment(cur);
      SearchSegment seg;
      seg.seed = cur;
      seg.start = dinv(cur);
      seg.end = seg.start + tile.size() - 1;
      segments.push_back(std::move(seg));
      auto next = nu(tile.back());
      if (!next || !residue.count(*next)) break;
      cur = std::move(*next);
    }
  }
  std::sort(segments.begin(), segments.end(),
            [](const SearchSegment& a, const SearchSegment& b) {
              if (a.start != b.start) return a.start < b.start;
              return a.seed < b.seed;
            });

  // Backtracking assignment: chains fill dinv-contiguously toward their
  // tail start.
  constexpr std::uint64_t kUnset = ~0ull;
  std::vector<std::uint64_t> next_needed(nchains, kUnset);
  std::vector<std::vector<std::size_t>> assigned(nchains);
  std::optional<ChainSpec> found;

  auto build_candidate = [&](const std::vector<std::size_t>& star_of) {
    ChainSpec spec;
    spec.k = k;
    for (std::size_t c = 0; c < nchains; ++c) {
      ChainEntry e;
      e.mu = mus[c];
      e.mu_star = mus[star_of[c]];
      e.kind = ChainEntry::Kind::explicit_;
      for (std::size_t si : assigned[c]) e.generators.push_back(segments[si].seed);
      e.tail_mu = mus[c];
      spec.entries.push_back(std::move(e));
    }
    return spec;
  };

  // Enumerates involutions star_of with len(mus[star_of[c]]) equal to the
  // realized minimum dinv of chain c; verifies each complete candidate.
  auto try_involutions = [&](auto&& self, std::vector<std::size_t>& star_of,
                             std::size_t c) -> bool {
    if (c == nchains) {
      ChainSpec spec = build_candidate(star_of);
      if (verify_strong_conjecture(spec).passed()) {
        found = std::move(spec);
        return true;
      }
      return false;
    }
    if (star_of[c] != nchains) return self(self, star_of, c + 1);
    const std::uint64_t min_c =
        assigned[c].empty() ? tail_start[c] : segments[assigned[c][0]].start;
    for (std::size_t d = 0; d < nchains; ++d) {
      if (star_of[d] != nchains) continue;
      const std::uint64_t min_d =
          assigned[d].empty() ? tail_start[d] : segments[assigned[d][0]].start;
      if (mus[d].length() != min_c || mus[c].length() != min_d) continue;
      star_of[c] = d;
      star_of[d] = c;
      if (self(self, star_of, c + 1)) return true;
      star_of[c] = nchains;
      star_of[d] = nchains;
    }
    return false;
  };

  auto assign = [&](auto&& self, std::size_t si) -> bool {
    if (si == segments.size()) {
      for (std::size_t c = 0; c < nchains; ++c)
        if (next_needed[c] != kUnset && next_needed[c] != tail_start[c])
          return false;  // unfinished gap before the tail
      std::vector<std::size_t> star_of(nchains, nchains);
      return try_involutions(try_involutions, star_of, 0);
    }
    const SearchSegment& seg = segments[si];
    // A chain whose frontier fell behind the sweep can never be completed.
    for (std::size_t c = 0; c < nchains; ++c)
      if (next_needed[c] != kUnset && next_needed[c] < seg.start &&
          next_needed[c] != tail_start[c])
        return false;
    for (std::size_t c = 0; c < nchains; ++c) {
      const bool fresh = next_needed[c] == kUnset;
      if (fresh ? seg.start >= tail_start[c] : next_needed[c] != seg.start)
        continue;
      if (seg.end + 1 > tail_start[c]) continue;  // would collide with the tail
      const std::uint64_t saved = next_needed[c];
      next_needed[c] = seg.end + 1;
      assigned[c].push_back(si);
      if (self(self, si + 1)) return true;
      assigned[c].pop_back();
      next_needed[c] = saved;
    }
    return false;
  };

  assign(assign, 0);
  return found;
}

bool specs_equivalent(const ChainSpec& lhs, const ChainSpec& rhs) {
  if (lhs.k != rhs.k || lhs.entries.size() != rhs.entries.size()) return false;
  const std::uint64_t bound = binom2(lhs.k + 3) + 5;
  for (const ChainEntry& e : lhs.entries) {
    const ChainEntry* other = rhs.find(e.mu);
    if (!other || other->mu_star != e.mu_star) return false;
    Chain a = materialize_chain(e, bound);
    Chain b = materialize_chain(*other, bound);
    if (a.dinvs != b.dinvs || a.members != b.members) return false;
    // Same segment structure, regardless of listing order or kind.
    if (a.segment_starts != b.segment_starts) return false;
  }
  return true;
}

}  // namespace qtcat
