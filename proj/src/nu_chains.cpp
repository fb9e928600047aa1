#include "qtcat/nu_chains.hpp"

#include <algorithm>
#include <stdexcept>

#include "qtcat/checked.hpp"
#include "qtcat/dyck.hpp"

namespace qtcat {

const Partition* Chain::at_dinv(std::uint64_t d) const {
  auto it = std::lower_bound(dinvs.begin(), dinvs.end(), d);
  if (it == dinvs.end() || *it != d) return nullptr;
  return &members[static_cast<std::size_t>(it - dinvs.begin())];
}

std::vector<Partition> Chain::intersect_order(std::size_t n) const {
  std::vector<Partition> out;
  for (const Partition& g : members)
    if (delta_order(g) <= n) out.push_back(g);
  return out;
}

std::optional<Partition> nu(const Partition& g) {
  const std::size_t len = g.length();
  if (g.part(1) > len + 2) return std::nullopt;
  std::vector<unsigned> parts;
  parts.reserve(len + 1);
  parts.push_back(static_cast<unsigned>(len + 1));
  for (std::size_t i = 1; i <= len; ++i) parts.push_back(g.part(i) - 1);
  return Partition(std::move(parts));
}

std::optional<Partition> nu_inverse(const Partition& g) {
  // g = nu(h) forces len(h) = g_1 - 1, h = (g_2+1, ..., g_s+1) padded with
  // 1s to that length; this needs len(g) <= g_1.
  if (g.is_zero()) return std::nullopt;
  const std::size_t s = g.length();
  if (s > g.part(1)) return std::nullopt;
  const std::size_t hlen = g.part(1) - 1;
  std::vector<unsigned> parts;
  parts.reserve(hlen);
  for (std::size_t i = 2; i <= s; ++i) parts.push_back(g.part(i) + 1);
  while (parts.size() < hlen) parts.push_back(1);
  return Partition(std::move(parts));
}

std::optional<Partition> nu_power(const Partition& g, std::uint64_t m) {
  Partition cur = g;
  for (std::uint64_t i = 0; i < m; ++i) {
    auto next = nu(cur);
    if (!next) return std::nullopt;
    cur = std::move(*next);
  }
  return cur;
}

DyckVector nu_on_vector(std::size_t n, const DyckVector& v) {
  if (v.order() != n)
    throw std::invalid_argument("nu_on_vector: vector length differs from order");
  const auto& e = v.entries();
  std::size_t a = 0;  // maximal 1-based index with v_a = a-1; exists since v_1 = 0
  for (std::size_t i = 1; i <= n; ++i)
    if (e[i - 1] == i - 1) a = i;
  if (a < 2)
    throw std::invalid_argument("nu_on_vector: image leaves DP_n");
  if (a - 2 > static_cast<std::size_t>(e[n - 1]) + 1)
    throw std::invalid_argument("nu_on_vector: nu undefined on this vector");
  std::vector<unsigned> w;
  w.reserve(n);
  for (std::size_t i = 1; i <= n; ++i)
    if (i != a) w.push_back(e[i - 1]);
  w.push_back(static_cast<unsigned>(a - 2));
  return DyckVector(std::move(w));
}

Partition hook_seed(std::uint64_t k, std::uint64_t l) {
  if (l == 0) {
    if (k == 0) return Partition();
    throw std::invalid_argument("hook_seed: l = 0 requires k = 0");
  }
  const std::uint64_t quot = k / l;
  const std::uint64_t rem = k % l;
  std::vector<unsigned> parts;
  parts.reserve(static_cast<std::size_t>(quot + l));
  for (std::uint64_t i = 0; i < quot + 1; ++i)
    parts.push_back(static_cast<unsigned>(l));
  for (std::uint64_t x = l; x-- > 1;) parts.push_back(static_cast<unsigned>(x));
  // Add 1 to the first `rem` rows after the flat run.
  for (std::uint64_t i = 0; i < rem; ++i) ++parts[static_cast<std::size_t>(quot + 1 + i)];
  return Partition(std::move(parts));
}

std::uint64_t rho(const Partition& g) {
  if (!nu(g)) return 0;
  std::size_t max_h = 0;
  for (std::size_t j = 1; j + 2 <= g.length(); ++j)
    if (g.part(j) == g.part(j + 1) && g.part(j + 1) == g.part(j + 2) && g.part(j) > 0)
      max_h = j;
  return max_h ? g.part(max_h) : g.part(1);
}

std::vector<Partition> r_segment(const Partition& g) {
  const std::uint64_t bound = rho(g);
  std::vector<Partition> out;
  out.reserve(static_cast<std::size_t>(bound) + 1);
  Partition cur = g;
  for (std::uint64_t m = 0;; ++m) {
    out.push_back(cur);
    if (m == bound) break;
    auto next = nu(cur);
    if (!next)
      throw std::logic_error("r_segment: nu undefined before rho steps");
    cur = std::move(*next);
  }
  return out;
}

Chain hook_chain(std::uint64_t k, std::uint64_t max_dinv) {
  Chain chain;
  chain.label = (k == 0) ? Partition() : Partition({static_cast<unsigned>(k)});
  for (std::uint64_t l = k == 0 ? 0 : 1;; ++l) {
    const std::uint64_t start = binom2(l + 1);
    if (start > max_dinv) break;
    chain.segment_starts.push_back(start);
    Partition cur = hook_seed(k, l);
    for (std::uint64_t m = 0; m <= l && start + m <= max_dinv; ++m) {
      if (m > 0) {
        auto next = nu(cur);
        if (!next) throw std::logic_error("hook_chain: nu undefined inside a seed block");
        cur = std::move(*next);
      }
      chain.dinvs.push_back(start + m);
      chain.members.push_back(cur);
    }
  }
  return chain;
}

std::string OrderSequence::str() const {
  std::string out;
  std::size_t pos = 0;
  for (std::size_t b = 0; b < block_sizes.size(); ++b) {
    if (b) out += "; ";
    for (std::size_t i = 0; i < block_sizes[b]; ++i, ++pos) {
      if (i) out += ", ";
      out += std::to_string(values[pos]);
    }
  }
  return out;
}

OrderSequence a_sequence(std::uint64_t k, std::size_t count) {
  if (k == 0)
    throw std::invalid_argument("a_sequence: defined for k >= 1");
  OrderSequence seq;
  seq.k = k;
  std::uint64_t i = 1;
  for (std::uint64_t l = 1; i <= count; ++l) {
    const std::uint64_t split = detail::r_mod(-static_cast<std::int64_t>(k), l);
    const std::size_t s = static_cast<std::size_t>(detail::s_value(k, l));
    std::size_t block = 0;
    for (std::uint64_t m = 0; m <= l && i <= count; ++m, ++i, ++block)
      seq.values.push_back(m <= split ? s : s + 1);
    seq.block_sizes.push_back(block);
  }
  return seq;
}

OrderSequence a_sequence_direct(std::uint64_t k, std::size_t count) {
  if (k == 0)
    throw std::invalid_argument("a_sequence_direct: defined for k >= 1");
  OrderSequence seq;
  seq.k = k;
  std::uint64_t i = 1;
  for (std::uint64_t l = 1; i <= count; ++l) {
    Partition cur = hook_seed(k, l);
    std::size_t block = 0;
    for (std::uint64_t m = 0; m <= l && i <= count; ++m, ++i, ++block) {
      if (m > 0) cur = *nu(cur);
      seq.values.push_back(delta_order(cur));
    }
    seq.block_sizes.push_back(block);
  }
  return seq;
}

std::uint64_t natural_zeta(const Partition& mu) {
  return mu.is_zero() ? 0 : mu.part(1) + mu.length();
}

Partition natural_gamma(const Partition& mu) {
  if (mu.is_zero()) return Partition();
  const std::uint64_t zeta = natural_zeta(mu);
  // Dyck vector (0,0,1^{e_1},0,1^{e_2},...,0,1^{e_k}) of length zeta+1,
  // where e_j counts parts of mu equal to j.
  std::vector<unsigned> counts(mu.part(1) + 1, 0);
  for (unsigned p : mu.parts()) ++counts[p];
  std::vector<unsigned> v;
  v.reserve(static_cast<std::size_t>(zeta) + 1);
  v.push_back(0);
  for (unsigned j = 1; j <= mu.part(1); ++j) {
    v.push_back(0);
    for (unsigned c = 0; c < counts[j]; ++c) v.push_back(1);
  }
  return to_partition(static_cast<std::size_t>(zeta) + 1, DyckVector(std::move(v)));
}

Partition natural_gamma_by_removal(const Partition& mu) {
  if (mu.is_zero()) return Partition();
  const std::uint64_t zeta = natural_zeta(mu);
  std::vector<std::size_t> indices;
  for (std::size_t i = 1; i <= mu.length(); ++i)
    indices.push_back(static_cast<std::size_t>(mu.part(i) + mu.length() - i + 1));
  return remove_cells(staircase(static_cast<std::size_t>(zeta) + 1), indices);
}

std::uint64_t nu_tail_dinv(const Partition& mu, std::uint64_t m) {
  return binom2(natural_zeta(mu) + 1) - mu.size() - mu.length() + m;
}

Partition f_bijection(std::size_t n, std::uint64_t k, const Partition& g) {
  if (delta_order(g) > n)
    throw std::invalid_argument("f_bijection: partition outside DP_n");
  if (deficit(g) != k)
    throw std::invalid_argument("f_bijection: partition has the wrong deficit");
  const std::uint64_t d = dinv(g);
  const auto [l, m] = detail::split_triangular(d);
  auto expect = nu_power(hook_seed(k, l), m);
  if (!expect || *expect != g)
    throw std::invalid_argument("f_bijection: partition is not a hook-chain member");
  const std::uint64_t i = area(n, g);
  const auto [l2, m2] = detail::split_triangular(i);
  auto image = nu_power(hook_seed(k, l2), m2);
  if (!image || delta_order(*image) > n)
    throw std::logic_error("f_bijection: image escaped DP_n");
  return *image;
}

namespace detail {

std::uint64_t r_mod(std::int64_t j, std::uint64_t l) {
  if (l == 0) throw std::invalid_argument("r_mod: zero modulus");
  std::int64_t r = j % static_cast<std::int64_t>(l);
  if (r < 0) r += static_cast<std::int64_t>(l);
  return static_cast<std::uint64_t>(r);
}

std::uint64_t r_plus(std::int64_t j, std::uint64_t l) {
  const std::uint64_t r = r_mod(j, l);
  return r == 0 ? l : r;
}

std::uint64_t tau(std::uint64_t k, std::uint64_t l) {
  if (l == 0) throw std::invalid_argument("tau: zero l");
  return (k + l - 1) / l;
}

std::uint64_t s_value(std::uint64_t k, std::uint64_t l) { return l + tau(k, l) + 1; }

std::uint64_t big_l(std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("big_l: defined for k >= 1");
  std::uint64_t l = 1;
  while ((l + 1) * (l + 1) - (l + 1) < k) ++l;
  return l;
}

TriangularSplit split_triangular(std::uint64_t i) {
  std::uint64_t l = 0;
  while (binom2(l + 2) <= i) ++l;
  return {l, i - binom2(l + 1)};
}

}  // namespace detail

}  // namespace qtcat
