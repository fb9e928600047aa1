#include "qtcat/almost_hook.hpp"

#include <stdexcept>

#include "qtcat/checked.hpp"
#include "qtcat/statistics.hpp"

namespace qtcat {

namespace {

void require_params(std::uint64_t a, std::uint64_t b, std::uint64_t i) {
  if (a < 2 || b < 2)
    throw std::invalid_argument("almost-hook: parameters a, b must be >= 2");
  if (i < 1)
    throw std::invalid_argument("almost-hook: generator index must be >= 1");
}

Partition add_partitions(const Partition& x, const Partition& y) {
  std::vector<unsigned> parts;
  const std::size_t len = std::max(x.length(), y.length());
  parts.reserve(len);
  for (std::size_t i = 1; i <= len; ++i) parts.push_back(x.part(i) + y.part(i));
  return Partition(std::move(parts));
}

}  // namespace

std::optional<AlmostHookLabel> almost_hook_label_from_pair(std::uint64_t u,
                                                           std::uint64_t v) {
  // u = ab - b - 1, v = b - 1  =>  b = v + 1, a = (u + v + 2) / b.
  const std::uint64_t b = v + 1;
  if (b < 2) return std::nullopt;
  if ((u + v + 2) % b != 0) return std::nullopt;
  const std::uint64_t a = (u + v + 2) / b;
  if (a < 2) return std::nullopt;
  return AlmostHookLabel{a, b};
}

Partition almost_hook_generator(std::uint64_t a, std::uint64_t b, std::uint64_t i) {
  require_params(a, b, i);
  if (i <= b - 1)
    return add_partitions(hook_seed((b - 1) * a, i), hook_seed(a - 2, 1));
  // i >= b: remove the cell u_b from the larger seed.
  const Partition seed = hook_seed(b * (a - 1), i + 1);
  return remove_cells(seed, {static_cast<std::size_t>(b)});
}

std::size_t removed_cell_position(std::uint64_t a, std::uint64_t b, std::uint64_t i) {
  require_params(a, b, i);
  if (i + 1 < b)
    throw std::invalid_argument("removed_cell_position: needs i >= b-1");
  const std::uint64_t k = b * (a - 1);
  const std::uint64_t r = detail::r_mod(-static_cast<std::int64_t>(k), i + 1);
  const std::uint64_t ceil_term = detail::tau(k, i + 1);
  if (i + 1 - r >= b)
    return static_cast<std::size_t>(i + 2 - r - b + ceil_term);
  return static_cast<std::size_t>(2 * i + 2 - r - b + ceil_term);
}

std::vector<Partition> almost_hook_segment(std::uint64_t a, std::uint64_t b,
                                           std::uint64_t i) {
  require_params(a, b, i);
  const std::uint64_t bound = (i + 1 <= b - 1) ? i : i + 1;
  std::vector<Partition> out;
  out.reserve(static_cast<std::size_t>(bound) + 1);
  Partition cur = almost_hook_generator(a, b, i);
  for (std::uint64_t m = 0;; ++m) {
    out.push_back(cur);
    if (m == bound) break;
    auto next = nu(cur);
    if (!next)
      throw std::logic_error("almost_hook_segment: nu undefined inside a segment");
    cur = std::move(*next);
  }
  return out;
}

Chain almost_hook_chain(std::uint64_t a, std::uint64_t b, std::uint64_t max_dinv) {
  require_params(a, b, 1);
  Chain chain;
  chain.label = Partition({static_cast<unsigned>(a * b - b - 1),
                           static_cast<unsigned>(b - 1)});
  std::uint64_t next_dinv = 2;
  for (std::uint64_t i = 1; next_dinv <= max_dinv; ++i) {
    chain.segment_starts.push_back(next_dinv);
    for (const Partition& g : almost_hook_segment(a, b, i)) {
      if (next_dinv > max_dinv) break;
      if (dinv(g) != next_dinv)
        throw std::logic_error("almost_hook_chain: dinv not contiguous across segments");
      chain.dinvs.push_back(next_dinv);
      chain.members.push_back(g);
      ++next_dinv;
    }
  }
  return chain;
}

OrderSequence almost_hook_order_sequence(std::uint64_t a, std::uint64_t b,
                                         std::size_t count) {
  require_params(a, b, 1);
  OrderSequence seq;
  seq.k = a * b - 2;
  seq.index_base = 2;
  std::size_t done = 0;
  for (std::uint64_t i = 1; done < count; ++i) {
    std::size_t block = 0;
    for (const Partition& g : almost_hook_segment(a, b, i)) {
      if (done == count) break;
      seq.values.push_back(delta_order(g));
      ++block;
      ++done;
    }
    seq.block_sizes.push_back(block);
  }
  return seq;
}

std::pair<std::set<ExponentPair>, std::set<ExponentPair>> t_sets(std::uint64_t a,
                                                                 std::uint64_t b,
                                                                 std::size_t n) {
  const std::uint64_t bound = binom2(n);
  auto collect = [&](const Chain& chain) {
    std::set<ExponentPair> out;
    for (const Partition& g : chain.members)
      if (delta_order(g) <= n) out.insert({dinv(g), area(n, g)});
    return out;
  };
  return {collect(almost_hook_chain(a, b, bound)),
          collect(almost_hook_chain(b, a, bound))};
}

}  // namespace qtcat
