#include "qtcat/symmetry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "qtcat/checked.hpp"
#include "qtcat/statistics.hpp"

namespace qtcat {

ExponentPairSet exponent_pairs(std::size_t n, const std::vector<Partition>& set) {
  ExponentPairSet out;
  out.n = n;
  if (!set.empty()) out.k = deficit(set.front());
  for (const Partition& g : set) out.pairs.push_back({dinv(g), area(n, g)});
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

QtMatrix pair_set_matrix(const ExponentPairSet& s) {
  QtMatrix m;
  for (const auto& [d, a] : s.pairs) m.add(a, d, 1);
  return m;
}

bool check_opposite_pair(std::size_t n, const Partition& g, const Partition& h) {
  return area(n, g) == dinv(h) && dinv(g) == area(n, h);
}

std::string NOppositeResult::describe() const {
  switch (status) {
    case Status::ok:
      return "ok";
    case Status::duplicate:
      return "duplicate exponent pair: " + duplicate_witness[0].str() + " and " +
             duplicate_witness[1].str();
    case Status::unmatched:
      return "unmatched exponent pair (dinv=" +
             std::to_string(unmatched_witness->first) +
             ", area=" + std::to_string(unmatched_witness->second) + ")";
  }
  return {};
}

NOppositeResult check_n_opposite_sets(std::size_t n, const std::vector<Partition>& B,
                                      const std::vector<Partition>& C) {
  using Pair = std::pair<std::uint64_t, std::uint64_t>;  // (area, dinv)
  NOppositeResult res;
  res.status = NOppositeResult::Status::ok;

  std::map<Pair, const Partition*> left;  // (area, dinv) -> member of B
  for (const Partition& g : B) {
    Pair p{area(n, g), dinv(g)};
    auto [it, inserted] = left.emplace(p, &g);
    if (!inserted) {
      res.status = NOppositeResult::Status::duplicate;
      res.duplicate_witness = {*it->second, g};
      return res;
    }
  }

  std::map<Pair, std::vector<const Partition*>> right;  // (area, dinv) -> members of C
  for (const Partition& h : C) right[{area(n, h), dinv(h)}].push_back(&h);

  if (B.size() != C.size()) {
    res.status = NOppositeResult::Status::unmatched;
    // Report some pair present on one side whose swap is missing or
    // over-represented on the other.
    for (const auto& [p, g] : left) {
      Pair swapped{p.second, p.first};
      if (!right.count(swapped)) {
        res.unmatched_witness = {p.second, p.first};
        return res;
      }
    }
    for (const auto& [p, hs] : right) {
      Pair swapped{p.second, p.first};
      if (!left.count(swapped) || hs.size() > 1) {
        res.unmatched_witness = {p.second, p.first};
        return res;
      }
    }
    res.unmatched_witness = {0, 0};
    return res;
  }

  OppositePairing pairing;
  pairing.n = n;
  for (const auto& [p, g] : left) {
    Pair swapped{p.second, p.first};
    auto it = right.find(swapped);
    if (it == right.end() || it->second.size() != 1) {
      res.status = NOppositeResult::Status::unmatched;
      res.unmatched_witness = {p.second, p.first};  // as (dinv, area) of the image
      return res;
    }
    pairing.forward.push_back({*g, *it->second.front()});
  }
  // Sizes are equal and every pair of B consumed exactly one member of C,
  // so the map is the unique statistic-swapping bijection.
  std::sort(pairing.forward.begin(), pairing.forward.end(),
            [](const auto& x, const auto& y) { return dinv(x.first) < dinv(y.first); });
  res.pairing = std::move(pairing);
  return res;
}

std::string block_pattern(const Chain& chain, std::size_t n) {
  std::vector<std::size_t> fits;  // indices into members with delta <= n
  std::vector<std::size_t> deltas(chain.members.size());
  for (std::size_t i = 0; i < chain.members.size(); ++i) {
    deltas[i] = delta_order(chain.members[i]);
    if (deltas[i] <= n) fits.push_back(i);
  }
  if (fits.empty()) return {};
  std::string pattern;
  for (std::size_t i = fits.front(); i <= fits.back(); ++i)
    pattern += deltas[i] <= n ? 'o' : '*';
  return pattern;
}

}  // namespace qtcat
