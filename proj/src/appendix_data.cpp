#include <stdexcept>

#include "qtcat/verifier.hpp"

namespace qtcat {

namespace {

ChainEntry explicit_entry(Partition mu, Partition mu_star,
                          std::vector<Partition> generators) {
  ChainEntry e;
  e.mu = mu;
  e.mu_star = std::move(mu_star);
  e.kind = ChainEntry::Kind::explicit_;
  e.generators = std::move(generators);
  e.tail_mu = std::move(mu);
  return e;
}

ChainEntry hook_entry(unsigned k) {
  ChainEntry e;
  e.mu = k == 0 ? Partition() : Partition({k});
  e.mu_star = e.mu;
  e.kind = ChainEntry::Kind::hook;
  return e;
}

ChainEntry almost_hook_entry(Partition mu, Partition mu_star, std::uint64_t a,
                             std::uint64_t b) {
  ChainEntry e;
  e.mu = std::move(mu);
  e.mu_star = std::move(mu_star);
  e.kind = ChainEntry::Kind::almost_hook;
  e.a = a;
  e.b = b;
  return e;
}

}  // namespace

ChainSpec builtin_spec(std::uint64_t k) {
  ChainSpec spec;
  spec.k = k;
  switch (k) {
    case 0:
      spec.entries = {explicit_entry({}, {}, {})};
      break;
    case 1:
      spec.entries = {explicit_entry({1}, {1}, {})};
      break;
    case 2:
      spec.entries = {
          explicit_entry({2}, {2}, {Partition{1, 1, 1}}),
          explicit_entry({1, 1}, {1, 1}, {}),
      };
      break;
    case 3:
      spec.entries = {
          explicit_entry({3}, {3}, {Partition{1, 1, 1, 1}, Partition{2, 2, 2}}),
          explicit_entry({2, 1}, {1, 1, 1}, {Partition{3, 1, 1, 1}}),
          explicit_entry({1, 1, 1}, {2, 1}, {Partition{2, 1, 1, 1}}),
      };
      break;
    case 4:
      spec.entries = {
          explicit_entry({4}, {4},
                         {Partition{1, 1, 1, 1, 1}, Partition{2, 2, 2, 1},
                          Partition{3, 3, 3, 1}}),
          explicit_entry({3, 1}, {2, 2},
                         {Partition{2, 2, 1, 1}, Partition{3, 3, 3}}),
          explicit_entry({2, 2}, {3, 1}, {Partition{2, 1, 1, 1, 1}}),
          explicit_entry({2, 1, 1}, {1, 1, 1, 1},
                         {Partition{3, 2, 1, 1, 1}, Partition{4, 3, 1, 1, 1}}),
          explicit_entry({1, 1, 1, 1}, {2, 1, 1},
                         {Partition{3, 1, 1, 1, 1}, Partition{4, 2, 1, 1, 1}}),
      };
      break;
    case 5:
      spec.entries = {
          hook_entry(5),
          explicit_entry({4, 1}, {2, 2, 1},
                         {Partition{4, 1, 1, 1, 1}, Partition{3, 3, 2, 2},
                          Partition{4, 4, 4, 2}}),
          explicit_entry({3, 2}, {3, 2},
                         {Partition{2, 2, 1, 1, 1}, Partition{3, 3, 1, 1, 1},
                          Partition{4, 4, 1, 1, 1}}),
          explicit_entry({2, 2, 1}, {4, 1},
                         {Partition{2, 1, 1, 1, 1, 1}, Partition{3, 2, 2, 2}}),
          explicit_entry({3, 1, 1}, {3, 1, 1},
                         {Partition{3, 1, 1, 1, 1, 1}, Partition{4, 2, 2, 1, 1},
                          Partition{5, 4, 2, 2, 2}}),
          explicit_entry({2, 1, 1, 1}, {2, 1, 1, 1},
                         {Partition{3, 2, 1, 1, 1, 1}, Partition{4, 3, 1, 1, 1, 1},
                          Partition{5, 3, 2, 1, 1, 1}, Partition{5, 4, 3, 1, 1, 1}}),
          explicit_entry({1, 1, 1, 1, 1}, {1, 1, 1, 1, 1},
                         {Partition{4, 2, 1, 1, 1, 1}, Partition{4, 3, 2, 1, 1, 1},
                          Partition{5, 4, 2, 1, 1, 1}}),
      };
      break;
    case 6:
      spec.entries = {
          hook_entry(6),
          almost_hook_entry({5, 1}, {3, 3}, 4, 2),
          almost_hook_entry({3, 3}, {5, 1}, 2, 4),
          explicit_entry({4, 2}, {4, 1, 1},
                         {Partition{3, 1, 1, 1, 1, 1, 1}, Partition{4, 2, 2, 2, 1},
                          Partition{4, 4, 4, 1, 1}}),
          explicit_entry({4, 1, 1}, {4, 2},
                         {Partition{2, 2, 1, 1, 1, 1}, Partition{3, 3, 2, 1, 1},
                          Partition{4, 4, 3, 3}, Partition{5, 5, 5, 3, 1}}),
          explicit_entry({3, 2, 1}, {3, 1, 1, 1},
                         {Partition{3, 2, 1, 1, 1, 1, 1}, Partition{5, 3, 1, 1, 1, 1},
                          Partition{5, 3, 3, 1, 1, 1}, Partition{5, 5, 3, 1, 1, 1}}),
          explicit_entry({3, 1, 1, 1}, {3, 2, 1},
                         {Partition{4, 1, 1, 1, 1, 1}, Partition{4, 2, 2, 1, 1, 1},
                          Partition{4, 4, 2, 1, 1, 1}, Partition{5, 4, 2, 2, 1, 1},
                          Partition{6, 5, 4, 2, 2, 2}}),
          explicit_entry({2, 2, 2}, {2, 2, 1, 1}, {Partition{3, 3, 1, 1, 1, 1}}),
          explicit_entry({2, 2, 1, 1}, {2, 2, 2},
                         {Partition{3, 2, 2, 1, 1}, Partition{4, 3, 3, 3}}),
          explicit_entry({2, 1, 1, 1, 1}, {2, 1, 1, 1, 1},
                         {Partition{4, 2, 1, 1, 1, 1, 1}, Partition{4, 3, 2, 1, 1, 1, 1},
                          Partition{5, 4, 2, 1, 1, 1, 1}, Partition{5, 4, 3, 2, 1, 1, 1},
                          Partition{6, 5, 3, 2, 1, 1, 1}, Partition{6, 5, 4, 3, 1, 1, 1}}),
          explicit_entry({1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1},
                         {Partition{4, 3, 1, 1, 1, 1, 1}, Partition{5, 3, 2, 1, 1, 1, 1},
                          Partition{5, 4, 3, 1, 1, 1, 1}, Partition{6, 4, 3, 2, 1, 1, 1},
                          Partition{6, 5, 4, 2, 1, 1, 1}}),
      };
      break;
    default:
      throw std::invalid_argument(
          "builtin_spec: only levels k <= 6 are embedded; supply larger levels "
          "as specification files");
  }
  return spec;
}

}  // namespace qtcat
