#include "qtcat/dyck.hpp"

#include <stdexcept>

#include "qtcat/checked.hpp"

namespace qtcat {

DyckVector::DyckVector(std::vector<unsigned> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) return;
  if (entries_[0] != 0)
    throw std::invalid_argument("DyckVector: first entry must be 0");
  for (std::size_t i = 0; i + 1 < entries_.size(); ++i) {
    if (entries_[i + 1] > entries_[i] + 1)
      throw std::invalid_argument("DyckVector: entry rises by more than 1");
  }
}

DyckVector::DyckVector(std::initializer_list<unsigned> entries)
    : DyckVector(std::vector<unsigned>(entries)) {}

std::string DyckVector::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  out += ')';
  return out;
}

std::uint64_t catalan(std::size_t n) {
  std::vector<std::uint64_t> c(n + 1, 0);
  c[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < m; ++i)
      s = checked_add(s, checked_mul(c[i], c[m - 1 - i]));
    c[m] = s;
  }
  return c[n];
}

std::vector<DyckVector> enumerate_dyck_vectors(std::size_t n) {
  std::vector<DyckVector> out;
  for_each_dyck_vector(n, [&](const std::vector<unsigned>& v) {
    out.push_back(DyckVector(v));
  });
  return out;
}

Partition to_partition(std::size_t n, const DyckVector& v) {
  if (v.order() != n)
    throw std::invalid_argument("to_partition: vector length differs from order");
  std::vector<unsigned> parts(n);
  for (std::size_t i = 1; i <= n; ++i) {
    // gamma_i = (n - i) - v_{n-i+1}; nonnegative since v_j <= j-1.
    parts[i - 1] = static_cast<unsigned>(n - i) - v.entries()[n - i];
  }
  return Partition(std::move(parts));
}

DyckVector to_dyck_vector(std::size_t n, const Partition& g) {
  if (g.length() >= n && !(n == 0 && g.is_zero()))
    throw std::invalid_argument("to_dyck_vector: partition has too many parts");
  std::vector<unsigned> v(n);
  for (std::size_t i = 1; i <= n; ++i) {
    unsigned gpart = g.part(n - i + 1);
    if (gpart > i - 1)
      throw std::invalid_argument("to_dyck_vector: partition exceeds the staircase");
    v[i - 1] = static_cast<unsigned>(i - 1) - gpart;
  }
  return DyckVector(std::move(v));
}

DyckVector embed(const DyckVector& v) {
  std::vector<unsigned> w;
  w.reserve(v.order() + 1);
  w.push_back(0);
  for (unsigned x : v.entries()) w.push_back(x + 1);
  return DyckVector(std::move(w));
}

DyckVector dyck_vector_of(const Partition& lam) {
  std::vector<unsigned> v;
  v.reserve(static_cast<std::size_t>(lam.size()));
  for (std::size_t i = 1; i <= lam.length(); ++i)
    for (unsigned j = 0; j < lam.part(i); ++j)
      v.push_back(static_cast<unsigned>(i - 1));
  return DyckVector(std::move(v));
}

}  // namespace qtcat
