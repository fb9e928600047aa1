#ifndef QTCAT_QT_MATRIX_HPP
#define QTCAT_QT_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "qtcat/partition.hpp"

namespace qtcat {

/* Sparse exact-integer coefficient matrix of a polynomial in q and t.
 * Keys are (q exponent, t exponent); stored counts are always positive.
 * All arithmetic is overflow-checked.
 */
class QtMatrix {
 public:
  using Key = std::pair<std::uint64_t, std::uint64_t>;

  void add(std::uint64_t q_exp, std::uint64_t t_exp, std::uint64_t count);
  std::uint64_t coeff(std::uint64_t q_exp, std::uint64_t t_exp) const;

  const std::map<Key, std::uint64_t>& entries() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }

  // Checked sum of all counts.
  std::uint64_t total() const;

  std::uint64_t max_q_exp() const;
  std::uint64_t max_t_exp() const;

  friend bool operator==(const QtMatrix&, const QtMatrix&) = default;

 private:
  std::map<Key, std::uint64_t> coeffs_;
};

// True iff coeff(a,b) == coeff(b,a) for all (a,b).
bool is_jointly_symmetric(const QtMatrix& m);

/* The full coefficient matrix of Cat_n(q,t) = sum over DV_n of
 * q^area t^dinv, by exhaustive enumeration.
 *
 * cat_matrix may split the enumeration across OpenMP worker threads
 * (threads = 0 picks the available parallelism, 1 forces serial); the result
 * is bit-identical to cat_matrix_serial in every case.  Orders up to n = 30
 * are in contract; larger n is rejected.
 */
QtMatrix cat_matrix(std::size_t n, int threads = 0);
QtMatrix cat_matrix_serial(std::size_t n);

// The restriction of cat_matrix(n) to the antidiagonal
// q_exp + t_exp = binom(n,2) - k; empty when k exceeds every deficit.
QtMatrix cat_level(std::size_t n, std::uint64_t k, int threads = 0);

/* Text rendering in the coefficient-matrix layout: the entry i columns to
 * the right and j rows above the lower-left corner is the coefficient of
 * q^i t^j, zeros printed as dots.  Rows are emitted top (highest t) to
 * bottom, cells separated by single spaces and right-aligned to the widest
 * cell.  The square spans exponents 0..max(q,t exponent).
 */
std::string render_matrix(const QtMatrix& m);

}  // namespace qtcat

#endif
