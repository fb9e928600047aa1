#include "qtcat/qt_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qtcat/checked.hpp"
#include "qtcat/dyck.hpp"

namespace qtcat {

void QtMatrix::add(std::uint64_t q_exp, std::uint64_t t_exp, std::uint64_t count) {
  if (count == 0) return;
  std::uint64_t& slot = coeffs_[{q_exp, t_exp}];
  slot = checked_add(slot, count);
}

std::uint64_t QtMatrix::coeff(std::uint64_t q_exp, std::uint64_t t_exp) const {
  auto it = coeffs_.find({q_exp, t_exp});
  return it == coeffs_.end() ? 0 : it->second;
}

std::uint64_t QtMatrix::total() const {
  std::uint64_t s = 0;
  for (const auto& [key, c] : coeffs_) s = checked_add(s, c);
  return s;
}

std::uint64_t QtMatrix::max_q_exp() const {
  std::uint64_t m = 0;
  for (const auto& [key, c] : coeffs_) m = std::max(m, key.first);
  return m;
}

std::uint64_t QtMatrix::max_t_exp() const {
  std::uint64_t m = 0;
  for (const auto& [key, c] : coeffs_) m = std::max(m, key.second);
  return m;
}

bool is_jointly_symmetric(const QtMatrix& m) {
  for (const auto& [key, c] : m.entries())
    if (m.coeff(key.second, key.first) != c) return false;
  return true;
}

namespace {

constexpr std::size_t kMaxOrder = 30;

/* Enumeration state shared by the serial and parallel kernels.  Entries are
 * pushed and popped with incremental area/dinv updates: appending x adds
 * cnt[x] + cnt[x+1] diagonal inversions against the prefix.
 */
struct EnumState {
  std::vector<unsigned> v;
  std::vector<std::uint32_t> cnt;
  std::uint64_t area = 0;
  std::uint64_t dinv = 0;

  explicit EnumState(std::size_t n) : v(n, 0), cnt(n + 2, 0) {}

  void push(std::size_t pos, unsigned x) {
    v[pos] = x;
    dinv += cnt[x] + cnt[x + 1];
    ++cnt[x];
    area += x;
  }
  void pop(std::size_t pos) {
    unsigned x = v[pos];
    area -= x;
    --cnt[x];
    dinv -= cnt[x] + cnt[x + 1];
  }
};

// Completes st from position pos to full length n, accumulating counts into
// a dense (dim x dim) area-major table.
void complete(std::size_t n, std::size_t pos, EnumState& st,
              std::vector<std::uint64_t>& dense, std::size_t dim) {
  if (pos == n) {
    ++dense[st.area * dim + st.dinv];
    return;
  }
  unsigned hi = pos == 0 ? 0u : st.v[pos - 1] + 1;
  for (unsigned x = 0; x <= hi; ++x) {
    st.push(pos, x);
    complete(n, pos + 1, st, dense, dim);
    st.pop(pos);
  }
}

QtMatrix dense_to_sparse(const std::vector<std::uint64_t>& dense, std::size_t dim) {
  QtMatrix m;
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t d = 0; d < dim; ++d)
      if (dense[a * dim + d]) m.add(a, d, dense[a * dim + d]);
  return m;
}

void require_order(std::size_t n) {
  if (n > kMaxOrder)
    throw std::invalid_argument("cat_matrix: orders beyond 30 are unsupported");
}

}  // namespace

QtMatrix cat_matrix_serial(std::size_t n) {
  require_order(n);
  const std::size_t dim = static_cast<std::size_t>(binom2(n)) + 1;
  std::vector<std::uint64_t> dense(dim * dim, 0);
  EnumState st(n);
  complete(n, 0, st, dense, dim);
  return dense_to_sparse(dense, dim);
}

#ifdef _OPENMP

QtMatrix cat_matrix(std::size_t n, int threads) {
  require_order(n);
  if (threads == 0) threads = omp_get_max_threads();
  const std::size_t prefix_len = n <= 9 ? 0 : 9;
  if (threads <= 1 || prefix_len == 0) return cat_matrix_serial(n);

  // Dyck-vector prefixes are themselves Dyck vectors, so the order-p
  // enumeration lists exactly the work units.
  std::vector<std::vector<unsigned>> prefixes;
  for_each_dyck_vector(prefix_len, [&](const std::vector<unsigned>& p) {
    prefixes.push_back(p);
  });

  const std::size_t dim = static_cast<std::size_t>(binom2(n)) + 1;
  std::vector<std::uint64_t> dense(dim * dim, 0);

#pragma omp parallel num_threads(threads)
  {
    std::vector<std::uint64_t> local(dim * dim, 0);
    EnumState st(n);
#pragma omp for schedule(dynamic, 1) nowait
    for (long i = 0; i < static_cast<long>(prefixes.size()); ++i) {
      for (std::size_t pos = 0; pos < prefix_len; ++pos)
        st.push(pos, prefixes[static_cast<std::size_t>(i)][pos]);
      complete(n, prefix_len, st, local, dim);
      for (std::size_t pos = prefix_len; pos-- > 0;) st.pop(pos);
    }
#pragma omp critical
    {
      for (std::size_t j = 0; j < dense.size(); ++j) dense[j] += local[j];
    }
  }
  return dense_to_sparse(dense, dim);
}

#else

QtMatrix cat_matrix(std::size_t n, int) { return cat_matrix_serial(n); }

#endif

QtMatrix cat_level(std::size_t n, std::uint64_t k, int threads) {
  const QtMatrix full = cat_matrix(n, threads);
  const std::uint64_t diag = binom2(n);
  QtMatrix m;
  if (k > diag) return m;
  for (const auto& [key, c] : full.entries())
    if (key.first + key.second == diag - k) m.add(key.first, key.second, c);
  return m;
}

std::string render_matrix(const QtMatrix& m) {
  const std::uint64_t hi = std::max(m.max_q_exp(), m.max_t_exp());
  std::size_t width = 1;
  for (const auto& [key, c] : m.entries())
    width = std::max(width, std::to_string(c).size());

  std::ostringstream out;
  for (std::uint64_t t = hi + 1; t-- > 0;) {
    for (std::uint64_t q = 0; q <= hi; ++q) {
      if (q) out << ' ';
      std::uint64_t c = m.coeff(q, t);
      std::string cell = c == 0 ? "." : std::to_string(c);
      out << std::string(width - cell.size(), ' ') << cell;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace qtcat
