#include "qtcat/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qtcat/checked.hpp"

namespace qtcat {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
    if (parts_[i] < parts_[i + 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
  if (!parts_.empty() && parts_.back() == 0)
    throw std::invalid_argument("Partition: zero part before a positive part");
}

Partition::Partition(std::initializer_list<unsigned> parts)
    : Partition(std::vector<unsigned>(parts)) {}

std::uint64_t Partition::size() const {
  std::uint64_t s = 0;
  for (unsigned p : parts_) s = checked_add(s, p);
  return s;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition();
  std::vector<unsigned> conj(parts_[0], 0);
  for (unsigned p : parts_)
    for (unsigned j = 0; j < p; ++j) ++conj[j];
  return Partition(std::move(conj));
}

std::string Partition::str() const {
  if (parts_.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ')';
  return out;
}

std::vector<Cell> u_cells(const Partition& g) {
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(g.size()));
  for (std::size_t i = 1; i <= g.length(); ++i)
    for (std::size_t j = 1; j <= g.part(i); ++j) cells.push_back({i, j});
  // u_1 is the largest cell: maximal i+j, ties broken by maximal i.
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    if (a.row + a.col != b.row + b.col) return a.row + a.col > b.row + b.col;
    return a.row > b.row;
  });
  return cells;
}

Partition remove_cells(const Partition& g, const std::vector<std::size_t>& u_indices) {
  const std::vector<Cell> cells = u_cells(g);
  std::vector<std::vector<std::size_t>> removed_cols(g.length() + 1);
  for (std::size_t idx : u_indices) {
    if (idx < 1 || idx > cells.size())
      throw std::invalid_argument("remove_cells: u-index out of range");
    const Cell c = cells[idx - 1];
    removed_cols[c.row].push_back(c.col);
  }
  std::vector<unsigned> rows(g.parts());
  for (std::size_t i = 1; i <= g.length(); ++i) {
    auto& cols = removed_cols[i];
    if (cols.empty()) continue;
    // The removed cells must be exactly the trailing cells of the row.
    std::sort(cols.begin(), cols.end());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j] != g.part(i) - cols.size() + 1 + j)
        throw std::invalid_argument("remove_cells: not a partition after removal");
    }
    rows[i - 1] -= static_cast<unsigned>(cols.size());
  }
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    if (rows[i] < rows[i + 1])
      throw std::invalid_argument("remove_cells: not a partition after removal");
  }
  return Partition(std::move(rows));
}

Partition staircase(std::size_t n) {
  std::vector<unsigned> parts;
  for (std::size_t i = 1; i < n; ++i) parts.push_back(static_cast<unsigned>(n - i));
  return Partition(std::move(parts));
}

std::vector<Partition> enumerate_partitions(std::uint64_t n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

}  // namespace qtcat
