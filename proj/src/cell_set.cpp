#include "wcsn/cell_set.hpp"

#include <bit>
#include <stdexcept>

namespace wcsn {

namespace {
constexpr std::size_t kBits = 64;
}

CellSet::CellSet(std::size_t n_rows, std::size_t n_cols)
    : rows_(n_rows), cols_(n_cols), blocks_((n_rows * n_cols + kBits - 1) / kBits, 0) {}

void CellSet::check_same_grid(const CellSet& other) const {
  if (!same_grid(other)) {
    throw std::invalid_argument("CellSet: operands built against different grids");
  }
}

void CellSet::insert(std::size_t index) {
  if (index >= n_cells()) {
    throw std::out_of_range("CellSet::insert: cell index out of range");
  }
  blocks_[index / kBits] |= std::uint64_t{1} << (index % kBits);
}

void CellSet::erase(std::size_t index) {
  if (index >= n_cells()) {
    throw std::out_of_range("CellSet::erase: cell index out of range");
  }
  blocks_[index / kBits] &= ~(std::uint64_t{1} << (index % kBits));
}

bool CellSet::contains(std::size_t index) const {
  if (index >= n_cells()) return false;
  return (blocks_[index / kBits] >> (index % kBits)) & 1u;
}

std::size_t CellSet::cardinality() const {
  std::size_t n = 0;
  for (std::uint64_t b : blocks_) n += static_cast<std::size_t>(std::popcount(b));
  return n;
}

CellSet& CellSet::operator|=(const CellSet& other) {
  check_same_grid(other);
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] |= other.blocks_[i];
  return *this;
}

CellSet& CellSet::operator&=(const CellSet& other) {
  check_same_grid(other);
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= other.blocks_[i];
  return *this;
}

CellSet& CellSet::subtract(const CellSet& other) {
  check_same_grid(other);
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= ~other.blocks_[i];
  return *this;
}

bool CellSet::intersects(const CellSet& other) const {
  check_same_grid(other);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i] & other.blocks_[i]) return true;
  }
  return false;
}

std::size_t CellSet::intersection_count(const CellSet& other) const {
  check_same_grid(other);
  std::size_t n = 0;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    n += static_cast<std::size_t>(std::popcount(blocks_[i] & other.blocks_[i]));
  }
  return n;
}

bool CellSet::is_subset_of(const CellSet& other) const {
  check_same_grid(other);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i] & ~other.blocks_[i]) return false;
  }
  return true;
}

void CellSet::clear() {
  for (std::uint64_t& b : blocks_) b = 0;
}

std::vector<std::uint32_t> CellSet::indices() const {
  std::vector<std::uint32_t> out;
  out.reserve(cardinality());
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    std::uint64_t b = blocks_[i];
    while (b) {
      const int bit = std::countr_zero(b);
      out.push_back(static_cast<std::uint32_t>(i * kBits + static_cast<std::size_t>(bit)));
      b &= b - 1;
    }
  }
  return out;
}

}  // namespace wcsn
