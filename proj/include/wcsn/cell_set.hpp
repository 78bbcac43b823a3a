#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace wcsn {

/// Membership set over the cells of a fixed grid, packed into 64-bit blocks.
/// A CellSet remembers the grid it was built against; combining sets from
/// different grids throws std::invalid_argument.
class CellSet {
 public:
  CellSet() = default;
  CellSet(std::size_t n_rows, std::size_t n_cols);

  std::size_t n_rows() const { return rows_; }
  std::size_t n_cols() const { return cols_; }
  std::size_t n_cells() const { return rows_ * cols_; }

  bool same_grid(const CellSet& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

  void insert(std::size_t index);
  void erase(std::size_t index);
  bool contains(std::size_t index) const;

  /// Number of member cells.
  std::size_t cardinality() const;
  bool empty() const { return cardinality() == 0; }

  /// Covered area in square meters for the given cell size.
  double area(double cell_size) const {
    return static_cast<double>(cardinality()) * cell_size * cell_size;
  }

  CellSet& operator|=(const CellSet& other);
  CellSet& operator&=(const CellSet& other);
  /// Removes every cell present in `other`.
  CellSet& subtract(const CellSet& other);

  bool intersects(const CellSet& other) const;
  /// |this & other| without materializing the intersection.
  std::size_t intersection_count(const CellSet& other) const;

  bool is_subset_of(const CellSet& other) const;

  void clear();

  /// Member cell indices in ascending order (the serialization used by
  /// golden-file tests).
  std::vector<std::uint32_t> indices() const;

  friend bool operator==(const CellSet&, const CellSet&) = default;

 private:
  void check_same_grid(const CellSet& other) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint64_t> blocks_;
};

inline CellSet operator|(CellSet a, const CellSet& b) { return a |= b; }
inline CellSet operator&(CellSet a, const CellSet& b) { return a &= b; }

}  // namespace wcsn
