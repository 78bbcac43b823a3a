#pragma once

#include <cmath>
#include <cstddef>

#include "wcsn/cell_set.hpp"

namespace wcsn {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

inline Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}

inline Vec3 operator+(const Vec3& a, const Vec3& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}

inline double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

/// A directional camera node. The field of view is a right circular cone:
/// apex at `position`, axis given by azimuth/elevation, aperture
/// `half_angle`, truncated at distance `range`.
struct Sensor {
  int id = 0;
  Vec3 position;
  double azimuth = 0.0;    ///< radians in [0, 2pi)
  double elevation = 0.0;  ///< radians above horizontal, in [-pi/2, pi/2]
  double half_angle = 0.5; ///< cone aperture, radians, strictly in (0, pi/2)
  double range = 1.0;      ///< sensing radius, meters, > 0
  double energy = 0.0;     ///< remaining energy, abstract units, >= 0
};

/// Throws std::invalid_argument when a Sensor violates its invariants
/// (half_angle outside (0, pi/2), range <= 0, negative energy, non-finite
/// pose).
void validate_sensor(const Sensor& s);

/// Horizontal rectangular monitoring plane at `height` meters, discretized
/// into a uniform grid of cell_size x cell_size cells. Cells are indexed
/// row-major: index = row * n_cols + col.
class TargetRegion {
 public:
  TargetRegion(double x_extent, double y_extent, double height,
               double cell_size);

  double x_extent() const { return x_extent_; }
  double y_extent() const { return y_extent_; }
  double height() const { return height_; }
  double cell_size() const { return cell_size_; }
  double area() const { return x_extent_ * y_extent_; }

  std::size_t n_cols() const { return n_cols_; }
  std::size_t n_rows() const { return n_rows_; }
  std::size_t n_cells() const { return n_rows_ * n_cols_; }

  std::size_t index_of(std::size_t row, std::size_t col) const {
    return row * n_cols_ + col;
  }
  std::size_t row_of(std::size_t index) const { return index / n_cols_; }
  std::size_t col_of(std::size_t index) const { return index % n_cols_; }

  /// Center of a cell, lifted to the plane height.
  Vec3 cell_center(std::size_t index) const {
    return {(static_cast<double>(col_of(index)) + 0.5) * cell_size_,
            (static_cast<double>(row_of(index)) + 0.5) * cell_size_, height_};
  }

  /// An empty CellSet with this region's grid dimensions.
  CellSet make_cell_set() const { return CellSet(n_rows_, n_cols_); }

  friend bool operator==(const TargetRegion&, const TargetRegion&) = default;

 private:
  double x_extent_;
  double y_extent_;
  double height_;
  double cell_size_;
  std::size_t n_rows_;
  std::size_t n_cols_;
};

/// Unit boresight vector for the given azimuth/elevation:
/// (cos e cos a, cos e sin a, sin e).
Vec3 boresight_from_angles(double azimuth, double elevation);

/// True iff q lies inside the sensor's truncated cone: within `range` of the
/// apex and at most `half_angle` off the boresight. The apex itself counts
/// as covered.
bool covers_point(const Sensor& s, const Vec3& q);

/// Cells of `region` whose center lies inside the sensor's field of view.
CellSet rasterize_coverage(const Sensor& s, const TargetRegion& region);

/// True iff the two sensors' coverage sets on `region` share a cell.
bool visually_neighbors(const Sensor& a, const Sensor& b,
                        const TargetRegion& region);

/// True iff the Euclidean distance between the two sensors is <= comm_range.
bool geo_neighbors(const Sensor& a, const Sensor& b, double comm_range);

}  // namespace wcsn
