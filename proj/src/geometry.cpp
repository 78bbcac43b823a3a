#include "wcsn/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wcsn {

void validate_sensor(const Sensor& s) {
  const bool pose_finite = std::isfinite(s.position.x) && std::isfinite(s.position.y) &&
                           std::isfinite(s.position.z) && std::isfinite(s.azimuth) &&
                           std::isfinite(s.elevation);
  if (!pose_finite) throw std::invalid_argument("Sensor: non-finite pose");
  if (!(s.half_angle > 0.0 && s.half_angle < M_PI / 2.0)) {
    throw std::invalid_argument("Sensor: half_angle must be in (0, pi/2)");
  }
  if (!(s.range > 0.0)) throw std::invalid_argument("Sensor: range must be > 0");
  if (!(s.energy >= 0.0)) throw std::invalid_argument("Sensor: energy must be >= 0");
}

TargetRegion::TargetRegion(double x_extent, double y_extent, double height,
                           double cell_size)
    : x_extent_(x_extent), y_extent_(y_extent), height_(height), cell_size_(cell_size) {
  if (!(x_extent > 0.0) || !(y_extent > 0.0)) {
    throw std::invalid_argument("TargetRegion: extents must be > 0");
  }
  if (!(cell_size > 0.0)) {
    throw std::invalid_argument("TargetRegion: cell_size must be > 0");
  }
  n_cols_ = static_cast<std::size_t>(std::ceil(x_extent / cell_size));
  n_rows_ = static_cast<std::size_t>(std::ceil(y_extent / cell_size));
}

Vec3 boresight_from_angles(double azimuth, double elevation) {
  const double ce = std::cos(elevation);
  return {ce * std::cos(azimuth), ce * std::sin(azimuth), std::sin(elevation)};
}

bool covers_point(const Sensor& s, const Vec3& q) {
  const Vec3 v = q - s.position;
  const double d2 = dot(v, v);
  if (d2 == 0.0) return true;  // apex
  if (d2 > s.range * s.range) return false;
  // angle(u, v) <= half_angle  <=>  dot(u, v) >= cos(half_angle) * |v|
  const Vec3 u = boresight_from_angles(s.azimuth, s.elevation);
  return dot(u, v) >= std::cos(s.half_angle) * std::sqrt(d2);
}

CellSet rasterize_coverage(const Sensor& s, const TargetRegion& region) {
  CellSet out = region.make_cell_set();

  // Every covered plane point lies within `range` of the apex, so only the
  // cell window under that sphere's cross-section can contribute.
  const double dz = region.height() - s.position.z;
  const double reach2 = s.range * s.range - dz * dz;
  if (reach2 < 0.0) return out;
  const double reach = std::sqrt(reach2);
  const double g = region.cell_size();

  const auto clamp_col = [&](double x) {
    return std::clamp(x, 0.0, static_cast<double>(region.n_cols() - 1));
  };
  const auto clamp_row = [&](double y) {
    return std::clamp(y, 0.0, static_cast<double>(region.n_rows() - 1));
  };
  const auto col_lo = static_cast<std::size_t>(clamp_col(std::floor((s.position.x - reach) / g - 0.5)));
  const auto col_hi = static_cast<std::size_t>(clamp_col(std::ceil((s.position.x + reach) / g - 0.5)));
  const auto row_lo = static_cast<std::size_t>(clamp_row(std::floor((s.position.y - reach) / g - 0.5)));
  const auto row_hi = static_cast<std::size_t>(clamp_row(std::ceil((s.position.y + reach) / g - 0.5)));

  for (std::size_t row = row_lo; row <= row_hi; ++row) {
    for (std::size_t col = col_lo; col <= col_hi; ++col) {
      const std::size_t idx = region.index_of(row, col);
      if (covers_point(s, region.cell_center(idx))) out.insert(idx);
    }
  }
  return out;
}

bool visually_neighbors(const Sensor& a, const Sensor& b, const TargetRegion& region) {
  return rasterize_coverage(a, region).intersects(rasterize_coverage(b, region));
}

bool geo_neighbors(const Sensor& a, const Sensor& b, double comm_range) {
  if (!(comm_range > 0.0)) {
    throw std::invalid_argument("geo_neighbors: comm_range must be > 0");
  }
  const Vec3 v = a.position - b.position;
  return dot(v, v) <= comm_range * comm_range;
}

}  // namespace wcsn
