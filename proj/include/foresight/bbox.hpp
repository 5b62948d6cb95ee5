#pragma once

#include "foresight/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace foresight {

/// Axis-aligned pixel rectangle covering x1 <= x < x2, y1 <= y < y2, so
/// area = (x2-x1)*(y2-y1). Coordinates may be negative before clamping.
struct BoundingBox {
  int x1 = 0;
  int y1 = 0;
  int x2 = 1;
  int y2 = 1;

  BoundingBox() = default;
  BoundingBox(int ax1, int ay1, int ax2, int ay2) : x1(ax1), y1(ay1), x2(ax2), y2(ay2) {
    if (x1 >= x2 || y1 >= y2) {
      throw DegenerateBox("bounding box must satisfy x1 < x2 and y1 < y2: [" +
                          std::to_string(x1) + "," + std::to_string(y1) + "," +
                          std::to_string(x2) + "," + std::to_string(y2) + "]");
    }
  }

  long long width() const { return static_cast<long long>(x2) - x1; }
  long long height() const { return static_cast<long long>(y2) - y1; }
  long long area() const { return width() * height(); }

  bool operator==(const BoundingBox& o) const = default;
};

inline double iou(const BoundingBox& a, const BoundingBox& b) {
  const long long ix1 = std::max(a.x1, b.x1);
  const long long iy1 = std::max(a.y1, b.y1);
  const long long ix2 = std::min(a.x2, b.x2);
  const long long iy2 = std::min(a.y2, b.y2);
  const long long iw = ix2 - ix1;
  const long long ih = iy2 - iy1;
  if (iw <= 0 || ih <= 0) return 0.0;
  const long long inter = iw * ih;
  const long long uni = a.area() + b.area() - inter;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

/// Clips the box into [0,width] x [0,height]. Throws DegenerateBox when the
/// clipped box has zero area (box fully outside the image).
inline BoundingBox clamp_bbox(const BoundingBox& b, int width, int height) {
  const int cx1 = std::clamp(b.x1, 0, width);
  const int cy1 = std::clamp(b.y1, 0, height);
  const int cx2 = std::clamp(b.x2, 0, width);
  const int cy2 = std::clamp(b.y2, 0, height);
  if (cx1 >= cx2 || cy1 >= cy2) {
    throw DegenerateBox("box [" + std::to_string(b.x1) + "," + std::to_string(b.y1) + "," +
                        std::to_string(b.x2) + "," + std::to_string(b.y2) +
                        "] collapses within " + std::to_string(width) + "x" +
                        std::to_string(height));
  }
  return BoundingBox(cx1, cy1, cx2, cy2);
}

}  // namespace foresight
