#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ggiou {

/// Axis-aligned rectangle in corner form: (x1, y1) top-left, (x2, y2)
/// bottom-right, continuous pixel coordinates (width = x2 - x1, no +1 inset).
template <typename Scalar>
struct Box {
  Scalar x1 = 0, y1 = 0, x2 = 0, y2 = 0;

  Box() = default;
  Box(Scalar x1_, Scalar y1_, Scalar x2_, Scalar y2_)
      : x1(x1_), y1(y1_), x2(x2_), y2(y2_) {}

  Scalar width() const { return x2 - x1; }
  Scalar height() const { return y2 - y1; }
  Scalar center_x() const { return (x1 + x2) / Scalar(2); }
  Scalar center_y() const { return (y1 + y2) / Scalar(2); }

  static Box from_center(Scalar cx, Scalar cy, Scalar w, Scalar h) {
    return Box(cx - w / Scalar(2), cy - h / Scalar(2), cx + w / Scalar(2),
               cy + h / Scalar(2));
  }

  bool is_finite() const {
    return std::isfinite(x1) && std::isfinite(y1) && std::isfinite(x2) &&
           std::isfinite(y2);
  }
  bool is_normalized() const { return x2 >= x1 && y2 >= y1; }

  friend bool operator==(const Box&, const Box&) = default;
};

using Boxd = Box<double>;
using Boxf = Box<float>;

/// Clamped overlap of two boxes: extents and area, all >= 0.
template <typename Scalar>
struct Intersection {
  Scalar w = 0, h = 0, area = 0;
};

/// Sorts the coordinates of each axis so that x2 >= x1 and y2 >= y1.
/// Idempotent. Throws std::invalid_argument on non-finite coordinates.
template <typename Scalar>
Box<Scalar> normalize(const Box<Scalar>& b) {
  if (!b.is_finite())
    throw std::invalid_argument("ggiou: box has non-finite coordinates");
  return Box<Scalar>(std::min(b.x1, b.x2), std::min(b.y1, b.y2),
                     std::max(b.x1, b.x2), std::max(b.y1, b.y2));
}

/// (x2 - x1) * (y2 - y1). Requires a normalized box.
template <typename Scalar>
Scalar area(const Box<Scalar>& b) {
  return b.width() * b.height();
}

/// Clamped overlap between two normalized boxes. Commutative; degenerate or
/// disjoint inputs produce zero extents rather than negative ones.
template <typename Scalar>
Intersection<Scalar> intersect(const Box<Scalar>& a, const Box<Scalar>& b) {
  const Scalar ix1 = std::max(a.x1, b.x1);
  const Scalar ix2 = std::min(a.x2, b.x2);
  const Scalar iy1 = std::max(a.y1, b.y1);
  const Scalar iy2 = std::min(a.y2, b.y2);
  Intersection<Scalar> out;
  out.w = ix2 > ix1 ? ix2 - ix1 : Scalar(0);
  out.h = iy2 > iy1 ? iy2 - iy1 : Scalar(0);
  out.area = out.w * out.h;
  return out;
}

}  // namespace ggiou
