#pragma once

#include <cmath>
#include <stdexcept>

#include "ggiou/box.hpp"

namespace ggiou {

/// Which box provides the base width/height for the Gaussian standard
/// deviations: the overlap region between anchor and truth box, or the truth
/// box itself.
enum class SigmaSource { OverlapBox, TruthBox };

struct GGIoUParams {
  double alpha = 0.3;       // blend exponent, in [0, 1]
  double beta = 1.0 / 6.0;  // variance scale, > 0
  SigmaSource sigma_source = SigmaSource::OverlapBox;

  void validate() const {
    if (!(alpha >= 0.0 && alpha <= 1.0))
      throw std::invalid_argument("ggiou: alpha must be in [0, 1]");
    if (!(beta > 0.0) || !std::isfinite(beta))
      throw std::invalid_argument("ggiou: beta must be positive and finite");
  }

  friend bool operator==(const GGIoUParams&, const GGIoUParams&) = default;
};

/// Intersection over union of two normalized boxes. Symmetric, scale- and
/// translation-invariant, in [0, 1]. A zero-area union yields 0.
template <typename Scalar>
Scalar iou(const Box<Scalar>& a, const Box<Scalar>& b) {
  const Intersection<Scalar> inter = intersect(a, b);
  const Scalar uni = area(a) + area(b) - inter.area;
  if (!(uni > Scalar(0))) return Scalar(0);
  return inter.area / uni;
}

namespace detail {

// One squared term of the Gaussian exponent. A zero sigma is the limit case:
// the term is 0 when the offset is also 0, +inf otherwise.
template <typename Scalar>
Scalar gaussian_exponent_term(Scalar delta, Scalar sigma) {
  if (sigma == Scalar(0)) {
    return delta == Scalar(0) ? Scalar(0)
                              : std::numeric_limits<Scalar>::infinity();
  }
  const Scalar z = delta / sigma;
  return z * z;
}

}  // namespace detail

/// Gaussian distance between box centers: exp(-1/2 [(dx/s1)^2 + (dy/s2)^2])
/// with s1 = beta * w_base, s2 = beta * h_base taken from p.sigma_source.
/// Equals 1 iff the centers coincide; a zero-extent base with a nonzero
/// offset on the same axis yields 0.
template <typename Scalar>
Scalar gaussian_distance(const Box<Scalar>& anchor, const Box<Scalar>& gt,
                         const GGIoUParams& p) {
  Scalar w_base, h_base;
  if (p.sigma_source == SigmaSource::OverlapBox) {
    const Intersection<Scalar> inter = intersect(anchor, gt);
    w_base = inter.w;
    h_base = inter.h;
  } else {
    w_base = gt.width();
    h_base = gt.height();
  }
  const Scalar beta = static_cast<Scalar>(p.beta);
  const Scalar dx = anchor.center_x() - gt.center_x();
  const Scalar dy = anchor.center_y() - gt.center_y();
  const Scalar ex = detail::gaussian_exponent_term(dx, beta * w_base);
  const Scalar ey = detail::gaussian_exponent_term(dy, beta * h_base);
  if (std::isinf(ex) || std::isinf(ey)) return Scalar(0);
  return std::exp(Scalar(-0.5) * (ex + ey));
}

/// Gaussian-guided IoU: iou^(1-alpha) * gaussian_distance^alpha. In [0, 1];
/// 1 iff the boxes are identical. alpha = 0 reproduces iou bit for bit, and
/// a zero-area intersection yields 0 for every alpha.
template <typename Scalar>
Scalar ggiou(const Box<Scalar>& anchor, const Box<Scalar>& gt,
             const GGIoUParams& p) {
  if (p.alpha == 0.0) return iou(anchor, gt);
  if (intersect(anchor, gt).area == Scalar(0)) return Scalar(0);
  const Scalar alpha = static_cast<Scalar>(p.alpha);
  const Scalar overlap = iou(anchor, gt);
  const Scalar dc = gaussian_distance(anchor, gt, p);
  return std::pow(overlap, Scalar(1) - alpha) * std::pow(dc, alpha);
}

}  // namespace ggiou
