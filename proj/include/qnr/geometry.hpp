// Planar convex geometry on complex numbers: hulls, membership, distances.
#pragma once

#include <vector>

#include "qnr/quat.hpp"

namespace qnr {

/// Convex hull by Andrew's monotone chain, counter-clockwise from the
/// lexicographically smallest point. Points whose turn has cross <= 1e-12
/// are dropped as collinear. Throws std::invalid_argument on empty input.
std::vector<Complex> hull2d(std::vector<Complex> points);

/// Euclidean distance from z to the closed convex polygon (0 inside).
/// Handles degenerate hulls (a point or a segment).
double distance_to_hull(const std::vector<Complex>& hull, Complex z);

/// Signed distance: negative inside (depth to the nearest edge), positive outside.
double signed_distance_to_hull(const std::vector<Complex>& hull, Complex z);

/// Depth of z inside the relative interior of the hull: the distance to the
/// relative boundary for a polygon, to the nearer endpoint for a segment, and
/// 0 for a point. Negative (minus the distance) when z lies outside.
double interior_depth(const std::vector<Complex>& hull, Complex z, double tol = 1e-9);

bool point_in_hull(const std::vector<Complex>& hull, Complex z, double tol);

double distance_to_segment(Complex a, Complex b, Complex z);

/// Symmetric Hausdorff distance between finite point sets.
double hausdorff(const std::vector<Complex>& p, const std::vector<Complex>& q);

/// max over p in P of the distance to the nearest point of Q.
double directed_hausdorff(const std::vector<Complex>& p, const std::vector<Complex>& q);

/// Hausdorff distance between the convex polygons spanned by two hulls.
double hull_hausdorff(const std::vector<Complex>& p, const std::vector<Complex>& q);

/// 2D cross product of (b - a) and (c - a).
inline double cross(Complex a, Complex b, Complex c) {
  return (b.real() - a.real()) * (c.imag() - a.imag()) - (b.imag() - a.imag()) * (c.real() - a.real());
}

}  // namespace qnr
