// Closed-form geometry of the upper section of W(A) for 2x2 matrices.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qnr/range.hpp"

namespace qnr {

/// U* A U = [[z1, p], [0, z2]] with U = [X Y] unitary.
struct TriangularForm2 {
  Complex z1, z2;
  Quaternion p;
  QMatrix u;
  double residual = 0.0;  ///< |U* A U - T|_F
};

class TriangularizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Schur form over H for n = 2. Throws DimensionError for other sizes and
/// TriangularizationError when the residual exceeds 1e-8 |A|.
TriangularForm2 triangularize2(const QMatrix& a);

enum class RegionKind { Segment, Triangle, HalfDisk, MinkowskiBound };

std::string to_string(RegionKind kind);

struct Region2D {
  RegionKind kind = RegionKind::Segment;
  int case_number = 0;            ///< 1..4
  std::vector<Complex> vertices;  ///< Segment endpoints, Triangle corners, or the base region of a MinkowskiBound
  Complex center;                 ///< HalfDisk center
  double radius = 0.0;            ///< HalfDisk radius, or the |p|/2 offset of a MinkowskiBound
  bool leftover = false;          ///< z1 = z2 != 0 with p != 0, bounded only
};

/// Dispatch on the triangular form with absolute tolerance `tol` for z1 = z2
/// and p = 0.
Region2D classify_case(const TriangularForm2& t, double tol = 1e-9);

/// Euclidean distance from z to the region (0 inside).
double region_distance(const Region2D& r, Complex z);

bool region_contains(const Region2D& r, Complex z, double tol);

/// Points covering the closed region: its boundary plus an interior lattice.
/// Not defined for MinkowskiBound.
std::vector<Complex> region_discretization(const Region2D& r, int resolution = 100);

/// Closed outline of the region in the upper half-plane, for drawing.
std::vector<Complex> region_outline(const Region2D& r, int resolution = 128);

struct CaseReport {
  TriangularForm2 form;
  Region2D region;
  std::size_t samples = 0;
  double containment = 0.0;  ///< max distance from a sampled section point to the region
  double containment_tol = 5e-3;
  std::optional<double> filled;  ///< max distance from the region discretization to the sampled hull (Cases 1-3)
  double filled_tol = 5e-2;
  std::optional<double> filled_points;  ///< same distance to the nearest sampled point, for reference
  /// Residuals of the explicit witnesses from the case analysis: Case 1 and 3
  /// sweep targets across the region, Case 2 attains v and both slanted edges.
  std::optional<double> witness_residual;
  std::optional<double> young_slack;  ///< Case 3: min over samples of |p|/2 - |q|
  std::optional<double> v_attained;   ///< Case 2: optimizer residual at target v
  std::optional<bool> real_interval;  ///< Case 4: W cap R is empty or an interval
  std::optional<double> gap_area;     ///< Case 4 diagnostic: area of Gamma minus the sampled hull
  std::string note;
  bool pass() const;
};

/// Compares sampled sections of a 2x2 matrix against the closed-form region.
CaseReport case_equality_check(const QMatrix& a, std::size_t samples = 100000, std::uint64_t seed = 42);

/// Value <w, T w> for the explicit Case 2 witness on the slanted edge from
/// z (z1 or z2) to v at parameter t, in triangular coordinates.
QVector case2_edge_witness(Complex z_from, Complex z_other, double t);

}  // namespace qnr
