#ifndef AMOEBA_POLYTOPE_HPP
#define AMOEBA_POLYTOPE_HPP

#include <cstdint>
#include <vector>

#include "amoeba/polynomial.hpp"

namespace amoeba {

/// Extreme points of conv(pts) among pts, sorted lex. Exact integer geometry
/// for r <= 2 (monotone chain); LP-based extreme-point filter for r >= 3.
std::vector<ExponentVector> hull_vertices(const std::vector<ExponentVector>& pts, int r);

/// Is x in conv(m * pts)? Exact for r <= 2; LP at hardware precision beyond.
bool point_in_dilated_hull(const ExponentVector& x, const std::vector<ExponentVector>& pts,
                           std::int64_t m, int r);

/// Number of lattice points in the bounding box of the m-fold dilate,
/// saturating at 2^63-1.
std::uint64_t dilated_box_count(const NewtonPolytopeData& P, std::int64_t m);

/// All integer points of m * conv(support). Throws budget_error if the
/// bounding box exceeds max_box points.
std::vector<ExponentVector> lattice_points_in_dilated_hull(const NewtonPolytopeData& P,
                                                           std::int64_t m,
                                                           std::uint64_t max_box = 10'000'000ULL);

}  // namespace amoeba

#endif
