#pragma once

#include "trop/intersect.hpp"

namespace trop {

struct SignedOddCorner {
    Vec vertex;
    int sign;                       // epsilon_P(v)
    SquareClass coeff;              // prod of the chosen monomials' classes
    std::vector<int> decomposition; // 0 = I^i, 1 = J^i, with v = sum K^i
};

// Corners of the dual cell with all coordinates odd.
std::vector<Vec> odd_corners(const IntersectionDatum& d);

// Decomposition v = sum K^i over the 2^n corner choices (unique).
std::vector<int> corner_decomposition(const IntersectionDatum& d, const Vec& v);

// epsilon_P(v) = (prod (-1)^{[K^i = J^i]}) * sign(det Delta).
int sign_of_vertex(const IntersectionDatum& d, const Vec& v);
// Same sign from the outward edge vectors at v (cross-check).
int sign_of_vertex_geometric(const IntersectionDatum& d, const Vec& v);

std::vector<SignedOddCorner> signed_odd_corners(const IntersectionDatum& d);

// Main formula: sum over odd corners of <eps(v) alpha_v> plus (m-q)/2 h.
GWElement enriched_multiplicity(const IntersectionDatum& d);

GWElement total_enriched_count(const std::vector<EnrichedHypersurface>& surfs,
                               FieldSpec field);

bool is_combinatorially_oriented(const std::vector<Polytope>& newtons);

struct BoundReport {
    GWElement total;
    long r = 0;   // non-hyperbolic entries of the Witt-reduced total
    long N = 0;   // odd boundary points of the Minkowski sum
    bool ok = false;
};

BoundReport non_orientable_bound_check(
    const std::vector<EnrichedHypersurface>& surfs, FieldSpec field);

}  // namespace trop
