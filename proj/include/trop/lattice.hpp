#pragma once

#include "trop/field.hpp"

namespace trop {

struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Vec = std::vector<Int>;   // lattice vector
using Mat = std::vector<Vec>;   // row-major integer matrix

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Int dot(const Vec& a, const Vec& b);
Int content(const Vec& a);      // gcd of entries
Vec primitive(const Vec& a);    // a / content

Int det(const Mat& m);          // exact, any n (fraction-free elimination)
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_identity(int n);
// Inverse of a unimodular integer matrix.
Mat unimodular_inverse(const Mat& m);

// U*M*V = D with U, V unimodular, D = diag(d1 | d2 | ... | dn), di >= 0.
struct SNFDecomposition {
    Mat U, V, D, source;
};
SNFDecomposition snf(const Mat& m);

// Lattice polytope given by its corner vertices (sorted, deduplicated).
struct Polytope {
    int dim = 0;                // ambient dimension
    std::vector<Vec> vertices;

    bool operator==(const Polytope& o) const {
        return dim == o.dim && vertices == o.vertices;
    }
};

// n <= 3 for full-dimensional input; lower-dimensional input handled for any
// affine rank <= 2 in ambient dimension <= 3.
Polytope convex_hull(const std::vector<Vec>& points);
Polytope minkowski_sum(const Polytope& p, const Polytope& q);
Rat volume(const Polytope& p);  // Euclidean; 0 for lower-dimensional p
// Inclusion-exclusion mixed volume, normalized so MVol(Delta_d1..Delta_dn)
// = d1*...*dn; requires n polytopes in R^n, n <= 3.
Int mixed_volume(const std::vector<Polytope>& ps);
// All lattice points on the boundary of p with every coordinate odd.
std::vector<Vec> boundary_odd_points(const Polytope& p);
// Membership / boundary tests for lattice points.
bool contains_point(const Polytope& p, const Vec& x);
bool on_boundary(const Polytope& p, const Vec& x);

// Standard simplex d*Delta_n = conv{0, d*e_1, ..., d*e_n}.
Polytope standard_simplex(int n, long d);

// Affine rank of a point set.
int affine_rank(const std::vector<Vec>& points);

// Supporting halfspaces n.x <= c of the hull (facets for full-dim input).
struct HalfSpace {
    Vec normal;  // primitive
    Int offset;
};
std::vector<HalfSpace> supporting_halfspaces(const std::vector<Vec>& points);

}  // namespace trop
