#pragma once

#include "trop/tropical.hpp"

namespace trop {

struct NonTransverse : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One transverse intersection point with its local combinatorial data.
struct IntersectionDatum {
    std::vector<Rat> point;                       // in R^n
    std::vector<std::pair<Vec, Vec>> pairs;       // (I^i, J^i) per surface
    std::vector<Vec> deltas;                      // I^i - J^i
    Int det_delta;                                // det of the Delta-matrix
    Int m;                                        // |det|
    Polytope cell;                                // corners {sum K^i}
    std::vector<std::pair<SquareClass, SquareClass>> coeffs;  // (alpha_i, beta_i)
    FieldSpec field;
};

// Binomial system alpha_i x^{I^i} + beta_i x^{J^i} at a transverse point.
struct LocalBinomialSystem {
    int n = 0;
    std::vector<Vec> deltas;
    std::vector<SquareClass> alphas, betas;
    Vec anchor;  // sum I^i
    FieldSpec field;
};

// Brute force over one unordered exponent pair per surface: solve
// Delta^i . y = a_{J^i} - a_{I^i}, keep strict-argmax solutions.
// Throws NonTransverse on argmax ties, duplicate points, or char(k) | m.
std::vector<IntersectionDatum> find_transverse_intersections(
    const std::vector<EnrichedHypersurface>& surfs, FieldSpec field);
std::vector<IntersectionDatum> find_transverse_intersections_serial(
    const std::vector<EnrichedHypersurface>& surfs, FieldSpec field);

Int classical_multiplicity(const IntersectionDatum& d);
SquareClass union_coefficient(const IntersectionDatum& d,
                              const std::vector<int>& choice);  // 0 = I, 1 = J
LocalBinomialSystem local_binomial_system(const IntersectionDatum& d);

}  // namespace trop
