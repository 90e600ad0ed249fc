#pragma once

#include <nlohmann/json.hpp>

#include "trop/gw.hpp"
#include "trop/lattice.hpp"

namespace trop {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One term alpha_I * x^I * t^phi(I) of a Viro polynomial modulo squares.
struct EnrichedMonomial {
    Vec exp;
    Rat lift = 0;          // phi(I); tropical coefficient is a_I = -phi(I)
    SquareClass coeff;
};

struct EnrichedHypersurface {
    int dim = 0;
    std::vector<EnrichedMonomial> monomials;
    FieldSpec field;

    void validate() const;  // >= 2 monomials, distinct exponents, unit coeffs
    Rat trop_coeff(const Vec& exp) const;  // a_I = -phi(I)
    const EnrichedMonomial& monomial(const Vec& exp) const;

    nlohmann::ordered_json to_json() const;
    static EnrichedHypersurface from_json(const nlohmann::json& j, FieldSpec f);
};

Polytope newton_polytope(const EnrichedHypersurface& f);

// Regular subdivision of the Newton polytope from the upper faces of the
// lift I -> a_I (max-plus convention).
struct DualSubdivision {
    Polytope newton;
    std::vector<Polytope> cells;  // top-dimensional (rank of newton)
    std::map<Vec, SquareClass> vertex_coeffs;
    std::map<Vec, Rat> heights;   // a_I on every exponent
    // true when some lifted exponent lies on a cell without being one of its
    // corners (non-generic lift; downstream transversality will reject)
    bool degenerate_support = false;
};

DualSubdivision dual_subdivision(const EnrichedHypersurface& f);

// Planar tropical curve dual to a subdivision (n = 2 only).
struct PlanarCurve {
    struct Vertex {
        std::vector<Rat> pos;   // point in R^2
        size_t cell;            // index of the dual 2-cell
    };
    struct Edge {
        size_t a, b;            // vertex indices
        Int weight;             // lattice length of the dual DS edge
    };
    struct Ray {
        size_t v;
        Vec dir;                // primitive direction
        Int weight;
    };
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<Ray> rays;
};

PlanarCurve curve_from_subdivision(const DualSubdivision& ds);

}  // namespace trop
