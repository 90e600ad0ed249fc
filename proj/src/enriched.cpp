#include "trop/enriched.hpp"

#include <algorithm>

namespace trop {

std::vector<Vec> odd_corners(const IntersectionDatum& d) {
    std::vector<Vec> out;
    for (auto& v : d.cell.vertices) {
        bool odd = true;
        for (auto& c : v)
            if (c % 2 == 0) odd = false;
        if (odd) out.push_back(v);
    }
    return out;
}

std::vector<int> corner_decomposition(const IntersectionDatum& d, const Vec& v) {
    size_t n = d.pairs.size();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Vec s(v.size(), 0);
        for (size_t i = 0; i < n; ++i)
            s = vec_add(s, (mask >> i & 1) ? d.pairs[i].second : d.pairs[i].first);
        if (s == v) {
            std::vector<int> choice(n);
            for (size_t i = 0; i < n; ++i) choice[i] = mask >> i & 1;
            return choice;
        }
    }
    throw GeometryError("not a corner of the cell");
}

int sign_of_vertex(const IntersectionDatum& d, const Vec& v) {
    auto choice = corner_decomposition(d, v);
    int s = d.det_delta > 0 ? 1 : -1;
    for (int c : choice)
        if (c) s = -s;
    return s;
}

int sign_of_vertex_geometric(const IntersectionDatum& d, const Vec& v) {
    // determinant of the cell edge vectors pointing into v
    auto choice = corner_decomposition(d, v);
    Mat rows;
    for (size_t i = 0; i < choice.size(); ++i) {
        const Vec& k = choice[i] ? d.pairs[i].second : d.pairs[i].first;
        const Vec& o = choice[i] ? d.pairs[i].first : d.pairs[i].second;
        rows.push_back(vec_sub(k, o));
    }
    Int dd = det(rows);
    if (dd == 0) throw GeometryError("degenerate cell");
    return dd > 0 ? 1 : -1;
}

std::vector<SignedOddCorner> signed_odd_corners(const IntersectionDatum& d) {
    std::vector<SignedOddCorner> out;
    for (auto& v : odd_corners(d)) {
        SignedOddCorner c;
        c.vertex = v;
        c.decomposition = corner_decomposition(d, v);
        c.sign = sign_of_vertex(d, v);
        c.coeff = union_coefficient(d, c.decomposition);
        out.push_back(c);
    }
    return out;
}

GWElement enriched_multiplicity(const IntersectionDatum& d) {
    if (d.field.kind == FieldKind::PrimeField &&
        d.m % d.field.characteristic == 0)
        throw NonTransverse("characteristic divides the multiplicity");
    auto corners = signed_odd_corners(d);
    Int q = static_cast<long>(corners.size());
    if ((d.m - q) % 2 != 0)
        throw std::logic_error("m - q must be even for a transverse cell");
    GWElement r = GWElement::zero(d.field);
    for (auto& c : corners) {
        SquareClass a = c.coeff;
        if (c.sign < 0) a = a.negated();
        r.diag.push_back(a);
    }
    r.hyperbolics = static_cast<long>((d.m - q) / 2);
    r.normalize();
    return r;
}

GWElement total_enriched_count(const std::vector<EnrichedHypersurface>& surfs,
                               FieldSpec field) {
    GWElement total = GWElement::zero(field);
    for (auto& d : find_transverse_intersections(surfs, field))
        total = gw_add(total, enriched_multiplicity(d));
    return total;
}

bool is_combinatorially_oriented(const std::vector<Polytope>& newtons) {
    if (newtons.empty()) throw GeometryError("no polytopes");
    Polytope s = newtons[0];
    for (size_t i = 1; i < newtons.size(); ++i) s = minkowski_sum(s, newtons[i]);
    return boundary_odd_points(s).empty();
}

BoundReport non_orientable_bound_check(
    const std::vector<EnrichedHypersurface>& surfs, FieldSpec field) {
    BoundReport rep;
    rep.total = total_enriched_count(surfs, field);
    rep.r = static_cast<long>(rep.total.diag.size());
    Polytope s = newton_polytope(surfs[0]);
    std::vector<long> degrees;
    bool all_dense_simplices = surfs.size() == 2 && surfs[0].dim == 2;
    for (size_t i = 0; i < surfs.size(); ++i) {
        Polytope np = newton_polytope(surfs[i]);
        if (i > 0) s = minkowski_sum(s, np);
        if (all_dense_simplices) {
            Int d = 0;
            for (auto& v : np.vertices) {
                Int cs = 0;
                for (auto& c : v) cs += c;
                d = std::max(d, cs);
            }
            if (np == standard_simplex(2, static_cast<long>(d)))
                degrees.push_back(static_cast<long>(d));
            else
                all_dense_simplices = false;
        }
    }
    rep.N = static_cast<long>(boundary_odd_points(s).size());
    rep.ok = rep.r <= rep.N;
    if (all_dense_simplices && degrees.size() == 2)
        rep.ok = rep.ok && rep.r <= std::min(degrees[0], degrees[1]);
    return rep;
}

}  // namespace trop
