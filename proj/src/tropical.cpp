#include "trop/tropical.hpp"

#include <algorithm>
#include <set>

namespace trop {

void EnrichedHypersurface::validate() const {
    if (dim < 1) throw InputError("dimension must be >= 1");
    if (monomials.size() < 2)
        throw InputError("need >= 2 monomials for a nonempty tropical locus");
    std::set<Vec> seen;
    for (auto& m : monomials) {
        if (static_cast<int>(m.exp.size()) != dim)
            throw InputError("exponent dimension mismatch");
        if (!seen.insert(m.exp).second) throw InputError("duplicate exponent");
        if (m.coeff.field != field) throw InputError("coefficient field mismatch");
        if (m.coeff.rep == 0) throw InputError("zero coefficient");
    }
}

Rat EnrichedHypersurface::trop_coeff(const Vec& exp) const {
    return -monomial(exp).lift;
}

const EnrichedMonomial& EnrichedHypersurface::monomial(const Vec& exp) const {
    for (auto& m : monomials)
        if (m.exp == exp) return m;
    throw InputError("no such exponent");
}

nlohmann::ordered_json EnrichedHypersurface::to_json() const {
    nlohmann::ordered_json j;
    j["dim"] = dim;
    j["monomials"] = nlohmann::ordered_json::array();
    for (auto& m : monomials) {
        nlohmann::ordered_json e;
        e["exp"] = nlohmann::ordered_json::array();
        for (auto& c : m.exp) e["exp"].push_back(c.str());
        e["lift"] = m.lift.str();
        e["coeff"] = m.coeff.str();
        j["monomials"].push_back(e);
    }
    return j;
}

static Rat parse_rat(const nlohmann::json& v, const char* what) {
    try {
        if (v.is_number_integer()) return Rat(v.get<long long>());
        if (v.is_string()) {
            Rat r(v.get<std::string>());
            return r;
        }
    } catch (const std::exception&) {
    }
    throw InputError(std::string("bad ") + what + ": " + v.dump());
}

EnrichedHypersurface EnrichedHypersurface::from_json(const nlohmann::json& j,
                                                     FieldSpec f) {
    EnrichedHypersurface s;
    s.field = f;
    try {
        s.dim = j.at("dim").get<int>();
        for (auto& e : j.at("monomials")) {
            EnrichedMonomial m;
            for (auto& c : e.at("exp")) {
                Rat r = parse_rat(c, "exponent");
                if (denominator(r) != 1) throw InputError("non-integer exponent");
                m.exp.push_back(numerator(r));
            }
            m.lift = parse_rat(e.at("lift"), "lift");
            Rat cv = parse_rat(e.at("coeff"), "coefficient");
            if (cv == 0) throw InputError("zero coefficient");
            m.coeff = square_class_reduce(cv, f);
            s.monomials.push_back(m);
        }
    } catch (const nlohmann::json::exception& ex) {
        throw InputError(std::string("bad hypersurface json: ") + ex.what());
    } catch (const FieldError& ex) {
        throw InputError(std::string("bad hypersurface json: ") + ex.what());
    }
    s.validate();
    return s;
}

Polytope newton_polytope(const EnrichedHypersurface& f) {
    std::vector<Vec> exps;
    for (auto& m : f.monomials) exps.push_back(m.exp);
    return convex_hull(exps);
}

namespace {

// Affine functional through the lifted subset; any solution of the
// underdetermined system works since dominance is tested on the affine hull.
bool affine_through(const std::vector<Vec>& pts, const std::vector<Rat>& vals,
                    std::vector<Rat>& c, Rat& c0) {
    size_t n = pts[0].size(), rows = pts.size();
    // unknowns: c[0..n-1], c0
    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(n + 2, 0));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < n; ++j) a[i][j] = Rat(pts[i][j]);
        a[i][n] = 1;
        a[i][n + 1] = vals[i];
    }
    std::vector<int> pivot_col(rows, -1);
    size_t r = 0;
    for (size_t col = 0; col <= n && r < rows; ++col) {
        size_t piv = r;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][col] == 0) continue;
            Rat f = a[i][col] / a[r][col];
            for (size_t j = col; j <= n + 1; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col[r] = static_cast<int>(col);
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (a[i][n + 1] != 0) return false;  // inconsistent (dependent points)
    c.assign(n, 0);
    c0 = 0;
    for (size_t i = 0; i < r; ++i) {
        Rat v = a[i][n + 1] / a[i][pivot_col[i]];
        if (pivot_col[i] == static_cast<int>(n))
            c0 = v;
        else
            c[pivot_col[i]] = v;
    }
    return true;
}

}  // namespace

DualSubdivision dual_subdivision(const EnrichedHypersurface& f) {
    f.validate();
    if (f.dim > 3) throw GeometryError("dimension unsupported");
    DualSubdivision ds;
    std::vector<Vec> exps;
    std::vector<Rat> heights;
    for (auto& m : f.monomials) {
        exps.push_back(m.exp);
        heights.push_back(-m.lift);
        ds.heights[m.exp] = -m.lift;
    }
    ds.newton = convex_hull(exps);
    int r = affine_rank(exps);
    size_t k = exps.size();
    std::set<std::vector<Vec>> seen;
    // choose r+1 exponents, fit the affine functional, keep dominating ones
    std::vector<size_t> idx(r + 1);
    for (size_t i = 0; i <= r; ++i) idx[i] = i;
    while (true) {
        std::vector<Vec> pts;
        std::vector<Rat> vals;
        for (size_t i : idx) {
            pts.push_back(exps[i]);
            vals.push_back(heights[i]);
        }
        if (affine_rank(pts) == r) {
            std::vector<Rat> c;
            Rat c0;
            if (affine_through(pts, vals, c, c0)) {
                bool upper = true;
                std::vector<Vec> support;
                for (size_t i = 0; i < k; ++i) {
                    Rat v = c0;
                    for (size_t j = 0; j < exps[i].size(); ++j)
                        v += c[j] * Rat(exps[i][j]);
                    if (v < heights[i]) {
                        upper = false;
                        break;
                    }
                    if (v == heights[i]) support.push_back(exps[i]);
                }
                if (upper && affine_rank(support) == r) {
                    Polytope cell = convex_hull(support);
                    if (seen.insert(cell.vertices).second) {
                        for (auto& s : support)
                            if (std::find(cell.vertices.begin(), cell.vertices.end(),
                                          s) == cell.vertices.end())
                                ds.degenerate_support = true;
                        ds.cells.push_back(cell);
                    }
                }
            }
        }
        // next combination
        int pos = r;
        while (pos >= 0 && idx[pos] == k - (r + 1) + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i <= r; ++i) idx[i] = idx[i - 1] + 1;
    }
    for (auto& cell : ds.cells)
        for (auto& v : cell.vertices)
            ds.vertex_coeffs.emplace(v, f.monomial(v).coeff);
    return ds;
}

namespace {

std::vector<Rat> dual_vertex(const DualSubdivision& ds, const Polytope& cell) {
    // ties a(e_i) + e_i.y = a(e_0) + e_0.y give (e_i - e_0).y = a(e_0) - a(e_i)
    const Vec& e0 = cell.vertices[0];
    Rat a0 = ds.heights.at(e0);
    std::vector<std::vector<Rat>> rows;
    for (size_t i = 1; i < cell.vertices.size() && rows.size() < 2; ++i) {
        const Vec& e = cell.vertices[i];
        std::vector<Rat> row{Rat(e[0] - e0[0]), Rat(e[1] - e0[1]),
                             a0 - ds.heights.at(e)};
        if (rows.empty()) {
            rows.push_back(row);
        } else {
            if (rows[0][0] * row[1] - rows[0][1] * row[0] != 0) rows.push_back(row);
        }
    }
    if (rows.size() < 2) throw GeometryError("cell is not two-dimensional");
    Rat d = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0];
    return {(rows[0][2] * rows[1][1] - rows[1][2] * rows[0][1]) / d,
            (rows[0][0] * rows[1][2] - rows[1][0] * rows[0][2]) / d};
}

std::vector<Vec> ring_of(const Polytope& cell) {
    std::vector<Vec> pts = cell.vertices;
    std::sort(pts.begin(), pts.end());
    // rebuild the CCW ring with a monotone chain
    std::vector<Vec> lo, hi;
    auto cr = [](const Vec& o, const Vec& a, const Vec& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    for (auto& p : pts) {
        while (lo.size() >= 2 && cr(lo[lo.size() - 2], lo.back(), p) <= 0)
            lo.pop_back();
        lo.push_back(p);
    }
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (hi.size() >= 2 && cr(hi[hi.size() - 2], hi.back(), *it) <= 0)
            hi.pop_back();
        hi.push_back(*it);
    }
    lo.pop_back();
    hi.pop_back();
    lo.insert(lo.end(), hi.begin(), hi.end());
    return lo;
}

}  // namespace

PlanarCurve curve_from_subdivision(const DualSubdivision& ds) {
    if (ds.newton.dim != 2) throw GeometryError("curve extraction needs n = 2");
    PlanarCurve curve;
    int r = affine_rank(ds.newton.vertices);
    if (r == 0) throw GeometryError("degenerate Newton polytope");
    if (r == 1) {
        // binomial-type locus: one parallel line per segment cell
        for (auto& cell : ds.cells) {
            const Vec& I = cell.vertices.front();
            const Vec& J = cell.vertices.back();
            Vec d = vec_sub(J, I);
            Rat rhs = ds.heights.at(J) - ds.heights.at(I);
            Rat nn = Rat(dot(d, d));
            std::vector<Rat> anchor{Rat(d[0]) * rhs / nn, Rat(d[1]) * rhs / nn};
            size_t vi = curve.vertices.size();
            curve.vertices.push_back({anchor, 0});
            Vec perp = primitive(Vec{-d[1], d[0]});
            Int w = content(d);
            curve.rays.push_back({vi, perp, w});
            curve.rays.push_back({vi, Vec{-perp[0], -perp[1]}, w});
        }
        return curve;
    }
    for (size_t ci = 0; ci < ds.cells.size(); ++ci)
        curve.vertices.push_back({dual_vertex(ds, ds.cells[ci]), ci});
    // bounded edges: cells sharing a DS edge
    for (size_t i = 0; i < ds.cells.size(); ++i)
        for (size_t j = i + 1; j < ds.cells.size(); ++j) {
            std::vector<Vec> common;
            for (auto& v : ds.cells[i].vertices)
                if (std::find(ds.cells[j].vertices.begin(),
                              ds.cells[j].vertices.end(),
                              v) != ds.cells[j].vertices.end())
                    common.push_back(v);
            if (common.size() == 2)
                curve.edges.push_back(
                    {i, j, content(vec_sub(common[1], common[0]))});
        }
    // rays: DS edges on the boundary of the Newton polytope
    for (size_t ci = 0; ci < ds.cells.size(); ++ci) {
        auto ring = ring_of(ds.cells[ci]);
        for (size_t e = 0; e < ring.size(); ++e) {
            const Vec& a = ring[e];
            const Vec& b = ring[(e + 1) % ring.size()];
            bool shared = false;
            for (size_t j = 0; j < ds.cells.size() && !shared; ++j) {
                if (j == ci) continue;
                auto& vs = ds.cells[j].vertices;
                if (std::find(vs.begin(), vs.end(), a) != vs.end() &&
                    std::find(vs.begin(), vs.end(), b) != vs.end())
                    shared = true;
            }
            if (shared) continue;
            // outward normal of the CCW ring edge a->b
            Vec dir = primitive(Vec{b[1] - a[1], a[0] - b[0]});
            curve.rays.push_back({ci, dir, content(vec_sub(b, a))});
        }
    }
    return curve;
}

}  // namespace trop
