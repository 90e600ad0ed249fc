#include "trop/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace trop {

Vec vec_add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Int dot(const Vec& a, const Vec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Int content(const Vec& a) {
    Int g = 0;
    for (auto& x : a) g = gcd(g, x);
    return g;
}

Vec primitive(const Vec& a) {
    Int g = content(a);
    if (g == 0) throw GeometryError("primitive of zero vector");
    Vec r = a;
    for (auto& x : r) x /= g;
    return r;
}

Int det(const Mat& m) {
    size_t n = m.size();
    for (auto& row : m)
        if (row.size() != n) throw GeometryError("det: not square");
    if (n == 0) return 1;
    // fraction-free (Bareiss) elimination
    Mat a = m;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && a[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

Mat mat_identity(int n) {
    Mat m(n, Vec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    size_t r = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
    Mat m(r, Vec(c, 0));
    for (size_t i = 0; i < r; ++i)
        for (size_t t = 0; t < k; ++t)
            for (size_t j = 0; j < c; ++j) m[i][j] += a[i][t] * b[t][j];
    return m;
}

Mat unimodular_inverse(const Mat& m) {
    int n = static_cast<int>(m.size());
    // rational Gauss-Jordan; result is integral since |det| = 1
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
        a[i][n + i] = 1;
    }
    for (int c = 0; c < n; ++c) {
        int piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) throw GeometryError("singular matrix");
        std::swap(a[c], a[piv]);
        Rat d = a[c][c];
        for (int j = 0; j < 2 * n; ++j) a[c][j] /= d;
        for (int i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (int j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    Mat inv(n, Vec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (denominator(a[i][n + j]) != 1)
                throw GeometryError("matrix not unimodular");
            inv[i][j] = numerator(a[i][n + j]);
        }
    return inv;
}

SNFDecomposition snf(const Mat& m) {
    int n = static_cast<int>(m.size());
    for (auto& row : m)
        if (static_cast<int>(row.size()) != n) throw GeometryError("snf: not square");
    if (det(m) == 0) throw GeometryError("snf: singular matrix");
    SNFDecomposition s;
    s.source = m;
    s.D = m;
    s.U = mat_identity(n);
    s.V = mat_identity(n);
    Mat& D = s.D;
    auto row_sub = [&](int i, int k, const Int& q) {  // row_i -= q*row_k
        for (int j = 0; j < n; ++j) {
            D[i][j] -= q * D[k][j];
            s.U[i][j] -= q * s.U[k][j];
        }
    };
    auto col_sub = [&](int j, int k, const Int& q) {  // col_j -= q*col_k
        for (int i = 0; i < n; ++i) {
            D[i][j] -= q * D[i][k];
            s.V[i][j] -= q * s.V[i][k];
        }
    };
    auto row_swap = [&](int i, int k) {
        std::swap(D[i], D[k]);
        std::swap(s.U[i], s.U[k]);
    };
    auto col_swap = [&](int j, int k) {
        for (int i = 0; i < n; ++i) {
            std::swap(D[i][j], D[i][k]);
            std::swap(s.V[i][j], s.V[i][k]);
        }
    };
    for (int t = 0; t < n; ++t) {
        while (true) {
            // smallest nonzero pivot into (t,t)
            int bi = -1, bj = -1;
            for (int i = t; i < n; ++i)
                for (int j = t; j < n; ++j)
                    if (D[i][j] != 0 &&
                        (bi < 0 || abs(D[i][j]) < abs(D[bi][bj]))) {
                        bi = i;
                        bj = j;
                    }
            if (bi < 0) throw GeometryError("snf: singular matrix");
            if (bi != t) row_swap(bi, t);
            if (bj != t) col_swap(bj, t);
            bool clean = true;
            for (int i = t + 1; i < n; ++i)
                if (D[i][t] != 0) {
                    row_sub(i, t, D[i][t] / D[t][t]);
                    if (D[i][t] != 0) clean = false;
                }
            for (int j = t + 1; j < n; ++j)
                if (D[t][j] != 0) {
                    col_sub(j, t, D[t][j] / D[t][t]);
                    if (D[t][j] != 0) clean = false;
                }
            if (!clean) continue;
            // divisibility: d_t must divide the remaining block
            bool divides = true;
            for (int i = t + 1; i < n && divides; ++i)
                for (int j = t + 1; j < n && divides; ++j)
                    if (D[i][j] % D[t][t] != 0) {
                        col_sub(t, j, Int(-1));  // mix column j into column t
                        divides = false;
                    }
            if (divides) break;
        }
        if (D[t][t] < 0) {
            for (int j = 0; j < n; ++j) {
                D[t][j] = -D[t][j];
                s.U[t][j] = -s.U[t][j];
            }
        }
    }
    return s;
}

int affine_rank(const std::vector<Vec>& points) {
    if (points.empty()) throw GeometryError("empty point set");
    size_t n = points[0].size();
    std::vector<std::vector<Rat>> rows;
    for (size_t i = 1; i < points.size(); ++i) {
        std::vector<Rat> r(n);
        for (size_t j = 0; j < n; ++j) r[j] = Rat(points[i][j] - points[0][j]);
        rows.push_back(r);
    }
    int rank = 0;
    for (size_t c = 0; c < n && rank < static_cast<int>(rows.size()); ++c) {
        size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        for (size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            Rat f = rows[i][c] / rows[rank][c];
            for (size_t j = c; j < n; ++j) rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

namespace {

std::vector<Vec> dedupe(std::vector<Vec> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

Int cross2(const Vec& o, const Vec& a, const Vec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

Vec cross3(const Vec& a, const Vec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

// monotone chain, strict turns; returns the CCW ring of corner vertices
std::vector<Vec> hull2d_ring(std::vector<Vec> pts) {
    pts = dedupe(pts);
    if (pts.size() <= 2) return pts;
    std::vector<Vec> lo, hi;
    for (auto& p : pts) {
        while (lo.size() >= 2 && cross2(lo[lo.size() - 2], lo.back(), p) <= 0)
            lo.pop_back();
        lo.push_back(p);
    }
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (hi.size() >= 2 && cross2(hi[hi.size() - 2], hi.back(), *it) <= 0)
            hi.pop_back();
        hi.push_back(*it);
    }
    lo.pop_back();
    hi.pop_back();
    lo.insert(lo.end(), hi.begin(), hi.end());
    return lo;
}

// supporting halfspaces of a rank-3 point set in R^3 by triple enumeration
std::vector<HalfSpace> halfspaces3d(const std::vector<Vec>& pts) {
    std::set<std::pair<Vec, Int>> seen;
    std::vector<HalfSpace> out;
    size_t n = pts.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                Vec nv = cross3(vec_sub(pts[j], pts[i]), vec_sub(pts[k], pts[i]));
                if (nv[0] == 0 && nv[1] == 0 && nv[2] == 0) continue;
                nv = primitive(nv);
                Int c = dot(nv, pts[i]);
                bool le = true, ge = true;
                for (auto& p : pts) {
                    Int d = dot(nv, p) - c;
                    if (d > 0) le = false;
                    if (d < 0) ge = false;
                    if (!le && !ge) break;
                }
                if (!le && !ge) continue;
                Vec nn = nv;
                Int cc = c;
                if (!le) {  // flip so the halfspace is nn.x <= cc
                    for (auto& x : nn) x = -x;
                    cc = -cc;
                }
                if (seen.insert({nn, cc}).second) out.push_back({nn, cc});
                if (le && ge) {  // degenerate: all points on the plane
                    Vec nm = nv;
                    for (auto& x : nm) x = -x;
                    if (seen.insert({nm, -c}).second) out.push_back({nm, -c});
                }
            }
    return out;
}

}  // namespace

std::vector<HalfSpace> supporting_halfspaces(const std::vector<Vec>& points) {
    auto pts = dedupe(points);
    size_t dim = pts[0].size();
    if (dim == 1) {
        Int lo = pts[0][0], hi = pts[0][0];
        for (auto& p : pts) {
            lo = std::min(lo, p[0]);
            hi = std::max(hi, p[0]);
        }
        return {{{Int(1)}, hi}, {{Int(-1)}, -lo}};
    }
    if (dim == 2) {
        std::vector<HalfSpace> out;
        auto ring = hull2d_ring(pts);
        if (ring.size() == 1)
            return {{{Int(1), Int(0)}, ring[0][0]}, {{Int(-1), Int(0)}, -ring[0][0]},
                    {{Int(0), Int(1)}, ring[0][1]}, {{Int(0), Int(-1)}, -ring[0][1]}};
        if (ring.size() == 2) {
            Vec d = vec_sub(ring[1], ring[0]);
            Vec nv = primitive(Vec{d[1], -d[0]});
            Vec dp = primitive(d);
            return {{nv, dot(nv, ring[0])},
                    {{-nv[0], -nv[1]}, -dot(nv, ring[0])},
                    {dp, std::max(dot(dp, ring[0]), dot(dp, ring[1]))},
                    {{-dp[0], -dp[1]},
                     -std::min(dot(dp, ring[0]), dot(dp, ring[1]))}};
        }
        for (size_t i = 0; i < ring.size(); ++i) {
            const Vec& a = ring[i];
            const Vec& b = ring[(i + 1) % ring.size()];
            Vec nv = primitive(Vec{b[1] - a[1], a[0] - b[0]});  // outward for CCW
            out.push_back({nv, dot(nv, a)});
        }
        return out;
    }
    if (dim == 3) {
        int r = affine_rank(pts);
        if (r == 3) return halfspaces3d(pts);
        // lower-dimensional in R^3: describe as intersection of slabs
        std::vector<HalfSpace> out;
        if (r <= 1) {
            for (int c = 0; c < 3; ++c) {
                Int lo = pts[0][c], hi = pts[0][c];
                for (auto& p : pts) {
                    lo = std::min(lo, p[c]);
                    hi = std::max(hi, p[c]);
                }
                Vec e(3, 0), me(3, 0);
                e[c] = 1;
                me[c] = -1;
                out.push_back({e, hi});
                out.push_back({me, -lo});
            }
            if (r == 1) {
                // cut the box down to the segment by its plane equations
                Vec d = primitive(vec_sub(pts.back(), pts[0]));
                for (auto& nv : {cross3(d, Vec{1, 0, 0}), cross3(d, Vec{0, 1, 0}),
                                 cross3(d, Vec{0, 0, 1})}) {
                    if (nv == Vec{0, 0, 0}) continue;
                    Vec p = primitive(nv);
                    Int c = dot(p, pts[0]);
                    out.push_back({p, c});
                    out.push_back({{-p[0], -p[1], -p[2]}, -c});
                }
            }
            return out;
        }
        // r == 2: plane equation both ways plus in-plane edge constraints
        Vec nv;
        for (size_t i = 1; i < pts.size() && nv.empty(); ++i)
            for (size_t j = i + 1; j < pts.size(); ++j) {
                Vec c = cross3(vec_sub(pts[i], pts[0]), vec_sub(pts[j], pts[0]));
                if (!(c[0] == 0 && c[1] == 0 && c[2] == 0)) {
                    nv = primitive(c);
                    break;
                }
            }
        Int c0 = dot(nv, pts[0]);
        std::vector<HalfSpace> out2{{nv, c0}, {{-nv[0], -nv[1], -nv[2]}, -c0}};
        // in-plane facets: edges (i,j) with all points on one side
        for (size_t i = 0; i < pts.size(); ++i)
            for (size_t j = i + 1; j < pts.size(); ++j) {
                Vec e = vec_sub(pts[j], pts[i]);
                if (e == Vec{0, 0, 0}) continue;
                Vec m = cross3(nv, e);
                if (m == Vec{0, 0, 0}) continue;
                m = primitive(m);
                Int c = dot(m, pts[i]);
                bool le = true, ge = true;
                for (auto& p : pts) {
                    Int d = dot(m, p) - c;
                    if (d > 0) le = false;
                    if (d < 0) ge = false;
                }
                if (le)
                    out2.push_back({m, c});
                else if (ge)
                    out2.push_back({{-m[0], -m[1], -m[2]}, -c});
            }
        return out2;
    }
    throw GeometryError("dimension > 3 unsupported");
}

Polytope convex_hull(const std::vector<Vec>& points) {
    if (points.empty()) throw GeometryError("empty point set");
    auto pts = dedupe(points);
    int dim = static_cast<int>(pts[0].size());
    for (auto& p : pts)
        if (static_cast<int>(p.size()) != dim)
            throw GeometryError("mixed dimensions");
    if (dim < 1 || dim > 3) throw GeometryError("dimension unsupported");
    Polytope P;
    P.dim = dim;
    if (pts.size() == 1) {
        P.vertices = pts;
        return P;
    }
    int r = affine_rank(pts);
    if (r <= 1) {
        // extremes along the direction
        Vec d = primitive(vec_sub(pts.back(), pts[0]));
        auto key = [&](const Vec& p) { return dot(d, p); };
        Vec lo = pts[0], hi = pts[0];
        for (auto& p : pts) {
            if (key(p) < key(lo)) lo = p;
            if (key(p) > key(hi)) hi = p;
        }
        P.vertices = dedupe({lo, hi});
        return P;
    }
    if (dim == 2) {
        P.vertices = dedupe(hull2d_ring(pts));
        return P;
    }
    // dim == 3
    auto hs = supporting_halfspaces(pts);
    for (auto& p : pts) {
        Mat active;
        for (auto& h : hs)
            if (dot(h.normal, p) == h.offset) active.push_back(h.normal);
        // corner iff the active normals span R^3
        if (active.size() >= 3) {
            std::vector<Vec> probe = active;
            probe.push_back(Vec{0, 0, 0});
            if (affine_rank(probe) == 3) P.vertices.push_back(p);
        }
    }
    if (r == 2) {
        // planar set in R^3: corners via 2D hull after projecting out the
        // largest normal coordinate
        Vec nv;
        for (auto& h : hs) {
            bool flat = true;
            for (auto& p : pts)
                if (dot(h.normal, p) != h.offset) flat = false;
            if (flat) {
                nv = h.normal;
                break;
            }
        }
        int drop = 0;
        for (int c = 1; c < 3; ++c)
            if (abs(nv[c]) > abs(nv[drop])) drop = c;
        std::map<Vec, Vec> back;
        std::vector<Vec> proj;
        for (auto& p : pts) {
            Vec q;
            for (int c = 0; c < 3; ++c)
                if (c != drop) q.push_back(p[c]);
            back[q] = p;
            proj.push_back(q);
        }
        P.vertices.clear();
        for (auto& q : hull2d_ring(dedupe(proj))) P.vertices.push_back(back[q]);
        P.vertices = dedupe(P.vertices);
    }
    std::sort(P.vertices.begin(), P.vertices.end());
    return P;
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
    if (p.dim != q.dim) throw GeometryError("dimension mismatch");
    std::vector<Vec> sums;
    for (auto& a : p.vertices)
        for (auto& b : q.vertices) sums.push_back(vec_add(a, b));
    return convex_hull(sums);
}

Rat volume(const Polytope& p) {
    if (p.dim > 3) throw GeometryError("dimension unsupported");
    if (p.vertices.size() <= 1) return 0;
    if (affine_rank(p.vertices) < p.dim) return 0;
    if (p.dim == 1) return Rat(p.vertices.back()[0] - p.vertices.front()[0]);
    if (p.dim == 2) {
        auto ring = hull2d_ring(p.vertices);
        Int two_a = 0;
        for (size_t i = 0; i < ring.size(); ++i) {
            const Vec& a = ring[i];
            const Vec& b = ring[(i + 1) % ring.size()];
            two_a += a[0] * b[1] - a[1] * b[0];
        }
        return Rat(abs(two_a), 2);
    }
    // dim 3: pyramids from a base vertex over fan-triangulated facets
    auto hs = supporting_halfspaces(p.vertices);
    const Vec& o = p.vertices[0];
    Rat vol = 0;
    for (auto& h : hs) {
        std::vector<Vec> fpts;
        for (auto& v : p.vertices)
            if (dot(h.normal, v) == h.offset) fpts.push_back(v);
        if (fpts.size() < 3) continue;
        int drop = 0;
        for (int c = 1; c < 3; ++c)
            if (abs(h.normal[c]) > abs(h.normal[drop])) drop = c;
        std::map<Vec, Vec> back;
        std::vector<Vec> proj;
        for (auto& v : fpts) {
            Vec q;
            for (int c = 0; c < 3; ++c)
                if (c != drop) q.push_back(v[c]);
            back[q] = v;
            proj.push_back(q);
        }
        auto ring2 = hull2d_ring(dedupe(proj));
        if (ring2.size() < 3) continue;
        Int six = 0;
        for (size_t i = 1; i + 1 < ring2.size(); ++i) {
            Mat m{vec_sub(back[ring2[0]], o), vec_sub(back[ring2[i]], o),
                  vec_sub(back[ring2[i + 1]], o)};
            six += det(m);
        }
        vol += Rat(abs(six), 6);
    }
    return vol;
}

Int mixed_volume(const std::vector<Polytope>& ps) {
    int n = static_cast<int>(ps.size());
    if (n < 1 || n > 3) throw GeometryError("dimension unsupported");
    for (auto& p : ps)
        if (p.dim != n) throw GeometryError("dimension mismatch");
    Rat mv = 0;
    for (int mask = 1; mask < (1 << n); ++mask) {
        Polytope s;
        bool first = true;
        for (int i = 0; i < n; ++i) {
            if (!(mask >> i & 1)) continue;
            s = first ? ps[i] : minkowski_sum(s, ps[i]);
            first = false;
        }
        int bits = __builtin_popcount(static_cast<unsigned>(mask));
        mv += ((n - bits) % 2 ? -1 : 1) * volume(s);
    }
    if (denominator(mv) != 1) throw GeometryError("non-integral mixed volume");
    return numerator(mv);
}

bool contains_point(const Polytope& p, const Vec& x) {
    for (auto& h : supporting_halfspaces(p.vertices))
        if (dot(h.normal, x) > h.offset) return false;
    return true;
}

bool on_boundary(const Polytope& p, const Vec& x) {
    auto hs = supporting_halfspaces(p.vertices);
    bool inside = true, tight = false;
    for (auto& h : hs) {
        Int d = dot(h.normal, x) - h.offset;
        if (d > 0) inside = false;
        if (d == 0) tight = true;
    }
    if (!inside) return false;
    if (affine_rank(p.vertices) < p.dim) return true;  // all of p is boundary
    return tight;
}

std::vector<Vec> boundary_odd_points(const Polytope& p) {
    if (p.dim > 3) throw GeometryError("dimension unsupported");
    std::vector<Int> lo(p.dim), hi(p.dim);
    for (int c = 0; c < p.dim; ++c) {
        lo[c] = hi[c] = p.vertices[0][c];
        for (auto& v : p.vertices) {
            lo[c] = std::min(lo[c], v[c]);
            hi[c] = std::max(hi[c], v[c]);
        }
        if (lo[c] % 2 == 0) ++lo[c];
    }
    auto hs = supporting_halfspaces(p.vertices);
    bool lower_dim = affine_rank(p.vertices) < p.dim;
    std::vector<Vec> out;
    Vec x = lo;
    while (true) {
        bool inside = true, tight = false;
        for (auto& h : hs) {
            Int d = dot(h.normal, x) - h.offset;
            if (d > 0) {
                inside = false;
                break;
            }
            if (d == 0) tight = true;
        }
        if (inside && (tight || lower_dim)) out.push_back(x);
        int c = 0;
        while (c < p.dim) {
            x[c] += 2;
            if (x[c] <= hi[c]) break;
            x[c] = lo[c];
            ++c;
        }
        if (c == p.dim) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

Polytope standard_simplex(int n, long d) {
    std::vector<Vec> pts{Vec(n, 0)};
    for (int i = 0; i < n; ++i) {
        Vec e(n, 0);
        e[i] = d;
        pts.push_back(e);
    }
    return convex_hull(pts);
}

}  // namespace trop
