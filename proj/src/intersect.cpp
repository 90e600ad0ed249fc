#include "trop/intersect.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace trop {

namespace {

struct Candidate {
    bool valid = false;
    bool overlap = false;  // positive-dimensional common locus
    std::string error;
    IntersectionDatum datum;
};

Rat value_at(const EnrichedHypersurface& f, const Vec& exp,
             const std::vector<Rat>& y) {
    Rat v = -f.monomial(exp).lift;
    for (size_t j = 0; j < y.size(); ++j) v += Rat(exp[j]) * y[j];
    return v;
}

// Solve M y = rhs exactly.  Returns rank; on output y is one solution (free
// variables zero) and kernel holds a basis of the homogeneous solutions.
int solve_affine(const Mat& M, const std::vector<Rat>& rhs, std::vector<Rat>& y,
                 std::vector<std::vector<Rat>>& kernel, bool& consistent) {
    size_t n = M.size();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) a[i][j] = Rat(M[i][j]);
        a[i][n] = rhs[i];
    }
    std::vector<int> pivot_of_row;
    size_t r = 0;
    for (size_t col = 0; col < n && r < n; ++col) {
        size_t piv = r;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(a[r], a[piv]);
        for (size_t i = 0; i < n; ++i) {
            if (i == r || a[i][col] == 0) continue;
            Rat f = a[i][col] / a[r][col];
            for (size_t j = col; j <= n; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_of_row.push_back(static_cast<int>(col));
        ++r;
    }
    consistent = true;
    for (size_t i = r; i < n; ++i)
        if (a[i][n] != 0) consistent = false;
    y.assign(n, 0);
    kernel.clear();
    if (!consistent) return static_cast<int>(r);
    std::vector<bool> is_pivot(n, false);
    for (size_t i = 0; i < r; ++i) {
        y[pivot_of_row[i]] = a[i][n] / a[i][pivot_of_row[i]];
        is_pivot[pivot_of_row[i]] = true;
    }
    for (size_t fc = 0; fc < n; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rat> kv(n, 0);
        kv[fc] = 1;
        for (size_t i = 0; i < r; ++i)
            kv[pivot_of_row[i]] = -a[i][fc] / a[i][pivot_of_row[i]];
        kernel.push_back(kv);
    }
    return static_cast<int>(r);
}

Candidate evaluate_tuple(const std::vector<EnrichedHypersurface>& surfs,
                         const std::vector<std::pair<Vec, Vec>>& pairs,
                         FieldSpec field) {
    Candidate out;
    size_t n = surfs.size();
    Mat M(n);
    std::vector<Rat> rhs(n);
    for (size_t i = 0; i < n; ++i) {
        M[i] = vec_sub(pairs[i].first, pairs[i].second);
        // a_J - a_I = phi(I) - phi(J)
        rhs[i] = surfs[i].monomial(pairs[i].first).lift -
                 surfs[i].monomial(pairs[i].second).lift;
    }
    Int dd = det(M);
    std::vector<Rat> y;
    std::vector<std::vector<Rat>> kernel;
    bool consistent = false;
    solve_affine(M, rhs, y, kernel, consistent);
    if (dd == 0) {
        if (!consistent) return out;
        // the pairs' tie locus is positive-dimensional; NonTransverse only if
        // every pair can actually attain the maximum somewhere on it
        bool attainable = true;
        if (kernel.size() == 1) {
            // exact 1-parameter check: intersect the t-intervals where each
            // pair dominates each remaining monomial
            bool empty = false;
            bool has_lo = false, has_hi = false;
            Rat lo = 0, hi = 0;
            for (size_t i = 0; i < n && !empty; ++i) {
                for (auto& mo : surfs[i].monomials) {
                    if (mo.exp == pairs[i].first || mo.exp == pairs[i].second)
                        continue;
                    // value_I(y + t k) - value_K(y + t k) = c + s t >= 0
                    Rat c = value_at(surfs[i], pairs[i].first, y) -
                            value_at(surfs[i], mo.exp, y);
                    Rat s = 0;
                    for (size_t j = 0; j < kernel[0].size(); ++j)
                        s += Rat(pairs[i].first[j] - mo.exp[j]) * kernel[0][j];
                    if (s == 0) {
                        if (c < 0) empty = true;
                    } else if (s > 0) {
                        Rat b = -c / s;
                        if (!has_lo || b > lo) { lo = b; has_lo = true; }
                    } else {
                        Rat b = -c / s;
                        if (!has_hi || b < hi) { hi = b; has_hi = true; }
                    }
                    if (has_lo && has_hi && lo > hi) empty = true;
                    if (empty) break;
                }
            }
            attainable = !empty;
        } else {
            // higher-dimensional locus (degenerate input): sample check
            attainable = true;
            for (size_t i = 0; i < n && attainable; ++i) {
                Rat vi = value_at(surfs[i], pairs[i].first, y);
                for (auto& mo : surfs[i].monomials)
                    if (value_at(surfs[i], mo.exp, y) > vi) attainable = false;
            }
        }
        if (attainable) {
            out.overlap = true;
            out.error =
                "non-transverse: overlapping tie loci of positive dimension; "
                "perturb the lifts";
        }
        return out;
    }
    // strict argmax: the two chosen monomials and nothing else attain the max.
    // If any surface beats its chosen pair the point is off that curve and the
    // tuple is silently dropped, so check all surfaces before flagging ties.
    std::vector<int> tie_counts(n, 0);
    for (size_t i = 0; i < n; ++i) {
        Rat vi = value_at(surfs[i], pairs[i].first, y);
        for (auto& mo : surfs[i].monomials) {
            Rat v = value_at(surfs[i], mo.exp, y);
            if (v > vi) return out;
            if (v == vi) ++tie_counts[i];
        }
    }
    for (size_t i = 0; i < n; ++i) {
        if (tie_counts[i] > 2) {
            out.overlap = true;
            out.error =
                "non-transverse: three or more monomials attain the maximum; "
                "perturb the lifts";
            return out;
        }
    }
    Int m = abs(dd);
    if (field.kind == FieldKind::PrimeField && m % field.characteristic == 0) {
        out.overlap = true;
        out.error = "multiplicity divisible by the characteristic; perturb the "
                    "lifts or change the field";
        return out;
    }
    IntersectionDatum& d = out.datum;
    d.point = y;
    d.pairs = pairs;
    d.deltas = M;
    d.det_delta = dd;
    d.m = m;
    d.field = field;
    std::vector<Vec> corners;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Vec s(surfs[0].dim, 0);
        for (size_t i = 0; i < n; ++i)
            s = vec_add(s, (mask >> i & 1) ? pairs[i].second : pairs[i].first);
        corners.push_back(s);
    }
    d.cell = convex_hull(corners);
    for (size_t i = 0; i < n; ++i)
        d.coeffs.push_back({surfs[i].monomial(pairs[i].first).coeff,
                            surfs[i].monomial(pairs[i].second).coeff});
    out.valid = true;
    return out;
}

std::vector<IntersectionDatum> find_impl(
    const std::vector<EnrichedHypersurface>& surfs, FieldSpec field,
    bool parallel) {
    size_t n = surfs.size();
    if (n == 0 || n > 3) throw GeometryError("need 1..3 hypersurfaces");
    for (auto& f : surfs) {
        f.validate();
        if (static_cast<size_t>(f.dim) != n)
            throw GeometryError("need n hypersurfaces in R^n");
        if (f.field != field) throw InputError("hypersurface field mismatch");
    }
    std::vector<std::vector<std::pair<Vec, Vec>>> pair_lists(n);
    for (size_t i = 0; i < n; ++i) {
        auto& ms = surfs[i].monomials;
        for (size_t a = 0; a < ms.size(); ++a)
            for (size_t b = a + 1; b < ms.size(); ++b)
                pair_lists[i].push_back({ms[a].exp, ms[b].exp});
    }
    long total = 1;
    for (auto& pl : pair_lists) total *= static_cast<long>(pl.size());
    std::vector<IntersectionDatum> found;
    std::string error;
#ifdef _OPENMP
#pragma omp parallel if (parallel)
    {
        std::vector<IntersectionDatum> local;
        std::string local_error;
#pragma omp for schedule(dynamic, 16) nowait
        for (long idx = 0; idx < total; ++idx) {
            if (!local_error.empty()) continue;
            long rem = idx;
            std::vector<std::pair<Vec, Vec>> pairs(n);
            for (size_t i = 0; i < n; ++i) {
                pairs[i] = pair_lists[i][rem % pair_lists[i].size()];
                rem /= static_cast<long>(pair_lists[i].size());
            }
            Candidate c = evaluate_tuple(surfs, pairs, field);
            if (c.overlap)
                local_error = c.error;
            else if (c.valid)
                local.push_back(std::move(c.datum));
        }
#pragma omp critical
        {
            if (!local_error.empty() && error.empty()) error = local_error;
            found.insert(found.end(), local.begin(), local.end());
        }
    }
#else
    for (long idx = 0; idx < total; ++idx) {
        long rem = idx;
        std::vector<std::pair<Vec, Vec>> pairs(n);
        for (size_t i = 0; i < n; ++i) {
            pairs[i] = pair_lists[i][rem % pair_lists[i].size()];
            rem /= static_cast<long>(pair_lists[i].size());
        }
        Candidate c = evaluate_tuple(surfs, pairs, field);
        if (c.overlap) {
            error = c.error;
            break;
        }
        if (c.valid) found.push_back(std::move(c.datum));
    }
#endif
    if (!error.empty()) throw NonTransverse(error);
    std::sort(found.begin(), found.end(),
              [](const IntersectionDatum& a, const IntersectionDatum& b) {
                  return a.point < b.point;
              });
    for (size_t i = 0; i + 1 < found.size(); ++i)
        if (found[i].point == found[i + 1].point)
            throw NonTransverse(
                "non-transverse: two candidate tuples give the same point "
                "(vertex meets an edge); perturb the lifts");
    return found;
}

}  // namespace

std::vector<IntersectionDatum> find_transverse_intersections(
    const std::vector<EnrichedHypersurface>& surfs, FieldSpec field) {
    return find_impl(surfs, field, true);
}

std::vector<IntersectionDatum> find_transverse_intersections_serial(
    const std::vector<EnrichedHypersurface>& surfs, FieldSpec field) {
    return find_impl(surfs, field, false);
}

Int classical_multiplicity(const IntersectionDatum& d) { return d.m; }

SquareClass union_coefficient(const IntersectionDatum& d,
                              const std::vector<int>& choice) {
    SquareClass r{d.field, 1};
    for (size_t i = 0; i < d.coeffs.size(); ++i)
        r = r * (choice[i] ? d.coeffs[i].second : d.coeffs[i].first);
    return r;
}

LocalBinomialSystem local_binomial_system(const IntersectionDatum& d) {
    LocalBinomialSystem s;
    s.n = static_cast<int>(d.pairs.size());
    s.deltas = d.deltas;
    s.field = d.field;
    s.anchor = Vec(s.n, 0);
    for (size_t i = 0; i < d.pairs.size(); ++i) {
        s.alphas.push_back(d.coeffs[i].first);
        s.betas.push_back(d.coeffs[i].second);
        s.anchor = vec_add(s.anchor, d.pairs[i].first);
    }
    return s;
}

}  // namespace trop
