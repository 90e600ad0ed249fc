#include "trop/generator.hpp"

namespace trop {

long Generator::random_int(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
}

Rat Generator::random_lift() {
    long num = random_int(-60, 60);
    long den = random_int(1, 64);
    return Rat(num, den);
}

SquareClass Generator::random_unit() {
    if (field_.kind == FieldKind::PrimeField) {
        long p = field_.characteristic;
        return square_class_reduce(Rat(random_int(1, p - 1)), field_);
    }
    static const long pool[] = {1, 2, 3, 5, 6, 7, 10, -1, -2, -3, -5, -6, -7, -10};
    long v = pool[random_int(0, 13)];
    return square_class_reduce(Rat(v), field_);
}

std::vector<Vec> simplex_support(int n, long degree) {
    std::vector<Vec> out;
    Vec e(n, 0);
    while (true) {
        Int s = 0;
        for (auto& c : e) s += c;
        if (s <= degree) out.push_back(e);
        int c = 0;
        while (c < n) {
            if (++e[c] <= degree) break;
            e[c] = 0;
            ++c;
        }
        if (c == n) break;
    }
    return out;
}

EnrichedHypersurface Generator::on_support(const std::vector<Vec>& exps) {
    EnrichedHypersurface f;
    f.field = field_;
    f.dim = static_cast<int>(exps[0].size());
    for (auto& e : exps)
        f.monomials.push_back({e, random_lift(), random_unit()});
    f.validate();
    return f;
}

EnrichedHypersurface Generator::dense_on_simplex(int n, long degree) {
    return on_support(simplex_support(n, degree));
}

IntersectionDatum Generator::random_binomial_datum(int n, long max_m) {
    while (true) {
        Mat deltas(n, Vec(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) deltas[i][j] = random_int(-4, 4);
        Int dd = det(deltas);
        if (dd == 0 || abs(dd) > max_m) continue;
        if (field_.kind == FieldKind::PrimeField &&
            abs(dd) % field_.characteristic == 0)
            continue;
        IntersectionDatum d;
        d.field = field_;
        d.point.assign(n, Rat(0));
        d.deltas = deltas;
        d.det_delta = dd;
        d.m = abs(dd);
        for (int i = 0; i < n; ++i) {
            Vec I(n);
            for (int j = 0; j < n; ++j) I[j] = random_int(-3, 3);
            d.pairs.push_back({I, vec_sub(I, deltas[i])});
            d.coeffs.push_back({random_unit(), random_unit()});
        }
        std::vector<Vec> corners;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            Vec s(n, 0);
            for (int i = 0; i < n; ++i)
                s = vec_add(s,
                            (mask >> i & 1) ? d.pairs[i].second : d.pairs[i].first);
            corners.push_back(s);
        }
        d.cell = convex_hull(corners);
        return d;
    }
}

std::vector<EnrichedHypersurface> Generator::random_config(
    const std::vector<long>& degrees, int max_attempts) {
    int n = static_cast<int>(degrees.size());
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<EnrichedHypersurface> surfs;
        for (long d : degrees) surfs.push_back(dense_on_simplex(n, d));
        try {
            find_transverse_intersections_serial(surfs, field_);
            return surfs;
        } catch (const NonTransverse&) {
        }
    }
    throw NonTransverse("no transverse configuration found after retries");
}

}  // namespace trop
