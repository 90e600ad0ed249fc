#pragma once

#include <map>
#include <string>

#include "trop/report.hpp"

namespace trop::testutil {

struct Term {
    Vec exp;
    long lift_num;
    long lift_den;
    std::string coeff;
};

inline EnrichedHypersurface make_surface(FieldSpec field,
                                         const std::vector<Term>& terms) {
    EnrichedHypersurface f;
    f.field = field;
    f.dim = static_cast<int>(terms[0].exp.size());
    for (auto& t : terms)
        f.monomials.push_back({t.exp, Rat(t.lift_num, t.lift_den),
                               square_class_parse(t.coeff, field)});
    f.validate();
    return f;
}

// Cubic/conic pair whose three transverse points have m = 1, 2, 3 with odd
// corners (1,3); (1,3)+(3,1); (3,1) and signs +1; -1,-1; +1.
inline EnrichedHypersurface fixture_cubic(FieldSpec field,
                                          const std::map<Vec, std::string>& coeffs) {
    std::vector<Term> terms{
        {{0, 0}, -1, 1, "1"}, {{1, 0}, 6, 1, "1"},  {{2, 0}, 2, 1, "1"},
        {{3, 0}, -4, 1, "1"}, {{0, 1}, 5, 1, "1"},  {{1, 1}, -2, 1, "1"},
        {{2, 1}, 6, 1, "1"},  {{0, 2}, 5, 1, "1"},  {{1, 2}, 3, 1, "1"},
        {{0, 3}, 5, 1, "1"}};
    for (auto& t : terms)
        if (coeffs.count(t.exp)) t.coeff = coeffs.at(t.exp);
    return make_surface(field, terms);
}

inline EnrichedHypersurface fixture_conic(FieldSpec field,
                                          const std::map<Vec, std::string>& coeffs) {
    std::vector<Term> terms{{{0, 0}, 6, 1, "1"},  {{1, 0}, -5, 1, "1"},
                            {{2, 0}, 2, 1, "1"},  {{0, 1}, -5, 1, "1"},
                            {{1, 1}, 4, 1, "1"},  {{0, 2}, -2, 1, "1"}};
    for (auto& t : terms)
        if (coeffs.count(t.exp)) t.coeff = coeffs.at(t.exp);
    return make_surface(field, terms);
}

// Two conics with non-orientable total h + <a_(3,1), -a_(1,3)>.
inline std::vector<EnrichedHypersurface> fixture_two_conics(FieldSpec field) {
    auto c1 = make_surface(field, {{{0, 0}, 6, 1, "1"},
                                   {{1, 0}, -1, 1, "1"},
                                   {{2, 0}, -4, 1, "1"},
                                   {{0, 1}, 3, 1, "1"},
                                   {{1, 1}, 1, 1, "1"},
                                   {{0, 2}, -1, 1, "1"}});
    auto c2 = make_surface(field, {{{0, 0}, 6, 1, "1"},
                                   {{1, 0}, 5, 1, "1"},
                                   {{2, 0}, 4, 1, "1"},
                                   {{0, 1}, 0, 1, "1"},
                                   {{1, 1}, 1, 1, "1"},
                                   {{0, 2}, 5, 1, "1"}});
    return {c1, c2};
}

// g = a1 + a2 x + a3 xy + a4 y and h = b1 + b2 x^2 y + b3 x y^2 (BK example);
// signs[k] multiplies the k-th listed coefficient.
inline std::vector<EnrichedHypersurface> fixture_bk(
    FieldSpec field, const std::vector<long>& gsigns,
    const std::vector<long>& hsigns) {
    auto sc = [&](long s) { return std::string(s < 0 ? "-1" : "1"); };
    auto g = make_surface(field, {{{0, 0}, -3, 1, sc(gsigns[0])},
                                  {{1, 0}, 3, 1, sc(gsigns[1])},
                                  {{1, 1}, 2, 1, sc(gsigns[2])},
                                  {{0, 1}, -4, 1, sc(gsigns[3])}});
    auto h = make_surface(field, {{{0, 0}, -1, 1, sc(hsigns[0])},
                                  {{2, 1}, 3, 1, sc(hsigns[1])},
                                  {{1, 2}, 1, 1, sc(hsigns[2])}});
    return {g, h};
}

// variant with h' = b1 + b2 x^3 + b3 x^3 y (total 2h for any signs)
inline std::vector<EnrichedHypersurface> fixture_bk_prime(
    FieldSpec field, const std::vector<long>& gsigns,
    const std::vector<long>& hsigns) {
    auto sc = [&](long s) { return std::string(s < 0 ? "-1" : "1"); };
    auto g = make_surface(field, {{{0, 0}, -3, 1, sc(gsigns[0])},
                                  {{1, 0}, 3, 1, sc(gsigns[1])},
                                  {{1, 1}, 2, 1, sc(gsigns[2])},
                                  {{0, 1}, -4, 1, sc(gsigns[3])}});
    auto h = make_surface(field, {{{0, 0}, -1, 1, sc(hsigns[0])},
                                  {{3, 0}, 3, 1, sc(hsigns[1])},
                                  {{3, 1}, 1, 1, sc(hsigns[2])}});
    return {g, h};
}

// tropical lines max{0, x-3, y-3} and max{0, x-1, y-5}
inline std::vector<EnrichedHypersurface> fixture_two_lines(FieldSpec field) {
    auto l1 = make_surface(field, {{{0, 0}, 0, 1, "1"},
                                   {{1, 0}, 3, 1, "1"},
                                   {{0, 1}, 3, 1, "1"}});
    auto l2 = make_surface(field, {{{0, 0}, 0, 1, "1"},
                                   {{1, 0}, 1, 1, "1"},
                                   {{0, 1}, 5, 1, "1"}});
    return {l1, l2};
}

}  // namespace trop::testutil
