#pragma once

#include <nlohmann/json.hpp>
#include <optional>

#include "trop/field.hpp"

namespace trop {

// Element of GW(k): multiset of rank-1 classes <a> plus a hyperbolic count.
// Normal form cancels every pair {c, -c} in diag into an h; equality is
// decided by classification invariants, never by comparing diag multisets.
struct GWElement {
    FieldSpec field;
    std::vector<SquareClass> diag;  // sorted by representative
    long hyperbolics = 0;

    static GWElement zero(FieldSpec f) { return {f, {}, 0}; }
    static GWElement h(FieldSpec f, long n = 1) { return {f, {}, n}; }
    static GWElement gen(const SquareClass& a) { return {a.field, {a}, 0}; }

    long rank() const { return static_cast<long>(diag.size()) + 2 * hyperbolics; }
    void normalize();
    std::string str() const;
    nlohmann::ordered_json to_json() const;
    static GWElement from_json(const nlohmann::json& j);
};

GWElement gw_add(const GWElement& x, const GWElement& y);
GWElement gw_mul(const GWElement& x, const GWElement& y);

struct GWInvariants {
    long rank = 0;
    SquareClass disc;
    std::optional<long> signature;           // Q, R
    std::map<Int, int> hasse;                // Q only; key 0 = real place
};

GWInvariants gw_invariants(const GWElement& x);
bool gw_equal(const GWElement& x, const GWElement& y);
bool witt_equal(const GWElement& x, const GWElement& y);

// Leading term of a Puiseux series; In: GW(k{{t}}) ~ GW(k) sends a generator
// to the class of its leading coefficient.
struct PuiseuxLeadingTerm {
    FieldElem coefficient;
    Rat exponent = 0;
};

SquareClass in_map(const PuiseuxLeadingTerm& x);

}  // namespace trop
