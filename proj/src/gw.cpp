#include "trop/gw.hpp"

#include <algorithm>
#include <set>

namespace trop {

void GWElement::normalize() {
    std::sort(diag.begin(), diag.end());
    bool again = true;
    while (again) {
        again = false;
        for (size_t i = 0; i < diag.size() && !again; ++i) {
            SquareClass neg = diag[i].negated();
            for (size_t j = i + 1; j < diag.size(); ++j) {
                if (diag[j] == neg) {
                    diag.erase(diag.begin() + j);
                    diag.erase(diag.begin() + i);
                    ++hyperbolics;
                    again = true;
                    break;
                }
            }
        }
    }
}

std::string GWElement::str() const {
    std::string s;
    if (!diag.empty()) {
        s = "<";
        for (size_t i = 0; i < diag.size(); ++i) {
            if (i) s += ",";
            s += diag[i].str();
        }
        s += ">";
    }
    if (hyperbolics > 0) {
        if (!s.empty()) s += " + ";
        s += std::to_string(hyperbolics) + "*h";
    }
    return s.empty() ? "0" : s;
}

nlohmann::ordered_json GWElement::to_json() const {
    nlohmann::ordered_json j;
    j["diag"] = nlohmann::ordered_json::array();
    for (auto& c : diag) j["diag"].push_back(c.str());
    j["h"] = hyperbolics;
    j["field"] = field.name();
    return j;
}

GWElement GWElement::from_json(const nlohmann::json& j) {
    GWElement x;
    x.field = FieldSpec::parse(j.at("field").get<std::string>());
    for (auto& v : j.at("diag")) {
        std::string s = v.is_string() ? v.get<std::string>() : v.dump();
        x.diag.push_back(square_class_parse(s, x.field));
    }
    x.hyperbolics = j.at("h").get<long>();
    x.normalize();
    return x;
}

static void check_fields(const GWElement& x, const GWElement& y) {
    if (x.field != y.field) throw FieldError("GW field mismatch");
}

GWElement gw_add(const GWElement& x, const GWElement& y) {
    check_fields(x, y);
    GWElement r = x;
    r.diag.insert(r.diag.end(), y.diag.begin(), y.diag.end());
    r.hyperbolics += y.hyperbolics;
    r.normalize();
    return r;
}

GWElement gw_mul(const GWElement& x, const GWElement& y) {
    check_fields(x, y);
    GWElement r = GWElement::zero(x.field);
    for (auto& a : x.diag)
        for (auto& b : y.diag) r.diag.push_back(a * b);
    // <a>*h = h, h*h = 2h
    r.hyperbolics = static_cast<long>(x.diag.size()) * y.hyperbolics +
                    x.hyperbolics * static_cast<long>(y.diag.size()) +
                    2 * x.hyperbolics * y.hyperbolics;
    r.normalize();
    return r;
}

GWInvariants gw_invariants(const GWElement& x) {
    GWInvariants inv;
    inv.rank = x.rank();
    // determinant class: product of diag entries times (-1) per hyperbolic
    SquareClass d{x.field, 1};
    for (auto& c : x.diag) d = d * c;
    if (x.hyperbolics % 2) d = d.negated();
    inv.disc = d;
    if (x.field.kind != FieldKind::PrimeField) {
        long sig = 0;
        for (auto& c : x.diag) sig += c.rep < 0 ? -1 : 1;
        inv.signature = sig;
    }
    if (x.field.kind == FieldKind::Rationals) {
        // Hasse = prod_{i<j} (a_i, a_j)_v over the full diagonal (h = <1,-1>)
        std::vector<Int> full;
        for (auto& c : x.diag) full.push_back(c.rep);
        for (long i = 0; i < x.hyperbolics; ++i) {
            full.push_back(1);
            full.push_back(-1);
        }
        std::set<Int> primes{2};
        for (auto& a : full)
            for (auto& [p, e] : factorize(a))
                if (p != 2) primes.insert(p);
        auto hasse_at = [&](const Place& v) {
            int s = 1;
            for (size_t i = 0; i < full.size(); ++i)
                for (size_t j = i + 1; j < full.size(); ++j)
                    s *= hilbert_symbol_int(full[i], full[j], v);
            return s;
        };
        inv.hasse[Int(0)] = hasse_at(Place::real_place());
        for (auto& p : primes) inv.hasse[p] = hasse_at(Place::prime(p));
    }
    return inv;
}

bool gw_equal(const GWElement& x, const GWElement& y) {
    check_fields(x, y);
    GWInvariants a = gw_invariants(x), b = gw_invariants(y);
    if (a.rank != b.rank) return false;
    switch (x.field.kind) {
        case FieldKind::Reals:
            return a.signature == b.signature;
        case FieldKind::PrimeField:
            return a.disc == b.disc;
        case FieldKind::Rationals: {
            if (a.signature != b.signature || !(a.disc == b.disc)) return false;
            std::set<Int> places;
            for (auto& [p, s] : a.hasse) places.insert(p);
            for (auto& [p, s] : b.hasse) places.insert(p);
            for (auto& p : places) {
                int ha = a.hasse.count(p) ? a.hasse.at(p) : 1;
                int hb = b.hasse.count(p) ? b.hasse.at(p) : 1;
                if (ha != hb) return false;
            }
            return true;
        }
    }
    return false;
}

bool witt_equal(const GWElement& x, const GWElement& y) {
    check_fields(x, y);
    long dr = x.rank() - y.rank();
    if (dr % 2) return false;
    GWElement a = x, b = y;
    (dr < 0 ? a : b).hyperbolics += std::abs(dr) / 2;
    return gw_equal(a, b);
}

SquareClass in_map(const PuiseuxLeadingTerm& x) {
    if (x.coefficient.is_zero()) throw FieldError("zero leading coefficient");
    return square_class_reduce(x.coefficient);
}

}  // namespace trop
