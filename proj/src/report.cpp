#include "trop/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace trop {

ProblemFile ProblemFile::parse(const nlohmann::json& j) {
    ProblemFile p;
    try {
        p.field = FieldSpec::parse(j.at("field").get<std::string>());
        for (auto& h : j.at("hypersurfaces"))
            p.hypersurfaces.push_back(EnrichedHypersurface::from_json(h, p.field));
        if (j.contains("options")) {
            auto& o = j.at("options");
            if (o.contains("verify_oracle"))
                p.verify_oracle = o.at("verify_oracle").get<bool>();
            if (o.contains("svg")) p.svg_path = o.at("svg").get<std::string>();
            if (o.contains("seed")) p.seed = o.at("seed").get<std::uint64_t>();
        }
    } catch (const nlohmann::json::exception& ex) {
        throw InputError(std::string("bad problem file: ") + ex.what());
    } catch (const FieldError& ex) {
        throw InputError(std::string("bad problem file: ") + ex.what());
    }
    if (p.hypersurfaces.empty()) throw InputError("no hypersurfaces");
    int n = p.hypersurfaces[0].dim;
    for (auto& h : p.hypersurfaces)
        if (h.dim != n) throw InputError("hypersurface dimensions differ");
    return p;
}

static nlohmann::ordered_json rat_vec_json(const std::vector<Rat>& v) {
    auto a = nlohmann::ordered_json::array();
    for (auto& x : v) a.push_back(x.str());
    return a;
}

static nlohmann::ordered_json int_vec_json(const Vec& v) {
    auto a = nlohmann::ordered_json::array();
    for (auto& x : v) a.push_back(x.str());
    return a;
}

nlohmann::ordered_json intersect_report(
    const std::vector<EnrichedHypersurface>& surfs, FieldSpec field,
    bool verify_oracle) {
    auto data = find_transverse_intersections(surfs, field);
    nlohmann::ordered_json rep;
    rep["field"] = field.name();
    rep["points"] = nlohmann::ordered_json::array();
    GWElement total = GWElement::zero(field);
    for (auto& d : data) {
        nlohmann::ordered_json pt;
        pt["point"] = rat_vec_json(d.point);
        pt["m"] = d.m.str();
        GWElement mult = enriched_multiplicity(d);
        total = gw_add(total, mult);
        pt["gw"] = mult.to_json();
        pt["odd_corners"] = nlohmann::ordered_json::array();
        pt["signs"] = nlohmann::ordered_json::array();
        for (auto& c : signed_odd_corners(d)) {
            pt["odd_corners"].push_back(int_vec_json(c.vertex));
            nlohmann::ordered_json s;
            s["vertex"] = int_vec_json(c.vertex);
            s["sign"] = c.sign;
            s["coeff"] = c.coeff.str();
            s["decomposition"] = c.decomposition;
            pt["signs"].push_back(s);
        }
        if (verify_oracle) {
            GWElement og = oracle_multiplicity(local_binomial_system(d), field);
            pt["oracle_gw"] = og.to_json();
            pt["match"] = gw_equal(og, mult);
        }
        rep["points"].push_back(pt);
    }
    std::vector<Polytope> nps;
    for (auto& f : surfs) nps.push_back(newton_polytope(f));
    Polytope msum = nps[0];
    for (size_t i = 1; i < nps.size(); ++i) msum = minkowski_sum(msum, nps[i]);
    nlohmann::ordered_json totals;
    totals["mvol"] = mixed_volume(nps).str();
    totals["total_gw"] = total.to_json();
    totals["combinatorially_oriented"] = boundary_odd_points(msum).empty();
    totals["r"] = static_cast<long>(total.diag.size());
    totals["N"] = static_cast<long>(boundary_odd_points(msum).size());
    rep["totals"] = totals;
    return rep;
}

nlohmann::ordered_json bezout_report(const std::vector<long>& degrees,
                                     FieldSpec field, int trials,
                                     std::uint64_t seed) {
    int n = static_cast<int>(degrees.size());
    if (n < 1 || n > 3) throw InputError("need 1..3 degrees");
    Generator gen(field, seed);
    long prod = 1, sum = 0;
    for (long d : degrees) {
        prod *= d;
        sum += d;
    }
    bool orientable = (sum - (n + 1)) % 2 == 0;
    nlohmann::ordered_json rep;
    rep["degrees"] = degrees;
    rep["field"] = field.name();
    rep["trials"] = trials;
    rep["seed"] = seed;
    rep["orientable"] = orientable;
    if (orientable)
        rep["expected_gw"] = GWElement::h(field, prod / 2).to_json();
    rep["runs"] = nlohmann::ordered_json::array();
    bool all_match = true;
    for (int t = 0; t < trials; ++t) {
        auto surfs = gen.random_config(degrees);
        nlohmann::ordered_json run;
        run["trial"] = t;
        if (orientable) {
            GWElement total = total_enriched_count(surfs, field);
            run["total_gw"] = total.to_json();
            bool match = gw_equal(total, GWElement::h(field, prod / 2));
            run["match"] = match;
            all_match = all_match && match;
        } else {
            BoundReport br = non_orientable_bound_check(surfs, field);
            run["total_gw"] = br.total.to_json();
            run["r"] = br.r;
            run["N"] = br.N;
            run["ok"] = br.ok;
            all_match = all_match && br.ok;
        }
        rep["runs"].push_back(run);
    }
    rep["all_match"] = all_match;
    return rep;
}

nlohmann::ordered_json verify_report(int n, long max_m, int count,
                                     FieldSpec field, std::uint64_t seed,
                                     bool parallel) {
    Generator gen(field, seed);
    std::vector<IntersectionDatum> data;
    for (int i = 0; i < count; ++i)
        data.push_back(gen.random_binomial_datum(n, max_m));
    std::vector<char> ok(count, 0);
    std::string error;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (int i = 0; i < count; ++i) {
        try {
            ok[i] = verify_main_theorem(data[i], field) ? 1 : 0;
        } catch (const std::exception& ex) {
#ifdef _OPENMP
#pragma omp critical
#endif
            error = ex.what();
        }
    }
    if (!error.empty()) throw OracleError(error);
    int verified = 0;
    for (char c : ok) verified += c;
    nlohmann::ordered_json rep;
    rep["n"] = n;
    rep["max_m"] = max_m;
    rep["count"] = count;
    rep["field"] = field.name();
    rep["seed"] = seed;
    rep["verified"] = verified;
    rep["all_ok"] = verified == count;
    return rep;
}

namespace {

double to_d(const Rat& r) {
    return static_cast<double>(numerator(r)) / static_cast<double>(denominator(r));
}

}  // namespace

std::string render_svg(const std::vector<EnrichedHypersurface>& surfs,
                       FieldSpec field) {
    if (surfs.empty() || surfs[0].dim != 2)
        throw GeometryError("plotting needs n = 2");
    std::vector<PlanarCurve> curves;
    for (auto& f : surfs) curves.push_back(curve_from_subdivision(dual_subdivision(f)));
    std::vector<IntersectionDatum> data;
    if (surfs.size() == 2) {
        try {
            data = find_transverse_intersections(surfs, field);
        } catch (const NonTransverse&) {
        }
    }
    double xlo = -1, xhi = 1, ylo = -1, yhi = 1;
    auto grow = [&](double x, double y) {
        xlo = std::min(xlo, x - 2);
        xhi = std::max(xhi, x + 2);
        ylo = std::min(ylo, y - 2);
        yhi = std::max(yhi, y + 2);
    };
    for (auto& c : curves)
        for (auto& v : c.vertices) grow(to_d(v.pos[0]), to_d(v.pos[1]));
    for (auto& d : data) grow(to_d(d.point[0]), to_d(d.point[1]));
    double W = 640, H = 640;
    double sx = W / (xhi - xlo), sy = H / (yhi - ylo);
    double s = std::min(sx, sy);
    auto X = [&](double x) { return (x - xlo) * s + 20; };
    auto Y = [&](double y) { return H - (y - ylo) * s + 20; };
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c"};
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W + 40
        << "\" height=\"" << H + 40 << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    double ray_len = (xhi - xlo) + (yhi - ylo);
    for (size_t ci = 0; ci < curves.size(); ++ci) {
        const char* col = colors[ci % 3];
        auto& c = curves[ci];
        for (auto& e : c.edges) {
            svg << "<line x1=\"" << X(to_d(c.vertices[e.a].pos[0])) << "\" y1=\""
                << Y(to_d(c.vertices[e.a].pos[1])) << "\" x2=\""
                << X(to_d(c.vertices[e.b].pos[0])) << "\" y2=\""
                << Y(to_d(c.vertices[e.b].pos[1])) << "\" stroke=\"" << col
                << "\" stroke-width=\"" << 1 + static_cast<double>(e.weight)
                << "\"/>\n";
        }
        for (auto& r : c.rays) {
            double px = to_d(c.vertices[r.v].pos[0]);
            double py = to_d(c.vertices[r.v].pos[1]);
            double dx = static_cast<double>(r.dir[0]);
            double dy = static_cast<double>(r.dir[1]);
            double norm = std::sqrt(dx * dx + dy * dy);
            svg << "<line x1=\"" << X(px) << "\" y1=\"" << Y(py) << "\" x2=\""
                << X(px + dx / norm * ray_len) << "\" y2=\""
                << Y(py + dy / norm * ray_len) << "\" stroke=\"" << col
                << "\" stroke-width=\"" << 1 + static_cast<double>(r.weight)
                << "\"/>\n";
        }
    }
    for (auto& d : data) {
        double px = to_d(d.point[0]), py = to_d(d.point[1]);
        GWElement mult = enriched_multiplicity(d);
        svg << "<circle cx=\"" << X(px) << "\" cy=\"" << Y(py)
            << "\" r=\"5\" fill=\"black\"/>\n";
        svg << "<text x=\"" << X(px) + 8 << "\" y=\"" << Y(py) - 8
            << "\" font-size=\"13\">m=" << d.m.str() << ", " << mult.str()
            << "</text>\n";
    }
    // dual-subdivision panel: union Newton polytope with odd boundary points
    if (surfs.size() >= 2) {
        Polytope msum = newton_polytope(surfs[0]);
        for (size_t i = 1; i < surfs.size(); ++i)
            msum = minkowski_sum(msum, newton_polytope(surfs[i]));
        double cell = 14, maxy = 0;
        for (auto& v : msum.vertices)
            maxy = std::max(maxy, static_cast<double>(v[1]));
        double ox = W - 120, oy = 30 + maxy * cell;
        svg << "<g transform=\"translate(" << ox << "," << oy << ")\">\n";
        svg << "<polygon points=\"";
        // order corners by angle around the centroid for drawing
        double cx = 0, cy = 0;
        for (auto& v : msum.vertices) {
            cx += static_cast<double>(v[0]);
            cy += static_cast<double>(v[1]);
        }
        cx /= msum.vertices.size();
        cy /= msum.vertices.size();
        std::vector<std::pair<double, Vec>> ordered;
        for (auto& v : msum.vertices)
            ordered.push_back({std::atan2(static_cast<double>(v[1]) - cy,
                                          static_cast<double>(v[0]) - cx),
                               v});
        std::sort(ordered.begin(), ordered.end(),
                  [](auto& a, auto& b) { return a.first < b.first; });
        for (auto& [ang, v] : ordered)
            svg << static_cast<double>(v[0]) * cell << ","
                << -static_cast<double>(v[1]) * cell << " ";
        svg << "\" fill=\"none\" stroke=\"gray\"/>\n";
        for (auto& v : boundary_odd_points(msum))
            svg << "<circle cx=\"" << static_cast<double>(v[0]) * cell
                << "\" cy=\"" << -static_cast<double>(v[1]) * cell
                << "\" r=\"3\" fill=\"orange\"/>\n";
        svg << "</g>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace trop
