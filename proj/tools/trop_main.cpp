#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "trop/report.hpp"

using namespace trop;

namespace {

void emit(const nlohmann::ordered_json& rep, const std::string& json_path) {
    std::string text = rep.dump(2) + "\n";
    if (json_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(json_path);
        if (!out) throw InputError("cannot write " + json_path);
        out << text;
    }
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& ex) {
        throw InputError(std::string("invalid json: ") + ex.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"enriched tropical intersection multiplicities"};
    app.require_subcommand(1);

    std::string input_path, field_str, json_path, svg_path;
    std::uint64_t seed = 1;
    bool verify_oracle = false;

    auto* c_int = app.add_subcommand("intersect",
                                     "intersection points and GW multiplicities");
    c_int->add_option("--input", input_path, "problem file (json)")->required();
    c_int->add_option("--field", field_str, "override the problem's field");
    c_int->add_option("--json", json_path, "write the report here");
    c_int->add_option("--svg", svg_path, "also render an svg plot");
    c_int->add_flag("--verify-oracle", verify_oracle,
                    "attach trace-form oracle results");

    std::vector<long> degrees{1, 2};
    int trials = 20;
    auto* c_bez = app.add_subcommand("bezout",
                                     "random dense-degree totals harness");
    c_bez->add_option("--d", degrees, "degrees d1 [d2 [d3]]")->required();
    c_bez->add_option("--field", field_str, "base field (Q, R, Fp)");
    c_bez->add_option("--trials", trials, "number of random trials");
    c_bez->add_option("--seed", seed, "PRNG seed");
    c_bez->add_option("--json", json_path, "write the report here");

    auto* c_plot = app.add_subcommand("plot", "render curves as svg (n = 2)");
    c_plot->add_option("--input", input_path, "problem file (json)")->required();
    c_plot->add_option("--svg", svg_path, "output svg path")->required();
    c_plot->add_option("--field", field_str, "override the problem's field");

    int vn = 2, vcount = 100;
    long vmax_m = 10;
    auto* c_ver = app.add_subcommand(
        "verify", "oracle sweep over random binomial systems");
    c_ver->add_option("--n", vn, "ambient dimension (1..3)");
    c_ver->add_option("--max-m", vmax_m, "multiplicity cap");
    c_ver->add_option("--count", vcount, "number of systems");
    c_ver->add_option("--field", field_str, "base field (Q, R, Fp)");
    c_ver->add_option("--seed", seed, "PRNG seed");
    c_ver->add_option("--json", json_path, "write the report here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_int->parsed() || c_plot->parsed()) {
            ProblemFile prob = ProblemFile::parse(load_json(input_path));
            FieldSpec field =
                field_str.empty() ? prob.field : FieldSpec::parse(field_str);
            if (!field_str.empty() && field != prob.field) {
                // re-reduce the coefficient classes in the requested field
                ProblemFile reparsed = ProblemFile::parse([&] {
                    nlohmann::json j = load_json(input_path);
                    j["field"] = field.name();
                    return j;
                }());
                prob = reparsed;
            }
            if (c_plot->parsed()) {
                std::ofstream out(svg_path);
                if (!out) throw InputError("cannot write " + svg_path);
                out << render_svg(prob.hypersurfaces, field);
                return 0;
            }
            auto rep = intersect_report(prob.hypersurfaces, field,
                                        verify_oracle || prob.verify_oracle);
            emit(rep, json_path);
            if (!svg_path.empty() || !prob.svg_path.empty()) {
                std::ofstream out(svg_path.empty() ? prob.svg_path : svg_path);
                out << render_svg(prob.hypersurfaces, field);
            }
            return 0;
        }
        FieldSpec field =
            field_str.empty() ? FieldSpec::rationals() : FieldSpec::parse(field_str);
        if (c_bez->parsed()) {
            emit(bezout_report(degrees, field, trials, seed), json_path);
            return 0;
        }
        if (c_ver->parsed()) {
            auto rep = verify_report(vn, vmax_m, vcount, field, seed);
            emit(rep, json_path);
            return rep["all_ok"].get<bool>() ? 0 : 1;
        }
    } catch (const NonTransverse& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const InputError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 3;
    } catch (const FieldError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 3;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
