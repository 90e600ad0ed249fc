#pragma once

#include "trop/generator.hpp"

namespace trop {

struct ProblemFile {
    FieldSpec field;
    std::vector<EnrichedHypersurface> hypersurfaces;
    bool verify_oracle = false;
    std::string svg_path;
    std::uint64_t seed = 0;

    static ProblemFile parse(const nlohmann::json& j);
};

nlohmann::ordered_json intersect_report(
    const std::vector<EnrichedHypersurface>& surfs, FieldSpec field,
    bool verify_oracle);

nlohmann::ordered_json bezout_report(const std::vector<long>& degrees,
                                     FieldSpec field, int trials,
                                     std::uint64_t seed);

nlohmann::ordered_json verify_report(int n, long max_m, int count,
                                     FieldSpec field, std::uint64_t seed,
                                     bool parallel = true);

std::string render_svg(const std::vector<EnrichedHypersurface>& surfs,
                       FieldSpec field);

}  // namespace trop
