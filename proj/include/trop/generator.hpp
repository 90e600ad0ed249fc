#pragma once

#include <random>

#include "trop/oracle.hpp"

namespace trop {

// Seeded generation of random enriched hypersurfaces and binomial systems.
class Generator {
  public:
    Generator(FieldSpec field, std::uint64_t seed) : field_(field), rng_(seed) {}

    FieldSpec field() const { return field_; }
    std::mt19937_64& rng() { return rng_; }

    Rat random_lift();          // small rationals, denominators <= 64
    SquareClass random_unit();  // from a small unit pool
    long random_int(long lo, long hi);

    EnrichedHypersurface on_support(const std::vector<Vec>& exps);
    EnrichedHypersurface dense_on_simplex(int n, long degree);

    // Random transverse-looking binomial datum: invertible Delta with
    // |det| <= max_m (and char-compatible), random unit coefficients.
    IntersectionDatum random_binomial_datum(int n, long max_m);

    // Dense surfaces on Delta_{d_i}; retries fresh lifts on NonTransverse.
    std::vector<EnrichedHypersurface> random_config(
        const std::vector<long>& degrees, int max_attempts = 50);

  private:
    FieldSpec field_;
    std::mt19937_64 rng_;
};

std::vector<Vec> simplex_support(int n, long degree);

}  // namespace trop
