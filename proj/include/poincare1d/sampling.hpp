#pragma once

#include <cstdint>
#include <random>

#include "poincare1d/coadjoint.hpp"
#include "poincare1d/group.hpp"
#include "poincare1d/realization.hpp"

namespace poincare1d {

/// Deterministic input generator. All draws go through uniform(), which maps
/// mt19937_64 output to [0,1) the same way on every platform, so a seed
/// pins the byte-exact input stream (std::uniform_real_distribution does
/// not guarantee that across standard libraries).
class Sampler {
  public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    /// Uniform draw from [0,1) with 53 random bits.
    double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

    /// Uniform draw from [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Boost velocity: U(-0.99c, 0.99c) for finite c, U(-10, 10) Galilean.
    double velocity(const KinematicParams& params) {
        const double bound = params.is_galilean() ? 10.0 : 0.99 * params.c();
        return uniform(-bound, bound);
    }

    /// Generic coordinate/coefficient draw: U(-10, 10).
    double coordinate() { return uniform(-10.0, 10.0); }

    /// Nonzero orbit label: magnitude U(0.1, 10), random sign.
    double force() {
        const double magnitude = uniform(0.1, 10.0);
        return uniform() < 0.5 ? -magnitude : magnitude;
    }

    GroupElement group_element(const KinematicParams& params) {
        const double v = velocity(params);
        return {v, coordinate(), coordinate()};
    }

    ExtendedGroupElement extended_element(const KinematicParams& params) {
        const double v = velocity(params);
        return {v, coordinate(), coordinate(), coordinate()};
    }

    AlgebraElement algebra_element() {
        return AlgebraElement(coordinate(), coordinate(), coordinate(), coordinate());
    }

    DualVector dual_vector() {
        DualVector mu;
        mu.k = coordinate();
        mu.e = coordinate();
        mu.p = coordinate();
        mu.f = force();
        return mu;
    }

    PhasePoint phase_point() { return {coordinate(), coordinate()}; }

    SpacetimePoint spacetime_point() { return {coordinate(), coordinate()}; }

  private:
    std::mt19937_64 rng_;
};

/// FNV-1a hash of a string, used to derive independent per-property seeds
/// from a run seed.
inline std::uint64_t fnv1a64(const char* text) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const char* p = text; *p != '\0'; ++p) {
        h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(*p));
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace poincare1d
