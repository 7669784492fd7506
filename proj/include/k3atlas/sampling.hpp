#ifndef K3ATLAS_SAMPLING_HPP
#define K3ATLAS_SAMPLING_HPP

#include <random>

#include "k3atlas/numerics.hpp"

namespace k3atlas {

/// Deterministic seeded sampler for Siegel points. PRNG: std::mt19937_64 with
/// the 53-bit mantissa mapping u = (x >> 11) * 2^-53, so identical seeds give
/// identical samples on every platform. Box: Im tau, Im u in [0.8, 1.5],
/// Im z in [-0.3, 0.3], all real parts in [-0.5, 0.5]; resamples until the
/// imaginary part is positive definite.
class SiegelSampler {
public:
    explicit SiegelSampler(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) {
        const double u = static_cast<double>(rng_() >> 11) * 0x1p-53;
        return lo + (hi - lo) * u;
    }

    SiegelPoint next() {
        for (;;) {
            const Complex tau(uniform(-0.5, 0.5), uniform(0.8, 1.5));
            const Complex z(uniform(-0.5, 0.5), uniform(-0.3, 0.3));
            const Complex u(uniform(-0.5, 0.5), uniform(0.8, 1.5));
            if (tau.imag() > 0.0 && tau.imag() * u.imag() > z.imag() * z.imag())
                return SiegelPoint(tau, z, u);
        }
    }

    /// Diagonal point (z = 0) from the same box.
    SiegelPoint next_diagonal() {
        const Complex tau(uniform(-0.5, 0.5), uniform(0.8, 1.5));
        const Complex u(uniform(-0.5, 0.5), uniform(0.8, 1.5));
        return SiegelPoint(tau, Complex(0.0, 0.0), u);
    }

    /// Point with tau = u from the same box.
    SiegelPoint next_tau_equals_u() {
        for (;;) {
            const Complex tau(uniform(-0.5, 0.5), uniform(0.8, 1.5));
            const Complex z(uniform(-0.5, 0.5), uniform(-0.3, 0.3));
            if (tau.imag() * tau.imag() > z.imag() * z.imag())
                return SiegelPoint(tau, z, tau);
        }
    }

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace k3atlas

#endif
