#pragma once

// Deterministic sampling utilities. All randomized checks seed an mt19937_64
// explicitly and draw through these helpers only, so identical (input, seed)
// pairs reproduce byte-identical results across platforms. std::normal_distribution
// is implementation-defined, hence the hand-rolled Box-Muller.

#include <complex>
#include <random>

namespace hermrep {

using Cplx = std::complex<double>;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Uniform on [0,1). 53-bit mantissa, engine-order stable.
    double uniform() {
        return (gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard real Gaussian via Box-Muller (no cached spare: keeps the
    // draw count predictable).
    double gauss() {
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

    // Standard complex Gaussian: E|z|^2 = 1.
    Cplx cgauss() {
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double r = std::sqrt(-std::log(u1));
        const double t = 6.283185307179586476925287 * u2;
        return {r * std::cos(t), r * std::sin(t)};
    }

    std::uint64_t raw() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

} // namespace hermrep
