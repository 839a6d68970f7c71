#pragma once

#include <cstdint>
#include <optional>

#include "memcap/signal.hpp"
#include "memcap/spectral.hpp"

namespace memcap {

enum class Distribution { UniformPm1, Gaussian01 };

/// Parameters of one noise process. Only the fields of the selected kind are
/// meaningful; the rest keep their defaults.
struct NoiseSpec {
    enum class Kind { Iid, OrnsteinUhlenbeck, ModifiedBernoulli, RandomWalk, Sinusoid, PsdShaped };

    Kind kind = Kind::Iid;
    std::uint64_t seed = 0;
    Distribution distribution = Distribution::UniformPm1;  // Iid value / OU and RW driver

    double alpha_prime = 0.25;  // OU: Euler step ratio dt/alpha, in (0,1)
    double map_order = 1.0;     // MB: control parameter B >= 1
    double map_guard = 1e-13;   // MB: small epsilon keeping orbits off the fixed points
    double amplitude = 1.0;     // Sin
    double frequency = 0.1;     // Sin: cycles/step, in (0, 0.5)
    double phase = 0.0;         // Sin: radians
    PSDShapeSpec shape;         // PsdShaped
};

/// Noise-to-signal ratio <v^2>/<u^2>.
struct NsrScaling {
    double r = 0.0;
};

/// Deterministic series of length T for the given spec and seed.
SignalSeries generate_noise(const NoiseSpec& spec, std::size_t T);

/// Rescale v so that var(v)/var(u) == r exactly on the samples
/// (v is mean-centered first). r == 0 yields the all-zero series.
SignalSeries scale_to_nsr(const SignalSeries& v, const SignalSeries& u, NsrScaling scaling);

/// Seeded Fisher-Yates permutation; the value multiset is preserved exactly.
SignalSeries shuffle_series(const SignalSeries& v, std::uint64_t seed);

/// Closed-form normalized autocorrelation for specs that have one
/// (OU: (1-alpha')^tau; Sin: cos(2*pi*f*tau)); nullopt otherwise.
std::optional<CorrelationFunction> known_autocorrelation(const NoiseSpec& spec, std::size_t lags);

}  // namespace memcap
