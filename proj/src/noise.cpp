#include "memcap/noise.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "memcap/errors.hpp"

namespace memcap {

namespace {

double draw(Distribution d, std::mt19937_64& rng) {
    if (d == Distribution::UniformPm1) {
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        return u(rng);
    }
    std::normal_distribution<double> g(0.0, 1.0);
    return g(rng);
}

void center(std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m += x;
    m /= static_cast<double>(v.size());
    for (double& x : v) x -= m;
}

void validate(const NoiseSpec& spec) {
    switch (spec.kind) {
        case NoiseSpec::Kind::OrnsteinUhlenbeck:
            if (!(spec.alpha_prime > 0.0 && spec.alpha_prime < 1.0))
                throw InvalidSpec("generate_noise: OU needs 0 < alpha' < 1");
            break;
        case NoiseSpec::Kind::ModifiedBernoulli:
            if (!(spec.map_order >= 1.0))
                throw InvalidSpec("generate_noise: MB needs B >= 1");
            if (!(spec.map_guard > 0.0 && spec.map_guard < 1e-3))
                throw InvalidSpec("generate_noise: MB guard epsilon out of range");
            break;
        case NoiseSpec::Kind::Sinusoid:
            if (!(spec.amplitude > 0.0))
                throw InvalidSpec("generate_noise: Sin needs A > 0");
            if (!(spec.frequency > 0.0 && spec.frequency < 0.5))
                throw InvalidSpec("generate_noise: Sin needs 0 < f < 0.5");
            break;
        default:
            break;
    }
}

std::vector<double> gen_ou(const NoiseSpec& spec, std::size_t T, std::mt19937_64& rng) {
    const double a = spec.alpha_prime;
    const std::size_t burn = static_cast<std::size_t>(std::ceil(10.0 / a));
    double v = 0.0;
    for (std::size_t t = 0; t < burn; ++t)
        v = (1.0 - a) * v + a * draw(spec.distribution, rng);
    std::vector<double> out(T);
    for (std::size_t t = 0; t < T; ++t) {
        v = (1.0 - a) * v + a * draw(spec.distribution, rng);
        out[t] = v;
    }
    return out;
}

std::vector<double> gen_mb(const NoiseSpec& spec, std::size_t T, std::mt19937_64& rng) {
    const double B = spec.map_order;
    const double eps = spec.map_guard;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double x = unit(rng);
    std::vector<double> out(T);
    for (std::size_t t = 0; t < T; ++t) {
        if (x <= 0.5)
            x = x + std::pow(2.0, B - 1.0) * (1.0 - 2.0 * eps) * std::pow(x, B) + eps;
        else
            x = x - std::pow(2.0, B - 1.0) * (1.0 - 2.0 * eps) * std::pow(1.0 - x, B) - eps;
        if (!(x >= 0.0 && x <= 1.0))
            x = unit(rng);  // orbit escaped; re-draw the point
        out[t] = x;
    }
    center(out);
    return out;
}

std::vector<double> gen_psd_shaped(const NoiseSpec& spec, std::size_t T, std::mt19937_64& rng) {
    const PSDVector psd = shape_psd(spec.shape);
    const std::size_t K = psd.size();
    // Mirror-symmetrized power so the synthesized series is real; the shapes
    // meant for synthesis are already symmetric and pass through unchanged.
    std::vector<double> p(K);
    for (std::size_t k = 0; k < K; ++k)
        p[k] = 0.5 * (psd[k] + psd[(K - k) % K]);

    std::uniform_real_distribution<double> ph(0.0, 2.0 * M_PI);
    std::uniform_int_distribution<int> sign(0, 1);
    const double Kd = static_cast<double>(K);

    struct Tone { double amp, freq, phase; };
    std::vector<Tone> tones;
    double dc = 0.0, nyq = 0.0;
    if (p[0] > 0.0)
        dc = (sign(rng) ? 1.0 : -1.0) * std::sqrt(p[0] / Kd);
    for (std::size_t k = 1; k < (K + 1) / 2; ++k)
        if (p[k] > 0.0)
            tones.push_back({2.0 * std::sqrt(p[k] / Kd), static_cast<double>(k) / Kd, ph(rng)});
    if (K % 2 == 0 && p[K / 2] > 0.0)
        nyq = (sign(rng) ? 1.0 : -1.0) * std::sqrt(p[K / 2] / Kd);

    std::vector<double> out(T);
    for (std::size_t t = 0; t < T; ++t) {
        double acc = dc + (t % 2 == 0 ? nyq : -nyq);
        for (const Tone& tone : tones)
            acc += tone.amp * std::cos(2.0 * M_PI * tone.freq * static_cast<double>(t) + tone.phase);
        out[t] = acc;
    }
    return out;
}

}  // namespace

SignalSeries generate_noise(const NoiseSpec& spec, std::size_t T) {
    if (T < 1)
        throw InvalidSpec("generate_noise: T must be >= 1");
    validate(spec);
    std::mt19937_64 rng(spec.seed);
    std::vector<double> out;

    switch (spec.kind) {
        case NoiseSpec::Kind::Iid: {
            out.resize(T);
            for (double& x : out) x = draw(spec.distribution, rng);
            break;
        }
        case NoiseSpec::Kind::OrnsteinUhlenbeck:
            out = gen_ou(spec, T, rng);
            break;
        case NoiseSpec::Kind::ModifiedBernoulli:
            out = gen_mb(spec, T, rng);
            break;
        case NoiseSpec::Kind::RandomWalk: {
            out.resize(T);
            double v = 0.0;
            for (double& x : out) {
                v += draw(spec.distribution, rng);
                x = v;
            }
            center(out);
            break;
        }
        case NoiseSpec::Kind::Sinusoid: {
            out.resize(T);
            for (std::size_t t = 0; t < T; ++t)
                out[t] = spec.amplitude *
                         std::sin(2.0 * M_PI * spec.frequency * static_cast<double>(t) + spec.phase);
            break;
        }
        case NoiseSpec::Kind::PsdShaped:
            out = gen_psd_shaped(spec, T, rng);
            break;
    }
    return SignalSeries(std::move(out), spec.seed);
}

SignalSeries scale_to_nsr(const SignalSeries& v, const SignalSeries& u, NsrScaling scaling) {
    if (v.size() != u.size())
        throw LengthMismatch("scale_to_nsr: series lengths differ");
    if (scaling.r < 0.0)
        throw InvalidSpec("scale_to_nsr: r must be nonnegative");
    if (scaling.r == 0.0)
        return SignalSeries(std::vector<double>(v.size(), 0.0), v.seed());

    const double var_u = u.variance();
    const double var_v = v.variance();
    if (var_v < 1e-14)
        throw ZeroVariance("scale_to_nsr: noise variance too small");
    if (var_u < 1e-14)
        throw ZeroVariance("scale_to_nsr: input variance too small");

    const double mean_v = v.mean();
    const double factor = std::sqrt(scaling.r * var_u / var_v);
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = (v[i] - mean_v) * factor;
    return SignalSeries(std::move(out), v.seed());
}

SignalSeries shuffle_series(const SignalSeries& v, std::uint64_t seed) {
    if (v.size() < 2)
        throw InvalidSpec("shuffle_series: need T >= 2");
    std::vector<double> out = v.values();
    std::mt19937_64 rng(seed);
    std::shuffle(out.begin(), out.end(), rng);
    return SignalSeries(std::move(out), seed);
}

std::optional<CorrelationFunction> known_autocorrelation(const NoiseSpec& spec, std::size_t lags) {
    std::vector<double> c(lags);
    switch (spec.kind) {
        case NoiseSpec::Kind::OrnsteinUhlenbeck:
            for (std::size_t tau = 0; tau < lags; ++tau)
                c[tau] = std::pow(1.0 - spec.alpha_prime, static_cast<double>(tau));
            return CorrelationFunction(std::move(c));
        case NoiseSpec::Kind::Sinusoid:
            for (std::size_t tau = 0; tau < lags; ++tau)
                c[tau] = std::cos(2.0 * M_PI * spec.frequency * static_cast<double>(tau));
            return CorrelationFunction(std::move(c));
        default:
            return std::nullopt;
    }
}

}  // namespace memcap
