#include "memcap/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "memcap/errors.hpp"

namespace memcap {

namespace {

constexpr double kCorrTol = 1e-9;

// cos/sin tables for exact argument reduction: angle(j) = 2*pi*j/K.
struct TrigTable {
    std::vector<double> cos_, sin_;
    explicit TrigTable(std::size_t K) : cos_(K), sin_(K) {
        for (std::size_t j = 0; j < K; ++j) {
            const double a = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(K);
            cos_[j] = std::cos(a);
            sin_[j] = std::sin(a);
        }
    }
    double c(std::size_t k, std::size_t t) const { return cos_[(k * t) % cos_.size()]; }
};

}  // namespace

CorrelationFunction::CorrelationFunction(std::vector<double> c) : c_(std::move(c)) {
    if (c_.empty())
        throw InvalidSpec("CorrelationFunction: empty");
    if (std::abs(c_[0] - 1.0) > kCorrTol)
        throw InvalidSpec("CorrelationFunction: c[0] must be 1 after normalization");
    c_[0] = 1.0;
    for (double& v : c_) {
        if (!std::isfinite(v))
            throw InvalidSpec("CorrelationFunction: non-finite entry");
        if (std::abs(v) > 1.0 + kCorrTol)
            throw InvalidSpec("CorrelationFunction: |c| exceeds 1 beyond tolerance");
        v = std::clamp(v, -1.0, 1.0);
    }
}

PSDVector::PSDVector(std::vector<double> s) : s_(std::move(s)) {
    if (s_.empty())
        throw InvalidSpec("PSDVector: empty");
    const double K = static_cast<double>(s_.size());
    double total = 0.0;
    for (double v : s_) {
        if (!std::isfinite(v) || v < 0.0)
            throw InvalidSpec("PSDVector: entries must be finite and nonnegative");
        total += v;
    }
    if (std::abs(total - K) > 1e-8 * K)
        throw InvalidSpec("PSDVector: bins must sum to K (trace normalization)");
}

double PSDVector::sum() const noexcept {
    return std::accumulate(s_.begin(), s_.end(), 0.0);
}

CorrelationMatrix::CorrelationMatrix(std::vector<double> first_row, bool eig_check)
    : row_(std::move(first_row)) {
    if (row_.empty())
        throw InvalidSpec("CorrelationMatrix: empty first row");
    const std::size_t K = row_.size();
    if (eig_check && K <= 512) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense(), Eigen::EigenvaluesOnly);
        if (es.info() != Eigen::Success)
            throw EigenFailure("CorrelationMatrix: eigenvalue check failed to converge");
        if (es.eigenvalues().minCoeff() < -1e-8 * static_cast<double>(K))
            throw NotPSD("CorrelationMatrix: not positive semidefinite");
    }
}

Eigen::MatrixXd CorrelationMatrix::dense() const {
    const std::size_t K = row_.size();
    Eigen::MatrixXd m(K, K);
    for (std::size_t i = 0; i < K; ++i)
        for (std::size_t j = 0; j < K; ++j)
            m(i, j) = row_[i >= j ? i - j : j - i];
    return m;
}

Eigen::MatrixXd CorrelationMatrix::apply(const Eigen::Ref<const Eigen::MatrixXd>& m) const {
    const std::ptrdiff_t K = static_cast<std::ptrdiff_t>(row_.size());
    if (m.rows() != K)
        throw LengthMismatch("CorrelationMatrix::apply: row count mismatch");
    if (K <= 1024)
        return dense() * m;
    Eigen::MatrixXd out(K, m.cols());
    for (std::ptrdiff_t c = 0; c < m.cols(); ++c) {
        for (std::ptrdiff_t i = 0; i < K; ++i) {
            double acc = 0.0;
            for (std::ptrdiff_t j = 0; j < K; ++j)
                acc += row_[static_cast<std::size_t>(i >= j ? i - j : j - i)] * m(j, c);
            out(i, c) = acc;
        }
    }
    return out;
}

CorrelationFunction estimate_autocorrelation(const SignalSeries& x, std::size_t max_lag) {
    const std::size_t T = x.size();
    if (max_lag >= T)
        throw LagTooLarge("estimate_autocorrelation: max_lag must be < T");
    const double mean = x.mean();
    const double var = x.variance();
    if (var < 1e-14)
        throw ZeroVariance("estimate_autocorrelation: series has (near-)zero variance");

    const auto& v = x.values();
    std::vector<double> c(max_lag + 1);
    for (std::size_t tau = 0; tau <= max_lag; ++tau) {
        double acc = 0.0;
        for (std::size_t t = 0; t + tau < T; ++t)
            acc += (v[t] - mean) * (v[t + tau] - mean);
        // Biased 1/T estimator: keeps the sequence PSD-valid.
        c[tau] = acc / static_cast<double>(T) / var;
    }
    c[0] = 1.0;
    for (double& ci : c) ci = std::clamp(ci, -1.0, 1.0);
    return CorrelationFunction(std::move(c));
}

PSDVector psd_from_autocorrelation(const CorrelationFunction& c) {
    const std::size_t K = c.size();
    if (K < 2)
        throw InvalidSpec("psd_from_autocorrelation: need K >= 2");

    // Circular-even embedding on the K-point circle.
    std::vector<double> sym(K);
    for (std::size_t tau = 0; tau < K; ++tau)
        sym[tau] = 0.5 * (c[tau] + c[(K - tau) % K]);

    TrigTable trig(K);
    std::vector<double> s(K);
    double total = 0.0;
    const double Kd = static_cast<double>(K);
    for (std::size_t k = 0; k < K; ++k) {
        double acc = 0.0;
        for (std::size_t tau = 0; tau < K; ++tau)
            acc += sym[tau] * trig.c(k, tau);
        if (acc < -1e-6 * Kd)
            throw NotPSD("psd_from_autocorrelation: spectrum has a significant negative bin");
        if (acc < 1e-10 * Kd)
            acc = std::max(acc, 0.0);
        s[k] = std::max(acc, 0.0);
        total += s[k];
    }
    if (total <= 0.0)
        throw NotPSD("psd_from_autocorrelation: spectrum vanished");
    for (double& v : s) v *= Kd / total;
    return PSDVector(std::move(s));
}

CorrelationFunction autocorrelation_from_psd(const PSDVector& s) {
    const std::size_t K = s.size();
    TrigTable trig(K);
    std::vector<double> c(K);
    for (std::size_t tau = 0; tau < K; ++tau) {
        double acc = 0.0;
        for (std::size_t k = 0; k < K; ++k)
            acc += s[k] * trig.c(k, tau);
        c[tau] = acc / static_cast<double>(K);
    }
    const double c0 = c[0];
    if (std::abs(c0) < 1e-14)
        throw ZeroVariance("autocorrelation_from_psd: zero-lag value vanished");
    for (double& v : c) v /= c0;
    return CorrelationFunction(std::move(c));
}

CorrelationMatrix toeplitz_matrix(const CorrelationFunction& c, std::size_t K) {
    if (K == 0 || K > c.size())
        throw LagTooLarge("toeplitz_matrix: K must be in [1, length(c)]");
    std::vector<double> row(c.values().begin(), c.values().begin() + static_cast<std::ptrdiff_t>(K));
    return CorrelationMatrix(std::move(row), /*eig_check=*/true);
}

PSDVector eigvals_correlation(const CorrelationMatrix& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.dense(), Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw EigenFailure("eigvals_correlation: solver did not converge");
    std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + m.dim());
    std::sort(ev.begin(), ev.end(), std::greater<double>());
    // Tiny negative residue allowed by the PSD invariant; clamp and rescale.
    double total = 0.0;
    for (double& v : ev) {
        v = std::max(v, 0.0);
        total += v;
    }
    const double Kd = static_cast<double>(m.dim());
    for (double& v : ev) v *= Kd / total;
    return PSDVector(std::move(ev));
}

PSDVector shape_psd(const PSDShapeSpec& spec) {
    const std::size_t K = spec.K;
    if (K < 2)
        throw InvalidSpec("shape_psd: need K >= 2");
    std::vector<double> s(K, 0.0);

    switch (spec.kind) {
        case PSDShapeSpec::Kind::Flat:
            std::fill(s.begin(), s.end(), 1.0);
            break;
        case PSDShapeSpec::Kind::SomePeaks: {
            if (spec.peak_bins.empty())
                throw DegenerateShape("shape_psd: SomePeaks needs at least one bin");
            for (std::size_t b : spec.peak_bins)
                if (b >= K)
                    throw InvalidSpec("shape_psd: peak bin out of range");
            const double mass = static_cast<double>(K) / static_cast<double>(spec.peak_bins.size());
            for (std::size_t b : spec.peak_bins) s[b] += mass;
            break;
        }
        case PSDShapeSpec::Kind::Linear: {
            if (spec.n_active == 0 || spec.n_active > K)
                throw InvalidSpec("shape_psd: Linear needs 0 < n_active <= K");
            for (std::size_t n = 0; n < spec.n_active; ++n)
                s[n] = static_cast<double>(spec.n_active - n);
            break;
        }
        case PSDShapeSpec::Kind::Exponential: {
            if (spec.n_active == 0 || spec.n_active > K)
                throw InvalidSpec("shape_psd: Exponential needs 0 < n_active <= K");
            if (spec.decade_rate <= 0.0)
                throw InvalidSpec("shape_psd: Exponential needs B > 0");
            for (std::size_t n = 0; n < spec.n_active; ++n)
                s[n] = std::pow(10.0, -spec.decade_rate * static_cast<double>(n));
            break;
        }
        case PSDShapeSpec::Kind::Lorentzian: {
            if (spec.width <= 0.0)
                throw InvalidSpec("shape_psd: Lorentzian needs N_w > 0");
            for (std::size_t n = 0; n < K; ++n) {
                const double x = static_cast<double>(n) / spec.width;
                s[n] = 1.0 / (1.0 + x * x);
            }
            break;
        }
        case PSDShapeSpec::Kind::PowerLaw: {
            if (spec.exponent < 0.0)
                throw InvalidSpec("shape_psd: PowerLaw needs beta >= 0");
            const std::size_t half = K / 2;
            if (half == 0)
                throw DegenerateShape("shape_psd: PowerLaw needs K >= 2");
            for (std::size_t i = 1; i <= half; ++i) {
                const double v = std::pow(static_cast<double>(i), -spec.exponent);
                s[i] = v;
                if (K - i == i)
                    s[0] = v;  // DC carries the Nyquist partner so every value appears twice
                else
                    s[K - i] = v;
            }
            if (K % 2 == 1)
                s[0] = s[half];
            break;
        }
    }

    double total = std::accumulate(s.begin(), s.end(), 0.0);
    if (!(total > 0.0))
        throw DegenerateShape("shape_psd: all mass landed in zero bins");
    const double gamma = static_cast<double>(K) / total;
    for (double& v : s) v *= gamma;
    return PSDVector(std::move(s));
}

}  // namespace memcap
