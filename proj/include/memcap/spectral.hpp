#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "memcap/signal.hpp"

namespace memcap {

/// Autocorrelation function C(tau), tau = 0..K-1, normalized by the variance
/// so that C(0) == 1 exactly.
class CorrelationFunction {
public:
    explicit CorrelationFunction(std::vector<double> c);

    const std::vector<double>& values() const noexcept { return c_; }
    std::size_t size() const noexcept { return c_.size(); }
    double operator[](std::size_t tau) const noexcept { return c_[tau]; }

private:
    std::vector<double> c_;
};

/// Nonnegative spectrum of length K under the trace normalization
/// sum_k s[k] == K.
class PSDVector {
public:
    explicit PSDVector(std::vector<double> s);

    const std::vector<double>& values() const noexcept { return s_; }
    std::size_t size() const noexcept { return s_.size(); }
    double operator[](std::size_t k) const noexcept { return s_[k]; }
    double sum() const noexcept;

private:
    std::vector<double> s_;
};

/// Symmetric Toeplitz correlation matrix with unit diagonal,
/// entry (i,j) = C(|i-j|). Stored by its first row; a dense realization is
/// materialized on demand.
class CorrelationMatrix {
public:
    CorrelationMatrix(std::vector<double> first_row, bool eig_check);

    std::size_t dim() const noexcept { return row_.size(); }
    const std::vector<double>& first_row() const noexcept { return row_; }
    Eigen::MatrixXd dense() const;
    /// Toeplitz-vector products, column by column: returns C * m.
    Eigen::MatrixXd apply(const Eigen::Ref<const Eigen::MatrixXd>& m) const;

private:
    std::vector<double> row_;
};

/// Parametric PSD shape models on K frequency bins.
struct PSDShapeSpec {
    enum class Kind { Flat, SomePeaks, Linear, Exponential, Lorentzian, PowerLaw };

    Kind kind = Kind::Flat;
    std::size_t K = 0;
    std::vector<std::size_t> peak_bins;  // SomePeaks
    std::size_t n_active = 0;            // Linear / Exponential: number of nonzero bins
    double decade_rate = 1.0;            // Exponential: decades lost per bin
    double width = 1.0;                  // Lorentzian half-width in bins
    double exponent = 0.0;               // PowerLaw: 1/f^beta
};

/// Biased (1/T) lag autocorrelation estimate, normalized to c[0] == 1.
CorrelationFunction estimate_autocorrelation(const SignalSeries& x, std::size_t max_lag);

/// Length-K circular Wiener-Khinchin transform of the symmetrized
/// autocorrelation; renormalized so the bins sum to K.
PSDVector psd_from_autocorrelation(const CorrelationFunction& c);

/// Inverse transform, normalized so c[0] == 1.
CorrelationFunction autocorrelation_from_psd(const PSDVector& s);

/// K x K Toeplitz realization of c; positive semidefiniteness is verified by
/// an eigenvalue check for K <= 512 and trusted above that size.
CorrelationMatrix toeplitz_matrix(const CorrelationFunction& c, std::size_t K);

/// Eigenvalues sorted descending, packaged as a PSDVector (trace law: they
/// sum to K).
PSDVector eigvals_correlation(const CorrelationMatrix& m);

/// Materialize one of the parametric PSD shapes.
///
/// PowerLaw places gamma/i^beta on the mirrored bin pairs {i, K-i},
/// i = 1..K/2, with the DC bin carrying the partner of the Nyquist bin, so
/// the value multiset is exactly {gamma/i^beta, twice each} and beta = 0
/// reduces to the flat spectrum. The other shapes follow their defining index
/// formulas directly. gamma always normalizes the total mass to K.
PSDVector shape_psd(const PSDShapeSpec& spec);

}  // namespace memcap
