#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "memcap/signal.hpp"

namespace memcap {

struct TopologySpec {
    enum class Kind { Sparse, Dense, Diagonal, Ring1, Ring2, WattsStrogatz, BarabasiAlbert };

    Kind kind = Kind::Dense;
    double connection_prob = 0.1;  // Sparse
    double rewire_prob = 0.1;      // WattsStrogatz (base topology is Ring2)
    int attachments = 2;           // BarabasiAlbert: edges added per new node
};

struct ReservoirSpec {
    int n = 20;
    TopologySpec topology;
    double spectral_radius = 0.9;  // in (0, 1) for the echo-state property
    std::uint64_t seed = 0;
    bool symmetrize = true;        // (W + W^T)/2 before rescaling
};

/// Eigenvalues of the internal weights, sorted by descending magnitude.
struct EigenSpectrum {
    std::vector<std::complex<double>> eigenvalues;

    double spectral_radius() const { return std::abs(eigenvalues.front()); }
    bool is_real(double tol = 1e-10) const;
};

struct ReservoirWeights {
    Eigen::MatrixXd w;      // N x N internal weights, max |eigenvalue| == rho
    Eigen::VectorXd w_in;   // shared input/noise weight vector
};

/// Post-washout state trajectory; row i holds the state at time washout+i
/// (time origin 0, zero initial state).
struct StateMatrix {
    Eigen::MatrixXd x;
    int washout = 0;
};

ReservoirWeights build_weights(const ReservoirSpec& spec);

EigenSpectrum eigen_spectrum(const Eigen::Ref<const Eigen::MatrixXd>& w);

/// Linear update x_{t+1} = W x_t + w_in (u_{t+1} + v_{t+1}); rows for
/// t > washout are returned. Input and noise share the weight vector.
StateMatrix simulate(const Eigen::Ref<const Eigen::MatrixXd>& w,
                     const Eigen::Ref<const Eigen::VectorXd>& w_in,
                     const SignalSeries& u, const SignalSeries& v, int washout,
                     const Eigen::VectorXd* x0 = nullptr);

/// Steps until a unit perturbation decays below 1e-12 at this radius,
/// capped at 10^4.
int default_washout(double rho);

}  // namespace memcap
