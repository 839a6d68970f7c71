#include "memcap/reservoir.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "memcap/errors.hpp"

namespace memcap {

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 finalizer over (seed, stream)
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

using Adjacency = std::vector<std::uint8_t>;  // row-major N x N

void add_edge(Adjacency& a, int n, int i, int j) {
    a[static_cast<std::size_t>(i) * n + j] = 1;
    a[static_cast<std::size_t>(j) * n + i] = 1;
}

bool has_edge(const Adjacency& a, int n, int i, int j) {
    return a[static_cast<std::size_t>(i) * n + j] != 0;
}

Adjacency draw_adjacency(const TopologySpec& topo, int n, std::mt19937_64& rng) {
    Adjacency a(static_cast<std::size_t>(n) * n, 0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    switch (topo.kind) {
        case TopologySpec::Kind::Sparse:
        case TopologySpec::Kind::Dense: {
            const double p = topo.kind == TopologySpec::Kind::Dense ? 1.0 : topo.connection_prob;
            for (auto& cell : a)
                cell = unit(rng) < p ? 1 : 0;
            break;
        }
        case TopologySpec::Kind::Diagonal:
            for (int i = 0; i < n; ++i)
                a[static_cast<std::size_t>(i) * n + i] = 1;
            break;
        case TopologySpec::Kind::Ring1:
            // Directed cycle: node i receives from node i-1.
            for (int i = 0; i < n; ++i)
                a[static_cast<std::size_t>(i) * n + (i + n - 1) % n] = 1;
            break;
        case TopologySpec::Kind::Ring2:
            for (int i = 0; i < n; ++i)
                for (int d = 1; d <= 2; ++d) {
                    add_edge(a, n, i, (i + d) % n);
                }
            break;
        case TopologySpec::Kind::WattsStrogatz: {
            // Ring2 base, each clockwise edge rewired with probability p.
            struct Edge { int from, to; };
            std::vector<Edge> edges;
            for (int i = 0; i < n; ++i)
                for (int d = 1; d <= 2; ++d)
                    edges.push_back({i, (i + d) % n});
            for (const Edge& e : edges)
                add_edge(a, n, e.from, e.to);
            std::uniform_int_distribution<int> node(0, n - 1);
            for (const Edge& e : edges) {
                if (unit(rng) >= topo.rewire_prob)
                    continue;
                int t = node(rng);
                int guard = 0;
                while ((t == e.from || has_edge(a, n, e.from, t)) && guard++ < 64)
                    t = node(rng);
                if (t == e.from || has_edge(a, n, e.from, t))
                    continue;  // saturated neighborhood, keep the edge
                a[static_cast<std::size_t>(e.from) * n + e.to] = 0;
                a[static_cast<std::size_t>(e.to) * n + e.from] = 0;
                add_edge(a, n, e.from, t);
            }
            break;
        }
        case TopologySpec::Kind::BarabasiAlbert: {
            const int m = topo.attachments;
            if (m < 1 || m >= n)
                throw InvalidSpec("build_weights: BarabasiAlbert needs 1 <= m < N");
            // Seed clique on m+1 nodes, then preferential attachment via the
            // repeated-endpoint list.
            std::vector<int> endpoints;
            for (int i = 0; i <= m; ++i)
                for (int j = 0; j < i; ++j) {
                    add_edge(a, n, i, j);
                    endpoints.push_back(i);
                    endpoints.push_back(j);
                }
            for (int v = m + 1; v < n; ++v) {
                std::vector<int> targets;
                int guard = 0;
                while (static_cast<int>(targets.size()) < m && guard++ < 1000) {
                    std::uniform_int_distribution<std::size_t> pick(0, endpoints.size() - 1);
                    int t = endpoints[pick(rng)];
                    if (t != v && std::find(targets.begin(), targets.end(), t) == targets.end())
                        targets.push_back(t);
                }
                for (int t : targets) {
                    add_edge(a, n, v, t);
                    endpoints.push_back(v);
                    endpoints.push_back(t);
                }
            }
            break;
        }
    }
    return a;
}

}  // namespace

bool EigenSpectrum::is_real(double tol) const {
    const double scale = std::max(spectral_radius(), 1e-300);
    for (const auto& ev : eigenvalues)
        if (std::abs(ev.imag()) > tol * scale)
            return false;
    return true;
}

EigenSpectrum eigen_spectrum(const Eigen::Ref<const Eigen::MatrixXd>& w) {
    if (w.rows() != w.cols() || w.rows() == 0)
        throw InvalidSpec("eigen_spectrum: matrix must be square and nonempty");
    if (!w.allFinite())
        throw InvalidSpec("eigen_spectrum: non-finite entries");

    const double scale = std::max(w.cwiseAbs().maxCoeff(), 1e-300);
    EigenSpectrum out;
    if ((w - w.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * scale) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(w, Eigen::EigenvaluesOnly);
        if (es.info() != Eigen::Success)
            throw EigenFailure("eigen_spectrum: symmetric solver did not converge");
        for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
            out.eigenvalues.emplace_back(es.eigenvalues()[i], 0.0);
    } else {
        Eigen::EigenSolver<Eigen::MatrixXd> es(w, /*computeEigenvectors=*/false);
        if (es.info() != Eigen::Success)
            throw EigenFailure("eigen_spectrum: solver did not converge");
        for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
            out.eigenvalues.push_back(es.eigenvalues()[i]);
    }
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end(),
              [](const std::complex<double>& a, const std::complex<double>& b) {
                  const double ma = std::abs(a), mb = std::abs(b);
                  if (ma != mb) return ma > mb;
                  if (a.real() != b.real()) return a.real() > b.real();
                  return a.imag() > b.imag();
              });
    return out;
}

ReservoirWeights build_weights(const ReservoirSpec& spec) {
    const int n = spec.n;
    if (n < 1)
        throw InvalidSpec("build_weights: N must be >= 1");
    if (!(spec.spectral_radius > 0.0 && spec.spectral_radius < 1.0))
        throw InvalidSpec("build_weights: spectral radius must be in (0, 1)");

    for (int attempt = 0; attempt < 8; ++attempt) {
        std::mt19937_64 rng(mix_seed(spec.seed, static_cast<std::uint64_t>(attempt)));
        Adjacency adj = draw_adjacency(spec.topology, n, rng);

        std::uniform_real_distribution<double> weight(-1.0, 1.0);
        Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (adj[static_cast<std::size_t>(i) * n + j])
                    w(i, j) = weight(rng);

        Eigen::VectorXd w_in(n);
        for (int i = 0; i < n; ++i)
            w_in(i) = weight(rng);

        if (spec.symmetrize)
            w = ((w + w.transpose()) / 2.0).eval();

        const double radius = eigen_spectrum(w).spectral_radius();
        if (radius < 1e-12)
            continue;
        w *= spec.spectral_radius / radius;
        return {std::move(w), std::move(w_in)};
    }
    throw ZeroSpectralRadius("build_weights: drew a zero-spectrum matrix 8 times");
}

StateMatrix simulate(const Eigen::Ref<const Eigen::MatrixXd>& w,
                     const Eigen::Ref<const Eigen::VectorXd>& w_in,
                     const SignalSeries& u, const SignalSeries& v, int washout,
                     const Eigen::VectorXd* x0) {
    const int n = static_cast<int>(w.rows());
    if (w.cols() != n || w_in.size() != n)
        throw LengthMismatch("simulate: weight dimensions disagree");
    if (u.size() != v.size())
        throw LengthMismatch("simulate: input and noise lengths differ");
    const std::size_t T = u.size();
    if (washout < 0 || static_cast<std::size_t>(washout) >= T)
        throw InvalidSpec("simulate: washout must be in [0, T)");

    Eigen::VectorXd x = x0 ? *x0 : Eigen::VectorXd::Zero(n);
    if (x.size() != n)
        throw LengthMismatch("simulate: initial state has wrong dimension");

    StateMatrix out;
    out.washout = washout;
    out.x.resize(static_cast<Eigen::Index>(T) - washout, n);
    for (std::size_t t = 0; t < T; ++t) {
        x = w * x + w_in * (u[t] + v[t]);
        if ((t & 63) == 0 && x.cwiseAbs().maxCoeff() > 1e12)
            throw Divergence("simulate: state magnitude exceeded 1e12");
        if (static_cast<int>(t) >= washout)
            out.x.row(static_cast<Eigen::Index>(t) - washout) = x;
    }
    if (!out.x.allFinite() || out.x.cwiseAbs().maxCoeff() > 1e12)
        throw Divergence("simulate: state magnitude exceeded 1e12");
    return out;
}

int default_washout(double rho) {
    if (!(rho > 0.0 && rho < 1.0))
        throw InvalidSpec("default_washout: rho must be in (0, 1)");
    const double steps = std::ceil(std::log(1e-12) / std::log(rho));
    return static_cast<int>(std::min(steps, 1e4));
}

}  // namespace memcap
