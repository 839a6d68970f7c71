#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace memcap {

/// A finite real-valued time series with unit time step.
///
/// Immutable after construction. The optional seed records which RNG stream
/// produced the series, purely as provenance.
class SignalSeries {
public:
    explicit SignalSeries(std::vector<double> values,
                          std::optional<std::uint64_t> seed = std::nullopt);

    const std::vector<double>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    std::optional<std::uint64_t> seed() const noexcept { return seed_; }
    double operator[](std::size_t i) const noexcept { return values_[i]; }

    double mean() const noexcept;
    /// Population variance (1/T normalization).
    double variance() const noexcept;

private:
    std::vector<double> values_;
    std::optional<std::uint64_t> seed_;
};

}  // namespace memcap
