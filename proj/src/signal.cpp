#include "memcap/signal.hpp"

#include <cmath>

#include "memcap/errors.hpp"

namespace memcap {

SignalSeries::SignalSeries(std::vector<double> values, std::optional<std::uint64_t> seed)
    : values_(std::move(values)), seed_(seed) {
    if (values_.empty())
        throw InvalidSpec("SignalSeries: empty series");
    for (double v : values_)
        if (!std::isfinite(v))
            throw InvalidSpec("SignalSeries: non-finite value");
}

double SignalSeries::mean() const noexcept {
    double s = 0.0;
    for (double v : values_) s += v;
    return s / static_cast<double>(values_.size());
}

double SignalSeries::variance() const noexcept {
    const double m = mean();
    double s = 0.0;
    for (double v : values_) s += (v - m) * (v - m);
    return s / static_cast<double>(values_.size());
}

}  // namespace memcap
