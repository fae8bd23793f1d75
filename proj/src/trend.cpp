#include "nevan/trend.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace nevan {

std::string to_string(Trend t) {
    switch (t) {
        case Trend::Bounded: return "BOUNDED";
        case Trend::Growing: return "GROWING";
        case Trend::Inconclusive: return "INCONCLUSIVE";
    }
    return "INCONCLUSIVE";
}

double regression_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("regression inputs differ in length");
    const std::size_t n = x.size();
    if (n < 2) return 0.0;
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxx > 0.0 ? sxy / sxx : 0.0;
}

Trend classify_trend(std::span<const double> levels, std::span<const double> values, const TrendConfig& cfg) {
    if (levels.size() != values.size()) throw std::invalid_argument("trend inputs differ in length");
    const std::size_t n = values.size();
    bool all_zero = true;
    for (double v : values)
        if (v != 0.0) all_zero = false;
    if (n > 0 && all_zero) return Trend::Bounded;
    if (n >= 3) {
        bool stable = true;
        for (std::size_t i = n - 2; i < n; ++i) {
            double prev = values[i - 1];
            double rel = prev != 0.0 ? std::fabs(values[i] - prev) / std::fabs(prev) : (values[i] == 0.0 ? 0.0 : 1.0);
            if (!(rel < cfg.stabilization)) stable = false;
        }
        if (stable) return Trend::Bounded;
    }
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < n; ++i) {
        if (values[i] > 0.0) {
            xs.push_back(levels[i]);
            ys.push_back(std::log(values[i]));
        }
    }
    if (xs.size() >= 2 && regression_slope(xs, ys) > cfg.growth_slope) return Trend::Growing;
    return Trend::Inconclusive;
}

}  // namespace nevan
