#pragma once

#include <span>
#include <string>

namespace nevan {

enum class Trend { Bounded, Growing, Inconclusive };

std::string to_string(Trend t);

struct TrendConfig {
    double stabilization = 0.05;   // relative increment bound over the last three levels
    double growth_slope = 0.05;    // slope of log(value) against level
};

// BOUNDED when the last three values have consecutive relative increments
// below cfg.stabilization (or all values vanish); GROWING when the
// least-squares slope of log(value) against level exceeds cfg.growth_slope;
// INCONCLUSIVE otherwise.
Trend classify_trend(std::span<const double> levels, std::span<const double> values, const TrendConfig& cfg = {});

// Least-squares slope of y against x.
double regression_slope(std::span<const double> x, std::span<const double> y);

}  // namespace nevan
