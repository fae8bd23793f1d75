#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "nevan/geometry.hpp"
#include "nevan/measures.hpp"

namespace nevan {

// (1 - |z|²) / |e^{iθ} - z|²
double poisson_kernel(const DiskPoint& z, double theta);
double poisson_kernel(const DiskPoint& z, const BoundaryPoint& zeta);

// y / (π((x - s)² + y²))
double half_plane_poisson(const HalfPlanePoint& p, double s);

// Harmonic measure of an arc seen from z, (1/2π)∫_arc P_z dθ, in closed form.
double harmonic_measure(const DiskPoint& z, const Arc& arc);

// (1/2π)∫_arc Im((e^{iθ} + z)/(e^{iθ} - z)) dθ, in closed form.
double conjugate_arc_integral(const DiskPoint& z, const Arc& arc);

double poisson_integral(const BoundaryDensity& w, const DiskPoint& z);

double balayage(const DiskMeasure& mu, double theta);

// Structure-of-arrays evaluator for repeated balayage evaluations.
class BalayageEvaluator {
public:
    explicit BalayageEvaluator(const DiskMeasure& mu);
    double operator()(double theta) const;
    bool empty() const { return x_.empty(); }

private:
    std::vector<double> x_, y_, w_;
};

struct BalayageSup {
    double value = 0.0;
    double theta = 0.0;
};

// Grid search on 2^m nodes, with golden-section refinement around the
// argmax of every nested grid level m' ≤ m. A lower bound for the true sup,
// nondecreasing in m; ties resolve to the smallest angle.
BalayageSup balayage_sup(const DiskMeasure& mu, int grid_depth);

double window_mass(const DiskMeasure& mu, const CarlesonWindow& q);

// sup_θ μ(Q(e^{iθ}, r)), exact over the critical windows.
struct WindowSup {
    double mass = 0.0;
    double theta = 0.0;
};
WindowSup window_sup(const DiskMeasure& mu, double r);

struct SufcondLevel {
    int n = 0;
    double r = 0.0;
    double window_sup = 0.0;
    double theta = 0.0;
    double increment = 0.0;    // 2^n · window_sup
    double partial_sum = 0.0;
    std::optional<double> g_value;
};

struct SufcondReport {
    std::vector<SufcondLevel> levels;
    double discrete_sum = 0.0;
    double tail_fraction = 0.0;   // share of the sum contributed by the last quarter of levels
    double log_slope = 0.0;       // slope of log partial sum vs log n over the second half
    bool g_dominates = true;      // window masses ≤ g(r) at every level (when g is given)
    std::optional<double> g_discrete_sum;
    bool pass = true;
};

struct SufcondConfig {
    double tail_threshold = 0.05;
};

SufcondReport sufcond_check(const DiskMeasure& mu, const std::function<double(double)>& g, int depth,
                            const SufcondConfig& cfg = {});

struct SuperlevelDisk {
    DiskPoint center;
    double radius = 0.0;
};

// { z : P_z(e^{iθ}) ≥ t } is the disk of radius 1/(t+1) tangent at e^{iθ}.
SuperlevelDisk superlevel_disk(double theta, double t);

// g(z) = ∫ (ζ + z)/(ζ - z) dμ(ζ) for μ = w dσ + atoms.
std::complex<double> scaffold_g(const BoundaryDensity& w, const DiskPoint& z);

// log |H(z)| for H = (2 + g)².
double scaffold_H_log_modulus(const BoundaryDensity& w, const DiskPoint& z);

}  // namespace nevan
