#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nevan/blaschke.hpp"
#include "nevan/geometry.hpp"
#include "nevan/maximal.hpp"
#include "nevan/measures.hpp"

namespace nevan {

// Half-plane points stored as x = e^{s}·xs, y = e^{s}·ys so that the scale
// e^{s} may underflow without losing the shape of the configuration.
struct ScaledHalfPlanePoint {
    double xs = 0.0;
    double ys = 1.0;
    double log_scale = 0.0;
};

struct GeneratedConfig {
    std::string generator;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::string> tags;   // intended properties; never assumed verified

    PointSequence sequence;                              // disk configurations
    std::optional<DiskMeasure> measure;                  // measure generators
    std::vector<ScaledHalfPlanePoint> halfplane;         // half-plane configurations
    std::vector<double> halfplane_values;
    std::optional<BoundaryDensity> weight;               // orlicz_example
    std::vector<std::pair<std::string, double>> stats;   // derived constants reported by the generator

    bool has_tag(const std::string& t) const;
    std::optional<double> stat(const std::string& name) const;
};

// λ_n = 1 - 2^{-n}, n = 1..N.
GeneratedConfig radial_dyadic(int N);

// log ρ(λ_n, λ'_n) as a function of 1 - |λ_n|.
using GapRule = std::function<double(double)>;
GapRule constant_gap(double rho);
GapRule exponential_gap();   // ρ = e^{-1/(1 - |λ|)}

// Radial λ_n = (1 - 2^{-n}) e^{iθ} with partners placed radially outward.
GeneratedConfig stolz_pairs(double vertex, int N, const GapRule& gap, const std::string& gap_name);

// λ_k = e^{-k} + i k^{-1/2} e^{-k} in the upper half-plane, k = 1..K.
GeneratedConfig superseparated(std::size_t K);
// Σ_{k≤K} (Im λ_k) P_{λ_k}(0), using that Im·P is invariant under scaling.
double superseparated_partial_sum(std::size_t K);

// Greedy generation-by-generation selection of points with
// |λ/|λ| - λ'/|λ'|| ≥ max(g⁻¹(1-|λ|), g⁻¹(1-|λ'|)), g⁻¹(t) = t (log 1/t)^{1+ε}.
GeneratedConfig g_separated(int generations, double eps);
double g_inverse(double t, double eps);

// μ = Σ α_n (normalized arc length on |z| = 1 - 2^{-n}), n = 1..len, with
// 2^{n+extra_bits} equal atoms on circle n.
GeneratedConfig measure_circles(const std::vector<double>& alphas, int extra_bits = 4);
GeneratedConfig measure_circles_geometric(int N, int extra_bits = 4);          // α_n = 2^{-n}
GeneratedConfig measure_circles_power(double s, int N, int extra_bits = 4);    // α_n = n^{-s}

// μ = m(x) dx on [0, R), one atom per cell of a dyadic radial partition with
// `cells` subdivisions per dyadic shell; masses by Gauss-Legendre quadrature.
GeneratedConfig measure_ray(const std::function<double(double)>& m, const std::string& m_name, int cells, double R);

// Disjoint-shadow Λ₀ with 1 - |λ_n| = c n^{-3}, γ_n = n, partners at
// ρ = e^{-γ_n^{1/p}}, and w = Σ γ_n^{1/p} χ_{I_n}.
GeneratedConfig orlicz_example(double p, int N, double c = 0.5);

// z_{n,1} = centers of the Whitney squares Q_{n,1}, n = 1..N, with values P_z(1).
GeneratedConfig kernel_chain(int N);

// The half-plane families λ_k = k^{-α} + i k^{-β} with values φ_k.
GeneratedConfig family_config(double alpha, double beta, EpsRule rule, std::size_t K);

}  // namespace nevan
