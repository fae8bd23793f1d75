#pragma once

#include <optional>
#include <span>
#include <vector>

#include "nevan/geometry.hpp"
#include "nevan/measures.hpp"

namespace nevan {

// A satellite is stored relative to an ordinary anchor point as the Möbius
// image φ_λ(u) of u = exp(log_rho + i·angle), where φ_λ(u) = (λ + u)/(1 + conj(λ)u).
// Its pseudo-hyperbolic distance to the anchor is exp(log_rho) exactly, even
// when that distance is far below double resolution in Cartesian coordinates.
struct SatelliteLink {
    std::size_t anchor = 0;
    double log_rho = 0.0;
    double angle = 0.0;
};

// Ordered finite set of distinct disk points with an optional scalar channel.
class PointSequence {
public:
    static constexpr double kDuplicateRho = 1e-12;

    PointSequence() = default;
    explicit PointSequence(const std::vector<DiskPoint>& points);

    // Appends an ordinary point; rejects points within ρ < 1e-12 of an
    // existing ordinary point.
    std::size_t add(const DiskPoint& z);
    std::size_t add_satellite(std::size_t anchor, double log_rho, double angle);

    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    const DiskPoint& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<DiskPoint>& points() const { return points_; }
    const std::optional<SatelliteLink>& link(std::size_t i) const { return links_[i]; }
    bool has_satellites() const;

    // log ρ(λ_i, λ_j), exact for anchor/satellite pairs.
    double log_rho(std::size_t i, std::size_t j) const;

    bool has_values() const { return values_.has_value(); }
    const std::vector<double>& values() const;
    void set_values(std::vector<double> v);
    void clear_values() { values_.reset(); }

private:
    std::vector<DiskPoint> points_;
    std::vector<std::optional<SatelliteLink>> links_;
    std::optional<std::vector<double>> values_;
};

struct PhiLambda {
    static constexpr double kOverflow = 700.0;
    std::vector<double> values;   // log |B_λ(λ)|^{-1}
    std::vector<bool> overflow;   // value above kOverflow: δ_λ underflows
    bool any_overflow() const;
};

// Σ_{j ∉ exclude} log |b_{λ_j}(z)|; -inf when z coincides with a retained point.
double log_blaschke_at(const PointSequence& seq, const DiskPoint& z, std::span<const std::size_t> exclude = {});

PhiLambda phi_lambda(const PointSequence& seq);

// min_{i≠j} ρ(λ_i, λ_j); nullopt for fewer than two points.
std::optional<double> separation_constant(const PointSequence& seq);
std::optional<double> log_separation_constant(const PointSequence& seq);

double blaschke_sum(const PointSequence& seq);

// -Σ log|b_λ(z)| over the points with ρ(λ, z) ≥ delta.
double separated_tail_log(const PointSequence& seq, const DiskPoint& z, double delta);

// c0 times the number of shadows I_λ covering each boundary point.
BoundaryDensity propsep_weight(const PointSequence& seq, double c0, double alpha = 1.0);

// μ_Λ = Σ (1 - |λ|) δ_λ.
DiskMeasure sequence_measure(const PointSequence& seq);

}  // namespace nevan
