#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nevan/blaschke.hpp"
#include "nevan/geometry.hpp"

namespace nevan {

enum class Domain { Circle, Line };

// Half-open interval [lo, hi).
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double length() const { return hi - lo; }
    bool contains(double x) const { return x >= lo && x < hi; }
};

// Step function with value values[i] on [breaks[i], breaks[i+1]) and 0
// elsewhere. Circle mode lives on [0, 2π) and measures with σ = dθ/2π; line
// mode uses Lebesgue measure.
class BoundaryStepFunction {
public:
    BoundaryStepFunction() = default;
    BoundaryStepFunction(Domain d, std::vector<double> breaks, std::vector<double> values);

    Domain domain() const { return domain_; }
    const std::vector<double>& breaks() const { return breaks_; }
    const std::vector<double>& values() const { return values_; }
    double operator()(double x) const;
    double integral() const;
    double measure_above(double t) const;   // |{f > t}|
    BoundaryStepFunction scaled(double s) const;
    BoundaryStepFunction restricted(Interval window) const;

private:
    Domain domain_ = Domain::Circle;
    std::vector<double> breaks_;
    std::vector<double> values_;
};

// φ_k · χ*_{I_k}: value φ_k on the support pieces of I_k and
// φ_k · 2/(1 + d/h) at distance d ≥ h from the center otherwise.
struct Bump {
    double center = 0.0;
    double halfwidth = 0.0;
    double height = 0.0;
    std::vector<Interval> pieces;   // membership pieces of I_k (two when an arc wraps)

    bool inside(double x) const;
};

struct BumpEnvelope {
    Domain domain = Domain::Line;
    std::vector<Bump> bumps;
    std::optional<Interval> window;   // required for weak-L¹ statistics on the line
};

double evaluate_envelope(const BumpEnvelope& e, double x);
double evaluate_bump(const Bump& b, Domain d, double x);

// Mφ(ζ) = max{ φ(λ) : ζ ∈ I_λ } by an endpoint sweep.
BoundaryStepFunction nontangential_max(const PointSequence& seq, std::span<const double> phi, double alpha = 1.0);
BoundaryStepFunction nontangential_max_line(std::span<const double> x, std::span<const double> y,
                                            std::span<const double> phi);
// u = Σ φ(λ) χ_{I_λ}.
BoundaryStepFunction shadow_sum(const PointSequence& seq, std::span<const double> phi, double alpha = 1.0);

double hl_star_indicator(const Arc& arc, double theta);
double hl_star_indicator_line(Interval I, double x);

BumpEnvelope phi_sharp(const PointSequence& seq, std::span<const double> phi, double alpha = 1.0);
BumpEnvelope phi_sharp_line(std::span<const double> x, std::span<const double> y, std::span<const double> phi,
                            std::optional<Interval> window = std::nullopt);

// |{φ^H > t}|, exact union of closed-form bump intervals.
double measure_above(const BumpEnvelope& e, double t);

struct WeakL1Options {
    std::optional<double> t_min;
    std::optional<double> t_max;
    int samples = 21;
};

struct WeakL1Report {
    double sup = 0.0;        // sup_t t·|{f > t}|
    double argmax_t = 0.0;   // the sup is approached as t increases to this level
    std::vector<std::pair<double, double>> samples;   // (t, t·|{f > t}|), log-spaced
    bool vanishing = true;   // last quarter of the samples ≤ 0.1·sup
    std::size_t candidates = 0;
};

WeakL1Report weak_l1(const BoundaryStepFunction& f, const WeakL1Options& opt = {});
WeakL1Report weak_l1(const BumpEnvelope& e, const WeakL1Options& opt = {});

enum class EpsRule { One, InverseLog };
std::string to_string(EpsRule r);

// λ_k = x_k + i y_k with x_k = k^{-α}, y_k = k^{-β}, φ_k = ε_k k^{β-1}, k = 1..K.
struct CounterexampleFamily {
    double alpha = 1.0;
    double beta = 4.0;
    EpsRule rule = EpsRule::One;
    std::vector<double> x, y, eps, phi;
    std::vector<std::string> intended;
    Interval window{-1.0, 2.0};

    std::size_t size() const { return x.size(); }
};

CounterexampleFamily counterexample_family(double alpha, double beta, EpsRule rule, std::size_t K);

// k₁(t)^{-α} + (2/t) Σ_{k₀(t)}^{k₁(t)} φ_k / k^β.
double distribution_analytic(const CounterexampleFamily& f, double t);

BumpEnvelope family_envelope(const CounterexampleFamily& f);
BoundaryStepFunction family_maximal(const CounterexampleFamily& f);

}  // namespace nevan
