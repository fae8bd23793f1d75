#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nevan/blaschke.hpp"
#include "nevan/geometry.hpp"
#include "nevan/simplex.hpp"
#include "nevan/trend.hpp"

namespace nevan {

struct Target {
    DiskPoint z;
    double value = 0.0;
};

// Targets (z, v) against the boundary nodes ζ_j = e^{2πij/2^m}, j < 2^m.
//   primal: minimize Σ α_j  s.t.  Σ_j α_j P_z(ζ_j) ≥ v for every target, α ≥ 0
//   dual:   maximize Σ c v  s.t.  Σ_targets c P_z(ζ_j) ≤ 1 for every node, c ≥ 0
// The dual constraint is the normalization ⟨a_j, c⟩ ≤ 1 of the cone
// formulation; LP duality identifies the two optima.
struct MajorantProblem {
    std::vector<Target> targets;
    int m = 1;

    std::size_t nodes() const { return std::size_t{1} << m; }
    double node_angle(std::size_t j) const;
    void validate() const;
};

struct LpTolerances {
    double feasibility = 1e-7;   // relative
    double gap = 1e-6;           // relative
};

struct PrimalCertificate {
    LpStatus status = LpStatus::Optimal;
    std::vector<double> alpha;
    double mass = 0.0;
    double condition = 1.0;
    long iterations = 0;
    double max_violation = 0.0;   // max over targets of (v - Σ α P)/(1 + v), re-evaluated
    bool feasible = true;         // max_violation ≤ feasibility tolerance
};

struct DualCertificate {
    LpStatus status = LpStatus::Optimal;
    std::vector<double> c;
    double objective = 0.0;
    double condition = 1.0;
    long iterations = 0;
    double max_node_load = 0.0;   // max_j Σ c P_z(ζ_j), re-evaluated
    bool feasible = true;         // max_node_load ≤ 1 + feasibility tolerance
};

PrimalCertificate solve_primal(const MajorantProblem& p, const LpTolerances& tol = {});
DualCertificate solve_dual(const MajorantProblem& p, const LpTolerances& tol = {});

// max over (target, node) pairs of complementary-slackness residuals, relative.
double complementary_slackness_residual(const MajorantProblem& p, const PrimalCertificate& pc,
                                        const DualCertificate& dc);

struct MajorantLevel {
    int m = 0;
    PrimalCertificate primal;
    DualCertificate dual;
    double gap = 0.0;              // |M - D|
    bool duality_ok = true;        // |M - D| ≤ tol.gap·(1 + M)
    double cs_residual = 0.0;
    double concentration = 0.0;    // best adjacent node pair's share of M
    double concentration_theta = 0.0;
    std::vector<double> density;   // α_j·2^m: the certificate read as a density at resolution m
};

struct MajorantConfig {
    TrendConfig trend{0.05, 0.05};
    double singular_threshold = 0.99;
    LpTolerances tol{};
};

struct MajorantVerdict {
    std::vector<MajorantLevel> levels;
    Trend trend = Trend::Inconclusive;
    bool singular_like = false;    // heuristic: concentration ≥ threshold at the last level
    bool quasi_bounded = false;    // BOUNDED and not singular_like
    std::optional<int> ill_conditioned_level;
    MajorantConfig config;
    std::string label() const;
};

// Merges targets with identical coordinates, keeping the largest value.
std::vector<Target> merge_targets(const std::vector<Target>& targets);

MajorantVerdict majorant_test(const std::vector<Target>& targets, std::span<const int> levels,
                              const MajorantConfig& cfg = {});
// Targets (λ, φ_Λ(λ)).
MajorantVerdict majorant_test(const PointSequence& seq, std::span<const int> levels, const MajorantConfig& cfg = {});

struct DualRatio {
    bool empty = false;    // c = 0
    double numerator = 0.0;
    double denominator = 0.0;
    double ratio = 0.0;
};

// Σ c_λ φ_Λ(λ) / sup_ζ Σ c_λ P_λ(ζ).
DualRatio dual_ratio(const PointSequence& seq, std::span<const double> c, int grid_depth = 12);
DualRatio dual_ratio(const PointSequence& seq, const PhiLambda& phi, std::span<const double> c, int grid_depth = 12);

struct ProbeResult {
    double best_ratio = 0.0;
    std::vector<std::size_t> support;
    bool exhaustive = true;
    std::size_t evaluated = 0;
};

// c_λ ∈ {0, 1 - |λ|}: exhaustive over subsets for |Λ| ≤ 16, greedy beyond.
ProbeResult restricted_probe(const PointSequence& seq, int grid_depth = 10);

enum class ConditionKind { CN, CNN, CS };

struct ConditionEntry {
    std::size_t index = 0;
    double modulus = 0.0;
    double stat = 0.0;            // (1 - |λ|) φ_Λ(λ)
    double running_sup = 0.0;
    double partial_sum = 0.0;
};

struct ConditionReport {
    ConditionKind kind = ConditionKind::CN;
    std::vector<ConditionEntry> entries;   // ordered by |λ|
    double sup = 0.0;
    double tail_max = 0.0;                 // over the last quarter
    double head_max = 0.0;                 // over the first three quarters
    double tail_slope = 0.0;               // slope of log stat vs log 1/(1-|λ|) over the last quarter
    double tail_sum_fraction = 0.0;        // share of the sum from the last quarter
    bool pass = true;
};

ConditionReport condition_report(const PointSequence& seq, const PhiLambda& phi, ConditionKind kind);
ConditionReport condition_CN(const PointSequence& seq);
ConditionReport condition_CNN(const PointSequence& seq);
ConditionReport condition_CS(const PointSequence& seq);

struct TraceReport {
    double l_na = 0.0;       // sup (1 - |λ|) log⁺|a_λ|
    double l_ya = 0.0;       // Σ (1 - |λ|) log⁺|a_λ|
    MajorantVerdict majorant;  // targets log⁺|a_λ|
};

// log_abs_a holds log|a_λ| so that very large data stays representable.
TraceReport trace_membership(const PointSequence& seq, std::span<const double> log_abs_a, std::span<const int> levels,
                             const MajorantConfig& cfg = {});

}  // namespace nevan
