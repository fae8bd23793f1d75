#pragma once

#include <map>
#include <span>
#include <vector>

#include "nevan/blaschke.hpp"
#include "nevan/geometry.hpp"
#include "nevan/trend.hpp"

namespace nevan {

// Sparse nonnegative weights on Whitney squares / dyadic arcs.
struct DyadicWeights {
    std::map<DyadicIndex, double> weights;
    int max_generation = 0;

    void set(const DyadicIndex& idx, double w);
};

struct Aggregate {
    DyadicWeights weights;
    std::vector<std::size_t> deeper;  // points of generation > m, left out
};

// Weight at (n,k) = max of the values over the points in Q_{n,k}.
Aggregate aggregate_sup(const PointSequence& seq, std::span<const double> values, int m);
Aggregate aggregate_sup(const PointSequence& seq, int m);  // uses the value channel

struct AntichainResult {
    double value = 0.0;
    std::vector<DyadicIndex> witness;
};

// max over antichains A of Σ_{(n,k)∈A} w(n,k)·2^{-n}.
AntichainResult antichain_supremum(const DyadicWeights& w);

struct BorichevLevel {
    int m = 0;
    double S = 0.0;
    std::size_t occupied = 0;
    std::size_t deeper = 0;
};

struct BorichevReport {
    std::vector<BorichevLevel> levels;
    AntichainResult witness;  // at the last depth
    Trend trend = Trend::Inconclusive;
    bool pass() const { return trend != Trend::Growing; }
};

// Antichain supremum of the square-wise sup of the values, truncated at
// each depth m (points deeper than m are left out and counted).
BorichevReport borichev_verdict(const PointSequence& seq, std::span<const double> values, std::span<const int> depths,
                                const TrendConfig& cfg = {});
// Same with values = φ_Λ.
BorichevReport borichev_verdict(const PointSequence& seq, std::span<const int> depths, const TrendConfig& cfg = {});

}  // namespace nevan
