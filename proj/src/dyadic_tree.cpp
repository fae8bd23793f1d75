#include "nevan/dyadic_tree.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nevan {

void DyadicWeights::set(const DyadicIndex& idx, double w) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw std::invalid_argument("dyadic weights must be finite and nonnegative");
    weights[idx] = w;
    max_generation = std::max(max_generation, idx.n);
}

Aggregate aggregate_sup(const PointSequence& seq, std::span<const double> values, int m) {
    if (values.size() != seq.size()) throw std::invalid_argument("value channel length must match the sequence");
    if (m < 0 || m > 62) throw std::invalid_argument("aggregation depth must lie in [0, 62]");
    Aggregate out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        DyadicIndex idx = locate(seq[i]);
        if (idx.n > m) {
            out.deeper.push_back(i);
            continue;
        }
        auto it = out.weights.weights.find(idx);
        double v = values[i];
        if (it == out.weights.weights.end())
            out.weights.set(idx, std::max(v, 0.0));
        else
            it->second = std::max(it->second, v);
    }
    return out;
}

Aggregate aggregate_sup(const PointSequence& seq, int m) {
    if (!seq.has_values()) throw std::invalid_argument("sequence has no value channel");
    return aggregate_sup(seq, seq.values(), m);
}

AntichainResult antichain_supremum(const DyadicWeights& w) {
    struct Node {
        double weight = 0.0;
        double best = 0.0;
        bool take_self = false;
    };
    std::map<DyadicIndex, Node> trie;
    for (const auto& [idx, weight] : w.weights) {
        trie[idx].weight = weight;
        DyadicIndex cur = idx;
        while (cur.n > 0) {
            cur = cur.parent();
            trie.try_emplace(cur);
        }
    }
    if (trie.empty()) return {};
    for (auto it = trie.rbegin(); it != trie.rend(); ++it) {
        const DyadicIndex& idx = it->first;
        Node& node = it->second;
        double children = 0.0;
        if (idx.n < 62) {
            for (int c = 0; c < 2; ++c) {
                auto ch = trie.find(idx.child(c));
                if (ch != trie.end()) children += ch->second.best;
            }
        }
        double own = std::ldexp(node.weight, -idx.n);
        node.take_self = own >= children;
        node.best = node.take_self ? own : children;
    }
    AntichainResult res;
    res.value = trie.begin()->second.best;
    std::vector<DyadicIndex> stack{trie.begin()->first};
    while (!stack.empty()) {
        DyadicIndex idx = stack.back();
        stack.pop_back();
        const Node& node = trie.at(idx);
        if (node.take_self) {
            if (node.weight > 0.0) res.witness.push_back(idx);
            continue;
        }
        for (int c = 1; c >= 0; --c) {
            auto ch = trie.find(idx.child(c));
            if (ch != trie.end()) stack.push_back(ch->first);
        }
    }
    std::sort(res.witness.begin(), res.witness.end());
    return res;
}

BorichevReport borichev_verdict(const PointSequence& seq, std::span<const double> values, std::span<const int> depths,
                                const TrendConfig& cfg) {
    if (depths.empty()) throw std::invalid_argument("at least one depth is required");
    BorichevReport rep;
    std::vector<double> xs, ys;
    for (int m : depths) {
        Aggregate agg = aggregate_sup(seq, values, m);
        AntichainResult r = antichain_supremum(agg.weights);
        rep.levels.push_back({m, r.value, agg.weights.weights.size(), agg.deeper.size()});
        xs.push_back(m);
        ys.push_back(r.value);
        rep.witness = std::move(r);
    }
    rep.trend = classify_trend(xs, ys, cfg);
    return rep;
}

BorichevReport borichev_verdict(const PointSequence& seq, std::span<const int> depths, const TrendConfig& cfg) {
    if (seq.empty()) {
        BorichevReport rep;
        for (int m : depths) rep.levels.push_back({m, 0.0, 0, 0});
        rep.trend = Trend::Bounded;
        return rep;
    }
    PhiLambda phi = phi_lambda(seq);
    return borichev_verdict(seq, phi.values, depths, cfg);
}

}  // namespace nevan
