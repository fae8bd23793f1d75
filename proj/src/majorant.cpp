#include "nevan/majorant.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

#include "nevan/harmonic.hpp"

namespace nevan {

double MajorantProblem::node_angle(std::size_t j) const {
    return std::ldexp(kTwoPi * static_cast<double>(j), -m);
}

void MajorantProblem::validate() const {
    if (m < 1 || m > 16) throw std::invalid_argument("node level m must lie in [1, 16]");
    for (const auto& t : targets)
        if (!(t.value >= 0.0) || !std::isfinite(t.value)) throw std::invalid_argument("target values must be finite and nonnegative");
}

namespace {

std::vector<std::vector<double>> kernel_matrix(const MajorantProblem& p) {
    const std::size_t n = p.nodes();
    std::vector<std::vector<double>> K(p.targets.size(), std::vector<double>(n));
    for (std::size_t i = 0; i < p.targets.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) K[i][j] = poisson_kernel(p.targets[i].z, p.node_angle(j));
    return K;
}

bool all_zero(const MajorantProblem& p) {
    return std::all_of(p.targets.begin(), p.targets.end(), [](const Target& t) { return t.value == 0.0; });
}

}  // namespace

PrimalCertificate solve_primal(const MajorantProblem& p, const LpTolerances& tol) {
    p.validate();
    if (p.targets.empty()) throw std::invalid_argument("the primal problem needs at least one target");
    PrimalCertificate cert;
    const std::size_t n = p.nodes();
    cert.alpha.assign(n, 0.0);
    if (all_zero(p)) return cert;
    auto K = kernel_matrix(p);
    std::vector<std::vector<double>> A(K.size(), std::vector<double>(n));
    std::vector<double> b(K.size()), c(n, -1.0);
    for (std::size_t i = 0; i < K.size(); ++i) {
        for (std::size_t j = 0; j < n; ++j) A[i][j] = -K[i][j];
        b[i] = -p.targets[i].value;
    }
    LpResult r = simplex_maximize(A, b, c);
    cert.status = r.status;
    cert.condition = r.condition;
    cert.iterations = r.iterations;
    if (!r.solved()) {
        cert.feasible = false;
        return cert;
    }
    for (std::size_t j = 0; j < n; ++j) cert.alpha[j] = std::max(r.x[j], 0.0);
    cert.mass = 0.0;
    for (double a : cert.alpha) cert.mass += a;
    // Independent re-evaluation through the boundary measure Σ α_j δ_{ζ_j}.
    std::vector<BoundaryAtom> atoms;
    for (std::size_t j = 0; j < n; ++j)
        if (cert.alpha[j] > 0.0) atoms.push_back({p.node_angle(j), cert.alpha[j]});
    BoundaryDensity nu({}, atoms);
    for (const auto& t : p.targets) {
        double h = poisson_integral(nu, t.z);
        cert.max_violation = std::max(cert.max_violation, (t.value - h) / (1.0 + t.value));
    }
    cert.feasible = cert.max_violation <= tol.feasibility;
    return cert;
}

DualCertificate solve_dual(const MajorantProblem& p, const LpTolerances& tol) {
    p.validate();
    DualCertificate cert;
    const std::size_t d = p.targets.size();
    cert.c.assign(d, 0.0);
    if (d == 0 || all_zero(p)) return cert;
    auto K = kernel_matrix(p);
    const std::size_t n = p.nodes();
    std::vector<std::vector<double>> A(n, std::vector<double>(d));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < d; ++i) A[j][i] = K[i][j];
    std::vector<double> b(n, 1.0), c(d);
    for (std::size_t i = 0; i < d; ++i) c[i] = p.targets[i].value;
    LpResult r = simplex_maximize(A, b, c);
    cert.status = r.status;
    cert.condition = r.condition;
    cert.iterations = r.iterations;
    if (!r.solved()) {
        cert.feasible = false;
        return cert;
    }
    for (std::size_t i = 0; i < d; ++i) cert.c[i] = std::max(r.x[i], 0.0);
    cert.objective = 0.0;
    for (std::size_t i = 0; i < d; ++i) cert.objective += cert.c[i] * p.targets[i].value;
    DiskMeasure mu;
    for (std::size_t i = 0; i < d; ++i)
        if (cert.c[i] > 0.0) mu.add(p.targets[i].z, cert.c[i]);
    for (std::size_t j = 0; j < n; ++j) cert.max_node_load = std::max(cert.max_node_load, balayage(mu, p.node_angle(j)));
    cert.feasible = cert.max_node_load <= 1.0 + tol.feasibility;
    return cert;
}

double complementary_slackness_residual(const MajorantProblem& p, const PrimalCertificate& pc,
                                        const DualCertificate& dc) {
    if (pc.mass == 0.0 && dc.objective == 0.0) return 0.0;
    auto K = kernel_matrix(p);
    const std::size_t n = p.nodes();
    const std::size_t d = p.targets.size();
    double scale = std::max(pc.mass, 1e-300);
    double res = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        if (pc.alpha[j] <= 1e-9 * scale) continue;
        double load = 0.0;
        for (std::size_t i = 0; i < d; ++i) load += dc.c[i] * K[i][j];
        res = std::max(res, std::fabs(load - 1.0));
    }
    double cmax = 0.0;
    for (double v : dc.c) cmax = std::max(cmax, v);
    for (std::size_t i = 0; i < d; ++i) {
        if (dc.c[i] <= 1e-9 * cmax) continue;
        double h = 0.0;
        for (std::size_t j = 0; j < n; ++j) h += pc.alpha[j] * K[i][j];
        res = std::max(res, std::fabs(h - p.targets[i].value) / (1.0 + p.targets[i].value));
    }
    return res;
}

std::vector<Target> merge_targets(const std::vector<Target>& targets) {
    std::vector<Target> out;
    std::map<std::pair<double, double>, std::size_t> seen;
    for (const auto& t : targets) {
        auto key = std::make_pair(t.z.re(), t.z.im());
        auto it = seen.find(key);
        if (it == seen.end()) {
            seen.emplace(key, out.size());
            out.push_back(t);
        } else {
            out[it->second].value = std::max(out[it->second].value, t.value);
        }
    }
    return out;
}

std::string MajorantVerdict::label() const {
    switch (trend) {
        case Trend::Bounded:
            if (singular_like) return "BOUNDED, singular-like (Nevanlinna yes / Smirnov no at this scale; heuristic)";
            return "BOUNDED (quasi-bounded certificate at this scale; heuristic)";
        case Trend::Growing: return "GROWING";
        case Trend::Inconclusive: return "INCONCLUSIVE";
    }
    return "INCONCLUSIVE";
}

MajorantVerdict majorant_test(const std::vector<Target>& raw, std::span<const int> levels, const MajorantConfig& cfg) {
    if (levels.empty()) throw std::invalid_argument("at least one level is required");
    MajorantVerdict verdict;
    verdict.config = cfg;
    std::vector<Target> targets;
    for (const auto& t : merge_targets(raw))
        if (t.value > 0.0) targets.push_back(t);
    std::vector<double> xs, ms;
    for (int m : levels) {
        MajorantLevel lv;
        lv.m = m;
        MajorantProblem p{targets, m};
        p.validate();
        const std::size_t n = p.nodes();
        if (targets.empty()) {
            lv.primal.alpha.assign(n, 0.0);
            lv.density.assign(n, 0.0);
        } else {
            lv.primal = solve_primal(p, cfg.tol);
            lv.dual = solve_dual(p, cfg.tol);
            lv.gap = std::fabs(lv.primal.mass - lv.dual.objective);
            lv.duality_ok = lv.gap <= cfg.tol.gap * (1.0 + lv.primal.mass);
            lv.cs_residual = complementary_slackness_residual(p, lv.primal, lv.dual);
            double M = lv.primal.mass;
            if (M > 0.0) {
                for (std::size_t j = 0; j < n; ++j) {
                    double nb = std::max(lv.primal.alpha[(j + n - 1) % n], lv.primal.alpha[(j + 1) % n]);
                    double share = (lv.primal.alpha[j] + (n > 1 ? nb : 0.0)) / M;
                    if (share > lv.concentration) {
                        lv.concentration = share;
                        lv.concentration_theta = p.node_angle(j);
                    }
                }
            }
            lv.density.resize(n);
            for (std::size_t j = 0; j < n; ++j) lv.density[j] = std::ldexp(lv.primal.alpha[j], m);
            bool ill = lv.primal.status == LpStatus::IllConditioned || lv.dual.status == LpStatus::IllConditioned;
            if (ill && !verdict.ill_conditioned_level) verdict.ill_conditioned_level = m;
        }
        xs.push_back(m);
        ms.push_back(lv.primal.mass);
        verdict.levels.push_back(std::move(lv));
    }
    verdict.trend = classify_trend(xs, ms, cfg.trend);
    const auto& last = verdict.levels.back();
    verdict.singular_like = last.primal.mass > 0.0 && last.concentration >= cfg.singular_threshold;
    verdict.quasi_bounded = verdict.trend == Trend::Bounded && !verdict.singular_like;
    return verdict;
}

MajorantVerdict majorant_test(const PointSequence& seq, std::span<const int> levels, const MajorantConfig& cfg) {
    std::vector<Target> targets;
    if (!seq.empty()) {
        PhiLambda phi = phi_lambda(seq);
        for (std::size_t i = 0; i < seq.size(); ++i) targets.push_back({seq[i], phi.values[i]});
    }
    return majorant_test(targets, levels, cfg);
}

DualRatio dual_ratio(const PointSequence& seq, const PhiLambda& phi, std::span<const double> c, int grid_depth) {
    if (c.size() != seq.size()) throw std::invalid_argument("weight vector length must match the sequence");
    DualRatio r;
    DiskMeasure mu;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (!(c[i] >= 0.0)) throw std::invalid_argument("weights must be nonnegative");
        if (c[i] > 0.0) {
            mu.add(seq[i], c[i]);
            r.numerator += c[i] * phi.values[i];
        }
    }
    if (mu.empty()) {
        r.empty = true;
        return r;
    }
    r.denominator = balayage_sup(mu, grid_depth).value;
    r.ratio = r.numerator / r.denominator;
    return r;
}

DualRatio dual_ratio(const PointSequence& seq, std::span<const double> c, int grid_depth) {
    return dual_ratio(seq, phi_lambda(seq), c, grid_depth);
}

ProbeResult restricted_probe(const PointSequence& seq, int grid_depth) {
    ProbeResult best;
    const std::size_t n = seq.size();
    if (n == 0) return best;
    PhiLambda phi = phi_lambda(seq);
    std::vector<double> c(n, 0.0);
    auto eval = [&](const std::vector<double>& w) {
        ++best.evaluated;
        return dual_ratio(seq, phi, w, grid_depth);
    };
    if (n <= 16) {
        best.exhaustive = true;
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            for (std::size_t i = 0; i < n; ++i) c[i] = (mask >> i & 1u) ? seq[i].depth() : 0.0;
            DualRatio r = eval(c);
            if (r.ratio > best.best_ratio) {
                best.best_ratio = r.ratio;
                best.support.clear();
                for (std::size_t i = 0; i < n; ++i)
                    if (mask >> i & 1u) best.support.push_back(i);
            }
        }
        return best;
    }
    best.exhaustive = false;
    std::vector<char> in(n, 0);
    for (;;) {
        double round_best = best.best_ratio;
        std::size_t pick = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (in[i]) continue;
            c[i] = seq[i].depth();
            DualRatio r = eval(c);
            c[i] = 0.0;
            if (r.ratio > round_best) {
                round_best = r.ratio;
                pick = i;
            }
        }
        if (pick == n) break;
        in[pick] = 1;
        c[pick] = seq[pick].depth();
        best.best_ratio = round_best;
        best.support.push_back(pick);
    }
    std::sort(best.support.begin(), best.support.end());
    return best;
}

ConditionReport condition_report(const PointSequence& seq, const PhiLambda& phi, ConditionKind kind) {
    ConditionReport rep;
    rep.kind = kind;
    const std::size_t n = seq.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return seq[a].depth() > seq[b].depth(); });
    double run = 0.0, sum = 0.0;
    for (std::size_t i : order) {
        ConditionEntry e;
        e.index = i;
        e.modulus = seq[i].modulus();
        e.stat = seq[i].depth() * phi.values[i];
        run = std::max(run, e.stat);
        sum += e.stat;
        e.running_sup = run;
        e.partial_sum = sum;
        rep.entries.push_back(e);
    }
    rep.sup = run;
    if (n == 0) return rep;
    std::size_t tail = std::max<std::size_t>(1, n / 4);
    std::size_t head = n - tail;
    double tail_sum = 0.0;
    std::vector<double> xs, ys;
    for (std::size_t r = 0; r < n; ++r) {
        const auto& e = rep.entries[r];
        if (r < head) {
            rep.head_max = std::max(rep.head_max, e.stat);
        } else {
            rep.tail_max = std::max(rep.tail_max, e.stat);
            tail_sum += e.stat;
            if (e.stat > 0.0) {
                xs.push_back(-std::log(seq[e.index].depth()));
                ys.push_back(std::log(e.stat));
            }
        }
    }
    rep.tail_slope = regression_slope(xs, ys);
    rep.tail_sum_fraction = sum > 0.0 ? tail_sum / sum : 0.0;
    switch (kind) {
        case ConditionKind::CN:
            rep.pass = rep.sup == 0.0 || rep.tail_max <= 1e-3 * rep.sup || rep.tail_slope < -0.1;
            break;
        case ConditionKind::CNN:
            rep.pass = rep.sup == 0.0 || rep.tail_slope <= 0.1;
            break;
        case ConditionKind::CS:
            rep.pass = rep.tail_sum_fraction < 0.05;
            break;
    }
    return rep;
}

ConditionReport condition_CN(const PointSequence& seq) {
    return condition_report(seq, seq.empty() ? PhiLambda{} : phi_lambda(seq), ConditionKind::CN);
}
ConditionReport condition_CNN(const PointSequence& seq) {
    return condition_report(seq, seq.empty() ? PhiLambda{} : phi_lambda(seq), ConditionKind::CNN);
}
ConditionReport condition_CS(const PointSequence& seq) {
    return condition_report(seq, seq.empty() ? PhiLambda{} : phi_lambda(seq), ConditionKind::CS);
}

TraceReport trace_membership(const PointSequence& seq, std::span<const double> log_abs_a, std::span<const int> levels,
                             const MajorantConfig& cfg) {
    if (log_abs_a.size() != seq.size()) throw std::invalid_argument("data length must match the sequence");
    TraceReport rep;
    std::vector<Target> targets;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        double lp = std::max(0.0, log_abs_a[i]);
        double s = seq[i].depth() * lp;
        rep.l_na = std::max(rep.l_na, s);
        rep.l_ya += s;
        targets.push_back({seq[i], lp});
    }
    rep.majorant = majorant_test(targets, levels, cfg);
    return rep;
}

}  // namespace nevan
