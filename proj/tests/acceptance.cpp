// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. Tolerances are fixed here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "nevan/dyadic_tree.hpp"
#include "nevan/harmonic.hpp"
#include "nevan/majorant.hpp"
#include "nevan/maximal.hpp"
#include "nevan/sequences.hpp"
#include "nevan/simplex.hpp"
#include "nevan/trend.hpp"
#include "oracles.hpp"

using namespace nevan;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

oracle::Matrix kernel_matrix(const MajorantProblem& p) {
    oracle::Matrix K;
    for (const auto& t : p.targets) {
        std::vector<double> row;
        for (std::size_t j = 0; j < p.nodes(); ++j) row.push_back(oracle::poisson(t.z.re(), t.z.im(), kTwoPi * j / p.nodes()));
        K.push_back(row);
    }
    return K;
}

MajorantProblem random_problem(std::mt19937_64& rng, int max_targets, int min_m, int max_m) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<int> nt(1, max_targets), mm(min_m, max_m);
    MajorantProblem p;
    p.m = mm(rng);
    int n = nt(rng);
    for (int i = 0; i < n; ++i)
        p.targets.push_back({DiskPoint::polar_depth(0.02 + 0.9 * u(rng), kTwoPi * u(rng)), 3.0 * u(rng)});
    return p;
}

Outcome a1_lp_duality() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(1001);
    double worst_gap = 0.0, worst_violation = 0.0;
    int failures = 0;
    for (int i = 0; i < 100; ++i) {
        auto p = random_problem(rng, 10, 2, 6);
        auto pc = solve_primal(p);
        auto dc = solve_dual(p);
        double gap = std::fabs(pc.mass - dc.objective) / (1.0 + pc.mass);
        worst_gap = std::max(worst_gap, gap);
        if (!(gap <= 1e-6) || !pc.feasible || !dc.feasible) ++failures;
        std::vector<BoundaryAtom> atoms;
        for (std::size_t j = 0; j < pc.alpha.size(); ++j)
            if (pc.alpha[j] > 0.0) atoms.push_back({p.node_angle(j), pc.alpha[j]});
        BoundaryDensity nu({}, atoms);
        for (const auto& t : p.targets) {
            double v = (t.value - poisson_integral(nu, t.z)) / (1.0 + t.value);
            worst_violation = std::max(worst_violation, v);
            if (v > 1e-7) ++failures;
        }
    }
    double secs = seconds_since(t0);
    return {failures == 0 && secs < 10.0,
            fmt::format("100 instances, max |M-D|/(1+M) = {:.3g}, max re-verified violation = {:.3g}, {:.2f} s", worst_gap,
                        worst_violation, secs)};
}

Outcome a2_lp_oracle() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(1002);
    double worst = 0.0;
    int failures = 0;
    for (int i = 0; i < 20; ++i) {
        auto p = random_problem(rng, 3, 1, 4);
        std::vector<double> v;
        for (const auto& t : p.targets) v.push_back(t.value);
        auto best = oracle::min_mass(kernel_matrix(p), v);
        double M = solve_primal(p).mass;
        double err = best ? std::fabs(M - *best) : INFINITY;
        worst = std::max(worst, err);
        if (!(err <= 1e-8)) ++failures;
    }
    double secs = seconds_since(t0);
    return {failures == 0 && secs < 5.0, fmt::format("20 instances, max |simplex - enumeration| = {:.3g}, {:.2f} s", worst, secs)};
}

Outcome a3_mean_value_balayage() {
    const double expected = 1.0 - std::ldexp(1.0, -12);
    auto worst_at = [&](int bits) {
        auto g = measure_circles_geometric(12, bits);
        double worst = 0.0;
        for (int j = 0; j < 256; ++j) worst = std::max(worst, std::fabs(balayage(*g.measure, kTwoPi * j / 256.0) - expected));
        return worst;
    };
    double used = worst_at(4);
    double coarser = worst_at(3);
    return {used <= 1e-4, fmt::format("2^(n+4) atoms per circle: max error {:.3g} (2^(n+3) atoms: {:.3g})", used, coarser)};
}

Outcome a4_strict_inclusion() {
    std::vector<double> sups, sums, Ns{10.0, 14.0, 18.0};
    for (double N : Ns) {
        auto g = measure_circles_power(1.5, static_cast<int>(N));
        sups.push_back(balayage_sup(*g.measure, 4).value);
        sums.push_back(sufcond_check(*g.measure, nullptr, static_cast<int>(N)).discrete_sum);
    }
    Trend flat = classify_trend(Ns, sups, {0.05, 0.05});
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < Ns.size(); ++i) {
        lx.push_back(std::log(Ns[i]));
        ly.push_back(std::log(sums[i]));
    }
    double slope = regression_slope(lx, ly);
    bool part1 = flat == Trend::Bounded && slope > 0.0;

    double K = 0.0;
    auto ray = measure_ray([](double) { return 1.0; }, "one", 8, 0.999);
    for (int n = 1; n <= 9; ++n) {
        double r = std::ldexp(1.0, -n);
        K = std::max(K, window_sup(*ray.measure, r).mass / r);
    }
    bool carleson = K >= 0.9 && K <= 1.1;
    double worst_ratio = 1.0;
    std::string ratios;
    for (double R : {0.9, 0.99, 0.999}) {
        auto m = measure_ray([](double) { return 1.0; }, "one", 8, R);
        double ratio = balayage(*m.measure, 0.0) / (2.0 * std::log(1.0 / (1.0 - R)));
        ratios += fmt::format(" {:.3f}", ratio);
        worst_ratio = std::max({worst_ratio, ratio, 1.0 / ratio});
    }
    bool part2 = carleson && worst_ratio <= 1.5;
    return {part1 && part2,
            fmt::format("balayage sups {:.4f} {:.4f} {:.4f} ({}), sufcond sums {:.3f} {:.3f} {:.3f} slope {:.3f}; ray K = {:.3f}, "
                        "balayage/2log(1/(1-R)) ={}",
                        sups[0], sups[1], sups[2], to_string(flat), sums[0], sums[1], sums[2], slope, K, ratios)};
}

Outcome a5_kernel_chain() {
    auto g = kernel_chain(20);
    const auto& v = g.sequence.values();
    double lo = INFINITY, hi = 0.0;
    for (int n = 2; n <= 20; ++n) {
        double w = v[static_cast<std::size_t>(n - 1)] * std::ldexp(1.0, -n);
        lo = std::min(lo, w);
        hi = std::max(hi, w);
    }
    std::vector<int> depths;
    for (int m = 1; m <= 20; ++m) depths.push_back(m);
    auto rep = borichev_verdict(g.sequence, v, depths);
    std::vector<double> xs, ys;
    for (const auto& lv : rep.levels) {
        xs.push_back(lv.m);
        ys.push_back(lv.S);
    }
    double b = regression_slope(xs, ys);
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i] / xs.size();
        my += ys[i] / ys.size();
    }
    double a = my - b * mx, worst = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) worst = std::max(worst, std::fabs(ys[i] - (a + b * xs[i])) / (a + b * xs[i]));
    bool chain = rep.witness.witness.size() == 20;
    for (const auto& idx : rep.witness.witness) chain = chain && idx.k == 1;
    return {hi / lo <= 8.0 && b > 0.0 && worst <= 0.2 && chain,
            fmt::format("P(1)2^-n in [{:.4f}, {:.4f}] (ratio {:.3f}); S slope {:.4f}/level, max deviation from linear fit {:.1f}%, "
                        "witness = {} nodes{}",
                        lo, hi, hi / lo, b, 100.0 * worst, rep.witness.witness.size(), chain ? ", all of the form (n,1)" : "")};
}

double brute_force_antichain(const DyadicWeights& w) {
    std::vector<std::pair<DyadicIndex, double>> nodes(w.weights.begin(), w.weights.end());
    const std::size_t n = nodes.size();
    double best = 0.0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        double s = 0.0;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (!(mask >> i & 1u)) continue;
            s += nodes[i].second * std::ldexp(1.0, -nodes[i].first.n);
            for (std::size_t j = i + 1; j < n; ++j)
                if ((mask >> j & 1u) &&
                    (nodes[i].first.is_ancestor_of(nodes[j].first) || nodes[j].first.is_ancestor_of(nodes[i].first)))
                    ok = false;
        }
        if (ok) best = std::max(best, s);
    }
    return best;
}

Outcome a6_antichain_oracle() {
    auto t0 = Clock::now();
    int failures = 0, cases = 0;
    std::vector<DyadicIndex> tree;
    for (int n = 0; n <= 2; ++n)
        for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) tree.push_back({n, k});
    for (int code = 0; code < 2187; ++code) {
        DyadicWeights w;
        int c = code;
        for (const auto& idx : tree) {
            if (c % 3) w.set(idx, c % 3);
            c /= 3;
        }
        ++cases;
        if (std::fabs(antichain_supremum(w).value - brute_force_antichain(w)) > 1e-12) ++failures;
    }
    std::mt19937_64 rng(1006);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        DyadicWeights w;
        int occupied = 1 + static_cast<int>(u(rng) * 14);
        for (int i = 0; i < occupied; ++i) {
            int n = static_cast<int>(u(rng) * 7);
            std::uint64_t k = static_cast<std::uint64_t>(u(rng) * std::ldexp(1.0, n));
            w.set({n, k}, u(rng) * 10.0);
        }
        ++cases;
        double ref = brute_force_antichain(w);
        if (std::fabs(antichain_supremum(w).value - ref) > 1e-12 * (1.0 + ref)) ++failures;
    }
    double secs = seconds_since(t0);
    return {failures == 0 && secs < 5.0, fmt::format("{} instances, {} disagreements, {:.2f} s", cases, failures, secs)};
}

std::vector<double> log_levels(double lo, double hi, int n) {
    std::vector<double> t;
    for (int i = 0; i < n; ++i) t.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
    return t;
}

// Least squares for log m = a + b log t + c log log t.
std::pair<double, double> three_parameter_fit(const std::vector<double>& t, const std::vector<double>& m) {
    double S[3][3] = {}, r[3] = {};
    for (std::size_t i = 0; i < t.size(); ++i) {
        double f[3] = {1.0, std::log(t[i]), std::log(std::log(t[i]))};
        double y = std::log(m[i]);
        for (int a = 0; a < 3; ++a) {
            r[a] += f[a] * y;
            for (int b = 0; b < 3; ++b) S[a][b] += f[a] * f[b];
        }
    }
    oracle::Matrix M(3, std::vector<double>(3));
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) M[a][b] = S[a][b];
    auto sol = oracle::solve_dense(M, {r[0], r[1], r[2]});
    if (!sol) return {NAN, NAN};
    return {(*sol)[1], (*sol)[2]};
}

Outcome a7_families() {
    auto t0 = Clock::now();
    const std::size_t K = 10000;
    auto levels = log_levels(10.0, 1000.0, 41);

    auto one = counterexample_family(1.0, 4.0, EpsRule::One, K);
    auto env1 = family_envelope(one);
    std::vector<double> m1;
    double band_lo = INFINITY, band_hi = 0.0, cross_worst = 1.0;
    for (double t : levels) {
        double m = measure_above(env1, t);
        m1.push_back(m);
        double q = t * m / std::log(t);
        band_lo = std::min(band_lo, q);
        band_hi = std::max(band_hi, q);
        double a = distribution_analytic(one, t);
        cross_worst = std::max({cross_worst, a / m, m / a});
    }
    auto [slope, correction] = three_parameter_fit(levels, m1);
    double mphi_small = weak_l1(family_maximal(counterexample_family(1.0, 4.0, EpsRule::One, 1000))).sup;
    double mphi = weak_l1(family_maximal(one)).sup;
    bool mphi_bounded = std::isfinite(mphi) && mphi <= 1.1 * mphi_small;
    bool part1 = band_hi / band_lo <= 4.0 && std::fabs(slope + 1.0) <= 0.1 && correction > 0.0 && mphi_bounded;

    auto inv = counterexample_family(1.0, 4.0, EpsRule::InverseLog, K);
    auto env2 = family_envelope(inv);
    double lo2 = INFINITY, hi2 = 0.0;
    for (double t : levels) {
        double m = measure_above(env2, t);
        lo2 = std::min(lo2, t * m);
        hi2 = std::max(hi2, t * m);
        double a = distribution_analytic(inv, t);
        cross_worst = std::max({cross_worst, a / m, m / a});
    }
    double s3 = 0.0, s4 = 0.0;
    for (std::size_t k = 1; k <= K; ++k) {
        double term = inv.eps[k - 1] / static_cast<double>(k);
        if (k <= 1000) s3 += term;
        s4 += term;
    }
    double growth = s4 - s3;
    bool part2 = hi2 / lo2 <= 4.0 && growth > 0.3;
    double secs = seconds_since(t0);
    bool cross = cross_worst <= 4.0;
    return {part1 && part2 && cross && secs < 60.0,
            fmt::format("(i) {}: t|{{phi^H>t}}|/log t band {:.3f}, fitted slope {:.4f} with log-log correction {:.3f}, "
                        "M phi weak-L1 {:.4g} (K=1e3: {:.4g}); (ii) {}: t|{{phi^H>t}}| band {:.3f}, "
                        "sum eps_k/k grows by {:.4f} from K=1e3 to 1e4 (needs > 0.3); envelope vs analytic within factor {:.3f}; "
                        "{:.1f} s",
                        part1 ? "pass" : "FAIL", band_hi / band_lo, slope, correction, mphi, mphi_small,
                        part2 ? "pass" : "FAIL", hi2 / lo2, growth, cross_worst, secs)};
}

Outcome a8_stolz_conditions() {
    const int N = 14;
    auto g = stolz_pairs(0.0, N, exponential_gap(), "exp");
    auto phi = phi_lambda(g.sequence);
    double lo = INFINITY, hi = 0.0;
    for (int n = 5; n <= N; ++n)
        for (std::size_t i : {static_cast<std::size_t>(n - 1), static_cast<std::size_t>(n - 1 + N)}) {
            double s = g.sequence[i].depth() * phi.values[i];
            lo = std::min(lo, s);
            hi = std::max(hi, s);
        }
    auto cn = condition_CN(g.sequence);
    bool cn_fails = !cn.pass;

    std::vector<int> levels{6, 7, 8, 9, 10};
    auto verdict = majorant_test(g.sequence, levels);
    double worst = 1.0;
    for (const auto& lv : verdict.levels) {
        const auto& a = lv.primal.alpha;
        std::size_t n = a.size();
        double total = 0.0;
        for (double x : a) total += x;
        double near = a[0] + std::max(a[1], a[n - 1]);
        worst = std::min(worst, total > 0.0 ? near / total : 0.0);
    }
    bool pass = lo >= 0.9 && hi <= 1.5 && cn_fails && worst >= 0.99 && verdict.singular_like;
    return {pass, fmt::format("(1-|l|)phi in [{:.4f}, {:.4f}] for n >= 5, CN {} (tail max {:.3f}), min share of the two nodes at the "
                              "vertex over levels 6..10 = {:.4f}, singular flag {}",
                              lo, hi, cn.pass ? "holds" : "fails", cn.tail_max, worst, verdict.singular_like ? "on" : "off")};
}

Outcome a9_superseparated() {
    double lo = INFINITY, hi = 0.0;
    std::string parts;
    for (std::size_t K : {100u, 1000u, 10000u}) {
        double harmonic = 0.0;
        for (std::size_t k = 1; k <= K; ++k) harmonic += 1.0 / static_cast<double>(k);
        double r = superseparated_partial_sum(K) / harmonic;
        parts += fmt::format(" {:.4f}", r);
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    return {hi / lo <= 3.0, fmt::format("ratios{} (bracket ratio {:.3f})", parts, hi / lo)};
}

Outcome a10_envelope_dominates() {
    std::mt19937_64 rng(1010);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    long checked = 0, violations = 0;
    auto check = [&](double e, double m) {
        ++checked;
        if (!(e >= m)) ++violations;
    };
    std::vector<std::pair<PointSequence, std::vector<double>>> disk;
    for (const auto& g : {radial_dyadic(12), stolz_pairs(0.0, 14, exponential_gap(), "exp"), g_separated(7, 0.5),
                          orlicz_example(2.0, 20)})
        disk.push_back({g.sequence, phi_lambda(g.sequence).values});
    auto chain = kernel_chain(20);
    disk.push_back({chain.sequence, chain.sequence.values()});
    PointSequence rnd;
    std::vector<double> rv;
    for (int i = 0; i < 200; ++i) {
        rnd.add(DiskPoint::polar_depth(std::pow(10.0, -4.0 * u(rng)), kTwoPi * u(rng)));
        rv.push_back(10.0 * u(rng));
    }
    disk.push_back({rnd, rv});
    const int per_family = 10000 / 8 + 1;
    for (const auto& [seq, v] : disk) {
        auto M = nontangential_max(seq, v);
        auto E = phi_sharp(seq, v);
        for (int i = 0; i < per_family; ++i) {
            double th = kTwoPi * u(rng);
            check(evaluate_envelope(E, th), M(th));
        }
        for (double b : M.breaks()) check(evaluate_envelope(E, b), M(b));
    }
    for (EpsRule rule : {EpsRule::One, EpsRule::InverseLog}) {
        auto f = counterexample_family(1.0, 4.0, rule, 1000);
        auto M = family_maximal(f);
        auto E = family_envelope(f);
        for (int i = 0; i < per_family; ++i) {
            // half the points where the family accumulates
            double x = i % 2 ? -1.0 + 3.0 * u(rng) : std::pow(10.0, -3.0 * u(rng));
            check(evaluate_envelope(E, x), M(x));
        }
        for (double b : M.breaks()) check(evaluate_envelope(E, b), M(b));
    }
    return {violations == 0 && checked >= 10000, fmt::format("{} evaluations, {} violations", checked, violations)};
}

std::string capture(const std::string& cmd, int& status) {
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) {
        status = -1;
        return out;
    }
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    status = pclose(p);
    return out;
}

Outcome a11_determinism() {
    const std::string tool = NEVAN_TOOL;
    const std::string dir = NEVAN_DATA_DIR;
    std::vector<std::string> files{"singleton.txt", "radial10.txt",   "chain20.txt",          "stolz14.txt",
                                   "gsep6.txt",     "circles6.txt",   "family1000.txt",       "superseparated50.txt",
                                   "orlicz10.txt"};
    std::vector<std::string> runs;
    for (const auto& f : files)
        for (const char* cmd : {"analyze", "majorant", "balayage", "maximal", "borichev"})
            for (const char* fmt : {"text", "csv", "json"})
                runs.push_back(fmt::format("{} {} {}/{} --format {} 2>&1", tool, cmd, dir, f, fmt));
    for (const char* spec : {"radial:N=10", "stolz:N=8,gap=exp", "superseparated:K=20", "gsep:J=5,eps=0.5",
                             "circles:alpha=pow:1.5,N=5", "ray:m=one,cells=4,R=0.99", "orlicz:p=2,N=6", "chain:N=12",
                             "family:eps=one,K=50"})
        runs.push_back(fmt::format("{} gen {} 2>&1", tool, spec));
    int differing = 0;
    std::size_t bytes = 0;
    for (const auto& cmd : runs) {
        int s1 = 0, s2 = 0;
        std::string a = capture(cmd, s1), b = capture(cmd, s2);
        bytes += a.size();
        if (a != b || s1 != s2 || a.empty()) ++differing;
    }
    return {differing == 0, fmt::format("{} invocations run twice, {} differ, {} bytes compared", runs.size(), differing, bytes)};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"A1 LP duality", a1_lp_duality},
        {"A2 LP vs vertex enumeration", a2_lp_oracle},
        {"A3 mean-value balayage", a3_mean_value_balayage},
        {"A4 strict inclusion", a4_strict_inclusion},
        {"A5 kernel chain", a5_kernel_chain},
        {"A6 antichain oracle", a6_antichain_oracle},
        {"A7 counterexample families", a7_families},
        {"A8 Stolz conditions", a8_stolz_conditions},
        {"A9 superseparated sums", a9_superseparated},
        {"A10 envelope dominates", a10_envelope_dominates},
        {"A11 determinism", a11_determinism},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        fmt::print("{} {}: {}\n", o.pass ? "PASS" : "FAIL", name, o.detail);
        std::fflush(stdout);
    }
    fmt::print("{} of {} criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
