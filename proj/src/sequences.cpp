#include "nevan/sequences.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "nevan/harmonic.hpp"

namespace nevan {

bool GeneratedConfig::has_tag(const std::string& t) const {
    return std::find(tags.begin(), tags.end(), t) != tags.end();
}

std::optional<double> GeneratedConfig::stat(const std::string& name) const {
    for (const auto& [k, v] : stats)
        if (k == name) return v;
    return std::nullopt;
}

namespace {

std::string num(double x) { return fmt::format("{}", x); }

}  // namespace

GeneratedConfig radial_dyadic(int N) {
    if (N < 1 || N > 1000) throw std::invalid_argument("radial_dyadic needs 1 <= N <= 1000");
    GeneratedConfig g;
    g.generator = "radial";
    g.params = {{"N", std::to_string(N)}};
    g.tags = {"SEPARATED", "CARLESON"};
    for (int n = 1; n <= N; ++n) g.sequence.add(DiskPoint::polar_depth(std::ldexp(1.0, -n), 0.0));
    return g;
}

GapRule constant_gap(double rho) {
    if (!(rho > 0.0 && rho < 1.0)) throw std::invalid_argument("constant gap must lie in (0, 1)");
    double l = std::log(rho);
    return [l](double) { return l; };
}

GapRule exponential_gap() {
    return [](double delta) { return -1.0 / delta; };
}

GeneratedConfig stolz_pairs(double vertex, int N, const GapRule& gap, const std::string& gap_name) {
    if (N < 1 || N > 1000) throw std::invalid_argument("stolz_pairs needs 1 <= N <= 1000");
    GeneratedConfig g;
    g.generator = "stolz";
    g.params = {{"N", std::to_string(N)}, {"vertex", num(vertex)}, {"gap", gap_name}};
    std::vector<std::size_t> anchors;
    for (int n = 1; n <= N; ++n) anchors.push_back(g.sequence.add(DiskPoint::polar_depth(std::ldexp(1.0, -n), vertex)));
    for (int n = 1; n <= N; ++n) {
        double delta = std::ldexp(1.0, -n);
        g.sequence.add_satellite(anchors[static_cast<std::size_t>(n - 1)], gap(delta), vertex);
    }
    if (gap_name == "exp") {
        g.tags = {"CNN_HOLDS", "CN_FAILS", "SINGULAR_MAJORANT"};
    } else {
        g.tags = {"SEPARATED"};
    }
    return g;
}

GeneratedConfig superseparated(std::size_t K) {
    if (K < 1) throw std::invalid_argument("superseparated needs K >= 1");
    GeneratedConfig g;
    g.generator = "superseparated";
    g.params = {{"K", std::to_string(K)}};
    g.tags = {"SUPERSEPARATED", "UNBOUNDED_BALAYAGE"};
    for (std::size_t k = 1; k <= K; ++k) {
        double kk = static_cast<double>(k);
        g.halfplane.push_back({1.0, 1.0 / std::sqrt(kk), -kk});
    }
    g.stats = {{"partial_sum", superseparated_partial_sum(K)}};
    return g;
}

double superseparated_partial_sum(std::size_t K) {
    // y·P_λ(0) = y² / (π(x² + y²)) = 1 / (π(k + 1)) for x = e^{-k}, y = k^{-1/2} e^{-k}.
    double s = 0.0;
    for (std::size_t k = 1; k <= K; ++k) {
        double kk = static_cast<double>(k);
        double xs = 1.0, ys = 1.0 / std::sqrt(kk);
        s += ys * ys / (kPi * (xs * xs + ys * ys));
    }
    return s;
}

double g_inverse(double t, double eps) {
    if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("g inverse needs t in (0, 1)");
    return t * std::pow(std::log(1.0 / t), 1.0 + eps);
}

GeneratedConfig g_separated(int generations, double eps) {
    if (generations < 1 || generations > 20) throw std::invalid_argument("g_separated needs 1 <= generations <= 20");
    GeneratedConfig g;
    g.generator = "gsep";
    g.params = {{"J", std::to_string(generations)}, {"eps", num(eps)}};
    g.tags = eps > 0.0 ? std::vector<std::string>{"G_SEPARATED", "BOUNDED_BALAYAGE"}
                       : std::vector<std::string>{"INVALID"};
    struct Accepted {
        double theta;
        double need;
    };
    std::vector<Accepted> acc;
    for (int j = 1; j <= generations; ++j) {
        double delta = std::ldexp(1.0, -j);
        double need = g_inverse(delta, eps);
        std::uint64_t count = std::uint64_t{1} << j;
        for (std::uint64_t i = 0; i < count; ++i) {
            double theta = kTwoPi * (static_cast<double>(i) + 0.5) / static_cast<double>(count);
            bool ok = true;
            for (const auto& a : acc) {
                double chord = 2.0 * std::sin(0.5 * circular_distance(theta, a.theta));
                if (chord < std::max(need, a.need)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            acc.push_back({theta, need});
            g.sequence.add(DiskPoint::polar_depth(delta, theta));
        }
    }
    return g;
}

GeneratedConfig measure_circles(const std::vector<double>& alphas, int extra_bits) {
    if (alphas.empty() || alphas.size() > 24) throw std::invalid_argument("measure_circles needs 1..24 circles");
    if (extra_bits < 0 || static_cast<int>(alphas.size()) + extra_bits > 26)
        throw std::invalid_argument("measure_circles resolution too large");
    GeneratedConfig g;
    g.generator = "circles";
    g.params = {{"N", std::to_string(alphas.size())}, {"extra_bits", std::to_string(extra_bits)}};
    DiskMeasure mu;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (!(alphas[i] >= 0.0)) throw std::invalid_argument("circle weights must be nonnegative");
        if (alphas[i] == 0.0) continue;
        int n = static_cast<int>(i) + 1;
        std::uint64_t count = std::uint64_t{1} << (n + extra_bits);
        double delta = std::ldexp(1.0, -n);
        double mass = alphas[i] / static_cast<double>(count);
        for (std::uint64_t k = 0; k < count; ++k)
            mu.add(DiskPoint::polar_depth(delta, kTwoPi * static_cast<double>(k) / static_cast<double>(count)), mass);
    }
    g.measure = std::move(mu);
    return g;
}

GeneratedConfig measure_circles_geometric(int N, int extra_bits) {
    std::vector<double> a;
    for (int n = 1; n <= N; ++n) a.push_back(std::ldexp(1.0, -n));
    auto g = measure_circles(a, extra_bits);
    g.params.insert(g.params.begin(), {"alpha", "geom"});
    g.tags = {"BOUNDED_BALAYAGE", "SUFCOND_HOLDS"};
    return g;
}

GeneratedConfig measure_circles_power(double s, int N, int extra_bits) {
    if (!(s > 0.0)) throw std::invalid_argument("power exponent must be positive");
    std::vector<double> a;
    for (int n = 1; n <= N; ++n) a.push_back(std::pow(static_cast<double>(n), -s));
    auto g = measure_circles(a, extra_bits);
    g.params.insert(g.params.begin(), {"alpha", "pow:" + num(s)});
    // Σ α_n < ∞ gives bounded balayage; Σ_n Σ_{k≥n} α_k = Σ n α_n needs s > 2.
    if (s > 1.0) g.tags.push_back("BOUNDED_BALAYAGE");
    g.tags.push_back(s > 2.0 ? "SUFCOND_HOLDS" : "SUFCOND_FAILS");
    return g;
}

GeneratedConfig measure_ray(const std::function<double(double)>& m, const std::string& m_name, int cells, double R) {
    if (cells < 1 || cells > 1024) throw std::invalid_argument("ray cells must lie in [1, 1024]");
    if (!(R > 0.0 && R < 1.0)) throw std::invalid_argument("ray truncation R must lie in (0, 1)");
    GeneratedConfig g;
    g.generator = "ray";
    g.params = {{"m", m_name}, {"cells", std::to_string(cells)}, {"R", num(R)}};
    if (m_name == "one") g.tags = {"CARLESON", "UNBOUNDED_BALAYAGE"};
    if (m_name == "linear") g.tags = {"CARLESON", "BOUNDED_BALAYAGE"};
    static constexpr std::array<double, 5> gx = {-0.9061798459386640, -0.5384693101056831, 0.0, 0.5384693101056831,
                                                 0.9061798459386640};
    static constexpr std::array<double, 5> gw = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                                                 0.4786286704993665, 0.2369268850561891};
    DiskMeasure mu;
    for (int j = 0; j < 1100; ++j) {
        double a = 1.0 - std::ldexp(1.0, -j);
        if (a >= R) break;
        double b = 1.0 - std::ldexp(1.0, -j - 1);
        double h = (b - a) / cells;
        for (int c = 0; c < cells; ++c) {
            double lo = a + c * h;
            if (lo >= R) break;
            double hi = std::min(lo + h, R);
            double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
            double mass = 0.0;
            for (std::size_t q = 0; q < gx.size(); ++q) mass += gw[q] * m(mid + half * gx[q]);
            mass *= half;
            if (!(mass >= 0.0)) throw std::invalid_argument("ray density must be nonnegative");
            // 1 - mid computed from the cell edges keeps relative accuracy.
            double depth = 0.5 * ((1.0 - lo) + (1.0 - hi));
            if (mass > 0.0) mu.add(DiskPoint::exact(mid, 0.0, depth), mass);
        }
    }
    g.measure = std::move(mu);
    return g;
}

GeneratedConfig orlicz_example(double p, int N, double c) {
    if (!(p > 1.0)) throw std::invalid_argument("orlicz_example needs p > 1");
    if (N < 1 || N > 5000) throw std::invalid_argument("orlicz_example needs 1 <= N <= 5000");
    if (!(c > 0.0 && c <= 0.5)) throw std::invalid_argument("orlicz_example needs 0 < c <= 0.5");
    GeneratedConfig g;
    g.generator = "orlicz";
    g.params = {{"p", num(p)}, {"N", std::to_string(N)}, {"c", num(c)}};
    g.tags = {"NOT_CARLESON", "ORLICZ_MAJORIZED"};

    double cursor = 0.0;
    std::vector<DensityPiece> pieces;
    std::vector<std::size_t> anchors;
    double weighted = 0.0, step_integral = 0.0;
    for (int n = 1; n <= N; ++n) {
        double nn = static_cast<double>(n);
        double delta = c * std::pow(nn, -3.0);
        // shadow length depends only on the depth
        auto probe = shadow(DiskPoint::polar_depth(delta, 0.0), 1.0);
        if (!probe || probe->is_full()) throw std::logic_error("orlicz_example: degenerate shadow");
        double len = probe->length;
        double theta = cursor + 0.5 * len;
        if (cursor + len > kTwoPi) throw std::invalid_argument("orlicz_example: shadows do not fit on the circle");
        anchors.push_back(g.sequence.add(DiskPoint::polar_depth(delta, theta)));
        double gamma = nn;
        double height = std::pow(gamma, 1.0 / p);
        auto arc = shadow(g.sequence[anchors.back()], 1.0);
        pieces.push_back({*arc, height});
        weighted += delta * gamma;
        step_integral += arc->sigma() * std::pow(height, p);
        cursor += len;
    }
    for (int n = 1; n <= N; ++n) {
        double height = std::pow(static_cast<double>(n), 1.0 / p);
        std::size_t a = anchors[static_cast<std::size_t>(n - 1)];
        g.sequence.add_satellite(a, -height, g.sequence[a].arg());
    }
    BoundaryDensity w = BoundaryDensity::from_overlapping(pieces);
    // Smallest c with φ_Λ ≤ c P[w] on Λ.
    PhiLambda phi = phi_lambda(g.sequence);
    double cmax = 0.0;
    for (std::size_t i = 0; i < g.sequence.size(); ++i) {
        double pw = poisson_integral(w, g.sequence[i]);
        if (pw > 0.0) cmax = std::max(cmax, phi.values[i] / pw);
    }
    g.weight = std::move(w);
    g.stats = {{"weighted_sum", weighted}, {"orlicz_integral", step_integral}, {"majorization_constant", cmax}};
    return g;
}

GeneratedConfig kernel_chain(int N) {
    if (N < 1 || N > 60) throw std::invalid_argument("kernel_chain needs 1 <= N <= 60");
    GeneratedConfig g;
    g.generator = "chain";
    g.params = {{"N", std::to_string(N)}};
    g.tags = {"DISC_NSC_FAILS"};
    std::vector<double> v;
    for (int n = 1; n <= N; ++n) {
        DiskPoint z = whitney_square({n, 1}).center;
        g.sequence.add(z);
        v.push_back(poisson_kernel(z, 0.0));
    }
    g.sequence.set_values(std::move(v));
    return g;
}

GeneratedConfig family_config(double alpha, double beta, EpsRule rule, std::size_t K) {
    auto f = counterexample_family(alpha, beta, rule, K);
    GeneratedConfig g;
    g.generator = "family";
    g.params = {{"alpha", num(alpha)}, {"beta", num(beta)}, {"eps", to_string(rule)}, {"K", std::to_string(K)}};
    g.tags = f.intended;
    for (std::size_t k = 0; k < f.size(); ++k) g.halfplane.push_back({f.x[k], f.y[k], 0.0});
    g.halfplane_values = f.phi;
    return g;
}

}  // namespace nevan
