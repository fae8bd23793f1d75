#include "nevan/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace nevan {

double poisson_kernel(const DiskPoint& z, double theta) {
    double dx = std::cos(theta) - z.re();
    double dy = std::sin(theta) - z.im();
    return z.one_minus_mod2() / (dx * dx + dy * dy);
}

double poisson_kernel(const DiskPoint& z, const BoundaryPoint& zeta) { return poisson_kernel(z, zeta.theta); }

double half_plane_poisson(const HalfPlanePoint& p, double s) {
    double d = p.x - s;
    return p.y / (kPi * (d * d + p.y * p.y));
}

namespace {

// Angle at z subtended by the chord from e^{ia} to e^{ib}, for b - a ≤ π/2.
double subtended_angle(const DiskPoint& z, double a, double b) {
    double ax = std::cos(a) - z.re(), ay = std::sin(a) - z.im();
    double bx = std::cos(b) - z.re(), by = std::sin(b) - z.im();
    double ang = std::atan2(ax * by - ay * bx, ax * bx + ay * by);
    if (ang < -0.5 * kPi) ang += kTwoPi;
    return std::max(ang, 0.0);
}

}  // namespace

double harmonic_measure(const DiskPoint& z, const Arc& arc) {
    if (arc.is_full()) return 1.0;
    int pieces = std::max(1, static_cast<int>(std::ceil(arc.length / (0.5 * kPi))));
    double step = arc.length / pieces;
    double total = 0.0;
    for (int p = 0; p < pieces; ++p) {
        double a = arc.start + p * step;
        double b = (p + 1 == pieces) ? arc.end() : a + step;
        total += subtended_angle(z, a, b) / kPi - (b - a) / kTwoPi;
    }
    return std::clamp(total, 0.0, 1.0);
}

double conjugate_arc_integral(const DiskPoint& z, const Arc& arc) {
    if (arc.is_full()) return 0.0;
    double a = arc.start, b = arc.end();
    double da = std::hypot(std::cos(a) - z.re(), std::sin(a) - z.im());
    double db = std::hypot(std::cos(b) - z.re(), std::sin(b) - z.im());
    return -std::log(db / da) / kPi;
}

double poisson_integral(const BoundaryDensity& w, const DiskPoint& z) {
    double s = 0.0;
    for (const auto& p : w.pieces())
        if (p.value != 0.0) s += p.value * harmonic_measure(z, p.arc);
    for (const auto& a : w.atoms()) s += a.mass * poisson_kernel(z, a.theta);
    return s;
}

double balayage(const DiskMeasure& mu, double theta) {
    double s = 0.0;
    for (const auto& a : mu.atoms()) s += a.mass * poisson_kernel(a.point, theta);
    return s;
}

BalayageEvaluator::BalayageEvaluator(const DiskMeasure& mu) {
    x_.reserve(mu.size());
    y_.reserve(mu.size());
    w_.reserve(mu.size());
    for (const auto& a : mu.atoms()) {
        x_.push_back(a.point.re());
        y_.push_back(a.point.im());
        w_.push_back(a.mass * a.point.one_minus_mod2());
    }
}

double BalayageEvaluator::operator()(double theta) const {
    double c = std::cos(theta), s = std::sin(theta);
    double sum = 0.0;
    const std::size_t n = x_.size();
    for (std::size_t i = 0; i < n; ++i) {
        double dx = c - x_[i];
        double dy = s - y_[i];
        sum += w_[i] / (dx * dx + dy * dy);
    }
    return sum;
}

BalayageSup balayage_sup(const DiskMeasure& mu, int grid_depth) {
    if (grid_depth < 0 || grid_depth > 24) throw std::invalid_argument("grid depth must lie in [0, 24]");
    if (mu.empty()) return {0.0, 0.0};
    BalayageEvaluator f(mu);
    const std::size_t n = std::size_t{1} << grid_depth;
    const double h = kTwoPi / static_cast<double>(n);
    std::vector<double> grid(n);
    for (std::size_t j = 0; j < n; ++j) grid[j] = f(h * static_cast<double>(j));

    BalayageSup best{grid[0], 0.0};
    auto offer = [&](double value, double theta) {
        theta = normalize_angle(theta);
        if (value > best.value || (value == best.value && theta < best.theta)) best = {value, theta};
    };
    for (std::size_t j = 0; j < n; ++j) offer(grid[j], h * static_cast<double>(j));

    constexpr double inv_phi = 0.6180339887498949;
    for (int level = 0; level <= grid_depth; ++level) {
        std::size_t stride = std::size_t{1} << (grid_depth - level);
        std::size_t arg = 0;
        for (std::size_t j = stride; j < n; j += stride)
            if (grid[j] > grid[arg]) arg = j;
        double center = h * static_cast<double>(arg);
        double bracket = h * static_cast<double>(stride);
        double a = center - bracket, b = center + bracket;
        double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
        double fc = f(c), fd = f(d);
        offer(fc, c);
        offer(fd, d);
        for (int it = 0; it < 40; ++it) {
            if (fc >= fd) {
                b = d;
                d = c;
                fd = fc;
                c = b - inv_phi * (b - a);
                fc = f(c);
                offer(fc, c);
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + inv_phi * (b - a);
                fd = f(d);
                offer(fd, d);
            }
        }
    }
    return best;
}

double window_mass(const DiskMeasure& mu, const CarlesonWindow& q) {
    double s = 0.0;
    for (const auto& a : mu.atoms())
        if (q.contains(a.point)) s += a.mass;
    return s;
}

namespace {

struct AngularAtom {
    double arg;
    double depth;
    double mass;
};

std::vector<AngularAtom> sorted_by_angle(const DiskMeasure& mu) {
    std::vector<AngularAtom> v;
    v.reserve(mu.size());
    for (const auto& a : mu.atoms()) v.push_back({a.point.arg(), a.point.depth(), a.mass});
    std::stable_sort(v.begin(), v.end(), [](const AngularAtom& a, const AngularAtom& b) { return a.arg < b.arg; });
    return v;
}

WindowSup window_sup_sorted(const std::vector<AngularAtom>& atoms, double r) {
    constexpr double tol = 1e-12;
    std::vector<double> ang, mass;
    for (const auto& a : atoms) {
        if (a.depth <= r + tol) {
            ang.push_back(a.arg);
            mass.push_back(a.mass);
        }
    }
    const std::size_t n = ang.size();
    if (n == 0) return {0.0, 0.0};
    if (r >= kPi - tol) return {std::accumulate(mass.begin(), mass.end(), 0.0), 0.0};
    std::vector<double> prefix(2 * n + 1, 0.0);
    for (std::size_t i = 0; i < 2 * n; ++i) prefix[i + 1] = prefix[i] + mass[i % n];
    auto angle_at = [&](std::size_t j) { return j < n ? ang[j] : ang[j - n] + kTwoPi; };
    WindowSup best{-1.0, 0.0};
    std::size_t j = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (j < i) j = i;
        while (j < i + n && angle_at(j) <= ang[i] + 2.0 * r + tol) ++j;
        double m = prefix[j] - prefix[i];
        if (m > best.mass) best = {m, normalize_angle(ang[i] + r)};
    }
    return best;
}

}  // namespace

WindowSup window_sup(const DiskMeasure& mu, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("window size must be positive");
    return window_sup_sorted(sorted_by_angle(mu), r);
}

SufcondReport sufcond_check(const DiskMeasure& mu, const std::function<double(double)>& g, int depth,
                            const SufcondConfig& cfg) {
    if (depth < 0 || depth > 60) throw std::invalid_argument("sufcond depth must lie in [0, 60]");
    SufcondReport rep;
    auto atoms = sorted_by_angle(mu);
    double sum = 0.0, gsum = 0.0;
    for (int n = 0; n <= depth; ++n) {
        SufcondLevel lv;
        lv.n = n;
        lv.r = std::ldexp(1.0, -n);
        auto ws = window_sup_sorted(atoms, lv.r);
        lv.window_sup = ws.mass;
        lv.theta = ws.theta;
        lv.increment = std::ldexp(ws.mass, n);
        sum += lv.increment;
        lv.partial_sum = sum;
        if (g) {
            double gv = g(lv.r);
            lv.g_value = gv;
            gsum += std::ldexp(gv, n);
            if (ws.mass > gv * (1.0 + 1e-12)) rep.g_dominates = false;
        }
        rep.levels.push_back(lv);
    }
    rep.discrete_sum = sum;
    if (g) rep.g_discrete_sum = gsum;
    std::size_t count = rep.levels.size();
    std::size_t tail = std::max<std::size_t>(1, (count + 3) / 4);
    double tail_sum = 0.0;
    for (std::size_t i = count - tail; i < count; ++i) tail_sum += rep.levels[i].increment;
    rep.tail_fraction = sum > 0.0 ? tail_sum / sum : 0.0;

    std::vector<double> xs, ys;
    for (std::size_t i = count / 2; i < count; ++i) {
        const auto& lv = rep.levels[i];
        if (lv.n >= 1 && lv.partial_sum > 0.0) {
            xs.push_back(std::log(static_cast<double>(lv.n)));
            ys.push_back(std::log(lv.partial_sum));
        }
    }
    if (xs.size() >= 2) {
        double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
        double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
        double sxy = 0.0, sxx = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sxy += (xs[i] - mx) * (ys[i] - my);
            sxx += (xs[i] - mx) * (xs[i] - mx);
        }
        rep.log_slope = sxx > 0.0 ? sxy / sxx : 0.0;
    }
    rep.pass = rep.tail_fraction < cfg.tail_threshold && rep.g_dominates;
    return rep;
}

SuperlevelDisk superlevel_disk(double theta, double t) {
    if (!(t > 0.0) || !std::isfinite(t)) throw std::invalid_argument("superlevel must be positive and finite");
    double radius = 1.0 / (t + 1.0);
    return {DiskPoint::polar_depth(radius, theta), radius};
}

std::complex<double> scaffold_g(const BoundaryDensity& w, const DiskPoint& z) {
    std::complex<double> g(0.0, 0.0);
    for (const auto& p : w.pieces()) {
        if (p.value == 0.0) continue;
        g += p.value * std::complex<double>(harmonic_measure(z, p.arc), conjugate_arc_integral(z, p.arc));
    }
    std::complex<double> zz = z.value();
    for (const auto& a : w.atoms()) {
        std::complex<double> zeta = std::polar(1.0, a.theta);
        g += a.mass * (zeta + zz) / (zeta - zz);
    }
    return g;
}

double scaffold_H_log_modulus(const BoundaryDensity& w, const DiskPoint& z) {
    return 2.0 * std::log(std::abs(2.0 + scaffold_g(w, z)));
}

}  // namespace nevan
