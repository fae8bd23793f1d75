#include "nevan/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace nevan {

double normalize_angle(double theta) {
    if (!std::isfinite(theta)) throw std::invalid_argument("angle must be finite");
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    if (t >= kTwoPi) t = 0.0;
    return t;
}

double circular_distance(double a, double b) {
    double d = std::fabs(normalize_angle(a) - normalize_angle(b));
    return std::min(d, kTwoPi - d);
}

DiskPoint::DiskPoint(double re, double im) : re_(re), im_(im) {
    if (!std::isfinite(re) || !std::isfinite(im)) throw std::invalid_argument("disk point coordinates must be finite");
    double r = std::hypot(re, im);
    if (r >= 1.0) throw std::invalid_argument("disk point must satisfy |z| < 1");
    delta_ = 1.0 - r;
}

DiskPoint DiskPoint::polar(double r, double theta) {
    if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("radius must lie in [0, 1)");
    return polar_depth(1.0 - r, theta);
}

DiskPoint DiskPoint::polar_depth(double delta, double theta) {
    if (!(delta > 0.0 && delta <= 1.0)) throw std::invalid_argument("depth 1 - |z| must lie in (0, 1]");
    double r = 1.0 - delta;
    DiskPoint p = exact(r * std::cos(theta), r * std::sin(theta), delta);
    p.theta_ = normalize_angle(theta);
    return p;
}

DiskPoint DiskPoint::exact(double re, double im, double delta) {
    if (!(delta > 0.0 && delta <= 1.0) || !std::isfinite(re) || !std::isfinite(im))
        throw std::invalid_argument("depth 1 - |z| must lie in (0, 1]");
    DiskPoint p;
    p.re_ = re;
    p.im_ = im;
    p.delta_ = delta;
    return p;
}

double DiskPoint::arg() const {
    if (!std::isnan(theta_)) return theta_;
    if (re_ == 0.0 && im_ == 0.0) return 0.0;
    return normalize_angle(std::atan2(im_, re_));
}

Arc::Arc(double s, double len) {
    if (!(len > 0.0)) throw std::invalid_argument("arc length must be positive");
    start = normalize_angle(s);
    length = std::min(len, kTwoPi);
}

bool Arc::contains(double theta) const {
    if (is_full()) return true;
    double d = normalize_angle(theta) - start;
    if (d < 0.0) d += kTwoPi;
    return d < length;
}

DyadicIndex::DyadicIndex(int n_, std::uint64_t k_) : n(n_), k(k_) {
    if (n < 0 || n > 62) throw std::invalid_argument("dyadic generation must lie in [0, 62]");
    if (k >= (std::uint64_t{1} << n)) throw std::invalid_argument("dyadic position must satisfy k < 2^n");
}

DyadicIndex DyadicIndex::parent() const {
    if (n == 0) throw std::invalid_argument("the root has no parent");
    return {n - 1, k >> 1};
}

bool DyadicIndex::is_ancestor_of(const DyadicIndex& other) const {
    if (other.n <= n) return false;
    return (other.k >> (other.n - n)) == k;
}

bool WhitneySquare::contains(const DiskPoint& z) const {
    return locate(z) == index;
}

HalfPlanePoint::HalfPlanePoint(double x_, double y_) : x(x_), y(y_) {
    if (!std::isfinite(x) || !std::isfinite(y) || !(y > 0.0))
        throw std::invalid_argument("half-plane point must have finite coordinates and y > 0");
}

namespace {

double dist2(const DiskPoint& z, const DiskPoint& w) {
    double dx = z.re() - w.re();
    double dy = z.im() - w.im();
    return dx * dx + dy * dy;
}

}  // namespace

double pseudo_hyperbolic(const DiskPoint& z, const DiskPoint& w) {
    double d = dist2(z, w);
    if (d == 0.0) return 0.0;
    double a = z.one_minus_mod2() * w.one_minus_mod2();
    return std::sqrt(d / (d + a));
}

double log_pseudo_hyperbolic(const DiskPoint& z, const DiskPoint& w) {
    double d = dist2(z, w);
    if (d == 0.0) return -std::numeric_limits<double>::infinity();
    double a = z.one_minus_mod2() * w.one_minus_mod2();
    double q = a / d;
    if (std::isfinite(q)) return -0.5 * std::log1p(q);
    return 0.5 * (std::log(d) - std::log(a));
}

bool stolz_contains(const BoundaryPoint& zeta, double alpha, const DiskPoint& z) {
    double dist = std::hypot(std::cos(zeta.theta) - z.re(), std::sin(zeta.theta) - z.im());
    return dist <= alpha * z.one_minus_mod2();
}

std::optional<Arc> shadow(const DiskPoint& z, double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("aperture must be positive");
    double delta = z.depth();
    double r = 1.0 - delta;
    if (r == 0.0) {
        if (alpha >= 1.0) return Arc::full();
        return std::nullopt;
    }
    // sin²(Δ/2) = (α²(1-|z|²)² - (1-|z|)²) / (4|z|)
    double s2 = delta * delta * (alpha * alpha * (2.0 - delta) * (2.0 - delta) - 1.0) / (4.0 * r);
    if (!(s2 > 0.0)) return std::nullopt;
    if (s2 >= 1.0) return Arc::full();
    double half = 2.0 * std::asin(std::sqrt(s2));
    if (half >= kPi) return Arc::full();
    return Arc(z.arg() - half, 2.0 * half);
}

Arc dyadic_arc(const DyadicIndex& idx) {
    double len = std::ldexp(kTwoPi, -idx.n);
    return Arc(std::ldexp(kTwoPi * static_cast<double>(idx.k), -idx.n), len);
}

WhitneySquare whitney_square(const DyadicIndex& idx) {
    WhitneySquare q;
    q.index = idx;
    q.r_min = 1.0 - std::ldexp(1.0, -idx.n);
    q.r_max = 1.0 - std::ldexp(1.0, -idx.n - 1);
    q.arc = dyadic_arc(idx);
    q.center = DiskPoint::polar_depth(std::ldexp(1.0, -idx.n), q.arc.start);
    return q;
}

int generation(const DiskPoint& z) {
    // 1 - |z| in (2^{-n-1}, 2^{-n}]
    int e = 0;
    double f = std::frexp(z.depth(), &e);
    int n = (f == 0.5) ? 1 - e : -e;
    return std::clamp(n, 0, 62);
}

DyadicIndex locate(const DiskPoint& z) {
    int n = generation(z);
    double cells = std::ldexp(1.0, n);
    double x = z.arg() / kTwoPi * cells;
    double k = std::floor(x + 1e-6);
    if (k >= cells) k = 0.0;
    if (k < 0.0) k = 0.0;
    return {n, static_cast<std::uint64_t>(k)};
}

DiskPoint cayley_to_disk(const HalfPlanePoint& p) {
    std::complex<double> w(p.x, p.y);
    std::complex<double> i(0.0, 1.0);
    std::complex<double> z = (i - w) / (i + w);
    double den = p.x * p.x + (1.0 + p.y) * (1.0 + p.y);
    double one_minus_mod2 = 4.0 * p.y / den;
    double mod = std::sqrt((p.x * p.x + (1.0 - p.y) * (1.0 - p.y)) / den);
    double delta = one_minus_mod2 / (1.0 + mod);
    if (!(delta > 0.0)) throw std::invalid_argument("Cayley image lies on the unit circle");
    return DiskPoint::exact(z.real(), z.imag(), std::min(delta, 1.0));
}

HalfPlanePoint cayley_to_halfplane(const DiskPoint& z) {
    double den = (1.0 + z.re()) * (1.0 + z.re()) + z.im() * z.im();
    double y = z.one_minus_mod2() / den;
    double x = 2.0 * z.im() / den;
    if (!std::isfinite(x) || !std::isfinite(y) || !(y > 0.0))
        throw std::invalid_argument("Cayley image lies on the real axis");
    return {x, y};
}

}  // namespace nevan
