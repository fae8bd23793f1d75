#include "nevan/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace nevan {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

bool too_close(const DiskPoint& a, const DiskPoint& b) {
    constexpr double box = 4.0 * PointSequence::kDuplicateRho;
    if (std::fabs(a.re() - b.re()) > box || std::fabs(a.im() - b.im()) > box) return false;
    return pseudo_hyperbolic(a, b) < PointSequence::kDuplicateRho;
}

// log |1 - q e^{iφ}| for 0 ≤ q ≤ 1, without cancellation near q = 1, φ = 0.
double log_abs_one_minus(double log_q, double phi) {
    double one_minus_q = -std::expm1(log_q);
    double q = std::exp(log_q);
    double s = std::sin(0.5 * phi);
    return 0.5 * std::log(one_minus_q * one_minus_q + 4.0 * q * s * s);
}

}  // namespace

PointSequence::PointSequence(const std::vector<DiskPoint>& points) {
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return points[a].re() < points[b].re(); });
    constexpr double box = 4.0 * kDuplicateRho;
    for (std::size_t a = 0; a < order.size(); ++a) {
        for (std::size_t b = a + 1; b < order.size(); ++b) {
            const auto& p = points[order[a]];
            const auto& q = points[order[b]];
            if (q.re() - p.re() > box) break;
            if (too_close(p, q)) throw std::invalid_argument("duplicate points (pseudo-hyperbolic distance below 1e-12)");
        }
    }
    points_ = points;
    links_.assign(points.size(), std::nullopt);
}

std::size_t PointSequence::add(const DiskPoint& z) {
    for (std::size_t i = 0; i < points_.size(); ++i)
        if (!links_[i] && too_close(points_[i], z))
            throw std::invalid_argument("duplicate points (pseudo-hyperbolic distance below 1e-12)");
    points_.push_back(z);
    links_.push_back(std::nullopt);
    if (values_) values_->push_back(0.0);
    return points_.size() - 1;
}

std::size_t PointSequence::add_satellite(std::size_t anchor, double log_rho, double angle) {
    if (anchor >= points_.size()) throw std::invalid_argument("satellite anchor index out of range");
    if (links_[anchor]) throw std::invalid_argument("a satellite cannot anchor another satellite");
    if (!std::isfinite(log_rho) || !(log_rho < 0.0)) throw std::invalid_argument("satellite log rho must be finite and negative");
    if (!std::isfinite(angle)) throw std::invalid_argument("satellite angle must be finite");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!links_[i] || links_[i]->anchor != anchor) continue;
        double hi = std::max(log_rho, links_[i]->log_rho);
        double lo = std::min(log_rho, links_[i]->log_rho);
        // relative separation |u1 - u2| / max|u|
        if (log_abs_one_minus(lo - hi, angle - links_[i]->angle) < std::log(kDuplicateRho))
            throw std::invalid_argument("duplicate satellite points");
    }
    const DiskPoint& lam = points_[anchor];
    std::complex<double> l = lam.value();
    double rho = std::exp(log_rho);
    std::complex<double> u = std::polar(rho, angle);
    std::complex<double> den = 1.0 + std::conj(l) * u;
    std::complex<double> w = (l + u) / den;
    double one_minus_mod2 = lam.one_minus_mod2() * (-std::expm1(2.0 * log_rho)) / std::norm(den);
    double delta = one_minus_mod2 / (1.0 + std::abs(w));
    DiskPoint sat = DiskPoint::exact(w.real(), w.imag(), std::min(delta, 1.0));
    if (log_rho > std::log(1e-6)) {
        for (std::size_t i = 0; i < points_.size(); ++i)
            if (i != anchor && too_close(points_[i], sat)) throw std::invalid_argument("satellite duplicates an existing point");
    }
    points_.push_back(sat);
    links_.push_back(SatelliteLink{anchor, log_rho, angle});
    if (values_) values_->push_back(0.0);
    return points_.size() - 1;
}

bool PointSequence::has_satellites() const {
    return std::any_of(links_.begin(), links_.end(), [](const auto& l) { return l.has_value(); });
}

double PointSequence::log_rho(std::size_t i, std::size_t j) const {
    if (i == j) return kNegInf;
    const auto& li = links_[i];
    const auto& lj = links_[j];
    if (li && li->anchor == j) return li->log_rho;
    if (lj && lj->anchor == i) return lj->log_rho;
    if (li && lj && li->anchor == lj->anchor) {
        // Möbius invariance: ρ(φ(u1), φ(u2)) = |u1 - u2| / |1 - conj(u1) u2|
        double a = li->log_rho, b = lj->log_rho;
        double pa = li->angle, pb = lj->angle;
        if (b > a) {
            std::swap(a, b);
            std::swap(pa, pb);
        }
        double num = a + log_abs_one_minus(b - a, pb - pa);
        double den = 0.0;
        if (a + b > -40.0) den = std::log(std::abs(1.0 - std::polar(std::exp(a + b), pb - pa)));
        return num - den;
    }
    return log_pseudo_hyperbolic(points_[i], points_[j]);
}

const std::vector<double>& PointSequence::values() const {
    if (!values_) throw std::invalid_argument("sequence has no value channel");
    return *values_;
}

void PointSequence::set_values(std::vector<double> v) {
    if (v.size() != points_.size()) throw std::invalid_argument("value channel length must match the number of points");
    values_ = std::move(v);
}

bool PhiLambda::any_overflow() const {
    return std::any_of(overflow.begin(), overflow.end(), [](bool b) { return b; });
}

double log_blaschke_at(const PointSequence& seq, const DiskPoint& z, std::span<const std::size_t> exclude) {
    std::vector<char> skip(seq.size(), 0);
    for (auto e : exclude) {
        if (e >= seq.size()) throw std::invalid_argument("exclude index out of range");
        skip[e] = 1;
    }
    double s = 0.0;
    for (std::size_t j = 0; j < seq.size(); ++j) {
        if (skip[j]) continue;
        double l = log_pseudo_hyperbolic(seq[j], z);
        if (l == kNegInf) return kNegInf;
        s += l;
    }
    return s;
}

PhiLambda phi_lambda(const PointSequence& seq) {
    if (seq.empty()) throw std::invalid_argument("phi_lambda needs at least one point");
    PhiLambda out;
    out.values.resize(seq.size());
    out.overflow.resize(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < seq.size(); ++j)
            if (j != i) s += seq.log_rho(i, j);
        double phi = (s == 0.0) ? 0.0 : -s;
        out.values[i] = phi;
        out.overflow[i] = phi > PhiLambda::kOverflow;
    }
    return out;
}

std::optional<double> log_separation_constant(const PointSequence& seq) {
    if (seq.size() < 2) return std::nullopt;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j) best = std::min(best, seq.log_rho(i, j));
    return best;
}

std::optional<double> separation_constant(const PointSequence& seq) {
    auto l = log_separation_constant(seq);
    if (!l) return std::nullopt;
    return std::exp(*l);
}

double blaschke_sum(const PointSequence& seq) {
    double s = 0.0;
    for (const auto& p : seq.points()) s += p.depth();
    return s;
}

double separated_tail_log(const PointSequence& seq, const DiskPoint& z, double delta) {
    if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("separation threshold must lie in (0, 1)");
    double log_delta = std::log(delta);
    double s = 0.0;
    for (const auto& p : seq.points()) {
        double l = log_pseudo_hyperbolic(p, z);
        if (l >= log_delta) s -= l;
    }
    return s == 0.0 ? 0.0 : s;
}

BoundaryDensity propsep_weight(const PointSequence& seq, double c0, double alpha) {
    if (!(c0 > 0.0)) throw std::invalid_argument("c0 must be positive");
    std::vector<DensityPiece> pieces;
    for (const auto& p : seq.points())
        if (auto a = shadow(p, alpha)) pieces.push_back({*a, c0});
    return BoundaryDensity::from_overlapping(pieces);
}

DiskMeasure sequence_measure(const PointSequence& seq) {
    DiskMeasure mu;
    for (const auto& p : seq.points()) mu.add(p, p.depth());
    return mu;
}

}  // namespace nevan
