#include "nevan/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace nevan {

DiskMeasure::DiskMeasure(std::vector<DiskAtom> atoms) {
    atoms_.reserve(atoms.size());
    for (const auto& a : atoms) add(a.point, a.mass);
}

void DiskMeasure::add(const DiskPoint& z, double mass) {
    if (!(mass > 0.0) || !std::isfinite(mass)) throw std::invalid_argument("atom mass must be positive and finite");
    atoms_.push_back({z, mass});
}

double DiskMeasure::total_mass() const {
    double s = 0.0;
    for (const auto& a : atoms_) s += a.mass;
    return s;
}

namespace {

struct Segment {
    double lo;
    double hi;
    double value;
};

// Splits an arc into at most two non-wrapping segments of [0, 2π).
void split_arc(const Arc& arc, double value, std::vector<Segment>& out) {
    if (arc.is_full()) {
        out.push_back({0.0, kTwoPi, value});
        return;
    }
    double e = arc.end();
    if (e <= kTwoPi) {
        out.push_back({arc.start, e, value});
    } else {
        out.push_back({arc.start, kTwoPi, value});
        out.push_back({0.0, e - kTwoPi, value});
    }
}

}  // namespace

BoundaryDensity::BoundaryDensity(std::vector<DensityPiece> pieces, std::vector<BoundaryAtom> atoms)
    : pieces_(std::move(pieces)), atoms_(std::move(atoms)) {
    std::vector<Segment> segs;
    for (const auto& p : pieces_) {
        if (!(p.value >= 0.0) || !std::isfinite(p.value)) throw std::invalid_argument("density values must be finite and nonnegative");
        split_arc(p.arc, p.value, segs);
    }
    std::sort(segs.begin(), segs.end(), [](const Segment& a, const Segment& b) { return a.lo < b.lo; });
    for (std::size_t i = 1; i < segs.size(); ++i)
        if (segs[i].lo < segs[i - 1].hi) throw std::invalid_argument("density pieces must be pairwise disjoint");
    for (auto& a : atoms_) {
        if (!(a.mass > 0.0) || !std::isfinite(a.mass)) throw std::invalid_argument("boundary atom mass must be positive");
        a.theta = normalize_angle(a.theta);
    }
}

BoundaryDensity BoundaryDensity::from_overlapping(const std::vector<DensityPiece>& pieces,
                                                  std::vector<BoundaryAtom> atoms) {
    std::vector<Segment> segs;
    for (const auto& p : pieces) {
        if (!(p.value >= 0.0)) throw std::invalid_argument("density values must be nonnegative");
        split_arc(p.arc, p.value, segs);
    }
    struct Event {
        double x;
        int sign;
        double value;
    };
    std::vector<Event> ev;
    ev.reserve(2 * segs.size());
    for (const auto& s : segs) {
        ev.push_back({s.lo, +1, s.value});
        ev.push_back({s.hi, -1, s.value});
    }
    std::sort(ev.begin(), ev.end(), [](const Event& a, const Event& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.sign < b.sign;
    });
    std::vector<DensityPiece> out;
    double level = 0.0;
    int active = 0;
    for (std::size_t i = 0; i < ev.size(); ++i) {
        level += ev[i].sign * ev[i].value;
        active += ev[i].sign;
        if (active == 0) level = 0.0;
        if (i + 1 < ev.size()) {
            double lo = ev[i].x;
            double hi = ev[i + 1].x;
            if (hi > lo && active > 0 && level > 0.0) {
                if (!out.empty() && out.back().value == level && out.back().arc.end() == lo)
                    out.back().arc.length += hi - lo;
                else
                    out.push_back({Arc(lo, hi - lo), level});
            }
        }
    }
    return BoundaryDensity(std::move(out), std::move(atoms));
}

BoundaryDensity BoundaryDensity::constant(double value) {
    return BoundaryDensity({{Arc::full(), value}}, {});
}

double BoundaryDensity::value_at(double theta) const {
    for (const auto& p : pieces_)
        if (p.arc.contains(theta)) return p.value;
    return 0.0;
}

double BoundaryDensity::absolutely_continuous_mass() const {
    double s = 0.0;
    for (const auto& p : pieces_) s += p.value * p.arc.sigma();
    return s;
}

double BoundaryDensity::total_mass() const {
    double s = absolutely_continuous_mass();
    for (const auto& a : atoms_) s += a.mass;
    return s;
}

CarlesonWindow::CarlesonWindow(double theta_, double r_) : theta(normalize_angle(theta_)), r(r_) {
    if (!(r > 0.0)) throw std::invalid_argument("Carleson window size must be positive");
}

bool CarlesonWindow::contains(const DiskPoint& z) const {
    constexpr double tol = 1e-12;
    return z.depth() <= r + tol && circular_distance(z.arg(), theta) <= r + tol;
}

}  // namespace nevan
