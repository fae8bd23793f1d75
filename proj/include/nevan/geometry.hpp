#pragma once

#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>

namespace nevan {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Reduces an angle to [0, 2π).
double normalize_angle(double theta);

// Distance between two angles measured along the circle, in [0, π].
double circular_distance(double a, double b);

// Point of the open unit disk. The defect 1 - |z| is kept alongside the
// coordinates so points generated near the boundary keep full relative
// accuracy in 1 - |z|² even when |z| rounds to 1.
class DiskPoint {
public:
    DiskPoint() = default;
    DiskPoint(double re, double im);

    static DiskPoint polar(double r, double theta);
    // Point with 1 - |z| = delta and argument theta; delta is taken as exact.
    static DiskPoint polar_depth(double delta, double theta);
    static DiskPoint from_complex(std::complex<double> z) { return {z.real(), z.imag()}; }
    // Coordinates together with a separately computed 1 - |z| (delta in (0, 1]).
    static DiskPoint exact(double re, double im, double delta);

    double re() const { return re_; }
    double im() const { return im_; }
    std::complex<double> value() const { return {re_, im_}; }
    double modulus() const { return 1.0 - delta_; }
    double depth() const { return delta_; }               // 1 - |z|
    double one_minus_mod2() const { return delta_ * (2.0 - delta_); }  // 1 - |z|²
    double arg() const;                                   // in [0, 2π)

    bool operator==(const DiskPoint& o) const { return re_ == o.re_ && im_ == o.im_; }

private:
    double re_ = 0.0;
    double im_ = 0.0;
    double delta_ = 1.0;
    double theta_ = std::numeric_limits<double>::quiet_NaN();  // set when built from an angle
};

struct BoundaryPoint {
    double theta = 0.0;
    BoundaryPoint() = default;
    explicit BoundaryPoint(double t) : theta(normalize_angle(t)) {}
    std::complex<double> value() const { return std::polar(1.0, theta); }
    bool operator==(const BoundaryPoint& o) const { return theta == o.theta; }
};

// Half-open arc [start, start + length) of the circle, possibly wrapping through 0.
struct Arc {
    double start = 0.0;
    double length = kTwoPi;

    Arc() = default;
    Arc(double s, double len);
    static Arc full() { return Arc(0.0, kTwoPi); }

    double end() const { return start + length; }  // may exceed 2π
    double sigma() const { return length / kTwoPi; }
    double center() const { return normalize_angle(start + 0.5 * length); }
    bool is_full() const { return length >= kTwoPi; }
    bool contains(double theta) const;
};

struct DyadicIndex {
    int n = 0;
    std::uint64_t k = 0;

    DyadicIndex() = default;
    DyadicIndex(int n_, std::uint64_t k_);
    DyadicIndex parent() const;
    DyadicIndex child(int which) const { return {n + 1, 2 * k + static_cast<std::uint64_t>(which)}; }
    bool is_ancestor_of(const DyadicIndex& other) const;
    auto operator<=>(const DyadicIndex&) const = default;
};

struct WhitneySquare {
    DyadicIndex index;
    double r_min = 0.0;  // inclusive
    double r_max = 0.0;  // exclusive
    Arc arc;
    DiskPoint center;

    bool contains(const DiskPoint& z) const;
};

struct HalfPlanePoint {
    double x = 0.0;
    double y = 1.0;

    HalfPlanePoint() = default;
    HalfPlanePoint(double x_, double y_);
};

// |(z - w)/(1 - conj(z) w)|.
double pseudo_hyperbolic(const DiskPoint& z, const DiskPoint& w);

// log ρ(z, w), accurate when ρ is tiny or close to 1; -inf when z = w.
double log_pseudo_hyperbolic(const DiskPoint& z, const DiskPoint& w);

bool stolz_contains(const BoundaryPoint& zeta, double alpha, const DiskPoint& z);

// Arc of boundary points whose Stolz angle of aperture alpha contains z.
// Empty (nullopt) when alpha(1 + |z|) < 1; the full arc when every boundary
// point qualifies.
std::optional<Arc> shadow(const DiskPoint& z, double alpha = 1.0);

Arc dyadic_arc(const DyadicIndex& idx);
WhitneySquare whitney_square(const DyadicIndex& idx);
int generation(const DiskPoint& z);
DyadicIndex locate(const DiskPoint& z);

DiskPoint cayley_to_disk(const HalfPlanePoint& p);
HalfPlanePoint cayley_to_halfplane(const DiskPoint& z);

}  // namespace nevan
