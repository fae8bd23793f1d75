#include <doctest.h>

#include <cmath>
#include <random>

#include "nevan/harmonic.hpp"
#include "nevan/sequences.hpp"

using namespace nevan;

namespace {

// Composite Simpson rule on [a, b].
template <class F>
double simpson(F f, double a, double b, int panels) {
    double h = (b - a) / panels;
    double s = f(a) + f(b);
    for (int i = 1; i < panels; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

}  // namespace

TEST_CASE("Poisson kernel") {
    for (double th : {0.0, 1.0, 4.0}) CHECK(poisson_kernel(DiskPoint(0, 0), th) == doctest::Approx(1.0));
    CHECK(poisson_kernel(DiskPoint(0.5, 0), 0.0) == doctest::Approx(3.0));
    double lo = 1e9, hi = 0.0;
    for (int n = 2; n <= 20; ++n) {
        double r = poisson_kernel(whitney_square({n, 1}).center, 0.0) / std::ldexp(1.0, n);
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    CHECK(lo > 0.0);
    CHECK(hi / lo <= 8.0);
}

TEST_CASE("half-plane Poisson kernel") {
    CHECK(half_plane_poisson({0.0, 1.0}, 0.0) == doctest::Approx(1.0 / kPi));
    HalfPlanePoint p{0.3, 0.02};
    // geometric panels around the peak
    double total = 0.0;
    double prev = 0.0;
    for (int i = 0; i <= 60; ++i) {
        double next = i == 0 ? p.y * 1e-3 : p.y * 1e-3 * std::pow(1e7, i / 60.0);
        if (next > 1e4 * p.y) next = 1e4 * p.y;
        if (next <= prev) continue;
        auto f = [&](double d) { return half_plane_poisson(p, p.x + d) + half_plane_poisson(p, p.x - d); };
        total += simpson(f, prev, next, 200);
        prev = next;
    }
    CHECK(total == doctest::Approx(2.0 / kPi * std::atan(1e4)).epsilon(1e-6));
    for (double t : {0.5, 3.0, 1e-4}) {
        CHECK(half_plane_poisson({t * 0.7, t * 0.2}, t * 1.1) ==
              doctest::Approx(half_plane_poisson({0.7, 0.2}, 1.1) / t).epsilon(1e-12));
    }
}

TEST_CASE("harmonic measure of arcs matches quadrature") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        auto z = DiskPoint::polar(0.95 * u(rng), kTwoPi * u(rng));
        Arc arc(kTwoPi * u(rng), kTwoPi * u(rng) + 1e-3);
        double q = simpson([&](double t) { return poisson_kernel(z, t); }, arc.start, arc.end(), 4000) / kTwoPi;
        CHECK(harmonic_measure(z, arc) == doctest::Approx(q).epsilon(1e-9));
        double cq = simpson(
                        [&](double t) {
                            auto zeta = std::polar(1.0, t);
                            return ((zeta + z.value()) / (zeta - z.value())).imag();
                        },
                        arc.start, arc.end(), 4000) /
                    kTwoPi;
        CHECK(conjugate_arc_integral(z, arc) == doctest::Approx(cq).epsilon(1e-8));
    }
}

TEST_CASE("Poisson integrals") {
    auto one = BoundaryDensity::constant(1.0);
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        auto z = DiskPoint::polar_depth(std::pow(10.0, -8.0 * u(rng)), kTwoPi * u(rng));
        CHECK(std::fabs(poisson_integral(one, z) - 1.0) < 1e-12);
    }
    BoundaryDensity atom({}, {{0.7, 1.0}});
    DiskPoint z(0.2, -0.3);
    CHECK(poisson_integral(atom, z) == doctest::Approx(poisson_kernel(z, 0.7)));
    BoundaryDensity upper({{Arc(0.0, kPi), 1.0}}, {});
    CHECK(poisson_integral(upper, DiskPoint(0, 0)) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("mean-value identity") {
    const int nodes = 1 << 12;
    for (double r : {0.1, 0.5, 0.9, 0.99}) {
        double s = 0.0;
        for (int j = 0; j < nodes; ++j) s += poisson_kernel(DiskPoint::polar(r, kTwoPi * j / nodes), 0.3);
        CHECK(std::fabs(s / nodes - 1.0) < 1e-8);
    }
}

TEST_CASE("balayage") {
    DiskMeasure origin;
    origin.add(DiskPoint(0, 0), 2.5);
    CHECK(balayage(origin, 1.3) == doctest::Approx(2.5));
    auto bs0 = balayage_sup(origin, 6);
    CHECK(bs0.value == doctest::Approx(2.5));

    DiskMeasure ring;
    const int K = 512;
    for (int j = 0; j < K; ++j) ring.add(DiskPoint::polar(0.9, kTwoPi * j / K), 1.0 / K);
    for (double th : {0.0, 0.001, 2.0}) CHECK(balayage(ring, th) == doctest::Approx(1.0).epsilon(1e-10));

    DiskMeasure a, b, ab;
    a.add(DiskPoint(0.3, 0.3), 0.4);
    b.add(DiskPoint(-0.6, 0.1), 1.1);
    ab.add(DiskPoint(0.3, 0.3), 0.4);
    ab.add(DiskPoint(-0.6, 0.1), 1.1);
    for (double th : {0.0, 1.0, 2.5, 5.0}) CHECK(balayage(ab, th) == doctest::Approx(balayage(a, th) + balayage(b, th)));

    CHECK(balayage_sup(DiskMeasure(), 8).value == 0.0);
}

TEST_CASE("balayage sup") {
    DiskMeasure single;
    single.add(DiskPoint(0.9, 0), 1.0);
    auto s = balayage_sup(single, 10);
    CHECK(s.value == doctest::Approx(19.0).epsilon(1e-12));
    CHECK(s.theta == 0.0);

    auto g = measure_circles_geometric(12);
    auto sup = balayage_sup(*g.measure, 8);
    CHECK(std::fabs(sup.value - (1.0 - std::ldexp(1.0, -12))) < 1e-6);

    DiskMeasure mixed;
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 40; ++i) mixed.add(DiskPoint::polar_depth(std::pow(10.0, -3.0 * u(rng)), kTwoPi * u(rng)), u(rng));
    double prev = 0.0;
    for (int m = 0; m <= 14; ++m) {
        double v = balayage_sup(mixed, m).value;
        CHECK(v >= prev);
        prev = v;
    }
    CHECK_THROWS(balayage_sup(mixed, 25));
}

TEST_CASE("Carleson windows") {
    DiskMeasure mu;
    mu.add(DiskPoint(0.3, 0.1), 0.5);
    mu.add(DiskPoint::polar(0.99, 4.0), 0.25);
    CHECK(window_mass(mu, CarlesonWindow(1.0, 2.0)) == doctest::Approx(0.5));
    CHECK(window_mass(mu, CarlesonWindow(2.0, 2.0)) == doctest::Approx(0.75));
    // atom exactly on the angular edge is counted
    DiskMeasure edge;
    edge.add(DiskPoint::polar_depth(0.05, 0.5), 1.0);
    CHECK(window_mass(edge, CarlesonWindow(0.4, 0.1)) == 1.0);
    CHECK(window_mass(edge, CarlesonWindow(0.3, 0.1)) == 0.0);

    auto radial = sequence_measure(radial_dyadic(20).sequence);
    for (int j = 1; j <= 10; ++j) {
        double r = std::ldexp(1.0, -j);
        CHECK(window_mass(radial, CarlesonWindow(0.0, r)) == doctest::Approx(std::ldexp(1.0, 1 - j) - std::ldexp(1.0, -20)));
    }
}

TEST_CASE("window sup matches the critical-angle oracle") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        DiskMeasure mu;
        for (int i = 0; i < 30; ++i) mu.add(DiskPoint::polar_depth(std::pow(10.0, -2.0 * u(rng)), kTwoPi * u(rng)), u(rng));
        for (double r : {0.5, 0.1, 0.03}) {
            double oracle = 0.0;
            for (const auto& a : mu.atoms())
                for (double th : {a.point.arg() - r, a.point.arg() + r, a.point.arg()})
                    oracle = std::max(oracle, window_mass(mu, CarlesonWindow(th, r)));
            CHECK(window_sup(mu, r).mass == doctest::Approx(oracle).epsilon(1e-12));
            double bigger = window_mass(mu, CarlesonWindow(1.0, 2.0 * r));
            CHECK(bigger >= window_mass(mu, CarlesonWindow(1.0, r)));
        }
    }
}

TEST_CASE("summability condition on windows") {
    auto geom = measure_circles_geometric(12);
    auto rep = sufcond_check(*geom.measure, nullptr, 12);
    CHECK(rep.pass);
    // 2^n sup_θ μ(Q(·, 2^{-n})) ≈ Σ_{k≥n} α_k / π
    double oracle = 0.0;
    for (int n = 0; n <= 12; ++n)
        for (int k = std::max(n, 1); k <= 12; ++k) oracle += std::ldexp(1.0, -k) / kPi;
    CHECK(rep.discrete_sum == doctest::Approx(oracle).epsilon(0.1));

    // a single truncation is a finite measure; divergence shows across truncations
    std::vector<double> sums;
    for (int N : {6, 10, 14}) {
        auto pw = measure_circles_power(1.5, N);
        sums.push_back(sufcond_check(*pw.measure, nullptr, N).discrete_sum);
    }
    double slope = std::log(sums[2] / sums[0]) / std::log(14.0 / 6.0);
    CHECK(slope > 0.3);
    CHECK(sums[1] > sums[0]);

    auto empty = sufcond_check(DiskMeasure(), nullptr, 8);
    CHECK(empty.pass);
    CHECK(empty.discrete_sum == 0.0);

    auto gd = sufcond_check(*geom.measure, [](double r) { return r; }, 12);
    CHECK(gd.g_dominates);
    auto gf = sufcond_check(*geom.measure, [](double r) { return 1e-6 * r * r; }, 12);
    CHECK_FALSE(gf.g_dominates);
    CHECK_FALSE(gf.pass);
}

TEST_CASE("superlevel disks") {
    auto d = superlevel_disk(0.0, 1.0);
    CHECK(d.radius == 0.5);
    CHECK(std::abs(d.center.value()) == doctest::Approx(0.5));
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (double t : {0.3, 2.0, 50.0}) {
        double th = kTwoPi * u(rng);
        auto s = superlevel_disk(th, t);
        for (int i = 0; i < 500; ++i) {
            double phi = 0.01 + (kTwoPi - 0.02) * u(rng);
            std::complex<double> z = s.center.value() + s.radius * std::polar(1.0, th + kPi + phi);
            if (std::abs(z) >= 1.0) continue;
            CHECK(poisson_kernel(DiskPoint::from_complex(z), th) == doctest::Approx(t).epsilon(1e-8));
        }
    }
    CHECK(superlevel_disk(0.0, 1e-9).radius == doctest::Approx(1.0));
}

TEST_CASE("outer scaffold") {
    BoundaryDensity zero;
    auto g0 = scaffold_g(zero, DiskPoint(0.2, 0.4));
    CHECK(g0 == std::complex<double>(0.0, 0.0));
    CHECK(scaffold_H_log_modulus(zero, DiskPoint(0.2, 0.4)) == doctest::Approx(std::log(4.0)));

    BoundaryDensity w({{Arc(0.2, 1.0), 3.0}, {Arc(4.0, 0.5), 1.5}}, {{2.0, 0.25}});
    CHECK(scaffold_g(w, DiskPoint(0, 0)).real() == doctest::Approx(w.total_mass()));
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        auto z = DiskPoint::polar(0.98 * u(rng), kTwoPi * u(rng));
        auto g = scaffold_g(w, z);
        CHECK(g.real() == doctest::Approx(poisson_integral(w, z)).epsilon(1e-12));
        double logH = scaffold_H_log_modulus(w, z);
        CHECK(logH >= 2.0 * std::log(2.0 + g.real()) - 1e-12);
    }
}
