#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "nevan/blaschke.hpp"
#include "nevan/harmonic.hpp"

using namespace nevan;

namespace {

PointSequence two_points() { return PointSequence({DiskPoint(0.5, 0), DiskPoint(-0.5, 0)}); }

PointSequence random_sequence(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    PointSequence s;
    for (int i = 0; i < n; ++i) s.add(DiskPoint::polar_depth(std::pow(10.0, -3.0 * u(rng)), kTwoPi * u(rng)));
    return s;
}

// Direct product oracle with complex arithmetic.
double direct_log_product(const PointSequence& s, std::complex<double> z, std::size_t skip) {
    double acc = 0.0;
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (j == skip) continue;
        std::complex<double> l = s[j].value();
        acc += std::log(std::abs((z - l) / (1.0 - std::conj(l) * z)));
    }
    return acc;
}

}  // namespace

TEST_CASE("log_blaschke_at examples") {
    PointSequence single({DiskPoint(0.5, 0)});
    CHECK(log_blaschke_at(single, DiskPoint(0, 0)) == doctest::Approx(std::log(0.5)));
    auto s = two_points();
    std::vector<std::size_t> ex{0};
    CHECK(log_blaschke_at(s, DiskPoint(0.5, 0), ex) == doctest::Approx(std::log(0.8)));
    std::vector<std::size_t> all{0, 1};
    CHECK(log_blaschke_at(s, DiskPoint(0.1, 0.2), all) == 0.0);
    double hit = log_blaschke_at(s, DiskPoint(0.5, 0));
    CHECK(std::isinf(hit));
    CHECK(hit < 0.0);
}

TEST_CASE("phi_lambda examples") {
    PointSequence single({DiskPoint(0.3, 0.1)});
    auto p1 = phi_lambda(single);
    REQUIRE(p1.values.size() == 1);
    CHECK(p1.values[0] == 0.0);

    auto p2 = phi_lambda(two_points());
    CHECK(p2.values[0] == doctest::Approx(-std::log(0.8)));
    CHECK(p2.values[1] == doctest::Approx(0.2231435513).epsilon(1e-9));

    std::vector<DiskPoint> pts;
    for (int n = 1; n <= 10; ++n) pts.push_back(DiskPoint::polar_depth(std::ldexp(1.0, -n), 0.0));
    auto pr = phi_lambda(PointSequence(pts));
    double mx = *std::max_element(pr.values.begin(), pr.values.end());
    // frozen: radial dyadic sequence, N = 10
    CHECK(mx == doctest::Approx(3.9562234452).epsilon(1e-9));
    CHECK_FALSE(pr.any_overflow());
}

TEST_CASE("phi_lambda agrees with the direct product") {
    std::mt19937_64 rng(21);
    auto s = random_sequence(rng, 30);
    auto p = phi_lambda(s);
    for (std::size_t i = 0; i < s.size(); ++i)
        CHECK(p.values[i] == doctest::Approx(-direct_log_product(s, s[i].value(), i)).epsilon(1e-9));
}

TEST_CASE("separation and Blaschke sum") {
    CHECK(*separation_constant(two_points()) == doctest::Approx(0.8));
    CHECK_FALSE(separation_constant(PointSequence({DiskPoint(0.1, 0)})).has_value());
    CHECK_THROWS(PointSequence({DiskPoint(0.1, 0), DiskPoint(0.1, 0)}));
    PointSequence s;
    s.add(DiskPoint(0.2, 0.2));
    CHECK_THROWS(s.add(DiskPoint(0.2, 0.2)));

    CHECK(blaschke_sum(PointSequence({DiskPoint(0.5, 0)})) == doctest::Approx(0.5));
    CHECK(blaschke_sum(PointSequence()) == 0.0);
    std::vector<DiskPoint> pts;
    for (int n = 1; n <= 10; ++n) pts.push_back(DiskPoint::polar_depth(std::ldexp(1.0, -n), 0.0));
    CHECK(blaschke_sum(PointSequence(pts)) == 1023.0 / 1024.0);
}

TEST_CASE("satellites carry exact pseudo-hyperbolic gaps") {
    PointSequence s;
    auto a = s.add(DiskPoint::polar_depth(1e-3, 0.7));
    auto b = s.add_satellite(a, -5000.0, 0.7);
    CHECK(s.log_rho(a, b) == -5000.0);
    CHECK(*log_separation_constant(s) == -5000.0);
    auto p = phi_lambda(s);
    CHECK(p.values[0] == doctest::Approx(5000.0).epsilon(1e-12));
    CHECK(p.overflow[0]);

    // moderate gap: the Cartesian coordinates agree with the link
    PointSequence t;
    auto c = t.add(DiskPoint::polar(0.6, 1.0));
    auto d = t.add_satellite(c, std::log(0.3), 2.0);
    CHECK(pseudo_hyperbolic(t[c], t[d]) == doctest::Approx(0.3).epsilon(1e-12));
    CHECK_THROWS(t.add_satellite(d, -1.0, 0.0));
    CHECK_THROWS(t.add_satellite(c, 0.5, 0.0));
}

TEST_CASE("phi_lambda invariants") {
    std::mt19937_64 rng(33);
    auto s = random_sequence(rng, 25);
    auto base = phi_lambda(s);

    SUBCASE("thickening never decreases entries") {
        PointSequence t = s;
        t.add(DiskPoint::polar(0.37, 0.11));
        auto thick = phi_lambda(t);
        for (std::size_t i = 0; i < s.size(); ++i) CHECK(thick.values[i] >= base.values[i]);
    }
    SUBCASE("rotation invariance") {
        std::vector<DiskPoint> rot;
        for (const auto& p : s.points()) rot.push_back(DiskPoint::polar_depth(p.depth(), p.arg() + 1.234));
        auto r = phi_lambda(PointSequence(rot));
        for (std::size_t i = 0; i < s.size(); ++i) CHECK(std::fabs(r.values[i] - base.values[i]) < 1e-10);
    }
    SUBCASE("additivity over disjoint parts") {
        std::vector<DiskPoint> p1(s.points().begin(), s.points().begin() + 10);
        std::vector<DiskPoint> p2(s.points().begin() + 10, s.points().end());
        DiskPoint z(0.05, -0.4);
        double whole = log_blaschke_at(s, z);
        double parts = log_blaschke_at(PointSequence(p1), z) + log_blaschke_at(PointSequence(p2), z);
        CHECK(whole == doctest::Approx(parts).epsilon(1e-12));
    }
    SUBCASE("separated sequences: nothing is dropped") {
        double delta0 = *separation_constant(s);
        for (std::size_t i = 0; i < s.size(); ++i) {
            std::vector<DiskPoint> rest;
            for (std::size_t j = 0; j < s.size(); ++j)
                if (j != i) rest.push_back(s[j]);
            CHECK(separated_tail_log(PointSequence(rest), s[i], delta0) == doctest::Approx(base.values[i]).epsilon(1e-12));
        }
    }
}

TEST_CASE("separated_tail_log") {
    auto s = two_points();
    DiskPoint far(0.0, 0.9);
    CHECK(separated_tail_log(s, far, 0.1) == doctest::Approx(-log_blaschke_at(s, far)));
    double v = separated_tail_log(s, DiskPoint(0.5, 0), 0.5);
    CHECK(std::isfinite(v));
    CHECK(v == doctest::Approx(-std::log(0.8)));
    // ρ(z, 0.5) ≈ 0.14, ρ(z, -0.5) ≈ 0.85
    DiskPoint z(0.4, 0);
    double r1 = pseudo_hyperbolic(z, s[0]), r2 = pseudo_hyperbolic(z, s[1]);
    REQUIRE(r1 < 0.5);
    REQUIRE(r2 > 0.5);
    CHECK(separated_tail_log(s, z, 0.5) == doctest::Approx(-std::log(r2)));
}

TEST_CASE("propsep weight") {
    PointSequence single({DiskPoint(0.9, 0)});
    auto w = propsep_weight(single, 2.0);
    auto arc = *shadow(single[0]);
    CHECK(w.total_mass() == doctest::Approx(2.0 * arc.sigma()));
    CHECK(w.value_at(0.0) == doctest::Approx(2.0));
    CHECK(w.value_at(kPi) == 0.0);

    std::mt19937_64 rng(41);
    auto s = random_sequence(rng, 40);
    double sigma_sum = 0.0;
    for (const auto& p : s.points()) sigma_sum += shadow(p)->sigma();
    CHECK(propsep_weight(s, 0.7).total_mass() == doctest::Approx(0.7 * sigma_sum).epsilon(1e-12));
}

TEST_CASE("empirical c0 for the separated-tail majorant") {
    std::vector<DiskPoint> pts;
    for (int n = 1; n <= 8; ++n)
        for (int k = 0; k < (1 << n); k += 2) pts.push_back(DiskPoint::polar_depth(std::ldexp(1.0, -n), kTwoPi * k / (1 << n)));
    PointSequence s(pts);
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<DiskPoint> samples;
    for (int i = 0; i < 200; ++i) samples.push_back(DiskPoint::polar_depth(std::pow(10.0, -2.5 * u(rng)), kTwoPi * u(rng)));
    const double delta = 0.3;
    double c0 = 0.125;
    bool ok = false;
    for (int step = 0; step < 20 && !ok; ++step) {
        auto w = propsep_weight(s, c0);
        ok = true;
        for (const auto& z : samples)
            if (separated_tail_log(s, z, delta) > poisson_integral(w, z)) {
                ok = false;
                break;
            }
        if (!ok) c0 *= 2.0;
    }
    MESSAGE("passing c0 = " << c0);
    CHECK(ok);
    CHECK(c0 <= 64.0);
}
