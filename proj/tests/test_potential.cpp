#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hyperpot/error.hpp"
#include "hyperpot/potential.hpp"

using namespace hyperpot;

namespace {

MultiPoly unit_sphere() {
    MultiPoly f(3);
    f.add_term({2, 0, 0}, Rat(1));
    f.add_term({0, 2, 0}, Rat(1));
    f.add_term({0, 0, 2}, Rat(1));
    f.add_term({0, 0, 0}, Rat(-1));
    return f;
}

MultiPoly concentric_circles() {
    MultiPoly a(2), b(2);
    a.add_term({2, 0}, Rat(1));
    a.add_term({0, 2}, Rat(1));
    a.add_term({0, 0}, Rat(-1));
    b.add_term({2, 0}, Rat(1));
    b.add_term({0, 2}, Rat(1));
    b.add_term({0, 0}, Rat(-4));
    return a * b;
}

const SurfaceChargeSpec& sphere_spec() {
    static SurfaceChargeSpec spec = SurfaceChargeSpec::build(
        unit_sphere(), MultiPoly::constant(3, Rat(1)),
        Box{{Rat(-2), Rat(-2), Rat(-2)}, {Rat(2), Rat(2), Rat(2)}}, 9);
    return spec;
}

const SurfaceChargeSpec& circles_spec() {
    static SurfaceChargeSpec spec = SurfaceChargeSpec::build(
        concentric_circles(), MultiPoly::constant(2, Rat(1)),
        Box{{Rat(-3), Rat(-3)}, {Rat(3), Rat(3)}}, 25);
    return spec;
}

QuadConfig tight() {
    QuadConfig q;
    q.tol = 1e-8;
    return q;
}

} // namespace

TEST_CASE("kernel_G closed forms") {
    CHECK(kernel_G(3, 1.0) == doctest::Approx(-1.0 / (4 * M_PI)).epsilon(1e-14));
    CHECK(kernel_G(2, 1.0) == doctest::Approx(0.0));
    double c4 = 2 * M_PI * M_PI;
    CHECK(kernel_G(4, 2.0) == doctest::Approx(-1.0 / (2 * c4 * 4.0)).epsilon(1e-14));
    CHECK(sphere_area(2) == doctest::Approx(2 * M_PI).epsilon(1e-14));
    CHECK(sphere_area(3) == doctest::Approx(4 * M_PI).epsilon(1e-14));
    CHECK_THROWS_AS(kernel_G(3, 0.0), Error);
    CHECK_THROWS_AS(kernel_G(3, -1.0), Error);
}

TEST_CASE("charge_weight") {
    CHECK(charge_weight(unit_sphere(), {1, 0, 0}) == doctest::Approx(0.5).epsilon(1e-12));

    MultiPoly plane(3); // x1 - 1/2
    plane.add_term({1, 0, 0}, Rat(1));
    plane.add_term({0, 0, 0}, Rat(-1, 2));
    CHECK(charge_weight(plane, {0.5, 3, -1}) == doctest::Approx(1.0).epsilon(1e-12));

    MultiPoly scaled = plane * Rat(2);
    CHECK(charge_weight(scaled, {0.5, 3, -1}) == doctest::Approx(0.5).epsilon(1e-12));

    CHECK_THROWS_AS(charge_weight(unit_sphere(), {2, 0, 0}), Error);
}

TEST_CASE("confocal_ellipsoid") {
    auto same = confocal_ellipsoid({2, 1, 1}, 0.0);
    CHECK(same[0] == doctest::Approx(2.0));
    auto smaller = confocal_ellipsoid({2, 1, 1}, -0.5);
    CHECK(smaller[0] == doctest::Approx(std::sqrt(3.5)).epsilon(1e-14));
    CHECK(smaller[1] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
    auto sphere = confocal_ellipsoid({1, 1, 1}, 0.25);
    CHECK(sphere[0] == doctest::Approx(sphere[1]));
    CHECK_THROWS_AS(confocal_ellipsoid({2, 1, 1}, -1.0), Error);
}

TEST_CASE("sphere potential: Newton values") {
    QuadConfig q = tight();
    QuadratureResult center = potential(sphere_spec(), {0, 0, 0}, q);
    CHECK(center.converged);
    CHECK(center.value == doctest::Approx(-0.5).epsilon(1e-7));

    QuadratureResult outside = potential(sphere_spec(), {0, 0, 2}, q);
    CHECK(outside.value == doctest::Approx(-0.25).epsilon(1e-7));

    QuadratureResult inside = potential(sphere_spec(), {0.3, 0.1, -0.2}, q);
    CHECK(inside.value == doctest::Approx(-0.5).epsilon(1e-7));
}

TEST_CASE("sphere force: interior zero, exterior point-mass") {
    QuadConfig q = tight();
    VectorQuadratureResult interior = attraction_force(sphere_spec(), {0.3, 0.1, -0.2}, q);
    CHECK(std::hypot(interior.value[0], std::hypot(interior.value[1], interior.value[2])) <
          1e-6);

    VectorQuadratureResult exterior = attraction_force(sphere_spec(), {0, 0, 2}, q);
    CHECK(exterior.value[0] == doctest::Approx(0.0).epsilon(1e-8));
    CHECK(exterior.value[1] == doctest::Approx(0.0).epsilon(1e-8));
    CHECK(exterior.value[2] == doctest::Approx(-0.125).epsilon(1e-6));
}

TEST_CASE("Arnold-signed concentric circles do not attract the hyperbolicity domain") {
    QuadConfig q = tight();
    CHECK(circles_spec().signs == std::vector<int>{1, -1});
    VectorQuadratureResult f = attraction_force(circles_spec(), {0.2, 0.1}, q);
    CHECK(std::hypot(f.value[0], f.value[1]) < 1e-6);
}

TEST_CASE("the n=2 potential is only exposed as a force") {
    CHECK_THROWS_AS(potential(circles_spec(), {0.2, 0.1}, tight()), Error);
}

TEST_CASE("standoff and budget handling") {
    QuadConfig q = tight();
    CHECK_THROWS_AS(potential(sphere_spec(), {1.0005, 0, 0}, q), Error);

    QuadConfig tiny = tight();
    tiny.tol = 1e-15;    // unreachable before the node budget runs out
    tiny.max_nodes = 64; // no refinement beyond the initial panels
    QuadratureResult partial = potential(sphere_spec(), {0.5, 0.2, 0.1}, tiny);
    CHECK_FALSE(partial.converged);
    CHECK(partial.nodes_used >= 64);
    CHECK(partial.value == doctest::Approx(-0.5).epsilon(1e-4)); // still a usable partial value
}

TEST_CASE("polynomial_fit_check: Arnold constancy and the Givental bound") {
    QuadConfig q = tight();
    double const_resid =
        polynomial_fit_check(sphere_spec(), {-0.3, 0, 0}, {0.3, 0.1, 0.1}, 0, 9, q);
    CHECK(const_resid < 1e-7);

    MultiPoly z2(3);
    z2.add_term({0, 0, 2}, Rat(1));
    SurfaceChargeSpec weighted = SurfaceChargeSpec::build(
        unit_sphere(), z2, Box{{Rat(-2), Rat(-2), Rat(-2)}, {Rat(2), Rat(2), Rat(2)}}, 9);
    // deg P = 2, d = 2: Givental degree bound 2 - 2 + 2 = 2
    double quad_resid = polynomial_fit_check(weighted, {-0.4, 0.1, -0.3}, {0.4, 0.2, 0.35}, 2, 9, q);
    CHECK(quad_resid < 1e-6);

    double zero_resid = polynomial_fit_check(sphere_spec(), {-0.3, 0, 0}, {0.3, 0, 0}, -1, 5, q);
    CHECK(zero_resid == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("property: interior constancy across random points") {
    QuadConfig q = tight();
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ud(-0.5, 0.5);
    std::vector<double> values;
    for (int i = 0; i < 10; ++i)
        values.push_back(potential(sphere_spec(), {ud(rng), ud(rng), ud(rng)}, q).value);
    double mean = 0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double sq = 0;
    for (double v : values) sq += (v - mean) * (v - mean);
    double stddev = std::sqrt(sq / static_cast<double>(values.size() - 1));
    CHECK(stddev < 10 * q.tol);
}

TEST_CASE("property: exterior point-mass law") {
    QuadConfig q = tight();
    for (double r : {1.5, 2.0, 3.0, 5.0}) {
        double u = potential(sphere_spec(), {0, r / std::sqrt(2.0), r / std::sqrt(2.0)}, q).value;
        CHECK(u * r == doctest::Approx(-0.5).epsilon(10 * q.tol));
    }
}

TEST_CASE("property: force agrees with central differences of the potential") {
    QuadConfig q = tight();
    std::vector<double> x{0.2, 1.7, -0.4};
    VectorQuadratureResult f = attraction_force(sphere_spec(), x, q);
    double h = 1e-3;
    for (int i = 0; i < 3; ++i) {
        std::vector<double> xp = x, xm = x;
        xp[static_cast<std::size_t>(i)] += h;
        xm[static_cast<std::size_t>(i)] -= h;
        double fd = -(potential(sphere_spec(), xp, q).value - potential(sphere_spec(), xm, q).value) /
                    (2 * h);
        CHECK(f.value[static_cast<std::size_t>(i)] == doctest::Approx(fd).epsilon(5e-4));
    }
}

TEST_CASE("property: discrete harmonicity off the surface") {
    QuadConfig q = tight();
    std::vector<double> x{0.3, 1.8, 0.2};
    double h = 0.05;
    double center = potential(sphere_spec(), x, q).value;
    double lap = 0;
    for (int i = 0; i < 3; ++i) {
        std::vector<double> xp = x, xm = x;
        xp[static_cast<std::size_t>(i)] += h;
        xm[static_cast<std::size_t>(i)] -= h;
        lap += potential(sphere_spec(), xp, q).value + potential(sphere_spec(), xm, q).value -
               2 * center;
    }
    lap /= h * h;
    CHECK(std::fabs(lap) < 1e-3);
}

TEST_CASE("property: refinement does not worsen the error estimate") {
    QuadConfig loose = tight();
    loose.tol = 1e-5;
    QuadConfig strict = tight();
    strict.tol = 1e-9;
    double e_loose = potential(sphere_spec(), {0.4, 0.3, 0.2}, loose).error_estimate;
    double e_strict = potential(sphere_spec(), {0.4, 0.3, 0.2}, strict).error_estimate;
    CHECK(e_strict <= e_loose + 1e-15);
}

TEST_CASE("property: Ivory proportionality (coarse, fast version)") {
    QuadConfig q = tight();
    q.tol = 1e-7;
    Box box{{Rat(-3), Rat(-3), Rat(-3)}, {Rat(3), Rat(3), Rat(3)}};
    MultiPoly big(3);
    big.add_term({2, 0, 0}, Rat(1, 4));
    big.add_term({0, 2, 0}, Rat(1));
    big.add_term({0, 0, 2}, Rat(1));
    big.add_term({0, 0, 0}, Rat(-1));
    MultiPoly small(3);
    small.add_term({2, 0, 0}, Rat(2, 7));
    small.add_term({0, 2, 0}, Rat(2));
    small.add_term({0, 0, 2}, Rat(2));
    small.add_term({0, 0, 0}, Rat(-1));
    SurfaceChargeSpec sb = SurfaceChargeSpec::build(big, MultiPoly::constant(3, Rat(1)), box, 13);
    SurfaceChargeSpec ss = SurfaceChargeSpec::build(small, MultiPoly::constant(3, Rat(1)), box, 13);
    std::vector<std::vector<double>> pts{{3.1, 0.4, 0.2}, {-0.5, 3.0, 1.0}, {1.9, -2.0, 2.1}};
    std::vector<double> ratios;
    for (const auto& x : pts)
        ratios.push_back(potential(sb, x, q).value / potential(ss, x, q).value);
    for (double r : ratios) CHECK(r == doctest::Approx(ratios[0]).epsilon(2e-5));
}

TEST_CASE("sign override replaces the Arnold layout") {
    QuadConfig q = tight();
    SurfaceChargeSpec flipped = SurfaceChargeSpec::build(
        concentric_circles(), MultiPoly::constant(2, Rat(1)),
        Box{{Rat(-3), Rat(-3)}, {Rat(3), Rat(3)}}, 25, std::vector<int>{1, 1});
    CHECK(flipped.signs == std::vector<int>{1, 1});
    // the circle charges both carry mass pi/3, so with equal signs the
    // exterior force at radius 5/2 is (2 pi/3)/(2 pi 5/2) = 2/15, while the
    // Arnold layout cancels exactly
    VectorQuadratureResult f = attraction_force(flipped, {2.5, 0.0}, q);
    CHECK(std::hypot(f.value[0], f.value[1]) == doctest::Approx(2.0 / 15).epsilon(1e-7));
    VectorQuadratureResult g = attraction_force(circles_spec(), {2.5, 0.0}, q);
    CHECK(std::hypot(g.value[0], g.value[1]) < 1e-7);

    CHECK_THROWS_AS(SurfaceChargeSpec::build(concentric_circles(),
                                             MultiPoly::constant(2, Rat(1)),
                                             Box{{Rat(-3), Rat(-3)}, {Rat(3), Rat(3)}}, 25,
                                             std::vector<int>{1}),
                    Error);
}

TEST_CASE("patch integrals are deterministic across thread counts") {
    QuadConfig one = tight(), four = tight();
    four.threads = 4;
    VectorQuadratureResult a = attraction_force(circles_spec(), {1.5, 0.3}, one);
    VectorQuadratureResult b = attraction_force(circles_spec(), {1.5, 0.3}, four);
    CHECK(a.value == b.value); // bitwise equal accumulation
    CHECK(a.error_estimate == b.error_estimate);
}

TEST_CASE("build rejects non-quadric components in three dimensions") {
    MultiPoly quartic(3); // x^4 + y^4 + z^4 - 1, a rounded cube
    quartic.add_term({4, 0, 0}, Rat(1));
    quartic.add_term({0, 4, 0}, Rat(1));
    quartic.add_term({0, 0, 4}, Rat(1));
    quartic.add_term({0, 0, 0}, Rat(-1));
    Box box{{Rat(-2), Rat(-2), Rat(-2)}, {Rat(2), Rat(2), Rat(2)}};
    CHECK_THROWS_AS(
        SurfaceChargeSpec::build(quartic, MultiPoly::constant(3, Rat(1)), box, 9), Error);
}
