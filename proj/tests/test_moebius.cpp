#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "r11/errors.hpp"
#include "r11/moebius.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace r11;
using testing::max_diff;
using testing::random_sl2r;
using testing::uniform;

namespace {

double su11_diff(const SU11& x, const SU11& y) {
    return std::max(std::abs(x.alpha - y.alpha), std::abs(x.beta - y.beta));
}

double cl11_diff(const Cl11Matrix& x, const Cl11Matrix& y) {
    return std::max({max_diff(x.a, y.a), std::abs(x.b.u1 - y.b.u1), std::abs(x.b.u2 - y.b.u2)});
}

double point_diff(const TildePoint& x, const TildePoint& y) {
    if (x.sheet != y.sheet) return INFINITY;
    return std::max(std::abs(x.u.u1 - y.u.u1), std::abs(x.u.u2 - y.u.u2));
}

}  // namespace

TEST_CASE("SU(1,1) identification") {
    CHECK(su11_diff(to_su11(SL2R::identity()), SU11::identity()) == 0.0);
    const SU11 g = to_su11({2, 1, 1, 1});
    CHECK(g.alpha == Complex{1.5, 0.0});
    CHECK(g.beta == Complex{1.0, -0.5});
    CHECK(g.det() == doctest::Approx(1.0));
    CHECK_THROWS_AS(to_su11({2, 1, 1, 2}), NotUnimodular);

    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const SL2R x = random_sl2r();
        const SL2R y = random_sl2r();
        worst = std::max(worst, su11_diff(to_su11(x * y), to_su11(x) * to_su11(y)));
        worst = std::max(worst, std::abs(to_su11(x).det() - 1.0));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("Cayley realization") {
    const Cl11Matrix id = cayley(SL2R::identity());
    CHECK(id.a == EvenNumber{1.0});
    CHECK(id.b == Vector11{});

    const Cl11Matrix g = cayley({2, 1, 1, 1});
    CHECK(g.a.scalar() == 1.5);
    CHECK(g.a.bivector() == -0.5);
    CHECK(g.b == Vector11{1.0, 0.0});
    CHECK(g.a.norm_scalar() == 2.0);
    CHECK(g.pseudodet() == 1.0);

    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const SL2R x = random_sl2r();
        const SL2R y = random_sl2r();
        worst = std::max(worst, cl11_diff(cayley(x * y), cayley(x) * cayley(y)));
        worst = std::max(worst, std::abs(cayley(x).pseudodet() - 1.0));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("Cayley entry formulas agree with the conjugation product") {
    for (int i = 0; i < 200; ++i) {
        const SL2R x = random_sl2r();
        const CliffordMatrix explicit_product = cayley_by_conjugation(x);
        const CliffordMatrix entries = to_clifford(cayley(x));
        REQUIRE(max_diff(explicit_product.a, entries.a) < 1e-12);
        REQUIRE(max_diff(explicit_product.b, entries.b) < 1e-12);
        REQUIRE(max_diff(explicit_product.c, entries.c) < 1e-12);
        REQUIRE(max_diff(explicit_product.d, entries.d) < 1e-12);
    }
}

TEST_CASE("sections") {
    CHECK(su11_diff(section_disk(0.0), SU11::identity()) == 0.0);
    const SU11 s = section_disk(0.6);
    CHECK(s.alpha.real() == doctest::Approx(1.25));
    CHECK(s.beta.real() == doctest::Approx(0.75));
    CHECK(s.det() == doctest::Approx(1.0));
    CHECK_THROWS_AS(section_disk(Complex{0.6, 0.8}), OutOfDomain);

    const Cl11Matrix t = section_tilde({2.0, 0.0});
    CHECK(t.a.a1 == doctest::Approx(1.0 / std::sqrt(3.0)));
    CHECK(t.b.u1 == doctest::Approx(2.0 / std::sqrt(3.0)));
    CHECK(t.sign == -1);
    CHECK(t.pseudodet() == doctest::Approx(-1.0));
    CHECK(section_tilde({0.3, 0.1}).pseudodet() == doctest::Approx(1.0));
    CHECK_THROWS_AS(section_tilde({1.0, 0.0}), OutOfDomain);
}

TEST_CASE("factorization through section and projection") {
    const double psi = std::numbers::pi / 4;
    const SU11 h{std::polar(1.0, psi), 0.0};
    const SU11 g = section_disk(0.3) * h;
    CHECK(su11_diff(project(g), h) < 1e-14);
    CHECK(std::abs(section_inverse(g) - Complex{0.3}) < 1e-14);

    const Cl11Matrix ht{exp_bivector(0.5), {}, 1};
    const Cl11Matrix gt = section_tilde({2.0, 0.0}) * ht;
    const Cl11Matrix pt = project(gt);
    CHECK(max_diff(pt.a, exp_bivector(0.5)) < 1e-14);

    for (int i = 0; i < 500; ++i) {
        const SU11 x = to_su11(random_sl2r());
        REQUIRE(su11_diff(section_disk(section_inverse(x)) * project(x), x) < 1e-10);
        const Cl11Matrix y = cayley(random_sl2r());
        const Cl11Matrix back = section_tilde(section_inverse(y)) * project(y);
        REQUIRE(cl11_diff(back, y) < 1e-10);
        REQUIRE(back.sign == 1);
    }
}

TEST_CASE("fractional-linear actions") {
    const Complex z{0.5, 0.0};
    CHECK(act_by(SU11::identity(), z) == z);
    const double psi = 0.7;
    const SU11 rot_inv{std::polar(1.0, psi), 0.0};
    CHECK(std::abs(act_by_inverse(rot_inv, z) - std::polar(0.5, 2 * psi)) < 1e-15);

    // Hyperbolic rotation of the unit circle: t -> t - 2 tau.
    const double tau = 0.3;
    const double t = 0.8;
    const Cl11Matrix a_inv{exp_bivector(tau), {}, 1};
    const TildePoint p = boundary_point({0, t});
    const TildePoint image = act_by_inverse(a_inv, p);
    CHECK(point_diff(image, boundary_point({0, t - 2 * tau})) < 1e-14);
}

TEST_CASE("action conventions") {
    // act_by_inverse is a left action of coefficient matrices; act_by composes
    // as act_by(g, act_by(h, x)) = act_by(h g, x).
    for (int i = 0; i < 300; ++i) {
        const SU11 g = to_su11(random_sl2r(0.6));
        const SU11 h = to_su11(random_sl2r(0.6));
        const Complex z{uniform(-0.5, 0.5), uniform(-0.5, 0.5)};
        REQUIRE(std::abs(act_by_inverse(g, act_by_inverse(h, z)) - act_by_inverse(g * h, z)) < 1e-10);
        REQUIRE(std::abs(act_by(g, act_by(h, z)) - act_by(h * g, z)) < 1e-10);

        const Cl11Matrix gt = cayley(random_sl2r(0.6));
        const Cl11Matrix ht = cayley(random_sl2r(0.6));
        const TildePoint p{Sheet::minus, {uniform(-0.5, 0.5), uniform(-0.5, 0.5)}};
        try {
            const TildePoint lhs = act_by_inverse(gt, act_by_inverse(ht, p));
            const TildePoint rhs = act_by_inverse(gt * ht, p);
            REQUIRE(point_diff(lhs, rhs) < 1e-8 * std::max(1.0, lhs.u.u1 * lhs.u.u1 + lhs.u.u2 * lhs.u.u2));
        } catch (const SingularDenominator&) {
        }

        const SL2R gr = random_sl2r(0.6);
        const SL2R hr = random_sl2r(0.6);
        const Complex w{uniform(-1, 1), uniform(0.2, 2)};
        REQUIRE(std::abs(act_by_inverse(gr, act_by_inverse(hr, w)) - act_by_inverse(gr * hr, w)) < 1e-9);
        const Vector11 x{uniform(0.2, 2), uniform(-1, 1)};
        const Vector11 l = act_tilde_halfplane_by_inverse(gr, act_tilde_halfplane_by_inverse(hr, x));
        const Vector11 r = act_tilde_halfplane_by_inverse(gr * hr, x);
        REQUIRE(std::abs(l.u1 - r.u1) + std::abs(l.u2 - r.u2) < 1e-8 * (1 + std::abs(l.u1) + std::abs(l.u2)));
    }
}

TEST_CASE("hyperbolic disk is preserved, with sheet changes through infinity") {
    int flips = 0;
    for (int i = 0; i < 2000; ++i) {
        const Cl11Matrix g = cayley(random_sl2r(1.5));
        const Sheet sheet = i % 2 ? Sheet::plus : Sheet::minus;
        TildePoint p{sheet, {uniform(-3, 3), uniform(-3, 3)}};
        if (!in_disk(p) || std::abs(1 + p.u.square()) < 1e-3) continue;
        try {
            const TildePoint q = act_by_inverse(g, p);
            if (std::abs(1 + q.u.square()) < 1e-9) continue;
            REQUIRE(in_disk(q));
            flips += q.sheet != p.sheet;
        } catch (const SingularDenominator&) {
        }
    }
    CHECK(flips > 0);
}

TEST_CASE("conformal special matrices") {
    const Cliff11 e1 = Cliff11::e1();
    const Cliff11 e2 = Cliff11::e2();
    for (int i = 0; i < 200; ++i) {
        const Vector11 x{uniform(-2, 2), uniform(-2, 2)};
        if (std::abs(x.square()) < 1e-3) continue;
        const Vector11 y{uniform(-2, 2), uniform(-2, 2)};
        const Cliff11 shift = mobius({1.0, y.cliff(), 0.0, 1.0}, x.cliff());
        REQUIRE(max_diff(shift, (x + y).cliff()) < 1e-13);

        const double lambda = uniform(0.1, 3.0);
        const Cliff11 dil = mobius({std::sqrt(lambda), 0.0, 0.0, 1.0 / std::sqrt(lambda)}, x.cliff());
        REQUIRE(max_diff(dil, (lambda * x).cliff()) < 1e-13);

        const Vector11 xi = kelvin_inverse(x);
        const Cliff11 kel = mobius({0.0, -1.0, 1.0, 0.0}, x.cliff());
        REQUIRE(max_diff(kel, -xi.cliff()) < 1e-12 * (1 + xi.cliff().max_abs()));

        // Orthogonal rotation by a product of vectors a: x -> a x (a^*)^{-1}.
        const Cliff11 a = mul(Vector11{uniform(1, 2), uniform(-0.5, 0.5)}.cliff(), e1 + 0.3 * e2);
        const Cliff11 rot = mobius({a, 0.0, 0.0, inverse(reversion(a))}, x.cliff());
        REQUIRE(max_diff(rot, mul(mul(a, x.cliff()), reversion(a))) < 1e-12 * (1 + rot.max_abs()));
        REQUIRE(rot.is_vector(1e-12));
    }
}

TEST_CASE("invariant densities") {
    CHECK(invariant_density(Complex{0.0}) == 1.0);
    CHECK(invariant_density(Complex{0.6}) == doctest::Approx(2.44140625).epsilon(1e-15));
    CHECK(invariant_density(Vector11{0.0, 0.0}) == 1.0);
    CHECK_THROWS_AS(invariant_density(Complex{1.0}), OutOfDomain);
    CHECK_THROWS_AS(invariant_density(Vector11{1.0, 0.0}), OutOfDomain);
}

TEST_CASE("measure invariance by finite-difference Jacobians") {
    double worst_disk = 0.0;
    for (int i = 0; i < 200; ++i) {
        const SU11 g = to_su11(random_sl2r(0.8));
        const Complex z = std::polar(uniform(0.0, 0.8), uniform(0.0, 2 * std::numbers::pi));
        worst_disk = std::max(worst_disk, testing::disk_measure_residual(g, z));
    }
    CHECK(worst_disk < 1e-8);

    double worst_tilde = 0.0;
    int count = 0;
    while (count < 200) {
        const Cl11Matrix g = cayley(random_sl2r(0.8));
        const TildePoint p{count % 2 ? Sheet::plus : Sheet::minus, {uniform(-2, 2), uniform(-2, 2)}};
        const EvenNumber den = g.a - g.b * p.u;
        if (std::abs(1 + p.u.square()) < 0.2 || std::abs(den.norm_scalar()) < 0.2) continue;
        worst_tilde = std::max(worst_tilde, testing::tilde_measure_residual(g, p));
        ++count;
    }
    CHECK(worst_tilde < 1e-8);
}

TEST_CASE("circles and disk membership") {
    const TildePoint p = circle_point(-1.0, {0, 0.0});
    CHECK(p.sheet == Sheet::plus);
    CHECK(p.u == Vector11{1.0, 0.0});
    CHECK(p.u.square() == -1.0);
    CHECK_FALSE(in_disk(p));
    CHECK(in_disk({Sheet::plus, {2.0, 0.0}}));
    CHECK(in_disk({Sheet::minus, {0.0, 0.0}}));
    CHECK_FALSE(in_disk({Sheet::plus, {0.0, 0.0}}));

    const TildePoint q = circle_point(-0.5, {0, 0.7});
    CHECK(q.u.u1 == doctest::Approx(0.5 * std::cosh(0.7)));
    CHECK(q.u.u2 == doctest::Approx(-0.5 * std::sinh(0.7)));
    CHECK(q.u.square() == doctest::Approx(-0.25));
    const TildePoint m = circle_point(-0.5, {3, -0.2});
    CHECK(m.sheet == Sheet::minus);
    CHECK(m.u.square() == doctest::Approx(-4.0));
    CHECK(m.u.u1 < 0.0);
    CHECK_THROWS_AS(circle_point(0.0, {0, 0.0}), BadRadius);
    CHECK_THROWS_AS(circle_point(-1.5, {0, 0.0}), BadRadius);

    for (int b = 0; b < 4; ++b) {
        const BranchCoord c = branch_coord_of(boundary_point({b, 0.37}));
        CHECK(c.branch == b);
        CHECK(c.t == doctest::Approx(0.37));
    }
}

TEST_CASE("singular points") {
    const auto pts = singular_points({Sheet::plus, {2.0, 0.0}});
    REQUIRE(pts.size() == 4);
    for (const auto& sp : pts) {
        CHECK(branch_sign(sp.coord.branch) == -1);
        CHECK(std::abs(std::abs(sp.coord.t) - std::log(2.0)) < 1e-15);
        // The corresponding denominator component vanishes.
        const double s = branch_sign(sp.coord.branch);
        const double comp = sp.component == 1 ? std::exp(sp.coord.t) + s * 2.0 : std::exp(-sp.coord.t) + s * 2.0;
        CHECK(std::abs(comp) < 1e-15);
    }
    // u1 = u2: the p2 factor u1 + u2 survives, the p1 factor has no root.
    const auto lc = singular_points({Sheet::plus, {1.5, 1.5}});
    CHECK(lc.size() == 2);
    for (const auto& sp : lc) CHECK(sp.component == 2);
    CHECK(singular_points({Sheet::minus, {0.0, 0.0}}).empty());

    // Roots move continuously.
    const auto base = singular_points({Sheet::plus, {2.0, 0.3}});
    const auto moved = singular_points({Sheet::plus, {2.0 + 1e-7, 0.3 - 1e-7}});
    REQUIRE(base.size() == moved.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        CHECK(base[i].coord.branch == moved[i].coord.branch);
        CHECK(std::abs(base[i].coord.t - moved[i].coord.t) < 1e-6);
    }
}
