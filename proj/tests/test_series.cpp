#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "gft/errors.hpp"
#include "gft/rng.hpp"
#include "gft/series.hpp"
#include "test_util.hpp"

using gft::CounterRng;
using gft::series::cplx;
using gft::series::NormalizedFn;
using gft::series::TruncSeries;
using testutil::near;

namespace {

const double tau = (1.0 - std::sqrt(5.0)) / 2.0;

cplx disk_draw(CounterRng& rng) {
    const double two_pi = 2.0 * std::acos(-1.0);
    return std::polar(std::sqrt(rng.next_unit()), two_pi * rng.next_unit());
}

TruncSeries random_series(CounterRng& rng, std::size_t order) {
    std::vector<cplx> c(order + 1);
    for (auto& v : c) v = disk_draw(rng);
    return TruncSeries(std::move(c));
}

} // namespace

TEST_CASE("construction and coefficient access") {
    const TruncSeries s{1.0, 2.0, 3.0};
    CHECK(s.order() == 2);
    CHECK(s.coeff(0) == cplx(1.0));
    CHECK(s.coeff(2) == cplx(3.0));
    CHECK(s.coeff(3) == cplx(0.0));
    CHECK(s.coeff(100) == cplx(0.0));

    CHECK(TruncSeries().order() == 0);
    CHECK(TruncSeries(std::vector<cplx>{}).order() == 0);
    CHECK(TruncSeries::one(3).coeff(0) == cplx(1.0));
    CHECK(TruncSeries::one(3).order() == 3);
    CHECK(TruncSeries::identity(4).coeff(1) == cplx(1.0));
    CHECK(TruncSeries::identity(4).coeff(0) == cplx(0.0));

    const TruncSeries t = s.truncated(4);
    CHECK(t.order() == 4);
    CHECK(t.coeff(1) == cplx(2.0));
    CHECK(t.coeff(4) == cplx(0.0));
    CHECK(s.truncated(1).order() == 1);
}

TEST_CASE("product truncates exactly") {
    const TruncSeries a{1.0, 1.0, 0.0, 0.0};  // 1 + z
    const TruncSeries b{1.0, -1.0, 0.0, 0.0}; // 1 - z
    const TruncSeries p = mul(a, b);
    CHECK(p.order() == 3);
    CHECK(p.coeff(0) == cplx(1.0));
    CHECK(p.coeff(1) == cplx(0.0));
    CHECK(p.coeff(2) == cplx(-1.0));
    CHECK(p.coeff(3) == cplx(0.0));
}

TEST_CASE("product with the constant one is the identity") {
    CounterRng rng(11, 0);
    const TruncSeries s = random_series(rng, 7);
    const TruncSeries p = mul(TruncSeries::one(7), s);
    for (std::size_t k = 0; k <= 7; ++k)
        CHECK(p.coeff(k) == s.coeff(k));
}

TEST_CASE("square of a tangent-to-identity series starts at z^2") {
    // u = z + 0 z^2 + 0 z^3: the boundary-kernel Schwarz expansion.
    const TruncSeries u{0.0, 1.0, 0.0, 0.0};
    const TruncSeries sq = mul(u, u);
    CHECK(sq.coeff(0) == cplx(0.0));
    CHECK(sq.coeff(1) == cplx(0.0));
    CHECK(sq.coeff(2) == cplx(1.0));
}

TEST_CASE("product requires matching orders") {
    CHECK_THROWS_AS(mul(TruncSeries::one(2), TruncSeries::one(3)),
                    gft::OrderMismatch);
    CHECK_THROWS_AS(add(TruncSeries::one(2), TruncSeries::one(3)),
                    gft::OrderMismatch);
    CHECK_THROWS_AS(sub(TruncSeries::one(2), TruncSeries::one(3)),
                    gft::OrderMismatch);
}

TEST_CASE("product is commutative and associative") {
    CounterRng rng(12, 0);
    for (int trial = 0; trial < 25; ++trial) {
        const TruncSeries a = random_series(rng, 9);
        const TruncSeries b = random_series(rng, 9);
        const TruncSeries c = random_series(rng, 9);
        const TruncSeries ab = mul(a, b);
        const TruncSeries ba = mul(b, a);
        const TruncSeries l = mul(ab, c);
        const TruncSeries r = mul(a, mul(b, c));
        for (std::size_t k = 0; k <= 9; ++k) {
            CHECK(near(ab.coeff(k), ba.coeff(k), 1e-12));
            CHECK(near(l.coeff(k), r.coeff(k), 1e-9));
        }
    }
}

TEST_CASE("golden-ratio rational expands to the Fibonacci-weighted series") {
    const TruncSeries num{1.0, 0.0, tau * tau, 0.0, 0.0, 0.0};
    const TruncSeries den{1.0, -tau, -tau * tau, 0.0, 0.0, 0.0};
    const TruncSeries q = div(num, den);
    const double expected[] = {1.0,
                               tau,
                               3.0 * tau * tau,
                               4.0 * tau * tau * tau,
                               7.0 * tau * tau * tau * tau,
                               11.0 * tau * tau * tau * tau * tau};
    for (std::size_t k = 0; k <= 5; ++k)
        CHECK(near(q.coeff(k), cplx(expected[k]), 1e-12));
}

TEST_CASE("quotient of a series by itself is one") {
    CounterRng rng(13, 0);
    for (int trial = 0; trial < 10; ++trial) {
        TruncSeries s = random_series(rng, 8);
        std::vector<cplx> c = s.coeffs();
        c[0] += 2.0; // keep the constant term well away from zero
        s = TruncSeries(std::move(c));
        const TruncSeries q = div(s, s);
        CHECK(near(q.coeff(0), cplx(1.0), 1e-12));
        for (std::size_t k = 1; k <= 8; ++k)
            CHECK(near(q.coeff(k), cplx(0.0), 1e-12));
    }
}

TEST_CASE("geometric series from a quotient") {
    const TruncSeries one = TruncSeries::one(4);
    const TruncSeries den{1.0, -1.0, 0.0, 0.0, 0.0};
    const TruncSeries q = div(one, den);
    for (std::size_t k = 0; k <= 4; ++k)
        CHECK(near(q.coeff(k), cplx(1.0), 1e-12));
}

TEST_CASE("division refuses a singular divisor") {
    const TruncSeries b{1e-13, 1.0, 0.0};
    CHECK_THROWS_AS(div(TruncSeries::one(2), b),
                    gft::DivisionBySingularSeries);
}

TEST_CASE("division round-trips through multiplication") {
    CounterRng rng(14, 0);
    for (int trial = 0; trial < 25; ++trial) {
        const TruncSeries a = random_series(rng, 10);
        TruncSeries b = random_series(rng, 10);
        std::vector<cplx> c = b.coeffs();
        if (std::abs(c[0]) < 0.1) c[0] += 0.5;
        b = TruncSeries(std::move(c));
        const TruncSeries back = mul(div(a, b), b);
        for (std::size_t k = 0; k <= 10; ++k)
            CHECK(near(back.coeff(k), a.coeff(k), 1e-9));
    }
}

TEST_CASE("derivative shifts coefficients down") {
    const cplx a2(0.3, -0.1), a3(0.2, 0.4);
    const TruncSeries f{0.0, 1.0, a2, a3};
    const TruncSeries d = deriv(f);
    CHECK(d.order() == 2);
    CHECK(d.coeff(0) == cplx(1.0));
    CHECK(d.coeff(1) == 2.0 * a2);
    CHECK(d.coeff(2) == 3.0 * a3);

    const TruncSeries c = deriv(TruncSeries::one(0));
    CHECK(c.order() == 0);
    CHECK(c.coeff(0) == cplx(0.0));
}

TEST_CASE("derivative of the golden-ratio series") {
    const TruncSeries p{1.0, tau, 3.0 * tau * tau, 4.0 * tau * tau * tau};
    const TruncSeries d = deriv(p);
    CHECK(near(d.coeff(0), cplx(tau), 1e-15));
    CHECK(near(d.coeff(1), cplx(6.0 * tau * tau), 1e-15));
    CHECK(near(d.coeff(2), cplx(12.0 * tau * tau * tau), 1e-15));
}

TEST_CASE("real power matches repeated multiplication") {
    const TruncSeries a{1.0, 1.0, 0.0, 0.0}; // 1 + z
    const TruncSeries sq = pow_real(a, 2.0);
    CHECK(near(sq.coeff(0), cplx(1.0), 1e-12));
    CHECK(near(sq.coeff(1), cplx(2.0), 1e-12));
    CHECK(near(sq.coeff(2), cplx(1.0), 1e-12));
    CHECK(near(sq.coeff(3), cplx(0.0), 1e-12));

    CounterRng rng(15, 0);
    for (int trial = 0; trial < 10; ++trial) {
        TruncSeries s = random_series(rng, 8);
        std::vector<cplx> c = s.coeffs();
        c[0] = 1.0;
        s = TruncSeries(std::move(c));
        TruncSeries product = s;
        for (int m = 1; m <= 3; ++m) {
            const TruncSeries p = pow_real(s, static_cast<double>(m));
            for (std::size_t k = 0; k <= 8; ++k)
                CHECK(near(p.coeff(k), product.coeff(k), 1e-9));
            product = mul(product, s);
        }
    }
}

TEST_CASE("square root round-trips") {
    const TruncSeries s{1.0, 2.0, 3.0};
    const TruncSeries back = pow_real(pow_real(s, 0.5), 2.0);
    for (std::size_t k = 0; k <= 2; ++k)
        CHECK(near(back.coeff(k), s.coeff(k), 1e-9));
}

TEST_CASE("real power linear term carries the exponent") {
    const cplx a2(0.25, 0.05), a3(-0.1, 0.2);
    for (const double lambda : {1.0, 1.5, 2.0, 3.25}) {
        const TruncSeries fp{1.0, 2.0 * a2, 3.0 * a3};
        const TruncSeries p = pow_real(fp, lambda);
        CHECK(near(p.coeff(1), 2.0 * lambda * a2, 1e-12));
    }
}

TEST_CASE("real power requires a unit constant term") {
    CHECK_THROWS_AS(pow_real(TruncSeries{2.0, 1.0}, 0.5),
                    gft::PowBaseNotUnit);
    CHECK_THROWS_AS(pow_real(TruncSeries{0.0, 1.0}, 2.0),
                    gft::PowBaseNotUnit);
}

TEST_CASE("composition reproduces the subordination expansion") {
    CounterRng rng(16, 0);
    const TruncSeries p{1.0, tau, 3.0 * tau * tau, 4.0 * tau * tau * tau};
    for (int trial = 0; trial < 20; ++trial) {
        const cplx c1 = disk_draw(rng) * 2.0;
        const cplx c2 = disk_draw(rng) * 2.0;
        // Cayley-transform expansion of a function with coefficients c1, c2.
        const TruncSeries u{0.0, c1 / 2.0, (c2 - c1 * c1 / 2.0) / 2.0, 0.0};
        const TruncSeries composed = compose(p, u);
        const cplx z1 = tau * c1 / 2.0;
        const cplx z2 =
            0.5 * (c2 - c1 * c1 / 2.0) * tau + (c1 * c1 / 4.0) * (3.0 * tau * tau);
        CHECK(near(composed.coeff(0), cplx(1.0), 1e-12));
        CHECK(near(composed.coeff(1), z1, 1e-12));
        CHECK(near(composed.coeff(2), z2, 1e-12));
    }
}

TEST_CASE("composition with the identity changes nothing") {
    CounterRng rng(17, 0);
    const TruncSeries s = random_series(rng, 6);
    const TruncSeries c = compose(s, TruncSeries::identity(6));
    for (std::size_t k = 0; k <= 6; ++k)
        CHECK(near(c.coeff(k), s.coeff(k), 1e-12));
}

TEST_CASE("composition with z^2 spreads coefficients") {
    const TruncSeries geom{1.0, 1.0, 1.0, 1.0, 1.0}; // 1/(1-z) truncated
    const TruncSeries zsq{0.0, 0.0, 1.0, 0.0, 0.0};
    const TruncSeries c = compose(geom, zsq);
    CHECK(near(c.coeff(0), cplx(1.0), 1e-12));
    CHECK(near(c.coeff(1), cplx(0.0), 1e-12));
    CHECK(near(c.coeff(2), cplx(1.0), 1e-12));
    CHECK(near(c.coeff(3), cplx(0.0), 1e-12));
    CHECK(near(c.coeff(4), cplx(1.0), 1e-12));
}

TEST_CASE("composition requires a vanishing inner constant term") {
    CHECK_THROWS_AS(compose(TruncSeries::one(2), TruncSeries{0.5, 1.0, 0.0}),
                    gft::ComposeNotLocal);
}

TEST_CASE("normalization is validated") {
    CHECK_THROWS_AS(NormalizedFn(TruncSeries{0.1, 1.0, 0.0}),
                    gft::NotNormalized);
    CHECK_THROWS_AS(NormalizedFn(TruncSeries{0.0, 0.9, 0.0}),
                    gft::NotNormalized);
    CHECK_THROWS_AS(NormalizedFn::from_initial_coeffs(0.1, 0.2, 2),
                    std::invalid_argument);
    const NormalizedFn f = NormalizedFn::from_initial_coeffs(0.1, 0.2, 5);
    CHECK(f.order() == 5);
    CHECK(f.series().coeff(1) == cplx(1.0));
    CHECK(f.series().coeff(2) == cplx(0.1));
    CHECK(f.series().coeff(4) == cplx(0.0));
}

TEST_CASE("inverse series of a cubic truncation") {
    const NormalizedFn f = NormalizedFn::from_initial_coeffs(0.1, 0.05, 3);
    const NormalizedFn g = revert(f);
    CHECK(near(g.series().coeff(1), cplx(1.0), 1e-14));
    CHECK(near(g.series().coeff(2), cplx(-0.1), 1e-14));
    CHECK(near(g.series().coeff(3), cplx(-0.03), 1e-14));

    const NormalizedFn id = revert(NormalizedFn(TruncSeries::identity(4)));
    for (std::size_t k = 0; k <= 4; ++k)
        CHECK(near(id.series().coeff(k), TruncSeries::identity(4).coeff(k), 1e-14));
}

TEST_CASE("inverse series round-trips both ways") {
    CounterRng rng(18, 0);
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<cplx> c(9);
        c[0] = 0.0;
        c[1] = 1.0;
        for (std::size_t k = 2; k < c.size(); ++k) c[k] = 0.5 * disk_draw(rng);
        const NormalizedFn f{TruncSeries(std::move(c))};
        const NormalizedFn g = revert(f);
        const TruncSeries fg = compose(f.series(), g.series());
        const TruncSeries gf = compose(g.series(), f.series());
        const TruncSeries id = TruncSeries::identity(8);
        for (std::size_t k = 0; k <= 8; ++k) {
            CHECK(near(fg.coeff(k), id.coeff(k), 1e-9));
            CHECK(near(gf.coeff(k), id.coeff(k), 1e-9));
        }
    }
}

TEST_CASE("inverse series first coefficients follow the quadratic law") {
    CounterRng rng(19, 0);
    for (int trial = 0; trial < 100; ++trial) {
        const cplx a2 = disk_draw(rng);
        const cplx a3 = disk_draw(rng);
        const NormalizedFn g = revert(NormalizedFn::from_initial_coeffs(a2, a3, 3));
        CHECK(near(g.series().coeff(2), -a2, 1e-10));
        CHECK(near(g.series().coeff(3), 2.0 * a2 * a2 - a3, 1e-10));
    }
}

TEST_CASE("evaluation is plain Horner") {
    CHECK(eval(TruncSeries{1.0, 1.0, 1.0}, cplx(0.0)) == cplx(1.0));
    CHECK(near(eval(TruncSeries{1.0, -1.0}, cplx(1.0)), cplx(0.0), 1e-15));

    // High-order truncation of the golden-ratio rational vs its closed form.
    std::vector<cplx> num(41), den(41);
    num[0] = 1.0;
    num[2] = tau * tau;
    den[0] = 1.0;
    den[1] = -tau;
    den[2] = -tau * tau;
    const TruncSeries p = div(TruncSeries(std::move(num)), TruncSeries(std::move(den)));
    const cplx z(0.3, 0.0);
    const cplx closed = (1.0 + tau * tau * z * z) / (1.0 - tau * z - tau * tau * z * z);
    CHECK(near(eval(p, z), closed, 1e-9));
}
