#include "gft/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include <json.hpp>

#include "gft/caratheodory.hpp"
#include "gft/pseudo.hpp"
#include "gft/rng.hpp"
#include "gft/series.hpp"
#include "gft/shell.hpp"

namespace gft::verify {

namespace {

using series::cplx;
using series::TruncSeries;

using Clock = std::chrono::steady_clock;

bool within(cplx got, cplx expected, double tol) {
    return std::abs(got - expected) <= tol * std::max(1.0, std::abs(expected));
}

/// Uniform draw from the closed unit disk.
cplx disk_draw(CounterRng& rng) {
    const double two_pi = 2.0 * std::acos(-1.0);
    return std::polar(std::sqrt(rng.next_unit()), two_pi * rng.next_unit());
}

struct Tuple {
    cplx c2;
    cplx d2;
};

void check_tuple(const Tuple& t, double lambda, double mu, VerifyReport& report) {
    const pseudo::CoeffSolution sol = pseudo::solve_coeffs(t.c2, t.d2, lambda);
    const double a2_abs = std::sqrt(std::abs(sol.a2_sq));
    const double a3_abs = std::abs(sol.a3);
    const double fs_abs = std::abs(pseudo::fs_functional(sol, mu));

    const double ratio_a2 = a2_abs / pseudo::bound_a2(lambda);
    const double ratio_a3 = a3_abs / pseudo::bound_a3(lambda);
    const double ratio_fs = fs_abs / pseudo::fs_envelope(mu, lambda);

    report.max_ratio_a2 = std::max(report.max_ratio_a2, ratio_a2);
    report.max_ratio_a3 = std::max(report.max_ratio_a3, ratio_a3);
    report.max_ratio_fs = std::max(report.max_ratio_fs, ratio_fs);
    if (ratio_a2 > 1.0 + ratio_slack) report.violations += 1;
    if (ratio_a3 > 1.0 + ratio_slack) report.violations += 1;
    if (ratio_fs > 1.0 + ratio_slack) report.violations += 1;
    if (fs_abs > pseudo::fs_bound(mu, lambda) * (1.0 + 1e-12))
        report.flagged_fs_tuples += 1;
    report.samples += 1;
}

} // namespace

std::string VerifyReport::json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["seed"] = seed;
    j["samples"] = samples;
    j["violations"] = violations;
    j["max_ratio_a2"] = max_ratio_a2;
    j["max_ratio_a3"] = max_ratio_a3;
    j["max_ratio_fs"] = max_ratio_fs;
    j["flagged_fs_tuples"] = flagged_fs_tuples;
    return j.dump();
}

VerifyReport verify_bounds(const std::vector<double>& lambda_grid,
                           const std::vector<double>& mu_grid,
                           std::size_t samples, std::uint64_t seed) {
    const auto start = Clock::now();
    VerifyReport report;
    report.suite = "bounds";
    report.seed = seed;

    std::uint64_t cell = 0;
    for (const double lambda : lambda_grid) {
        for (const double mu : mu_grid) {
            CounterRng rng(seed, cell);
            cell += 1;
            check_tuple({cplx(2.0, 0.0), cplx(2.0, 0.0)}, lambda, mu, report);
            check_tuple({cplx(2.0, 0.0), cplx(-2.0, 0.0)}, lambda, mu, report);
            for (std::size_t s = 0; s < samples; ++s) {
                const auto hc =
                    caratheodory::CaratheodoryFn::sample(rng, caratheodory::max_atoms_cap);
                const auto hd =
                    caratheodory::CaratheodoryFn::sample(rng, caratheodory::max_atoms_cap);
                check_tuple({hc.coeffs(2).coeff(2), hd.coeffs(2).coeff(2)},
                            lambda, mu, report);
            }
        }
    }
    report.elapsed = Clock::now() - start;
    return report;
}

VerifyReport verify_expansions(std::size_t trials, std::uint64_t seed,
                               std::size_t order) {
    if (order < 3)
        throw std::invalid_argument("verify_expansions: order must be >= 3");
    const auto start = Clock::now();
    VerifyReport report;
    report.suite = "expansions";
    report.seed = seed;

    const double tau = shell::golden().tau;
    const TruncSeries ptilde = shell::ptilde_series(order);
    const double p1 = shell::ptilde_coeff(1);
    const double p2 = shell::ptilde_coeff(2);
    CounterRng rng(seed, 0);

    for (std::size_t trial = 0; trial < trials; ++trial) {
        const cplx a2 = disk_draw(rng);
        const cplx a3 = disk_draw(rng);
        const double lambda = 1.0 + 3.0 * rng.next_unit();
        const auto f = series::NormalizedFn::from_initial_coeffs(a2, a3, order + 1);

        std::size_t bad = 0;

        // z-side and w-side expansions against their closed forms.
        const TruncSeries lhs = pseudo::lhs_series(f, lambda, order);
        const cplx lhs1 = (2.0 * lambda - 1.0) * a2;
        const cplx lhs2 = (3.0 * lambda - 1.0) * a3 +
                          (2.0 * lambda * lambda - 4.0 * lambda + 1.0) * a2 * a2;
        bad += !within(lhs.coeff(1), lhs1, 1e-9);
        bad += !within(lhs.coeff(2), lhs2, 1e-9);

        const TruncSeries ghs = pseudo::ghs_series(f, lambda, order);
        const cplx ghs1 = -(2.0 * lambda - 1.0) * a2;
        const cplx ghs2 = (2.0 * lambda * lambda + 2.0 * lambda - 1.0) * a2 * a2 -
                          (3.0 * lambda - 1.0) * a3;
        bad += !within(ghs.coeff(1), ghs1, 1e-9);
        bad += !within(ghs.coeff(2), ghs2, 1e-9);

        // At lambda = 1 the z-side is the classical z f'/f expansion.
        const TruncSeries starlike = pseudo::lhs_series(f, 1.0, order);
        bad += !within(starlike.coeff(1), a2, 1e-9);
        bad += !within(starlike.coeff(2), 2.0 * a3 - a2 * a2, 1e-9);

        // Inversion law for the first two inverse coefficients.
        const auto g = series::revert(f);
        bad += !within(g.series().coeff(2), -a2, 1e-10);
        bad += !within(g.series().coeff(3), 2.0 * a2 * a2 - a3, 1e-10);

        // Composed series p = ptilde(u) against the closed-form coefficients,
        // then coefficient matching back to (a2, a3).
        const auto h = caratheodory::CaratheodoryFn::sample(rng, caratheodory::max_atoms_cap);
        const TruncSeries c = h.coeffs(order);
        const auto u = caratheodory::schwarz_from_h(c);
        const TruncSeries p = series::compose(ptilde, u.series());
        const cplx c1 = c.coeff(1), c2 = c.coeff(2);
        const cplx p_z = p1 * c1 / 2.0;
        const cplx p_z2 = 0.5 * (c2 - c1 * c1 / 2.0) * p1 + (c1 * c1 / 4.0) * p2;
        bad += !within(p.coeff(1), p_z, 1e-9);
        bad += !within(p.coeff(2), p_z2, 1e-9);

        const cplx a2_m = p.coeff(1) / (2.0 * lambda - 1.0);
        const cplx a3_m =
            (p.coeff(2) - (2.0 * lambda * lambda - 4.0 * lambda + 1.0) * a2_m * a2_m) /
            (3.0 * lambda - 1.0);
        const auto fm = series::NormalizedFn::from_initial_coeffs(a2_m, a3_m, order + 1);
        const TruncSeries lhs_m = pseudo::lhs_series(fm, lambda, order);
        bad += !within(lhs_m.coeff(1), p.coeff(1), 1e-9);
        bad += !within(lhs_m.coeff(2), p.coeff(2), 1e-9);

        // Matched coefficients also satisfy the tau-weighted forms directly.
        bad += !within((2.0 * lambda - 1.0) * a2_m, c1 * tau / 2.0, 1e-9);

        report.violations += bad;
        report.samples += 1;
    }
    report.elapsed = Clock::now() - start;
    return report;
}

VerifyReport verify_shell(const ShellGrids& grids, std::uint64_t seed) {
    const auto start = Clock::now();
    VerifyReport report;
    report.suite = "shell";
    report.seed = seed;

    const auto& g = shell::golden();
    auto check = [&report](bool ok) {
        report.samples += 1;
        if (!ok) report.violations += 1;
    };

    // Golden-section identities.
    check(std::abs(g.tau * g.tau - (1.0 + g.tau)) <= 1e-12);
    check(std::abs(1.0 / std::abs(g.tau) - std::abs(g.tau) / (1.0 - std::abs(g.tau))) <=
          1e-12);

    // Pinned evaluation points.
    check(std::abs(shell::ptilde_eval(0.0) - 1.0) <= 1e-12);
    check(std::abs(shell::ptilde_eval(-1.0 / (2.0 * g.tau)) - 1.0) <= 1e-12);
    const cplx on_circle = shell::ptilde_eval(std::polar(1.0, std::acos(0.25)));
    check(std::abs(on_circle - std::sqrt(5.0) / 5.0) <= 1e-9);

    // Binet form vs exact recurrence.
    for (std::size_t n = 1; n <= grids.fib_max; ++n) {
        const double exact = static_cast<double>(shell::fib(n));
        check(std::abs(shell::fib_closed_form(n) - exact) <= 1e-9 * exact);
    }

    // tau^n = u_n tau + u_{n-1}.
    for (std::size_t n = 1; n <= grids.tau_max; ++n)
        check(shell::tau_power_identity(n) <= 1e-9);

    // Coefficient law vs the series quotient route.
    {
        const double tau = g.tau;
        const std::size_t n = std::min(grids.coeff_max, series::max_order);
        std::vector<cplx> num(n + 1), den(n + 1);
        num[0] = 1.0;
        if (n >= 2) num[2] = tau * tau;
        den[0] = 1.0;
        if (n >= 1) den[1] = -tau;
        if (n >= 2) den[2] = -tau * tau;
        const TruncSeries quotient =
            series::div(TruncSeries(std::move(num)), TruncSeries(std::move(den)));
        const TruncSeries law = shell::ptilde_series(n);
        for (std::size_t k = 0; k <= n; ++k)
            check(std::abs(quotient.coeff(k) - law.coeff(k)) <= 1e-9);
    }

    // Grid minimum of the real part.
    check(shell::min_re_on_grid(grids.r_max, grids.radial, grids.angular) >=
          std::sqrt(5.0) / 10.0 - 1e-9);

    // Curve residuals on the unit circle outside the exclusion window.
    for (const auto& pt : shell::curve_samples(1.0, grids.curve_count, grids.exclusion))
        check(shell::curve_residual(pt.x, pt.y) <= 1e-6);

    report.elapsed = Clock::now() - start;
    return report;
}

} // namespace gft::verify
