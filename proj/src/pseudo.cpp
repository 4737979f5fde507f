#include "gft/pseudo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "gft/errors.hpp"
#include "gft/shell.hpp"

namespace gft::pseudo {

namespace {

void require_lambda(double lambda) {
    if (!(lambda >= 1.0))
        throw LambdaOutOfRange("lambda must satisfy lambda >= 1, got " +
                               std::to_string(lambda));
}

/// f(z)/z for a normalized f padded to `order`+1: drops the zero constant.
TruncSeries shift_down(const TruncSeries& f, std::size_t order) {
    std::vector<cplx> out(order + 1);
    for (std::size_t k = 0; k <= order; ++k) out[k] = f.coeff(k + 1);
    return TruncSeries(std::move(out));
}

} // namespace

ClassParams::ClassParams(double lambda, double mu) : lambda_(lambda), mu_(mu) {
    require_lambda(lambda);
    if (!(denom(lambda) > 0.0))
        throw LambdaOutOfRange("denominator D(lambda) is not positive");
}

double denom(double lambda) {
    require_lambda(lambda);
    const double tau = shell::golden().tau;
    const double m = 2.0 * lambda - 1.0;
    return m * m - (10.0 * lambda * lambda - 11.0 * lambda + 3.0) * tau;
}

TruncSeries lhs_series(const NormalizedFn& f, double lambda, std::size_t order) {
    require_lambda(lambda);
    const TruncSeries padded = f.series().truncated(order + 1);
    const TruncSeries fprime = series::deriv(padded);
    const TruncSeries f_over_z = shift_down(padded, order);
    return series::div(series::pow_real(fprime, lambda), f_over_z);
}

TruncSeries ghs_series(const NormalizedFn& f, double lambda, std::size_t order) {
    require_lambda(lambda);
    const NormalizedFn g = series::revert(
        NormalizedFn(f.series().truncated(std::max(order + 1, f.order()))));
    return lhs_series(g, lambda, order);
}

CoeffSolution solve_coeffs(cplx c2, cplx d2, double lambda) {
    require_lambda(lambda);
    const double tau = shell::golden().tau;
    const cplx a2_sq = (c2 + d2) * (tau * tau) / (4.0 * denom(lambda));
    const cplx a3 = a2_sq + (c2 - d2) * tau / (4.0 * (3.0 * lambda - 1.0));
    return CoeffSolution{a2_sq, a3, c2, d2, lambda};
}

double bound_a2(double lambda) {
    return std::abs(shell::golden().tau) / std::sqrt(denom(lambda));
}

double bound_a2_simple(double lambda) {
    require_lambda(lambda);
    return std::abs(shell::golden().tau) / (2.0 * lambda - 1.0);
}

double bound_a3(double lambda) {
    const double tau = shell::golden().tau;
    const double m = 2.0 * lambda - 1.0;
    const double numerator =
        std::abs(tau) * (m * m - 2.0 * (5.0 * lambda * lambda - 4.0 * lambda + 1.0) * tau);
    return numerator / ((3.0 * lambda - 1.0) * denom(lambda));
}

double fs_h(double mu, double lambda) {
    const double tau = shell::golden().tau;
    return (1.0 - mu) * tau * tau / (4.0 * denom(lambda));
}

double fs_threshold(double lambda) {
    require_lambda(lambda);
    return std::abs(shell::golden().tau) / (4.0 * (3.0 * lambda - 1.0));
}

double fs_bound(double mu, double lambda) {
    const double h = std::abs(fs_h(mu, lambda));
    const double threshold = fs_threshold(lambda);
    return h <= threshold ? threshold : 4.0 * h;
}

double fs_envelope(double mu, double lambda) {
    const double h = fs_h(mu, lambda);
    const double threshold = fs_threshold(lambda);
    return 2.0 * std::abs(h + threshold) + 2.0 * std::abs(h - threshold);
}

cplx fs_functional(const CoeffSolution& sol, double mu) {
    return sol.a3 - mu * sol.a2_sq;
}

cplx fs_decomposition(cplx c2, cplx d2, double mu, double lambda) {
    const double tau = shell::golden().tau;
    const double h = fs_h(mu, lambda);
    const double s = tau / (4.0 * (3.0 * lambda - 1.0));
    return (h + s) * c2 + (h - s) * d2;
}

cplx fs_decomposition_abs_tau(cplx c2, cplx d2, double mu, double lambda) {
    const double h = fs_h(mu, lambda);
    const double t = fs_threshold(lambda);
    return (h + t) * c2 + (h - t) * d2;
}

BoundSet make_bounds(const ClassParams& params) {
    const double lambda = params.lambda();
    const double mu = params.mu();
    BoundSet b{bound_a2(lambda),   bound_a2_simple(lambda), bound_a3(lambda),
               fs_bound(mu, lambda), fs_h(mu, lambda),      fs_threshold(lambda)};
    if (!(b.a2_bound <= b.a2_simple_bound) || !(b.a2_bound > 0.0) ||
        !(b.a3_bound > 0.0) || !(b.fs_bound > 0.0) || !std::isfinite(b.a3_bound))
        throw std::logic_error("make_bounds: bound invariants violated");
    return b;
}

} // namespace gft::pseudo
