#include "gft/shell.hpp"

#include <algorithm>
#include <cmath>

#include "gft/errors.hpp"

namespace gft::shell {

const GoldenConstants& golden() {
    static const GoldenConstants g = [] {
        const double tau = (1.0 - std::sqrt(5.0)) / 2.0;
        return GoldenConstants{tau, 1.0 - tau, (3.0 - std::sqrt(5.0)) / 2.0};
    }();
    return g;
}

long double golden_tau_l() {
    static const long double tau = (1.0L - sqrtl(5.0L)) / 2.0L;
    return tau;
}

FibSequence::FibSequence(std::size_t n) {
    if (n > fib_max_index)
        throw FibOverflow("FibSequence: index " + std::to_string(n) +
                          " exceeds exact capacity " + std::to_string(fib_max_index));
    values_.resize(n + 1);
    values_[0] = 0;
    if (n >= 1) values_[1] = 1;
    for (std::size_t k = 2; k <= n; ++k) values_[k] = values_[k - 1] + values_[k - 2];
}

uint128 fib(std::size_t n) {
    if (n > fib_max_index)
        throw FibOverflow("fib: index " + std::to_string(n) +
                          " exceeds exact capacity " + std::to_string(fib_max_index));
    uint128 a = 0, b = 1;
    for (std::size_t k = 0; k < n; ++k) {
        const uint128 next = a + b;
        a = b;
        b = next;
    }
    return a;
}

std::string uint128_str(uint128 v) {
    if (v == 0) return "0";
    std::string out;
    while (v != 0) {
        out.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

double fib_closed_form(std::size_t n) {
    const double tau = golden().tau;
    const double phi = golden().phi;
    return (std::pow(phi, static_cast<double>(n)) -
            std::pow(tau, static_cast<double>(n))) /
           std::sqrt(5.0);
}

double tau_power_identity(std::size_t n) {
    if (n < 1 || n > 70)
        throw std::invalid_argument("tau_power_identity: n must be in [1, 70]");
    const long double tau = golden_tau_l();
    const long double un = static_cast<long double>(fib(n));
    const long double un1 = static_cast<long double>(fib(n - 1));
    const long double lhs = powl(tau, static_cast<long double>(n));
    return static_cast<double>(fabsl(lhs - (un * tau + un1)));
}

double ptilde_coeff(std::size_t n) {
    if (n == 0) return 1.0;
    if (n > 70)
        throw std::invalid_argument("ptilde_coeff: n must be <= 70 (Lucas numbers "
                                    "stay exact in double up to there)");
    // u_{n-1} + u_{n+1} is the n-th Lucas number, exact in double for n <= 70.
    const double lucas = static_cast<double>(fib(n - 1) + fib(n + 1));
    return lucas * std::pow(golden().tau, static_cast<double>(n));
}

series::TruncSeries ptilde_series(std::size_t order) {
    if (order > series::max_order)
        throw std::invalid_argument("ptilde_series: order must be <= " +
                                    std::to_string(series::max_order));
    std::vector<series::cplx> out(order + 1);
    out[0] = 1.0;
    for (std::size_t n = 1; n <= order; ++n) out[n] = ptilde_coeff(n);
    return series::TruncSeries(std::move(out));
}

series::cplx ptilde_eval(series::cplx z) {
    const double tau = golden().tau;
    const double tau2 = tau * tau;
    const series::cplx den = 1.0 - tau * z - tau2 * z * z;
    if (std::abs(den) <= tol_sing)
        throw PoleProximity("ptilde_eval: denominator magnitude " +
                            std::to_string(std::abs(den)) + " below tol_sing");
    return (1.0 + tau2 * z * z) / den;
}

double curve_residual(double x, double y) {
    const long double s5 = sqrtl(5.0L);
    const long double lx = x, ly = y;
    const long double lhs = (10.0L * lx - s5) * ly * ly;
    const long double root = s5 * lx - 1.0L;
    const long double rhs = (s5 - 2.0L * lx) * root * root;
    return static_cast<double>(fabsl(lhs - rhs));
}

std::vector<CurvePoint> curve_samples(double r, std::size_t count, double exclusion) {
    if (!(r > 0.0) || r > 1.0)
        throw std::invalid_argument("curve_samples: r must satisfy 0 < r <= 1");
    const bool boundary = (r == 1.0);
    if (boundary && exclusion < 1e-3)
        throw std::invalid_argument("curve_samples: exclusion must be >= 1e-3 at r = 1");
    const double two_pi = 2.0 * std::acos(-1.0);
    std::vector<CurvePoint> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const double t = two_pi * static_cast<double>(k) / static_cast<double>(count);
        if (boundary && std::abs(t - two_pi / 2.0) < exclusion) continue;
        const series::cplx p = ptilde_eval(std::polar(r, t));
        out.push_back({t, p.real(), p.imag()});
    }
    return out;
}

double min_re_on_grid(double r_max, std::size_t radial, std::size_t angular) {
    if (!(r_max < 1.0))
        throw std::invalid_argument("min_re_on_grid: r_max must be < 1");
    const double two_pi = 2.0 * std::acos(-1.0);
    const std::size_t nt = std::max<std::size_t>(angular, 1);
    double best = ptilde_eval(0.0).real();
    for (std::size_t j = 0; j <= radial; ++j) {
        const double r = radial == 0
                             ? 0.0
                             : r_max * static_cast<double>(j) / static_cast<double>(radial);
        for (std::size_t k = 0; k < nt; ++k) {
            const double t = two_pi * static_cast<double>(k) / static_cast<double>(nt);
            best = std::min(best, ptilde_eval(std::polar(r, t)).real());
        }
    }
    return best;
}

} // namespace gft::shell
