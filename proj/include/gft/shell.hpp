#ifndef GFT_SHELL_HPP
#define GFT_SHELL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "gft/series.hpp"

namespace gft::shell {

/// 128-bit integers hold every Fibonacci number up to the capacity index.
using uint128 = unsigned __int128;

/// Largest index the exact Fibonacci machinery accepts.
inline constexpr std::size_t fib_max_index = 180;

/// Rational evaluation refuses denominators below this magnitude.
inline constexpr double tol_sing = 1e-8;

/// Constants of the golden section: tau = (1-sqrt5)/2 (negative root of
/// t^2 = 1+t), phi = 1-tau, and r0 = (3-sqrt5)/2, the radius below which the
/// image of the circle |z|=r under the shell function stays a simple closed
/// curve.
struct GoldenConstants {
    double tau;
    double phi;
    double r0;
};

/// Canonical double-precision instance.
const GoldenConstants& golden();

/// Extended-precision tau for residual measurements.
long double golden_tau_l();

/// Exact Fibonacci numbers u_0..u_n with u_0=0, u_1=1, u_{n+2}=u_n+u_{n+1}.
class FibSequence {
public:
    /// Builds u_0..u_n; n <= fib_max_index, else FibOverflow.
    explicit FibSequence(std::size_t n);

    std::size_t size() const { return values_.size(); }
    uint128 value(std::size_t k) const { return values_.at(k); }

private:
    std::vector<uint128> values_;
};

/// Exact u_n by the recurrence; n <= fib_max_index, else FibOverflow.
uint128 fib(std::size_t n);

/// Decimal rendering (values exceed unsigned long long past n = 93).
std::string uint128_str(uint128 v);

/// Binet form ((1-tau)^n - tau^n)/sqrt(5); cross-check only, degrades in
/// double precision past n ~ 70.
double fib_closed_form(std::size_t n);

/// Residual |tau^n - (u_n tau + u_{n-1})|, measured in extended precision.
/// Stays below 1e-9 for n <= 40. Requires 1 <= n <= 70.
double tau_power_identity(std::size_t n);

/// n-th coefficient of the shell function: (u_{n-1} + u_{n+1}) tau^n for
/// n >= 1, and 1 for n = 0. Requires n <= 70.
double ptilde_coeff(std::size_t n);

/// Shell function as a truncated series, coefficients from ptilde_coeff.
/// Agrees with the quotient (1 + tau^2 z^2) / (1 - tau z - tau^2 z^2).
/// Requires order <= series::max_order.
series::TruncSeries ptilde_series(std::size_t order);

/// Rational evaluation (1 + tau^2 z^2) / (1 - tau z - tau^2 z^2).
/// Throws PoleProximity when the denominator magnitude is <= tol_sing
/// (z = -1 is the singular boundary point).
series::cplx ptilde_eval(series::cplx z);

/// |(10x - sqrt5) y^2 - (sqrt5 - 2x) (sqrt5 x - 1)^2|: deviation of (x, y)
/// from the curve traced by the shell function on the unit circle.
double curve_residual(double x, double y);

struct CurvePoint {
    double t;
    double x;
    double y;
};

/// Samples of the shell function on |z| = r at `count` uniform angles in
/// [0, 2pi). For r = 1 the window |t - pi| < exclusion around the pole is
/// skipped and exclusion must be >= 1e-3. Requires 0 < r <= 1.
std::vector<CurvePoint> curve_samples(double r, std::size_t count, double exclusion);

/// Minimum of Re ptilde over the polar grid r_j = r_max j/radial
/// (j = 0..radial), t_k = 2pi k/angular. Requires r_max < 1.
/// Never falls below sqrt(5)/10 on any such grid.
double min_re_on_grid(double r_max, std::size_t radial, std::size_t angular);

} // namespace gft::shell

#endif
