#ifndef GFT_SERIES_HPP
#define GFT_SERIES_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "gft/errors.hpp"

namespace gft::series {

using cplx = std::complex<double>;

/// Tolerance absorbed by coefficient-level identities (rounding only; the
/// identities are exact in exact arithmetic).
inline constexpr double tol_alg = 1e-9;

/// A divisor series with constant term below this magnitude is singular.
inline constexpr double tol_div = 1e-12;

/// Default and maximum truncation orders.
inline constexpr std::size_t default_order = 16;
inline constexpr std::size_t max_order = 64;

/// Truncated complex power series: coeffs[k] multiplies z^k and all
/// arithmetic is exact modulo z^{order+1}. Values are immutable after
/// construction; every operation returns a fresh series.
class TruncSeries {
public:
    /// Zero series of order 0.
    TruncSeries() : coeffs_(1) {}

    /// Zero series of the given order.
    explicit TruncSeries(std::size_t order) : coeffs_(order + 1) {}

    /// Series with the given coefficients; order = coeffs.size() - 1.
    explicit TruncSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.resize(1);
    }

    TruncSeries(std::initializer_list<cplx> coeffs)
        : TruncSeries(std::vector<cplx>(coeffs)) {}

    std::size_t order() const { return coeffs_.size() - 1; }

    /// Coefficient of z^k; zero beyond the truncation order.
    cplx coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : cplx{};
    }

    const std::vector<cplx>& coeffs() const { return coeffs_; }

    /// Copy at a new order: drops high coefficients or zero-pads.
    TruncSeries truncated(std::size_t new_order) const;

    /// Constant series 1 at the given order.
    static TruncSeries one(std::size_t order);

    /// The series z at the given order (order >= 1).
    static TruncSeries identity(std::size_t order);

private:
    std::vector<cplx> coeffs_;
};

TruncSeries add(const TruncSeries& a, const TruncSeries& b);
TruncSeries sub(const TruncSeries& a, const TruncSeries& b);
TruncSeries scale(const TruncSeries& a, cplx factor);

/// Cauchy product truncated at the common order.
/// Requires a.order() == b.order().
TruncSeries mul(const TruncSeries& a, const TruncSeries& b);

/// Series quotient: mul(div(a,b), b) == a to the common order.
/// Requires |b(0)| > tol_div, else DivisionBySingularSeries.
TruncSeries div(const TruncSeries& a, const TruncSeries& b);

/// Formal derivative; order decreases by one (a constant maps to the
/// zero series of order 0).
TruncSeries deriv(const TruncSeries& a);

/// a^exponent = exp(exponent * log a) with the principal branch anchored at
/// constant term 1. Requires |a(0) - 1| <= tol_alg, else PowBaseNotUnit;
/// the input is rescaled by its constant term so the log is anchored at
/// exactly 1.
TruncSeries pow_real(const TruncSeries& a, double exponent);

/// outer(inner(z)) truncated at the common order, Horner-on-series.
/// Requires |inner(0)| negligible, else ComposeNotLocal.
TruncSeries compose(const TruncSeries& outer, const TruncSeries& inner);

/// Horner evaluation of the truncated polynomial.
cplx eval(const TruncSeries& a, cplx z);

/// Series normalized by f(0)=0, f'(0)=1 (coefficient-level).
class NormalizedFn {
public:
    explicit NormalizedFn(TruncSeries s);

    /// z + a2 z^2 + a3 z^3 padded with zeros up to `order` (order >= 3).
    static NormalizedFn from_initial_coeffs(cplx a2, cplx a3, std::size_t order);

    const TruncSeries& series() const { return series_; }
    std::size_t order() const { return series_.order(); }

private:
    TruncSeries series_;
};

/// Compositional inverse: compose(f, revert(f)) == z to the truncation
/// order, solved order by order. First coefficients satisfy b2 = -a2,
/// b3 = 2 a2^2 - a3.
NormalizedFn revert(const NormalizedFn& f);

} // namespace gft::series

#endif
