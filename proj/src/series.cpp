#include "gft/series.hpp"

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>

namespace gft::series {

namespace {

void require_same_order(const TruncSeries& a, const TruncSeries& b, const char* op) {
    if (a.order() != b.order())
        throw OrderMismatch(std::string(op) + ": operand orders differ (" +
                            std::to_string(a.order()) + " vs " +
                            std::to_string(b.order()) + ")");
}

/// log of a series with constant term exactly 1, via (log a)' = a'/a
/// integrated term by term.
TruncSeries log_unit(const TruncSeries& a) {
    const std::size_t n = a.order();
    std::vector<cplx> out(n + 1);
    if (n == 0) return TruncSeries(std::move(out));
    const TruncSeries q = div(deriv(a), a.truncated(n - 1));
    for (std::size_t k = 1; k <= n; ++k)
        out[k] = q.coeff(k - 1) / static_cast<double>(k);
    return TruncSeries(std::move(out));
}

/// exp of a series with zero constant term:
/// k e_k = sum_{j=1..k} j b_j e_{k-j}.
TruncSeries exp_local(const TruncSeries& b) {
    const std::size_t n = b.order();
    std::vector<cplx> out(n + 1);
    out[0] = 1.0;
    for (std::size_t k = 1; k <= n; ++k) {
        cplx acc = 0.0;
        for (std::size_t j = 1; j <= k; ++j)
            acc += static_cast<double>(j) * b.coeff(j) * out[k - j];
        out[k] = acc / static_cast<double>(k);
    }
    return TruncSeries(std::move(out));
}

} // namespace

TruncSeries TruncSeries::truncated(std::size_t new_order) const {
    std::vector<cplx> out(new_order + 1);
    const std::size_t keep = std::min(new_order, order());
    for (std::size_t k = 0; k <= keep; ++k) out[k] = coeffs_[k];
    return TruncSeries(std::move(out));
}

TruncSeries TruncSeries::one(std::size_t order) {
    std::vector<cplx> out(order + 1);
    out[0] = 1.0;
    return TruncSeries(std::move(out));
}

TruncSeries TruncSeries::identity(std::size_t order) {
    std::vector<cplx> out(order + 1);
    if (order >= 1) out[1] = 1.0;
    return TruncSeries(std::move(out));
}

TruncSeries add(const TruncSeries& a, const TruncSeries& b) {
    require_same_order(a, b, "add");
    std::vector<cplx> out(a.order() + 1);
    for (std::size_t k = 0; k <= a.order(); ++k) out[k] = a.coeff(k) + b.coeff(k);
    return TruncSeries(std::move(out));
}

TruncSeries sub(const TruncSeries& a, const TruncSeries& b) {
    require_same_order(a, b, "sub");
    std::vector<cplx> out(a.order() + 1);
    for (std::size_t k = 0; k <= a.order(); ++k) out[k] = a.coeff(k) - b.coeff(k);
    return TruncSeries(std::move(out));
}

TruncSeries scale(const TruncSeries& a, cplx factor) {
    std::vector<cplx> out(a.order() + 1);
    for (std::size_t k = 0; k <= a.order(); ++k) out[k] = factor * a.coeff(k);
    return TruncSeries(std::move(out));
}

TruncSeries mul(const TruncSeries& a, const TruncSeries& b) {
    require_same_order(a, b, "mul");
    const std::size_t n = a.order();
    std::vector<cplx> out(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        cplx acc = 0.0;
        for (std::size_t j = 0; j <= k; ++j) acc += a.coeff(j) * b.coeff(k - j);
        out[k] = acc;
    }
    return TruncSeries(std::move(out));
}

TruncSeries div(const TruncSeries& a, const TruncSeries& b) {
    require_same_order(a, b, "div");
    const cplx b0 = b.coeff(0);
    if (std::abs(b0) <= tol_div)
        throw DivisionBySingularSeries("div: divisor constant term magnitude " +
                                       std::to_string(std::abs(b0)) +
                                       " below tol_div");
    const std::size_t n = a.order();
    std::vector<cplx> out(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        cplx acc = a.coeff(k);
        for (std::size_t j = 1; j <= k; ++j) acc -= b.coeff(j) * out[k - j];
        out[k] = acc / b0;
    }
    return TruncSeries(std::move(out));
}

TruncSeries deriv(const TruncSeries& a) {
    if (a.order() == 0) return TruncSeries(std::size_t{0});
    std::vector<cplx> out(a.order());
    for (std::size_t k = 0; k < a.order(); ++k)
        out[k] = static_cast<double>(k + 1) * a.coeff(k + 1);
    return TruncSeries(std::move(out));
}

TruncSeries pow_real(const TruncSeries& a, double exponent) {
    const cplx a0 = a.coeff(0);
    if (std::abs(a0 - 1.0) > tol_alg)
        throw PowBaseNotUnit("pow_real: constant term " + std::to_string(a0.real()) +
                             (a0.imag() < 0 ? "-" : "+") +
                             std::to_string(std::abs(a0.imag())) + "i is not 1");
    // Anchor the constant term at exactly 1, then restore a0^exponent.
    std::vector<cplx> unit(a.order() + 1);
    unit[0] = 1.0;
    for (std::size_t k = 1; k <= a.order(); ++k) unit[k] = a.coeff(k) / a0;
    const TruncSeries body =
        exp_local(scale(log_unit(TruncSeries(std::move(unit))), exponent));
    const cplx lead = std::exp(exponent * std::log(a0));
    return scale(body, lead);
}

TruncSeries compose(const TruncSeries& outer, const TruncSeries& inner) {
    require_same_order(outer, inner, "compose");
    if (std::abs(inner.coeff(0)) > 1e-12)
        throw ComposeNotLocal("compose: inner constant term magnitude " +
                              std::to_string(std::abs(inner.coeff(0))) +
                              " is not 0");
    const std::size_t n = outer.order();
    std::vector<cplx> acc(n + 1);
    acc[0] = outer.coeff(n);
    for (std::size_t k = n; k-- > 0;) {
        TruncSeries next = mul(TruncSeries(std::move(acc)), inner);
        acc = next.coeffs();
        acc[0] += outer.coeff(k);
    }
    return TruncSeries(std::move(acc));
}

cplx eval(const TruncSeries& a, cplx z) {
    cplx acc = 0.0;
    for (std::size_t k = a.order() + 1; k-- > 0;) acc = acc * z + a.coeff(k);
    return acc;
}

NormalizedFn::NormalizedFn(TruncSeries s) : series_(std::move(s)) {
    if (series_.order() < 1 || std::abs(series_.coeff(0)) > tol_alg ||
        std::abs(series_.coeff(1) - 1.0) > tol_alg)
        throw NotNormalized("NormalizedFn: requires f(0)=0 and f'(0)=1");
}

NormalizedFn NormalizedFn::from_initial_coeffs(cplx a2, cplx a3, std::size_t order) {
    if (order < 3)
        throw NotNormalized("from_initial_coeffs: order must be >= 3");
    std::vector<cplx> out(order + 1);
    out[1] = 1.0;
    out[2] = a2;
    out[3] = a3;
    return NormalizedFn(TruncSeries(std::move(out)));
}

NormalizedFn revert(const NormalizedFn& f) {
    const TruncSeries& fs = f.series();
    const std::size_t n = fs.order();
    std::vector<cplx> g(n + 1);
    g[1] = 1.0;
    // Order-by-order triangular solve: the z^m coefficient of f(g(z)) is
    // g_m plus terms in g_2..g_{m-1} only.
    for (std::size_t m = 2; m <= n; ++m)
        g[m] -= compose(fs, TruncSeries(g)).coeff(m);
    return NormalizedFn(TruncSeries(std::move(g)));
}

} // namespace gft::series
