#ifndef GFT_PSEUDO_HPP
#define GFT_PSEUDO_HPP

#include <cstddef>

#include "gft/series.hpp"

namespace gft::pseudo {

using series::cplx;
using series::NormalizedFn;
using series::TruncSeries;

/// Pseudo-starlikeness order lambda (>= 1) and Fekete-Szego weight mu
/// (any real). Construction checks lambda and the positivity of the
/// quadratic-term denominator D(lambda).
class ClassParams {
public:
    ClassParams(double lambda, double mu);
    double lambda() const { return lambda_; }
    double mu() const { return mu_; }

private:
    double lambda_;
    double mu_;
};

/// D(lambda) = (2l-1)^2 - (10l^2 - 11l + 3) tau, the denominator of the a2^2
/// solution. Strictly positive for lambda >= 1 since tau < 0 and
/// 10l^2 - 11l + 3 = (2l-1)(5l-3) > 0.
double denom(double lambda);

/// z (f')^lambda / f as a truncated series. Coefficients:
///   z:   (2 lambda - 1) a2
///   z^2: (3 lambda - 1) a3 + (2 lambda^2 - 4 lambda + 1) a2^2.
TruncSeries lhs_series(const NormalizedFn& f, double lambda, std::size_t order);

/// Same functional applied to the compositional inverse of f. Coefficients:
///   w:   -(2 lambda - 1) a2
///   w^2: (2 lambda^2 + 2 lambda - 1) a2^2 - (3 lambda - 1) a3.
TruncSeries ghs_series(const NormalizedFn& f, double lambda, std::size_t order);

/// Initial coefficients recovered from an admissible tuple (c2, d2). Only
/// a2^2 is determined; a2 itself is reported as a magnitude.
struct CoeffSolution {
    cplx a2_sq;
    cplx a3;
    cplx c2;
    cplx d2;
    double lambda;
};

/// a2^2 = (c2 + d2) tau^2 / (4 D(lambda)),
/// a3   = a2^2 + (c2 - d2) tau / (4 (3 lambda - 1)).
CoeffSolution solve_coeffs(cplx c2, cplx d2, double lambda);

/// |tau| / sqrt(D(lambda)).
double bound_a2(double lambda);

/// |tau| / (2 lambda - 1), the weaker first-pass bound.
double bound_a2_simple(double lambda);

/// |tau| [(2l-1)^2 - 2 (5l^2 - 4l + 1) tau] / ((3l-1) D(l)).
/// Equals |tau|/(3 lambda - 1) + bound_a2(lambda)^2.
double bound_a3(double lambda);

/// h(mu) = (1 - mu) tau^2 / (4 D(lambda)), signed.
double fs_h(double mu, double lambda);

/// T = |tau| / (4 (3 lambda - 1)), the branch threshold.
double fs_threshold(double lambda);

/// Piecewise Fekete-Szego bound: T when |h(mu)| <= T, else 4 |h(mu)|.
double fs_bound(double mu, double lambda);

/// Triangle-inequality envelope 2|h+T| + 2|h-T|, exact over the admissible
/// tuple space |c2| <= 2, |d2| <= 2.
double fs_envelope(double mu, double lambda);

/// a3 - mu a2^2 for a solved tuple.
cplx fs_functional(const CoeffSolution& sol, double mu);

/// The same functional assembled directly from (c2, d2):
/// h(mu) (c2 + d2) + s (c2 - d2) with s = tau / (4 (3 lambda - 1)).
cplx fs_decomposition(cplx c2, cplx d2, double mu, double lambda);

/// Variant with the coefficient printed as |tau|/(4(3 lambda - 1)) instead of
/// the signed tau/(4(3 lambda - 1)); kept as a diagnostic, it differs from
/// the functional by the sign of the antisymmetric term.
cplx fs_decomposition_abs_tau(cplx c2, cplx d2, double mu, double lambda);

/// All closed-form bounds for one (lambda, mu) pair.
struct BoundSet {
    double a2_bound;
    double a2_simple_bound;
    double a3_bound;
    double fs_bound;
    double fs_h;
    double fs_threshold;
};

BoundSet make_bounds(const ClassParams& params);

} // namespace gft::pseudo

#endif
