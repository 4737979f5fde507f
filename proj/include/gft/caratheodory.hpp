#ifndef GFT_CARATHEODORY_HPP
#define GFT_CARATHEODORY_HPP

#include <cstdint>
#include <vector>

#include "gft/rng.hpp"
#include "gft/series.hpp"

namespace gft::caratheodory {

using series::cplx;
using series::TruncSeries;

/// Atom-count cap for sampled functions.
inline constexpr std::size_t max_atoms_cap = 8;

/// Finite convex combination of Moebius kernels (1 + x z)/(1 - x z) with
/// weights >= 0 summing to 1 and points x on the unit circle. The induced
/// coefficients c_n = 2 sum_k w_k x_k^n satisfy |c_n| <= 2 by construction,
/// so every instance represents a function of positive real part.
class CaratheodoryFn {
public:
    struct Atom {
        double weight;
        cplx point;
    };

    /// Validates the measure invariants (weights nonnegative, total within
    /// 1e-12 of 1, points within 1e-12 of the circle); throws InvalidMeasure.
    explicit CaratheodoryFn(std::vector<Atom> atoms);

    const std::vector<Atom>& atoms() const { return atoms_; }

    /// Coefficient series 1 + c_1 z + ... + c_N z^N with c_n = 2 sum w_k x_k^n.
    TruncSeries coeffs(std::size_t order) const;

    /// The single-atom kernel at x = 1: c_n = 2 for every n.
    static CaratheodoryFn extremal();

    /// Deterministic draw: atom count uniform in 1..max_atoms, weights from a
    /// symmetric simplex draw, points uniform on the circle. seed = 0 pins the
    /// extremal kernel so tightness checks can reach c_2 = 2.
    static CaratheodoryFn sample(std::uint64_t seed, std::size_t max_atoms);

    /// Same draw fed from an existing generator (no extremal pinning).
    static CaratheodoryFn sample(CounterRng& rng, std::size_t max_atoms);

private:
    std::vector<Atom> atoms_;
};

/// Schwarz function: u(0) = 0 and |u| < 1, stored as a truncated series.
/// Constructed from a positive-real-part coefficient series via the inverse
/// Cayley transform.
class SchwarzFn {
public:
    /// Requires a vanishing constant term (|s(0)| <= 1e-12); the stored
    /// series has it anchored at exactly 0.
    explicit SchwarzFn(TruncSeries s);

    const TruncSeries& series() const { return series_; }

private:
    TruncSeries series_;
};

/// u = (h - 1)/(h + 1) as a truncated series, for h = 1 + c_1 z + c_2 z^2 + ...
/// First coefficients: c_1/2, (c_2 - c_1^2/2)/2, (c_3 - c_1 c_2 + c_1^3/4)/2.
SchwarzFn schwarz_from_h(const TruncSeries& c);

} // namespace gft::caratheodory

#endif
