#ifndef GFT_VERIFY_HPP
#define GFT_VERIFY_HPP

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace gft::verify {

/// A sampled ratio above 1 + ratio_slack counts as a violation of an
/// envelope bound.
inline constexpr double ratio_slack = 1e-9;

/// Outcome of one verification run. `violations` counts breaches of the
/// implemented envelope bounds only; `flagged_fs_tuples` counts tuples whose
/// Fekete-Szego value exceeds the piecewise constant (those are reported,
/// not treated as violations). Identical inputs reproduce every field except
/// `elapsed`.
struct VerifyReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
    std::uint64_t violations = 0;
    double max_ratio_a2 = 0.0;
    double max_ratio_a3 = 0.0;
    double max_ratio_fs = 0.0;
    std::uint64_t flagged_fs_tuples = 0;
    std::chrono::duration<double> elapsed{0.0};

    /// Stable-schema JSON (elapsed excluded), compact one-line form.
    std::string json() const;
};

/// Draws paired Carathéodory samples per (lambda, mu) cell, solves for
/// (a2^2, a3), and checks the |a2|, |a3| and Fekete-Szego envelope bounds.
/// Every cell also processes the deterministic tuples (c2, d2) = (2, 2) and
/// (2, -2), so the suprema of the a2 ratio and the envelope ratio reach 1.
/// Per-cell sample streams derive from (seed, cell index).
VerifyReport verify_bounds(const std::vector<double>& lambda_grid,
                           const std::vector<double>& mu_grid,
                           std::size_t samples, std::uint64_t seed);

/// Random-trial check of the expansion identities: closed-form z- and w-side
/// coefficients, the composed-series coefficients against their closed form,
/// the coefficient-matching recovery of (a2, a3), and the inversion law
/// b2 = -a2, b3 = 2 a2^2 - a3. Requires order >= 3.
VerifyReport verify_expansions(std::size_t trials, std::uint64_t seed,
                               std::size_t order);

/// Grid parameters for verify_shell; defaults match the acceptance run.
struct ShellGrids {
    double r_max = 0.999;
    std::size_t radial = 100;
    std::size_t angular = 400;
    std::size_t curve_count = 360;
    double exclusion = 0.1;
    std::size_t fib_max = 70;
    std::size_t coeff_max = 40;
    std::size_t tau_max = 40;
};

/// Bundles the shell-side invariants into one report: Fibonacci closed form
/// vs recurrence, the coefficient law vs series division, the golden-ratio
/// identities, pinned evaluation points, the grid minimum of the real part,
/// and the curve residuals on the unit circle.
VerifyReport verify_shell(const ShellGrids& grids, std::uint64_t seed);

} // namespace gft::verify

#endif
