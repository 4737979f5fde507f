#include "gft/caratheodory.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "gft/errors.hpp"

namespace gft::caratheodory {

CaratheodoryFn::CaratheodoryFn(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty())
        throw InvalidMeasure("CaratheodoryFn: needs at least one atom");
    double total = 0.0;
    for (const Atom& a : atoms_) {
        if (!(a.weight >= 0.0))
            throw InvalidMeasure("CaratheodoryFn: negative weight");
        if (std::abs(std::abs(a.point) - 1.0) > 1e-12)
            throw InvalidMeasure("CaratheodoryFn: atom point off the unit circle");
        total += a.weight;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw InvalidMeasure("CaratheodoryFn: weights sum to " +
                             std::to_string(total) + ", not 1");
}

TruncSeries CaratheodoryFn::coeffs(std::size_t order) const {
    if (order > series::max_order)
        throw std::invalid_argument("coeffs: order must be <= " +
                                    std::to_string(series::max_order));
    std::vector<cplx> out(order + 1);
    out[0] = 1.0;
    std::vector<cplx> powers(atoms_.size(), cplx(1.0, 0.0));
    for (std::size_t n = 1; n <= order; ++n) {
        cplx acc = 0.0;
        for (std::size_t k = 0; k < atoms_.size(); ++k) {
            powers[k] *= atoms_[k].point;
            acc += atoms_[k].weight * powers[k];
        }
        out[n] = 2.0 * acc;
    }
    return TruncSeries(std::move(out));
}

CaratheodoryFn CaratheodoryFn::extremal() {
    return CaratheodoryFn({{1.0, cplx(1.0, 0.0)}});
}

CaratheodoryFn CaratheodoryFn::sample(std::uint64_t seed, std::size_t max_atoms) {
    if (seed == 0) return extremal();
    CounterRng rng(seed);
    return sample(rng, max_atoms);
}

CaratheodoryFn CaratheodoryFn::sample(CounterRng& rng, std::size_t max_atoms) {
    if (max_atoms < 1)
        throw std::invalid_argument("sample: max_atoms must be >= 1");
    const double two_pi = 2.0 * std::acos(-1.0);
    const std::size_t count = 1 + rng.next_index(max_atoms);
    std::vector<Atom> atoms(count);
    double total = 0.0;
    for (Atom& a : atoms) {
        a.weight = rng.next_exponential();
        a.point = std::polar(1.0, two_pi * rng.next_unit());
        total += a.weight;
    }
    if (total <= 0.0) {
        for (Atom& a : atoms) a.weight = 1.0 / static_cast<double>(count);
    } else {
        for (Atom& a : atoms) a.weight /= total;
    }
    return CaratheodoryFn(std::move(atoms));
}

SchwarzFn::SchwarzFn(TruncSeries s) : series_(std::move(s)) {
    if (std::abs(series_.coeff(0)) > 1e-12)
        throw std::invalid_argument("SchwarzFn: constant term must vanish");
    std::vector<cplx> anchored = series_.coeffs();
    anchored[0] = 0.0;
    series_ = TruncSeries(std::move(anchored));
}

SchwarzFn schwarz_from_h(const TruncSeries& c) {
    if (std::abs(c.coeff(0) - 1.0) > series::tol_alg)
        throw std::invalid_argument("schwarz_from_h: constant term must be 1");
    std::vector<cplx> num = c.coeffs();
    std::vector<cplx> den = c.coeffs();
    num[0] -= 1.0;
    den[0] += 1.0;
    return SchwarzFn(series::div(TruncSeries(std::move(num)), TruncSeries(std::move(den))));
}

} // namespace gft::caratheodory
