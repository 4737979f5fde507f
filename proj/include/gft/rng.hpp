#ifndef GFT_RNG_HPP
#define GFT_RNG_HPP

#include <cmath>
#include <cstdint>

namespace gft {

/// Deterministic counter-based generator. Output n is
///     finalize(key + n * GAMMA)
/// where finalize is the splitmix64 mixer and
///     key = finalize(finalize(seed ^ C0) + stream).
/// The same (seed, stream) pair always yields the same sequence, and
/// independent streams may be consumed in parallel without interaction.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(finalize(finalize(seed ^ 0x6a09e667f3bcc909ULL) + stream)) {}

    std::uint64_t next_u64() {
        counter_ += 1;
        return finalize(key_ + counter_ * 0x9e3779b97f4a7c15ULL);
    }

    /// Uniform in [0, 1), 53-bit resolution.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Exp(1) draw.
    double next_exponential() { return -std::log1p(-next_unit()); }

    /// Uniform index in [0, n), n >= 1.
    std::size_t next_index(std::size_t n) {
        return static_cast<std::size_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

private:
    static std::uint64_t finalize(std::uint64_t x) {
        x ^= x >> 30;
        x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 27;
        x *= 0x94d049bb133111ebULL;
        x ^= x >> 31;
        return x;
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace gft

#endif
