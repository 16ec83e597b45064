#ifndef PREOP_PRNG_HPP
#define PREOP_PRNG_HPP

#include <cstdint>

namespace preop {

// SplitMix64. Portable and fully specified, so a seed reproduces the same
// stream on every platform (std:: distributions do not guarantee that).
class Prng {
public:
    explicit Prng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform on [0, n) by rejection; n >= 1.
    std::uint64_t below(std::uint64_t n)
    {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

    // Uniform on [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi)
    {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    [[nodiscard]] std::uint64_t state() const { return state_; }

private:
    std::uint64_t state_;
};

// Seed for an independent sub-stream, e.g. (run seed, check id, sample index).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0)
{
    Prng g(seed ^ (a * 0xd1b54a32d192ed03ULL));
    g.next();
    Prng h(g.next() ^ (b * 0x8cb92ba72f3d8dd7ULL));
    return h.next();
}

} // namespace preop

#endif // PREOP_PRNG_HPP
