#ifndef AC_RNG_HPP
#define AC_RNG_HPP

#include <cstdint>

namespace ac {

// Deterministic RNG for everything seeded. splitmix64 both scrambles user
// seeds and serves as the stream; bounded sampling is hand-rolled so results
// do not depend on standard-library distribution internals.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n), n >= 1; rejection keeps it unbiased
    std::uint64_t below(std::uint64_t n)
    {
        std::uint64_t limit = ~0ULL - ~0ULL % n;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

    // uniform double in [0, 1)
    double unit()
    {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    bool coin() { return next() & 1ULL; }

private:
    std::uint64_t state_;
};

} // namespace ac

#endif
