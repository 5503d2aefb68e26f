#ifndef TRANSVERSAL_RNG_HPP
#define TRANSVERSAL_RNG_HPP

#include <cstdint>
#include <random>

namespace transversal {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seeded generator with portable draw helpers. std::uniform_int_distribution
// is implementation-defined, so bounded draws use rejection on raw 64-bit
// output; a fixed seed gives the same stream on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    // Independent stream derived from (seed, index); used for per-trial and
    // per-attempt substreams so trials can run in parallel and still merge
    // deterministically.
    static Rng substream(std::uint64_t seed, std::uint64_t index) {
        return Rng(splitmix64(seed) ^ splitmix64(0x517cc1b727220a95ULL + index));
    }

    std::uint64_t next_u64() { return engine_(); }

    // uniform on {0, ..., n-1}, n >= 1
    int uniform_int(int n) {
        const std::uint64_t bound = static_cast<std::uint64_t>(n);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x = next_u64();
        while (x >= limit) x = next_u64();
        return static_cast<int>(x % bound);
    }

    // uniform on [0, 1), 53-bit resolution
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::mt19937_64 engine_;
};

}  // namespace transversal

#endif
