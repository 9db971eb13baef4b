#ifndef NULLWIDTH_RNG_HPP
#define NULLWIDTH_RNG_HPP

#include <cstdint>

namespace nw {

/**
 * splitmix64.  All randomness in the library flows from a single 64-bit seed
 * through this generator; it is platform-independent, so identical RunConfigs
 * give byte-identical artifacts.
 */
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /** Uniform in [0, n), n >= 1, by rejection. */
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = n * ((~0ULL) / n);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

    /** Uniform in [lo, hi] inclusive. */
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /** Derive an independent stream (for per-instance seeding). */
    Rng fork(std::uint64_t tag) {
        Rng r(state_ ^ (0xd1342543de82ef95ULL * (tag + 1)));
        r.next();
        return r;
    }

  private:
    std::uint64_t state_;
};

}  // namespace nw

#endif
