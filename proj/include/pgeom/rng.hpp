#ifndef PGEOM_RNG_HPP
#define PGEOM_RNG_HPP

#include <cstdint>
#include <vector>

#include "pgeom/matrix.hpp"
#include "pgeom/rational.hpp"

namespace pgeom {

// SplitMix64 (Steele, Lea, Flood 2014). Fixed published constants so that
// every seeded fixture is reproducible across implementations:
//   state += 0x9E3779B97F4A7C15
//   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by modulo reduction; bound <= 2^32 keeps the
    // bias below 2^-32, irrelevant for fixture generation.
    uint64_t below(uint64_t bound) { return next_u64() % bound; }

    // Uniform integer in [lo, hi], inclusive.
    long int_in(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    Rat small_rat(long max_abs = 20) {
        long num = int_in(-max_abs, max_abs);
        long den = int_in(1, max_abs);
        return rat(num, den);
    }

    std::vector<Rat> rat_vector(size_t n, long max_abs = 20) {
        std::vector<Rat> v(n);
        for (Rat& x : v) x = small_rat(max_abs);
        return v;
    }

    std::vector<Rat> int_vector(size_t n, long lo, long hi) {
        std::vector<Rat> v(n);
        for (Rat& x : v) x = Rat(int_in(lo, hi));
        return v;
    }

    // Retries until the vector is usable as projective coordinates.
    std::vector<Rat> nonzero_int_vector(size_t n, long lo, long hi) {
        while (true) {
            std::vector<Rat> v = int_vector(n, lo, hi);
            for (const Rat& x : v)
                if (!is_zero(x)) return v;
        }
    }

    // Seeded invertible integer matrix, bounded retries.
    Mat invertible_matrix(size_t n, long max_abs = 9, int retries = 64) {
        for (int t = 0; t < retries; ++t) {
            Mat m(n, n);
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) m(i, j) = Rat(int_in(-max_abs, max_abs));
            if (!is_zero(det(m))) return m;
        }
        throw resource_error("could not sample an invertible matrix");
    }

private:
    uint64_t state_;
};

}  // namespace pgeom

#endif  // PGEOM_RNG_HPP
